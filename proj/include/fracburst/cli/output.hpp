#pragma once

// CSV files (12 significant digits, '\n' endings, C-locale formatting) and
// the gnuplot scripts that render them.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fracburst/error.hpp"
#include "fracburst/solver.hpp"

namespace fracburst::cli {

/// Write failure, carrying the offending path.
class output_error : public error {
public:
  explicit output_error(const std::filesystem::path& path)
      : error("cannot write " + path.string()), path_(path) {}

  const std::filesystem::path& path() const noexcept { return path_; }

private:
  std::filesystem::path path_;
};

inline std::string format_number(double v, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

/// `<name>_alpha<value>` with the shortest round-trip spelling of alpha.
inline std::string scenario_stem(const std::string& name, double alpha) {
  return name + "_alpha" + format_number(alpha, 6);
}

/// Header `t,x1,...,xn`, then one row per stored grid point.
inline void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << 't';
  for (std::size_t i = 1; i <= traj.dimension(); ++i) out << ",x" << i;
  out << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out << format_number(traj.times()[k]);
    for (double v : traj.state(k)) out << ',' << format_number(v);
    out << '\n';
  }
}

/// Parses CSV text written by the writers above (header skipped).
inline std::vector<std::vector<double>> read_csv_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto comma = line.find(',', start);
      const auto end = comma == std::string::npos ? line.size() : comma;
      row.push_back(std::stod(line.substr(start, end - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void trajectory_plot_script(std::ostream& out, const std::string& stem, std::size_t dimension,
                                   const std::string& title) {
  out << "# gnuplot script: gnuplot " << stem << ".plot\n"
      << "set datafile separator ','\n"
      << "set terminal pngcairo size 900,600\n"
      << "set output '" << stem << ".png'\n"
      << "set title '" << title << "'\n"
      << "set xlabel 't'\n"
      << "set key top left autotitle columnhead\n"
      << "plot ";
  for (std::size_t i = 0; i < dimension; ++i) {
    out << (i == 0 ? "'" + stem + ".csv'" : std::string("''")) << " using 1:" << i + 2 << " with lines lw 2";
    out << (i + 1 < dimension ? ", \\\n     " : "\n");
  }
}

inline void b_curve_plot_script(std::ostream& out, const std::string& stem, double lambda_m, const std::string& title) {
  out << "# gnuplot script: gnuplot " << stem << ".plot\n"
      << "set datafile separator ','\n"
      << "set terminal pngcairo size 900,600\n"
      << "set output '" << stem << ".png'\n"
      << "set title '" << title << "'\n"
      << "set xlabel 'lambda'\n"
      << "set ylabel 'B(lambda)'\n"
      << "set arrow from " << format_number(lambda_m) << ", graph 0 to " << format_number(lambda_m)
      << ", graph 1 nohead dashtype 2\n"
      << "set label 'lambda_m = " << format_number(lambda_m, 6) << "' at " << format_number(lambda_m)
      << ", graph 0.9 offset 1,0\n"
      << "plot '" << stem << ".csv' using 1:2 with lines lw 2 notitle\n";
}

/// Writes `text` to path, creating parent directories.
inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw output_error(path);
  out << text;
  out.flush();
  if (!out) throw output_error(path);
}

}  // namespace fracburst::cli
