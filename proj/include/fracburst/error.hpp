#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracburst {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
  using error::error;
};

/// Result would exceed the largest finite double.
class overflow_error : public error {
public:
  using error::error;
};

/// A truncated series or iteration failed to meet its stopping rule.
class convergence_error : public error {
public:
  using error::error;
};

/// No interior minimum could be bracketed.
class bracketing_error : public error {
public:
  using error::error;
};

/// Malformed or invalid scenario configuration.
class config_error : public error {
public:
  config_error(const std::string& source, std::size_t line, const std::string& what)
      : error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// The blow-up theorem's hypotheses fail for every branch.
class not_applicable_error : public error {
public:
  explicit not_applicable_error(std::vector<std::string> violated)
      : error(join(violated)), violated_(std::move(violated)) {}

  const std::vector<std::string>& violated() const noexcept { return violated_; }

private:
  static std::string join(const std::vector<std::string>& items) {
    std::string msg = "blow-up theorem not applicable; violated conditions:";
    for (const auto& item : items) {
      msg += "\n  - ";
      msg += item;
    }
    return msg;
  }

  std::vector<std::string> violated_;
};

}  // namespace fracburst
