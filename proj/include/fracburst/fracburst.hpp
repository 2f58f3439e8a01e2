#pragma once

#include "fracburst/error.hpp"
#include "fracburst/special_fn.hpp"
#include "fracburst/golden_section.hpp"
#include "fracburst/bounds.hpp"
#include "fracburst/solver.hpp"
#include "fracburst/blowup_detect.hpp"
