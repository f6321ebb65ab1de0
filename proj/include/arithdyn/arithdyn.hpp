#pragma once

// Umbrella header.

#include "exact_arith.hpp"
#include "univariate.hpp"
#include "proj_point.hpp"
#include "homog_form.hpp"
#include "rational_map.hpp"
#include "dynamics.hpp"
#include "bounds.hpp"
#include "verify.hpp"
#include "generators.hpp"
#include "map_parser.hpp"
#include "report.hpp"
