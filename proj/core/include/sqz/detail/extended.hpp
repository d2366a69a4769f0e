#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sqz {

// Software floating point for the cancellation-prone Dicke evaluations.
// Real50 is the production extended path (~50 significant digits, well
// beyond the required 30); Real100 backs the in-tree verification tests.
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

}  // namespace sqz
