#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace parsim {

// Exact arbitrary-precision integer used for all solution counts.
using bigint = boost::multiprecision::cpp_int;

// Exact rational used for geometric layouts; no floating point anywhere
// near a crossing predicate.
using rational = boost::multiprecision::cpp_rational;

} // namespace parsim
