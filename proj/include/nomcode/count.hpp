#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nomcode {

/// Exact non-negative count. Catalan, partition and Eulerian tables leave the
/// 64-bit range quickly, so every counting routine returns this type.
using Count = boost::multiprecision::cpp_int;

Count factorial(int n);
Count binomial(int n, int k);

}  // namespace nomcode
