#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace relcut {

// All counting and polynomial arithmetic is exact; doubles appear only when
// rendering reports.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact integer; 0 for k < 0 or k > n.
BigInt binomial(int n, int k);

/// 2^e as an exact integer, e >= 0.
BigInt pow2(int e);

}  // namespace relcut
