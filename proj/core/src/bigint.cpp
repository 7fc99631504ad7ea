#include "relcut/bigint.hpp"

namespace relcut {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // divides exactly: result is C(n-k+i, i) after the step
  }
  return result;
}

BigInt pow2(int e) {
  BigInt one = 1;
  return one << e;
}

}  // namespace relcut
