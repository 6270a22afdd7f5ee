#include "nomcode/count.hpp"

#include <stdexcept>

namespace nomcode {

Count factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Count r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace nomcode
