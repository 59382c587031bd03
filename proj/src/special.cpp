#include "sfperm/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sfperm/errors.hpp"

namespace sfperm {

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -INFINITY;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n > 60) return std::exp(log_binomial(n, k));
  k = std::min(k, n - k);
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

std::uint64_t subfactorial(int x) {
  if (x < 0 || x > 20) {
    throw ValidationError("subfactorial argument must be in [0, 20], got " + std::to_string(x));
  }
  std::uint64_t d = 1;  // !0
  for (int i = 1; i <= x; ++i) {
    d = static_cast<std::uint64_t>(i) * d;
    if (i % 2 == 0) {
      d += 1;
    } else {
      d -= 1;
    }
  }
  return d;
}

}  // namespace sfperm
