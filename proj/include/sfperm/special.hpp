#pragma once

#include <cstdint>

namespace sfperm {

/// Gaussian tail Q(x) = P(Z > x) = erfc(x / sqrt 2) / 2. Uses std::erfc,
/// whose relative error is within a few ulp over the double range, so Q
/// keeps ~1e-15 relative accuracy deep into the tail.
double q_function(double x);

/// log of the binomial coefficient C(n, k) via log-gamma.
double log_binomial(int n, int k);

/// C(n, k) as a double. Exact multiplicative product for n <= 60 (within
/// rounding), log-gamma beyond.
double binomial(int n, int k);

/// Number of derangements !x for 0 <= x <= 20, exact:
/// !x = x * !(x-1) + (-1)^x.
std::uint64_t subfactorial(int x);

}  // namespace sfperm
