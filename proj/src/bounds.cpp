#include "sfperm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfperm/errors.hpp"
#include "sfperm/special.hpp"

namespace sfperm {

namespace {

void require_bounds_args(int m, int n, double snr) {
  if (m < 2) throw ValidationError("bounds need M >= 2 (no pairwise errors for M = 1)");
  if (m > 20) throw ValidationError("bounds support M <= 20");
  if (n < 1) throw ValidationError("antenna count N must be >= 1");
  if (!(snr > 0.0)) throw ValidationError("snr (E/N0, linear) must be positive");
}

void require_k(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw ValidationError("Rician K must be finite and >= 0");
}

double weight(int l, int m) { return static_cast<double>(subfactorial(l)) * binomial(m, l); }

// log of sum_{k=0}^{L-1} C(L-1+k, k) x^k for 0 < x < 1.
double log_negative_binomial_partial(int l_branches, double x) {
  double log_max = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<std::size_t>(l_branches));
  for (int k = 0; k < l_branches; ++k) {
    logs[static_cast<std::size_t>(k)] = log_binomial(l_branches - 1 + k, k) + k * std::log(x);
    log_max = std::max(log_max, logs[static_cast<std::size_t>(k)]);
  }
  double sum = 0.0;
  for (double lg : logs) sum += std::exp(lg - log_max);
  return log_max + std::log(sum);
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double display_probability(double p) { return std::min(p, 1.0); }

double alpha(int l, int m, double snr) { return std::sqrt(m / (snr * l)); }

double rival_count(int m) {
  double total = 0.0;
  for (int l = 2; l <= m; ++l) total += weight(l, m);
  return total;
}

double union_bound_awgn(int m, int n, double snr) {
  require_bounds_args(m, n, snr);
  double sum = 0.0;
  for (int l = 2; l <= m; ++l) sum += weight(l, m) * q_function(std::sqrt(n) / alpha(l, m, snr));
  return sum;
}

double nn_awgn(int m, int n, double snr) {
  require_bounds_args(m, n, snr);
  return 0.5 * m * (m - 1) * q_function(std::sqrt(n) / alpha(2, m, snr));
}

double nu(int n, double c) {
  if (n < 1) throw ValidationError("nu_n needs n >= 1");
  if (!(c >= 0.0)) throw ValidationError("nu_n needs c >= 0");
  // (c/4)^q / (1+c)^(n-1/2) = (c/(4(1+c)))^q (1+c)^-(n-1/2-q); both factors <= 1.
  const double ratio = c / (4.0 * (1.0 + c));
  double sum = 0.0;
  for (int q = 0; q < n; ++q) {
    const double coeff = n - 1 <= 60 && 2 * q <= 60
                             ? binomial(n - 1, q) * binomial(2 * q, q)
                             : std::exp(log_binomial(n - 1, q) + log_binomial(2 * q, q));
    sum += coeff * std::pow(ratio, q) * std::pow(1.0 + c, -(n - 0.5 - q));
  }
  return 0.5 * sum;
}

double diversity_pairwise_alternating(int l_branches, double c) {
  double sum = 0.5;
  for (int n = 1; n <= l_branches; ++n) {
    const double term = binomial(l_branches, n) * nu(n, c);
    sum += (n % 2 == 0) ? term : -term;
  }
  return sum;
}

double diversity_pairwise_positive(int l_branches, double c) {
  if (l_branches < 1) throw ValidationError("diversity order must be >= 1");
  const double root = std::sqrt(1.0 + c);
  const double one_minus_mu = c / (root * (root + 1.0));  // 1 - 1/sqrt(1+c), cancellation-free
  const double one_plus_mu = 1.0 + 1.0 / root;
  return std::exp(l_branches * std::log(0.5 * one_minus_mu) +
                  log_negative_binomial_partial(l_branches, 0.5 * one_plus_mu));
}

double diversity_pairwise(int l_branches, double c) {
  if (l_branches < 1) throw ValidationError("diversity order must be >= 1");
  if (!(c >= 0.0)) throw ValidationError("c must be >= 0");
  if (c == 0.0) return 0.0;
  if (l_branches <= 60) {
    double sum = 0.5;
    double magnitude = 0.5;
    for (int n = 1; n <= l_branches; ++n) {
      const double term = binomial(l_branches, n) * nu(n, c);
      sum += (n % 2 == 0) ? term : -term;
      magnitude += term;
    }
    const double error_estimate = 4.0 * (l_branches + 1) * std::numeric_limits<double>::epsilon() *
                                  magnitude;
    if (sum > 0.0 && error_estimate <= 1e-13 * sum) return sum;
  }
  return diversity_pairwise_positive(l_branches, c);
}

double pairwise_rician(int l, int m, int n, double k, double snr, const BoundsConfig& cfg) {
  require_bounds_args(m, n, snr);
  require_k(k);
  if (l < 2 || l > m) throw ValidationError("pairwise distance l must be in [2, M]");
  if (!(cfg.series_tol > 0.0)) throw ValidationError("series_tol must be positive");
  if (cfg.j_max < 0) throw ValidationError("j_max must be non-negative");

  const double a = alpha(l, m, snr);
  const double c = 2.0 * a * a * (k + 1.0);
  const double lambda = n * k;
  if (lambda == 0.0) return diversity_pairwise(n, c);

  double sum = 0.0;
  double last_term = 0.0;
  for (int j = 0; j <= cfg.j_max; ++j) {
    const double log_w = j * std::log(lambda) - lambda - std::lgamma(j + 1.0);
    const double term = std::exp(log_w) * diversity_pairwise(n + j, c);
    sum += term;
    last_term = term;
    // Past the Poisson mode both factors decrease in j.
    if (j >= lambda && term <= cfg.series_tol * sum) return sum;
  }
  throw NumericError("Rician series did not converge: l=" + std::to_string(l) +
                     " M=" + std::to_string(m) + " N=" + std::to_string(n) +
                     " K=" + std::to_string(k) + " snr=" + std::to_string(snr) +
                     " j_max=" + std::to_string(cfg.j_max) + " last_term=" +
                     std::to_string(last_term) + " partial_sum=" + std::to_string(sum));
}

double union_bound_rician(int m, int n, double k, double snr, const BoundsConfig& cfg) {
  require_bounds_args(m, n, snr);
  double sum = 0.0;
  for (int l = 2; l <= m; ++l) sum += weight(l, m) * pairwise_rician(l, m, n, k, snr, cfg);
  return sum;
}

double nn_rician(int m, int n, double k, double snr, const BoundsConfig& cfg) {
  require_bounds_args(m, n, snr);
  return 0.5 * m * (m - 1) * pairwise_rician(2, m, n, k, snr, cfg);
}

double union_bound_rayleigh(int m, int n, double snr) {
  require_bounds_args(m, n, snr);
  double sum = 0.0;
  for (int l = 2; l <= m; ++l) {
    const double a = alpha(l, m, snr);
    sum += weight(l, m) * diversity_pairwise(n, 2.0 * a * a);
  }
  return sum;
}

double nn_rayleigh(int m, int n, double snr) {
  require_bounds_args(m, n, snr);
  const double a = alpha(2, m, snr);
  return 0.5 * m * (m - 1) * diversity_pairwise(n, 2.0 * a * a);
}

}  // namespace sfperm
