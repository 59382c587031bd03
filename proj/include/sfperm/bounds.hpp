#pragma once

#include <string>

namespace sfperm {

/// Truncation controls for the Poisson-weighted Rician series.
struct BoundsConfig {
  double series_tol = 1e-12;  ///< stop once a term falls below tol * partial sum
  int j_max = 200;            ///< hard cap on the series index
};

/// alpha_l = sqrt(M / (snr * l)), snr = E/N0 linear.
double alpha(int l, int m, double snr);

/// Sum over l = 2..M of !l * C(M, l): the number of rival permutations.
double rival_count(int m);

/// Union bound on block error probability in AWGN:
/// sum_l !l C(M,l) Q(sqrt(N)/alpha_l). Unclamped; may exceed 1.
double union_bound_awgn(int m, int n, double snr);

/// Nearest-neighbour approximation in AWGN: M(M-1)/2 Q(sqrt(N)/alpha_2).
double nn_awgn(int m, int n, double snr);

/// nu_n(c) = 1 / (2 (1+c)^(n-1/2)) sum_{q<n} C(n-1,q) C(2q,q) (c/4)^q.
double nu(int n, double c);

/// Pairwise error term for L-branch Rayleigh combining:
/// 1/2 + sum_{n=1}^{L} (-1)^n C(L,n) nu_n(c).
///
/// The alternating sum loses roughly log10(2^L / value) digits, so when
/// its estimated error exceeds 1e-13 relative the algebraically identical
/// positive-term form
///   ((1-mu)/2)^L sum_{k<L} C(L-1+k,k) ((1+mu)/2)^k,  mu = 1/sqrt(1+c)
/// is returned instead.
double diversity_pairwise(int l_branches, double c);

/// Both evaluations of diversity_pairwise, exposed for cross-checks.
double diversity_pairwise_alternating(int l_branches, double c);
double diversity_pairwise_positive(int l_branches, double c);

/// Rician pairwise error probability for permutations differing in l
/// slots: sum_j Poisson(j; NK) * diversity_pairwise(N + j, c_l),
/// c_l = 2 alpha_l^2 (K + 1). Throws NumericError if the series has not
/// converged by cfg.j_max.
double pairwise_rician(int l, int m, int n, double k, double snr, const BoundsConfig& cfg = {});

double union_bound_rician(int m, int n, double k, double snr, const BoundsConfig& cfg = {});
double nn_rician(int m, int n, double k, double snr, const BoundsConfig& cfg = {});

/// K = 0 forms: finite n-sum only.
double union_bound_rayleigh(int m, int n, double snr);
double nn_rayleigh(int m, int n, double snr);

/// min(p, 1) for display; bounds themselves are kept unclamped.
double display_probability(double p);

double db_to_linear(double db);

}  // namespace sfperm
