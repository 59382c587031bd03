#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sfperm/errors.hpp"
#include "sfperm/radar.hpp"

using namespace sfperm;

namespace {
constexpr double kPi = std::numbers::pi;

WaveformParams params(int m, double t = 1.0, double df = 1.0, double f0 = 0.0) {
  WaveformParams w;
  w.m = m;
  w.pulse_width_s = t;
  w.delta_f_hz = df;
  w.f0_hz = f0;
  return w;
}

double sinc_abs(double x) { return x == 0.0 ? 1.0 : std::abs(std::sin(x) / x); }
}  // namespace

TEST(PulseAf, SpecialValues) {
  EXPECT_NEAR(std::abs(pulse_af(0.0, 0.0, 2.0) - cplx(2.0, 0.0)), 0.0, 1e-15);
  EXPECT_EQ(std::abs(pulse_af(2.0, 3.0, 2.0)), 0.0);
  EXPECT_EQ(std::abs(pulse_af(-2.5, 0.0, 2.0)), 0.0);
  EXPECT_NEAR(std::abs(pulse_af(1.0, 0.0, 2.0) - cplx(1.0, 0.0)), 0.0, 1e-15);
}

TEST(PulseAf, ContinuousThroughZeroDoppler) {
  for (double tau : {-0.7, -0.2, 0.0, 0.4, 0.9}) {
    const cplx at0 = pulse_af(tau, 0.0, 1.0);
    for (double w : {1e-12, 1e-9, 1e-6, 1e-4}) {
      EXPECT_NEAR(std::abs(pulse_af(tau, w, 1.0) - at0), 0.0, 2.0 * w) << tau << " " << w;
    }
  }
}

TEST(PulseAf, MatchesDirectIntegral) {
  const double t = 1.3;
  for (double tau : {-1.0, -0.3, 0.0, 0.6, 1.2}) {
    for (double w : {-9.0, -0.5, 0.0, 2.0, 13.0}) {
      const double lo = std::max(0.0, tau);
      const double hi = std::min(t, t + tau);
      const double re = oracle::integrate([&](double s) { return std::cos(w * s); }, lo, hi);
      const double im = oracle::integrate([&](double s) { return std::sin(w * s); }, lo, hi);
      EXPECT_NEAR(std::abs(pulse_af(tau, w, t) - cplx(re, im)), 0.0, 1e-12);
    }
  }
}

TEST(ComplexAf, PeakAndSupport) {
  const WaveformParams w = params(4, 1e-3, 2e3, 5e3);
  const Permutation p({1, 3, 0, 2});
  EXPECT_NEAR(std::abs(complex_af(p, w, 0.0, 0.0)), 1.0, 1e-12);
  EXPECT_EQ(std::abs(complex_af(p, w, 4e-3, 100.0)), 0.0);
  EXPECT_EQ(std::abs(complex_af(p, w, -5e-3, 0.0)), 0.0);
}

TEST(ComplexAf, MatchesQuadratureOracle) {
  const WaveformParams w = params(3, 1.0, 2.0, 0.5);
  const Permutation p({2, 0, 1});
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> tau(-3.0, 3.0), om(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double t = tau(gen), o = om(gen);
    EXPECT_NEAR(std::abs(complex_af(p, w, t, o) - af_numeric_oracle(p, w, t, o)), 0.0, 1e-9);
  }
}

TEST(ComplexAf, SinglePulseTriangle) {
  const WaveformParams w = params(1);
  const Permutation p = Permutation::identity(1);
  for (double tau : {-0.9, -0.25, 0.0, 0.5, 0.75}) {
    EXPECT_NEAR(std::abs(complex_af(p, w, tau, 0.0)), 1.0 - std::abs(tau), 1e-12);
    EXPECT_NEAR(std::abs(af_numeric_oracle(p, w, tau, 0.0)), 1.0 - std::abs(tau), 1e-12);
  }
}

TEST(ComplexAf, ConjugateReversalSymmetry) {
  const WaveformParams w = params(4);
  const Permutation p({0, 2, 3, 1});
  for (double tau : {-2.3, -0.4, 1.1, 3.5}) {
    for (double o : {-7.0, 0.3, 5.0}) {
      EXPECT_NEAR(std::abs(complex_af(p, w, tau, o)), std::abs(complex_af(p, w, -tau, -o)), 1e-9);
    }
  }
}

TEST(Cuts, ZeroDelayIsPermutationFreeSinc) {
  const WaveformParams w = params(5);
  const auto axis = linear_axis(-30.0, 30.0, 61);
  const auto a = zero_delay_cut(Permutation::identity(5), w, axis);
  const auto b = zero_delay_cut(Permutation({3, 1, 4, 0, 2}), w, axis);
  for (std::size_t i = 0; i < axis.size(); ++i) {
    EXPECT_NEAR(a[i], sinc_abs(axis[i] * 5.0 / 2.0), 1e-12);
    EXPECT_NEAR(a[i], b[i], 1e-12);
  }
  EXPECT_NEAR(zero_doppler_cut(Permutation({3, 1, 4, 0, 2}), w, std::vector<double>{0.0})[0], 1.0, 1e-12);
}

TEST(Cuts, ZeroDelayMainLobeSharpensWithM) {
  // Second difference of |A(0, omega)| at the origin, same energy.
  const double h = 1e-2;
  double last = 0.0;
  for (int m : {4, 6, 8}) {
    const WaveformParams w = params(m);
    const auto c = zero_delay_cut(Permutation::identity(m), w, std::vector<double>{-h, 0.0, h});
    const double curvature = (2.0 * c[1] - c[0] - c[2]) / (h * h);
    EXPECT_GT(curvature, last) << "M=" << m;
    last = curvature;
  }
}

TEST(Grid, ParallelMatchesSerial) {
  const WaveformParams w = params(6);
  const Permutation p({5, 0, 4, 1, 3, 2});
  const auto taus = linear_axis(-6.0, 6.0, 33);
  const auto oms = linear_axis(-20.0, 20.0, 29);
  const AFGrid a = af_grid(p, w, taus, oms, 4);
  const AFGrid b = af_grid_serial(p, w, taus, oms);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values.size(), 33U * 29U);
  for (double v : a.values) EXPECT_LE(v, 1.0 + 1e-12);
}

TEST(Ridge, OrientationDependsOnAxisConvention) {
  const WaveformParams w = params(8);
  const auto taus = linear_axis(-8.0, 8.0, 81);
  const auto oms = linear_axis(-16.0 * kPi, 16.0 * kPi, 81);
  const AFGrid up = af_grid(Permutation::identity(8), w, taus, oms);
  const AFGrid down = af_grid(Permutation::descending(8), w, taus, oms);
  EXPECT_GT(ridge_covariance(up, 0.7, DopplerAxis::kTargetError), 0.0);
  EXPECT_LT(ridge_covariance(down, 0.7, DopplerAxis::kTargetError), 0.0);
  // In A(tau, omega) coordinates the ridges sit in the opposite quadrants.
  EXPECT_LT(ridge_covariance(up, 0.7, DopplerAxis::kMismatch), 0.0);
  EXPECT_GT(ridge_covariance(down, 0.7, DopplerAxis::kMismatch), 0.0);
}

TEST(Fisher, ClosedFormEntries) {
  const FisherMatrix f = fisher_matrix(Permutation::identity(1), params(1), 1.0, 100.0);
  EXPECT_EQ(f.c, 1.0);
  EXPECT_EQ(f.j22, 1.0 / 12.0);
  const WaveformParams w = params(4, 2.0, 1.0, 3.0);  // omega0 T = 12 pi
  const FisherMatrix g = fisher_matrix(Permutation({1, 0, 3, 2}), w, 0.5, 50.0);
  EXPECT_NEAR(g.j11, 2.0 * 50.0 * g.c / (2.0 * 4.0), 1e-9);
  EXPECT_EQ(g.j12, g.j21());
  EXPECT_TRUE(fisher_matrix(Permutation::identity(1), params(1), 1.0, 5.0).low_bt);
}

TEST(Fisher, SweepMomentExtremes) {
  for (int m = 2; m <= 6; ++m) {
    const WaveformParams w = params(m, 1.0, 1.0, 2.0);
    const double up = tone_sweep_moment(Permutation::identity(m), w);
    const double down = tone_sweep_moment(Permutation::descending(m), w);
    for (const auto& p : oracle::all_permutations(m)) {
      const double s = tone_sweep_moment(Permutation(p), w);
      EXPECT_LE(s, up + 1e-9);
      EXPECT_GE(s, down - 1e-9);
    }
  }
}

TEST(Fisher, CrossTermMatchesSmoothedWaveform) {
  // With MT = 1 the closed form equals C times Im int u s ds*/du du.
  const int m = 4;
  const WaveformParams w = params(m, 0.25, 4.0, 8.0);
  for (const Permutation& p : {Permutation::identity(m), Permutation({2, 0, 3, 1}), Permutation::descending(m)}) {
    const FisherMatrix f = fisher_matrix(p, w, 1.0, 4000.0);
    std::vector<double> om;
    for (int k = 0; k < m; ++k) om.push_back(2 * kPi * (w.f0_hz + p[k] * w.delta_f_hz));
    for (double ramp : {w.pulse_width_s / 64.0, w.pulse_width_s / 256.0}) {
      const double numeric = oracle::SmoothedWaveform(om, w.pulse_width_s, ramp).weighted_phase_moment();
      EXPECT_GT(numeric * f.j12, 0.0) << "sign";
      EXPECT_NEAR((f.j12 / f.c) / numeric, 1.0, 0.01) << p.to_string() << " ramp " << ramp;
    }
  }
}

TEST(Fisher, DelayMoments) {
  const WaveformParams w = params(5, 0.4, 5.0, 1.0);
  const Permutation p({4, 2, 0, 1, 3});
  auto s = [&](double u) { return waveform_value(p, w, u); };
  const DelayMoments d = delay_moments(w);
  EXPECT_NEAR(oracle::time_moment(s, 5, 0.4, 1) / d.mean, 1.0, 1e-12);
  EXPECT_NEAR(oracle::time_moment(s, 5, 0.4, 2) / d.second, 1.0, 1e-12);
  EXPECT_NEAR(d.variance(), 4.0 / 12.0, 1e-15);
}

TEST(Crlb, SimplifiedSingleTone) {
  const double n0 = 0.7, b = 30.0, t = 0.5;
  const Crlb c = crlb_simplified(params(1, t, 2.0), n0, b);
  const double cc = noise_constant(n0);
  EXPECT_EQ(c.tau, (t / (2.0 * b)) / cc);
  EXPECT_EQ(c.omega, (12.0 / (t * t)) / cc);
}

TEST(Crlb, SimplifiedScaling) {
  const Crlb a = crlb_simplified(params(4, 1.0, 1.0), 0.5, 100.0);
  const Crlb b = crlb_simplified(params(4, 0.5, 2.0), 0.5, 100.0);
  EXPECT_NEAR(b.tau / a.tau, 0.5, 1e-15);
  const Crlb c = crlb_simplified(params(8, 1.0, 1.0), 0.5, 100.0);
  EXPECT_NEAR(c.omega / a.omega, 0.25, 1e-15);
}

TEST(Crlb, FullMatchesInversionAndClosedForm) {
  const WaveformParams w = params(4, 1.0, 1.0, 0.25);
  const Permutation p({2, 0, 3, 1});
  const FisherMatrix f = fisher_matrix(p, w, 0.3, 1e5);
  const Crlb full = crlb_full(f);
  const double det = f.j11 * f.j22 - f.j12 * f.j12;
  EXPECT_NEAR(full.tau / (f.j22 / det), 1.0, 1e-14);
  EXPECT_NEAR(full.omega / (f.j11 / det), 1.0, 1e-14);
  const Crlb closed = crlb_full_closed_form(p, w, 0.3, 1e5);
  EXPECT_NEAR(closed.tau / full.tau, 1.0, 1e-10);
  EXPECT_NEAR(closed.omega / full.omega, 1.0, 1e-10);
  EXPECT_GE(full.tau, crlb_simplified(w, 0.3, 1e5).tau);
}

TEST(Crlb, ZeroCrossTermReducesToSimplified) {
  FisherMatrix f = fisher_matrix(Permutation::identity(3), params(3), 0.5, 200.0);
  f.j12 = 0.0;
  const Crlb full = crlb_full(f);
  const Crlb simple = crlb_simplified(params(3), 0.5, 200.0);
  EXPECT_NEAR(full.tau / simple.tau, 1.0, 1e-14);
  EXPECT_NEAR(full.omega / simple.omega, 1.0, 1e-14);
}

TEST(Crlb, ScalesInverselyWithC) {
  const Crlb a = crlb_simplified(params(4), 1.0, 100.0);
  const Crlb b = crlb_simplified(params(4), 0.1, 100.0);
  EXPECT_NEAR(b.tau / a.tau, noise_constant(1.0) / noise_constant(0.1), 1e-14);
}

TEST(Crlb, IndefiniteFisherIsNumericError) {
  const FisherMatrix f = fisher_matrix(Permutation::identity(4), params(4), 1.0, 1000.0);
  ASSERT_LT(f.determinant(), 0.0);
  EXPECT_THROW(crlb_full(f), NumericError);
}
