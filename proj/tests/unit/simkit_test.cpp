#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sfperm/bounds.hpp"
#include "sfperm/errors.hpp"
#include "sfperm/simkit.hpp"

using namespace sfperm;

namespace {
SimConfig small_config() {
  SimConfig c;
  c.m = 4;
  c.n_antennas = 2;
  c.snr_db = {2.0, 6.0};
  c.trials = 10000;
  c.master_seed = 21;
  return c;
}

void expect_same(const std::vector<BlerPoint>& a, const std::vector<BlerPoint>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].errors, b[i].errors);
    EXPECT_EQ(a[i].trials, b[i].trials);
    EXPECT_EQ(a[i].bler, b[i].bler);
  }
}
}  // namespace

TEST(Simkit, WorkerCountDoesNotChangeResults) {
  SimConfig c = small_config();
  c.channel = ChannelKind::kRician;
  c.rician_k = 1.0;
  const auto serial = run_bler_sweep_serial(c);
  for (int workers : {1, 2, 5}) {
    c.workers = workers;
    expect_same(run_bler_sweep(c), serial);
  }
}

TEST(Simkit, SeedReproducibility) {
  SimConfig c = small_config();
  const auto a = run_bler_sweep(c);
  expect_same(run_bler_sweep(c), a);
  c.master_seed = 22;
  EXPECT_NE(run_bler_sweep(c)[0].errors, a[0].errors);
}

TEST(Simkit, TargetErrorsStopsAtBatchBoundary) {
  SimConfig c = small_config();
  c.snr_db = {0.0};
  c.trials = 100000;
  c.target_errors = 100;
  const BlerPoint p = run_bler_sweep(c).front();
  EXPECT_TRUE(p.target_reached);
  EXPECT_EQ(p.trials, kTrialBatch);
  EXPECT_GE(p.errors, 100U);
}

TEST(Simkit, TwoToneSampledModeMatchesQ) {
  SimConfig c;
  c.m = 2;
  c.n_antennas = 2;
  c.mode = SimMode::kSampled;
  c.snr_db = {0.0};
  c.trials = 20000;
  c.waveform.oversampling = 8;
  const BlerPoint p = run_bler_sweep(c).front();
  const double q = oracle::q_function(std::sqrt(2.0));
  EXPECT_NEAR(p.bler, q, 3.0 * std::sqrt(q * (1 - q) / 20000.0));
}

TEST(Simkit, StatisticAndSampledModesAgree) {
  SimConfig c = small_config();
  c.m = 3;
  c.snr_db = {3.0};
  c.trials = 20000;
  c.waveform.oversampling = 12;
  const double a = run_bler_sweep(c).front().bler;
  c.mode = SimMode::kSampled;
  const double b = run_bler_sweep(c).front().bler;
  const double sigma = std::sqrt(a * (1 - a) / 20000.0) * std::sqrt(2.0);
  EXPECT_NEAR(a, b, 4.0 * sigma);
}

TEST(Simkit, ExhaustiveReceiverGivesSameErrors) {
  SimConfig c = small_config();
  const auto h = run_bler_sweep(c);
  c.receiver = ReceiverKind::kExhaustive;
  expect_same(run_bler_sweep(c), h);
}

TEST(Simkit, WilsonInterval) {
  const WilsonInterval w = wilson_interval(0, 100);
  EXPECT_NEAR(w.lo, 0.0, 1e-15);
  EXPECT_NEAR(w.hi, 0.037, 1e-3);
  const WilsonInterval v = wilson_interval(50, 100);
  EXPECT_NEAR(v.lo + v.hi, 1.0, 1e-12);
  EXPECT_NEAR(v.lo, 0.4038, 1e-4);
}

TEST(Simkit, Validation) {
  SimConfig c = small_config();
  c.trials = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = small_config();
  c.snr_db.clear();
  EXPECT_THROW(c.validate(), ValidationError);
  c = small_config();
  c.m = 12;
  c.receiver = ReceiverKind::kExhaustive;
  EXPECT_THROW(c.validate(), CapabilityError);
  EXPECT_EQ(parse_sim_mode("sampled"), SimMode::kSampled);
  EXPECT_THROW(parse_receiver_kind("greedy"), ValidationError);
}
