#include "sfperm/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include "sfperm/bounds.hpp"
#include "sfperm/channel.hpp"
#include "sfperm/errors.hpp"
#include "sfperm/lehmer.hpp"
#include "sfperm/radar.hpp"
#include "sfperm/receiver.hpp"
#include "sfperm/simkit.hpp"
#include "sfperm/special.hpp"
#include "sfperm/waveform.hpp"

namespace sfperm::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string num(double x) { return fmt::format("{}", x); }

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += num(xs[i]);
  }
  return out;
}

/// Resolved configuration, written as '#' comment lines ahead of the data.
class Header {
 public:
  explicit Header(std::string command) : command_(std::move(command)) {}

  Header& add(const std::string& key, const std::string& value) {
    items_.emplace_back(key, value);
    return *this;
  }
  Header& add(const std::string& key, double value) { return add(key, num(value)); }
  Header& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
  Header& add(const std::string& key, std::uint64_t value) { return add(key, std::to_string(value)); }

  void write(std::ostream& os) const {
    os << "# sfperm " << command_ << '\n';
    for (const auto& [key, value] : items_) os << "# " << key << '=' << value << '\n';
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> items_;
};

/// Writes to --out when given, else to the caller's stream.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot open output file '" + path + "'");
  body(file);
}

struct WaveformFlags {
  int m = 4;
  double t_sec = 1.0;
  double delta_f_hz = 1.0;
  double f0_hz = 0.0;
  double energy = 1.0;
  int oversampling = 0;
  std::string perm;
  std::optional<std::uint64_t> symbol;

  WaveformParams params() const {
    WaveformParams p;
    p.m = m;
    p.pulse_width_s = t_sec;
    p.delta_f_hz = delta_f_hz;
    p.f0_hz = f0_hz;
    p.energy = energy;
    p.oversampling = oversampling;
    p.validate();
    return p;
  }

  // --perm wins over --symbol; neither selects the ascending order.
  Permutation permutation() const {
    if (!perm.empty()) {
      Permutation p = parse_permutation(perm);
      if (p.size() != m) {
        throw ValidationError("--perm has " + std::to_string(p.size()) + " entries but --m is " +
                              std::to_string(m));
      }
      return p;
    }
    if (symbol) return rank_to_permutation(SymbolRank{*symbol, m});
    return Permutation::identity(m);
  }

  void describe(Header& h, const Permutation& p, const WaveformParams& w) const {
    h.add("m", w.m)
        .add("t-sec", w.pulse_width_s)
        .add("delta-f-hz", w.delta_f_hz)
        .add("f0-hz", w.f0_hz)
        .add("energy", w.energy)
        .add("oversampling", w.samples_per_pulse())
        .add("perm", p.to_string())
        .add("symbol", permutation_to_rank(p).value);
  }
};

void add_waveform_flags(CLI::App* app, WaveformFlags& f, bool with_perm) {
  app->add_option("--m", f.m, "Tone count M (number of pulses)")->capture_default_str();
  app->add_option("--t-sec", f.t_sec, "Pulse width T [s]")->capture_default_str();
  app->add_option("--delta-f-hz", f.delta_f_hz, "Tone spacing delta_f [Hz]; delta_f*T must be an integer")
      ->capture_default_str();
  app->add_option("--f0-hz", f.f0_hz, "Lowest tone frequency f0 [Hz]")->capture_default_str();
  app->add_option("--energy", f.energy, "Waveform energy E [energy units]")->capture_default_str();
  app->add_option("--oversampling", f.oversampling,
                  "Samples per pulse [samples]; 0 selects 8*M*(delta_f*T)")
      ->capture_default_str();
  if (with_perm) {
    auto* perm = app->add_option("--perm", f.perm, "Tone order, e.g. \"0 3 2 1\" [tone indices]");
    app->add_option("--symbol", f.symbol, "Data symbol selecting the tone order [rank in 0..M!-1]")
        ->excludes(perm);
  }
}

std::vector<double> snr_list_or_throw(const std::vector<double>& snr_db) {
  if (snr_db.empty()) throw ValidationError("--snr-db needs at least one value");
  return snr_db;
}

// ---------------------------------------------------------------- encode

struct EncodeFlags {
  int m = 4;
  std::optional<std::uint64_t> symbol;
  std::string bits;
  std::string out;
};

int run_encode(const EncodeFlags& f, std::ostream& out) {
  SymbolRank rank{0, f.m};
  std::string mode = "symbol";
  if (!f.bits.empty()) {
    const int needed = bits_per_block(f.m);
    if (static_cast<int>(f.bits.size()) != needed) {
      throw ValidationError("--bits needs exactly " + std::to_string(needed) + " bits for M=" +
                            std::to_string(f.m));
    }
    for (char b : f.bits) {
      if (b != '0' && b != '1') throw ValidationError("--bits must contain only 0 and 1");
      rank.value = (rank.value << 1) | static_cast<std::uint64_t>(b == '1');
    }
    mode = "bits";
  } else if (f.symbol) {
    rank.value = *f.symbol;
  } else {
    throw ValidationError("encode needs --symbol or --bits");
  }
  const Permutation p = rank_to_permutation(rank);
  emit(f.out, out, [&](std::ostream& os) {
    Header h("encode");
    h.add("m", f.m).add("mode", mode).add("symbol", rank.value).add("bits-per-block", bits_per_block(f.m));
    h.write(os);
    os << p.to_string() << '\n';
  });
  return kExitOk;
}

// ---------------------------------------------------------------- decode

struct DecodeFlags {
  std::string perm;
  bool bits = false;
  std::string out;
};

int run_decode(const DecodeFlags& f, std::ostream& out) {
  const Permutation p = parse_permutation(f.perm);
  const SymbolRank rank = permutation_to_rank(p);
  if (f.bits && rank.value >= bit_mode_symbol_count(p.size())) {
    throw ValidationError("rank " + std::to_string(rank.value) + " is outside the bit-mode range [0, " +
                          std::to_string(bit_mode_symbol_count(p.size()) - 1) + "]");
  }
  emit(f.out, out, [&](std::ostream& os) {
    Header h("decode");
    h.add("m", p.size()).add("perm", p.to_string()).add("bits", std::string(f.bits ? "true" : "false"));
    h.write(os);
    if (!f.bits) {
      os << rank.value << '\n';
      return;
    }
    const int width = bits_per_block(p.size());
    std::string text;
    for (int b = width - 1; b >= 0; --b) text += ((rank.value >> b) & 1U) ? '1' : '0';
    os << text << '\n';
  });
  return kExitOk;
}

// ---------------------------------------------------------------- waveform

struct WaveformCmd {
  WaveformFlags wave;
  std::string out;
};

int run_waveform(const WaveformCmd& f, std::ostream& out) {
  const WaveformParams w = f.wave.params();
  const Permutation p = f.wave.permutation();
  const ComplexSignal s = synthesize(p, w);
  emit(f.out, out, [&](std::ostream& os) {
    Header h("waveform");
    f.wave.describe(h, p, w);
    h.add("sample-rate-hz", s.sample_rate_hz);
    h.write(os);
    os << "t,re,im\n";
    for (std::size_t k = 0; k < s.size(); ++k) {
      os << num(s.t0_s + static_cast<double>(k) * s.dt()) << ',' << num(s.samples[k].real()) << ','
         << num(s.samples[k].imag()) << '\n';
    }
  });
  return kExitOk;
}

// ---------------------------------------------------------------- detect

struct DetectFlags {
  std::string matrix;
  std::string receiver = "hungarian";
  std::string out;
};

int run_detect(const DetectFlags& f, std::ostream& out) {
  std::ifstream in(f.matrix);
  if (!in) throw ValidationError("cannot open matrix file '" + f.matrix + "'");
  const CorrelationMatrix r = CorrelationMatrix::from_rows(read_matrix_csv(in));
  const ReceiverKind kind = parse_receiver_kind(f.receiver);
  const Permutation p = kind == ReceiverKind::kHungarian ? hungarian_detect(r) : exhaustive_detect(r);
  emit(f.out, out, [&](std::ostream& os) {
    Header h("detect");
    h.add("matrix", f.matrix).add("m", r.size()).add("receiver", to_string(kind));
    h.write(os);
    os << p.to_string() << '\n';
    os << "rank=" << permutation_to_rank(p).value << " objective=" << num(r.objective(p)) << '\n';
  });
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsFlags {
  int m = 4;
  int n = 2;
  std::string channel = "awgn";
  double k = 0.0;
  std::vector<double> snr_db;
  double series_tol = 1e-12;
  int j_max = 200;
  bool clamp = false;
  std::string out;
};

int run_bounds(const BoundsFlags& f, std::ostream& out) {
  const ChannelKind kind = parse_channel_kind(f.channel);
  const std::vector<double> snrs = snr_list_or_throw(f.snr_db);
  const BoundsConfig cfg{f.series_tol, f.j_max};
  const double k = kind == ChannelKind::kRayleigh ? 0.0 : f.k;
  struct Row {
    double snr_db, ub, nn;
  };
  std::vector<Row> rows;
  for (double snr_db : snrs) {
    const double snr = db_to_linear(snr_db);
    Row row{snr_db, 0.0, 0.0};
    switch (kind) {
      case ChannelKind::kAwgn:
        row.ub = union_bound_awgn(f.m, f.n, snr);
        row.nn = nn_awgn(f.m, f.n, snr);
        break;
      case ChannelKind::kRician:
        row.ub = union_bound_rician(f.m, f.n, k, snr, cfg);
        row.nn = nn_rician(f.m, f.n, k, snr, cfg);
        break;
      case ChannelKind::kRayleigh:
        row.ub = union_bound_rayleigh(f.m, f.n, snr);
        row.nn = nn_rayleigh(f.m, f.n, snr);
        break;
    }
    if (f.clamp) {
      row.ub = display_probability(row.ub);
      row.nn = display_probability(row.nn);
    }
    rows.push_back(row);
  }
  emit(f.out, out, [&](std::ostream& os) {
    Header h("bounds");
    h.add("m", f.m).add("n", f.n).add("channel", to_string(kind)).add("rician-k", k);
    h.add("snr-db", join(snrs)).add("snr-definition", std::string("E/N0 per receive antenna"));
    h.add("series-tol", f.series_tol).add("j-max", f.j_max);
    h.add("clamp", std::string(f.clamp ? "true" : "false"));
    h.write(os);
    os << "snr_db,ub,nn,channel,M,N,K\n";
    for (const Row& r : rows) {
      os << num(r.snr_db) << ',' << num(r.ub) << ',' << num(r.nn) << ',' << to_string(kind) << ','
         << f.m << ',' << f.n << ',' << num(k) << '\n';
    }
  });
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateFlags {
  WaveformFlags wave;
  int n = 2;
  std::string channel = "awgn";
  double k = 0.0;
  std::vector<double> snr_db;
  std::uint64_t trials = 100000;
  std::uint64_t target_errors = 0;
  std::uint64_t seed = 1;
  std::string receiver = "hungarian";
  std::string mode = "statistic";
  int workers = 0;
  std::string out;
};

int run_simulate(const SimulateFlags& f, std::ostream& out) {
  SimConfig cfg;
  cfg.m = f.wave.m;
  cfg.n_antennas = f.n;
  cfg.channel = parse_channel_kind(f.channel);
  cfg.rician_k = cfg.channel == ChannelKind::kRayleigh ? 0.0 : f.k;
  cfg.snr_db = snr_list_or_throw(f.snr_db);
  cfg.trials = f.trials;
  cfg.target_errors = f.target_errors;
  cfg.master_seed = f.seed;
  cfg.receiver = parse_receiver_kind(f.receiver);
  cfg.mode = parse_sim_mode(f.mode);
  cfg.workers = f.workers;
  cfg.waveform = f.wave.params();
  cfg.validate();
  const std::vector<BlerPoint> points = run_bler_sweep(cfg);

  emit(f.out, out, [&](std::ostream& os) {
    Header h("simulate");
    h.add("m", cfg.m).add("n", cfg.n_antennas).add("channel", to_string(cfg.channel));
    h.add("rician-k", cfg.rician_k).add("snr-db", join(cfg.snr_db));
    h.add("snr-definition", std::string("E/N0 per receive antenna"));
    h.add("trials", cfg.trials).add("target-errors", cfg.target_errors).add("seed", cfg.master_seed);
    h.add("receiver", to_string(cfg.receiver)).add("mode", to_string(cfg.mode));
    h.add("t-sec", cfg.waveform.pulse_width_s).add("delta-f-hz", cfg.waveform.delta_f_hz);
    h.add("f0-hz", cfg.waveform.f0_hz).add("energy", cfg.waveform.energy);
    h.add("oversampling", cfg.waveform.samples_per_pulse());
    h.write(os);
    os << "snr_db,bler,ci_lo,ci_hi,trials,errors,M,N,channel,K,receiver,mode,seed\n";
    for (const BlerPoint& p : points) {
      os << num(p.snr_db) << ',' << num(p.bler) << ',' << num(p.ci_lo) << ',' << num(p.ci_hi) << ','
         << p.trials << ',' << p.errors << ',' << cfg.m << ',' << cfg.n_antennas << ','
         << to_string(cfg.channel) << ',' << num(cfg.rician_k) << ',' << to_string(cfg.receiver)
         << ',' << to_string(cfg.mode) << ',' << cfg.master_seed << '\n';
    }
  });
  return kExitOk;
}

// ---------------------------------------------------------------- af

struct AfFlags {
  WaveformFlags wave;
  std::string cut = "full";
  int tau_points = 41;
  std::optional<double> tau_max_sec;
  int doppler_points = 41;
  std::optional<double> doppler_max_hz;
  int workers = 0;
  std::string out;
};

int run_af(const AfFlags& f, std::ostream& out) {
  const WaveformParams w = f.wave.params();
  const Permutation p = f.wave.permutation();
  const double tau_max = f.tau_max_sec.value_or(w.duration_s());
  const double doppler_max_hz = f.doppler_max_hz.value_or(2.0 / w.pulse_width_s);
  if (!(tau_max >= 0.0) || !(doppler_max_hz >= 0.0)) {
    throw ValidationError("--tau-max-sec and --doppler-max-hz must be non-negative");
  }
  if (f.cut != "full" && f.cut != "zero-delay" && f.cut != "zero-doppler") {
    throw ValidationError("--cut must be full, zero-delay or zero-doppler");
  }
  const std::vector<double> taus =
      f.cut == "zero-delay" ? std::vector<double>{0.0} : linear_axis(-tau_max, tau_max, f.tau_points);
  const std::vector<double> omegas =
      f.cut == "zero-doppler" ? std::vector<double>{0.0}
                              : linear_axis(-kTwoPi * doppler_max_hz, kTwoPi * doppler_max_hz,
                                            f.doppler_points);
  const AFGrid grid = af_grid(p, w, taus, omegas, f.workers);

  emit(f.out, out, [&](std::ostream& os) {
    Header h("af");
    f.wave.describe(h, p, w);
    h.add("cut", f.cut).add("tau-points", static_cast<int>(taus.size())).add("tau-max-sec", tau_max);
    h.add("doppler-points", static_cast<int>(omegas.size())).add("doppler-max-hz", doppler_max_hz);
    h.add("doppler-max-rad-s", kTwoPi * doppler_max_hz).add("workers", f.workers);
    h.add("normalisation", std::string("unit energy"));
    h.write(os);
    os << "tau,omega_rad_s,magnitude\n";
    for (std::size_t i = 0; i < taus.size(); ++i) {
      for (std::size_t j = 0; j < omegas.size(); ++j) {
        os << num(taus[i]) << ',' << num(omegas[j]) << ',' << num(grid.at(i, j)) << '\n';
      }
    }
  });
  return kExitOk;
}

// ---------------------------------------------------------------- crlb

struct CrlbFlags {
  WaveformFlags wave;
  double bt = 100.0;
  std::vector<double> snr_db;
  std::string variant = "both";
  std::string out;
};

int run_crlb(const CrlbFlags& f, std::ostream& out) {
  const WaveformParams w = f.wave.params();
  const Permutation p = f.wave.permutation();
  const std::vector<double> snrs = snr_list_or_throw(f.snr_db);
  if (f.variant != "full" && f.variant != "simplified" && f.variant != "both") {
    throw ValidationError("--variant must be full, simplified or both");
  }
  if (!(f.bt > 0.0)) throw ValidationError("--bt must be positive");
  const double bandwidth = f.bt / w.pulse_width_s;

  struct Row {
    double snr_db, n0;
    Crlb bound;
    std::string variant;
  };
  std::vector<Row> rows;
  bool low_bt = false;
  for (double snr_db : snrs) {
    const double n0 = n0_from_snr_db(w.energy, snr_db);
    if (f.variant != "simplified") {
      const FisherMatrix fm = fisher_matrix(p, w, n0, bandwidth);
      low_bt = low_bt || fm.low_bt;
      rows.push_back({snr_db, n0, crlb_full(fm), "full"});
    }
    if (f.variant != "full") rows.push_back({snr_db, n0, crlb_simplified(w, n0, bandwidth), "simplified"});
  }

  emit(f.out, out, [&](std::ostream& os) {
    Header h("crlb");
    f.wave.describe(h, p, w);
    h.add("bt", f.bt).add("bandwidth-hz", bandwidth).add("snr-db", join(snrs)).add("variant", f.variant);
    h.add("n0-definition", std::string("N0 = E / 10^(snr_db/10)"));
    if (low_bt) h.add("warning", std::string("B*T < 10: large-BT approximation not reliable"));
    h.write(os);
    os << "snr_db,n0,M,T,B,crlb_tau,crlb_omega,variant\n";
    for (const Row& r : rows) {
      os << num(r.snr_db) << ',' << num(r.n0) << ',' << w.m << ',' << num(w.pulse_width_s) << ','
         << num(bandwidth) << ',' << num(r.bound.tau) << ',' << num(r.bound.omega) << ',' << r.variant
         << '\n';
    }
  });
  return kExitOk;
}

// ---------------------------------------------------------------- selftest

int run_selftest(std::ostream& out) {
  bool ok = true;
  const auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    out << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    ok = ok && pass;
  };

  const CorrelationMatrix golden = CorrelationMatrix::from_rows(
      {{-4, -3, -2, -6}, {-2, 1, 0, -4}, {4, -2, 5, -3}, {5, 4, -4, 3}});
  const Permutation hung = hungarian_detect(golden);
  const Permutation expected({2, 1, 0, 3});
  report("golden-4x4-hungarian", hung == expected && golden.objective(hung) == 6.0,
         "assignment " + hung.to_string() + ", objective " + num(golden.objective(hung)));
  const Permutation brute = exhaustive_detect(golden);
  report("golden-4x4-exhaustive", brute == expected, "assignment " + brute.to_string());

  const double q1 = q_function(1.0);
  const double ub = union_bound_awgn(2, 1, 1.0);
  const double nn = nn_awgn(2, 1, 1.0);
  report("m2-closed-form", std::abs(ub - q1) <= 1e-15 && std::abs(nn - q1) <= 1e-15 &&
                               std::abs(q1 - 0.15865525393145705) < 1e-12,
         "ub=" + num(ub) + " nn=" + num(nn) + " Q(1)=" + num(q1));

  SimConfig cfg;
  cfg.m = 2;
  cfg.n_antennas = 1;
  cfg.snr_db = {0.0};
  cfg.trials = 100000;
  cfg.master_seed = 7;
  const BlerPoint pt = run_bler_sweep(cfg).front();
  const double sigma = std::sqrt(q1 * (1.0 - q1) / static_cast<double>(pt.trials));
  report("m2-simulation", std::abs(pt.bler - q1) <= 3.0 * sigma,
         "bler=" + num(pt.bler) + " expected " + num(q1) + " +/- " + num(3.0 * sigma));
  return ok ? kExitOk : kExitNumeric;
}

// CLI11 reads config files only for the top-level app, so subcommand files
// are applied here: each key fills its option unless the command line set it.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open config file '" + path + "'");
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_config(file)) {
    if (!item.parents.empty() || item.name == "--") continue;
    CLI::Option* opt = cmd->get_option_no_throw("--" + item.name);
    if (opt == nullptr || opt->get_single_name() == "config") {
      throw ValidationError("unknown key '" + item.name + "' in config file '" + path + "'");
    }
    if (opt->count() > 0) continue;
    for (const std::string& value : item.inputs) opt->add_result(value);
    opt->run_callback();
  }
}

}  // namespace

std::vector<std::vector<double>> read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(v)) {
        throw ValidationError("line " + std::to_string(line_no) + ": not a number: '" + token + "'");
      }
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("matrix file is empty");
  return rows;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequency-permutation joint radar/communication toolkit", "sfperm"};
  app.require_subcommand(1);
  app.fallthrough(false);

  EncodeFlags encode;
  auto* encode_cmd = app.add_subcommand("encode", "Map a data symbol or bit string to a tone order");
  encode_cmd->add_option("--m", encode.m, "Tone count M")->capture_default_str();
  auto* sym = encode_cmd->add_option("--symbol", encode.symbol, "Symbol [rank in 0..M!-1]");
  encode_cmd->add_option("--bits", encode.bits, "Bit string of floor(log2 M!) bits, MSB first")
      ->excludes(sym);
  encode_cmd->add_option("--out", encode.out, "Output path (default stdout)");

  DecodeFlags decode;
  auto* decode_cmd = app.add_subcommand("decode", "Map a tone order back to its data symbol");
  decode_cmd->add_option("--perm", decode.perm, "Tone order, e.g. \"0 3 2 1\" [tone indices]")
      ->required();
  decode_cmd->add_flag("--bits", decode.bits, "Print the bit-mode bit string instead of the rank");
  decode_cmd->add_option("--out", decode.out, "Output path (default stdout)");

  WaveformCmd wave;
  auto* wave_cmd = app.add_subcommand("waveform", "Synthesize the sampled baseband waveform (CSV t,re,im)");
  add_waveform_flags(wave_cmd, wave.wave, true);
  wave_cmd->add_option("--out", wave.out, "Output path (default stdout)");

  DetectFlags detect;
  auto* detect_cmd = app.add_subcommand("detect", "ML detection on an M x M correlation matrix CSV");
  detect_cmd->add_option("--matrix", detect.matrix, "CSV file, one matrix row per line")->required();
  detect_cmd->add_option("--receiver", detect.receiver, "hungarian | exhaustive")->capture_default_str();
  detect_cmd->add_option("--out", detect.out, "Output path (default stdout)");

  BoundsFlags bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Union bound and nearest-neighbour BLER approximations");
  bounds_cmd->add_option("--m", bounds.m, "Tone count M (>= 2)")->capture_default_str();
  bounds_cmd->add_option("--n,--n-antennas,--n_antennas", bounds.n, "Receive antennas N")
      ->capture_default_str();
  bounds_cmd->add_option("--channel", bounds.channel, "awgn | rician | rayleigh")->capture_default_str();
  bounds_cmd->add_option("--rician-k,--rician_k", bounds.k, "Rician K factor [linear]")
      ->capture_default_str();
  bounds_cmd->add_option("--snr-db,--snr_db_list", bounds.snr_db, "E/N0 per antenna [dB], comma separated")
      ->delimiter(',')
      ->required();
  bounds_cmd->add_option("--series-tol", bounds.series_tol, "Rician series relative truncation tolerance")
      ->capture_default_str();
  bounds_cmd->add_option("--j-max", bounds.j_max, "Rician series index cap")->capture_default_str();
  bounds_cmd->add_flag("--clamp", bounds.clamp, "Clamp displayed bounds to 1");
  bounds_cmd->add_option("--out", bounds.out, "Output path (default stdout)");

  SimulateFlags sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo BLER versus SNR sweep");
  std::string sim_config;
  sim_cmd->add_option("--config", sim_config,
                      "Flat key=value file using the long flag names; command-line flags take precedence");
  add_waveform_flags(sim_cmd, sim.wave, false);
  sim_cmd->add_option("--n,--n-antennas,--n_antennas", sim.n, "Receive antennas N")->capture_default_str();
  sim_cmd->add_option("--channel", sim.channel, "awgn | rician | rayleigh")->capture_default_str();
  sim_cmd->add_option("--rician-k,--rician_k", sim.k, "Rician K factor [linear]")->capture_default_str();
  sim_cmd->add_option("--snr-db,--snr_db_list", sim.snr_db,
                      "E/N0 per antenna [dB], comma separated (required here or in --config)")
      ->delimiter(',');
  sim_cmd->add_option("--trials", sim.trials, "Trials per SNR point [count]")->capture_default_str();
  sim_cmd->add_option("--target-errors", sim.target_errors,
                      "Stop a point once this many block errors are seen (0 = fixed trials) [count]")
      ->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  sim_cmd->add_option("--receiver", sim.receiver, "hungarian | exhaustive")->capture_default_str();
  sim_cmd->add_option("--mode", sim.mode, "statistic | sampled")->capture_default_str();
  sim_cmd->add_option("--workers", sim.workers, "OpenMP threads (0 = runtime default) [count]")
      ->capture_default_str();
  sim_cmd->add_option("--out", sim.out, "Output path (default stdout)");

  AfFlags af;
  auto* af_cmd = app.add_subcommand("af", "Ambiguity function |A(tau, omega)| on a grid (CSV)");
  add_waveform_flags(af_cmd, af.wave, true);
  af_cmd->add_option("--cut", af.cut, "full | zero-delay | zero-doppler")->capture_default_str();
  af_cmd->add_option("--tau-points", af.tau_points, "Delay grid points [count]")->capture_default_str();
  af_cmd->add_option("--tau-max-sec", af.tau_max_sec, "Delay half-span [s] (default M*T)");
  af_cmd->add_option("--doppler-points", af.doppler_points, "Doppler grid points [count]")
      ->capture_default_str();
  af_cmd->add_option("--doppler-max-hz", af.doppler_max_hz,
                     "Doppler half-span [Hz], converted to rad/s in the output (default 2/T)");
  af_cmd->add_option("--workers", af.workers, "OpenMP threads (0 = runtime default) [count]")
      ->capture_default_str();
  af_cmd->add_option("--out", af.out, "Output path (default stdout)");

  CrlbFlags crlb;
  auto* crlb_cmd = app.add_subcommand("crlb", "Cramer-Rao bounds on delay and Doppler versus SNR");
  add_waveform_flags(crlb_cmd, crlb.wave, true);
  crlb_cmd->add_option("--bt", crlb.bt, "Receiver bandwidth-time product B*T (B = bt/T) [dimensionless]")
      ->capture_default_str();
  crlb_cmd->add_option("--snr-db", crlb.snr_db, "E/N0 [dB], comma separated")->delimiter(',')->required();
  crlb_cmd->add_option("--variant", crlb.variant, "full | simplified | both")->capture_default_str();
  crlb_cmd->add_option("--out", crlb.out, "Output path (default stdout)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in golden checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitValidation;
  }

  try {
    if (*sim_cmd && !sim_config.empty()) apply_config_file(sim_cmd, sim_config);
    if (*encode_cmd) return run_encode(encode, out);
    if (*decode_cmd) return run_decode(decode, out);
    if (*wave_cmd) return run_waveform(wave, out);
    if (*detect_cmd) return run_detect(detect, out);
    if (*bounds_cmd) return run_bounds(bounds, out);
    if (*sim_cmd) return run_simulate(sim, out);
    if (*af_cmd) return run_af(af, out);
    if (*crlb_cmd) return run_crlb(crlb, out);
    if (*selftest_cmd) return run_selftest(out);
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  err << app.help();
  return kExitValidation;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sfperm");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sfperm::cli
