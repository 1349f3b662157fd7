#include "mediagame/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "mediagame/regimes.hpp"
#include "mediagame/simulation.hpp"
#include "mediagame/verifier.hpp"

namespace mediagame::cli {

namespace {

constexpr const char* kSweepMetrics =
    "regime,phi_e,phi_v,phi_a,u_lo,u_hi,u_hi2,p_high_retained,p_low_retained,"
    "p_subversive_retained,welfare";

std::string flag_for(ParamField f) {
  return f == ParamField::UC ? "--uc" : "--" + std::string(field_name(f));
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return static_cast<int>(ExitCode::Usage);
}

std::optional<ModelParams> checked_params(const RawParams& raw, std::ostream& err) {
  try {
    return validate_params(raw);
  } catch (const ParamError& e) {
    usage_error(err, flag_for(e.field()) + ": " + e.what());
    return std::nullopt;
  }
}

// Writes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const RunConfig& config, std::ostream& out) : stream_(&out) {
    if (!config.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(config.out_path);
      stream_ = file_.get();
    }
  }
  bool ok() const { return stream_->good(); }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string sweep_row(double value, const ModelParams& params, const RegimeReport& report) {
  const Thresholds& t = report.thresholds;
  const Metrics m = theoretical_metrics(params, report.profile);
  std::ostringstream os;
  os << format_number(value) << ',' << to_string(report.regime) << ','
     << format_number(t.phi_e.raw) << ',' << format_number(t.phi_v.raw) << ','
     << format_number(t.phi_a.raw) << ',' << format_number(t.u_lo) << ','
     << format_number(t.u_hi) << ',' << format_number(t.u_hi2) << ','
     << format_number(m.p_high_retained) << ',' << format_number(m.p_low_retained) << ','
     << format_number(m.p_subversive_retained) << ',' << format_number(m.expected_voter_welfare);
  return os.str();
}

void print_thresholds(std::ostream& os, const Thresholds& t) {
  auto phi = [&](const char* name, const PhiThreshold& th) {
    os << "  " << name << " = " << format_number(th.raw);
    if (th.raw != th.clamped) os << " (clamped " << format_number(th.clamped) << ")";
    os << "\n";
  };
  phi("phi_e", t.phi_e);
  phi("phi_v", t.phi_v);
  phi("phi_a", t.phi_a);
  os << "  u_lo  = " << format_number(t.u_lo) << "\n"
     << "  u_hi  = " << format_number(t.u_hi) << "\n"
     << "  u_hi2 = " << format_number(t.u_hi2) << "\n"
     << "  u_v   = " << format_number(t.u_v) << "\n"
     << "  u_a   = " << format_number(t.u_a) << "\n"
     << "  u(agree,S | no effort) = " << format_number(t.u_accused_endorsed) << "\n"
     << "  prior retention value  = " << format_number(t.prior_utility) << "\n";
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::optional<StrategyProfile> parse_profile(const std::string& name) {
  static const std::map<std::string, StrategyProfile> kNamed{
      {"listen-both", profiles::kListenBoth},
      {"mainstream-only", profiles::kMainstreamOnly},
      {"select-on-alt", profiles::kSelectOnAlt},
      {"retain-iff-ns", profiles::kRetainIffNotAccused},
      {"retain-always", profiles::kRetainAlways},
      {"remove-always", profiles::kRemoveAlways},
  };
  if (auto it = kNamed.find(name); it != kNamed.end()) return it->second;
  try {
    std::size_t used = 0;
    const int index = std::stoi(name, &used);
    if (used == name.size() && index >= 0 && index < 32) {
      return StrategyProfile::from_index(static_cast<unsigned>(index));
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto params = checked_params(config.params, err);
  if (!params) return static_cast<int>(ExitCode::Usage);
  const RegimeReport report = classify(*params);

  Sink sink(config, out);
  std::ostream& os = sink.get();
  if (config.format.value_or(Format::Pretty) == Format::Csv) {
    os << "phi," << kSweepMetrics << "\n" << sweep_row(params->phi(), *params, report) << "\n";
  } else {
    os << "regime: " << to_string(report.regime) << "\n"
       << "profile: " << describe(report.profile) << "\n"
       << "binding conditions:\n";
    for (const auto& note : report.notes) os << "  - " << note << "\n";
    os << "thresholds:\n";
    print_thresholds(os, report.thresholds);
  }
  return sink.ok() ? 0 : usage_error(err, "cannot write output");
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ParamField field;
  try {
    field = parse_field(config.vary);
  } catch (const std::invalid_argument& e) {
    return usage_error(err, std::string("--vary: ") + e.what());
  }
  const auto base = checked_params(config.params, err);
  if (!base) return static_cast<int>(ExitCode::Usage);

  double from = 0.0;
  double to = 1.0;
  if (field == ParamField::Phi) {
    from = config.from.value_or(0.0);
    to = config.to.value_or(1.0);
  } else if (!config.from || !config.to) {
    return usage_error(err, "--from and --to are required when sweeping " + config.vary);
  } else {
    from = *config.from;
    to = *config.to;
  }
  if (config.steps == 0) return usage_error(err, "--steps must be at least 1");
  if (!std::isfinite(from) || !std::isfinite(to) || from > to) {
    return usage_error(err, "invalid range: need finite --from <= --to");
  }

  const auto grid = uniform_grid(from, to, config.steps);
  SweepResult result;
  try {
    result = sweep(*base, field, grid);
  } catch (const ParamError& e) {
    return usage_error(err, "invalid range: " + std::string(e.what()));
  }

  Sink sink(config, out);
  std::ostream& os = sink.get();
  const std::string column(field_name(field));
  if (config.format.value_or(Format::Csv) == Format::Csv) {
    os << column << ',' << kSweepMetrics << "\n";
    for (const auto& pt : result.points) {
      os << sweep_row(pt.value, base->with(field, pt.value), pt.report) << "\n";
    }
  } else {
    for (const auto& pt : result.points) {
      os << column << " = " << format_number(pt.value) << "  " << to_string(pt.report.regime)
         << "\n";
    }
  }
  for (const auto& tr : result.transitions) {
    err << "transition: " << column << " in (" << format_number(tr.before) << ", "
        << format_number(tr.after) << "]: " << to_string(tr.from) << " -> " << to_string(tr.to)
        << "\n";
  }
  return sink.ok() ? 0 : usage_error(err, "cannot write output");
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto params = checked_params(config.params, err);
  if (!params) return static_cast<int>(ExitCode::Usage);
  const StrategyProfile classified = classify(*params).profile;
  const auto equilibria = find_equilibria(*params);
  bool classifier_found = false;
  for (const auto& p : equilibria) classifier_found = classifier_found || p == classified;

  Sink sink(config, out);
  std::ostream& os = sink.get();
  if (config.format.value_or(Format::Pretty) == Format::Csv) {
    os << "index,high_effort,retain_agree_ns,retain_agree_s,retain_disagree_ns,"
          "retain_disagree_s,is_classifier\n";
    for (const auto& p : equilibria) {
      os << p.index() << ',' << (p.high_effort ? 1 : 0);
      for (std::size_t c = 0; c < kNumClasses; ++c) {
        os << ',' << (p.voter_rule.retains(ObservationClass::from_index(c)) ? 1 : 0);
      }
      os << ',' << (p == classified ? 1 : 0) << "\n";
    }
  } else {
    os << "equilibria: " << equilibria.size() << " of 32 profiles\n";
    for (const auto& p : equilibria) {
      os << "  [" << p.index() << "] " << describe(p) << (p == classified ? "  <- classifier" : "")
         << "\n";
    }
    if (config.list_all) {
      os << "all profiles:\n";
      for (const auto& p : enumerate_profiles()) {
        const VerifyResult r = is_pbe(*params, p);
        os << "  [" << p.index() << "] " << describe(p) << ": "
           << (r.is_equilibrium ? "equilibrium" : "not an equilibrium") << "\n";
        for (const auto& d : r.voter_deviations) {
          os << "      voter at (" << to_string(d.observation) << ") gains "
             << format_number(d.gain) << " by "
             << (d.better == VoteAction::RetainIncumbent ? "retaining" : "removing") << "\n";
        }
        if (r.incumbent_deviation) {
          os << "      high type gains " << format_number(r.incumbent_deviation->net_gain) << " by "
             << (r.incumbent_deviation->flip_to_effort ? "exerting" : "dropping") << " effort\n";
        }
      }
    }
    os << "classifier profile " << describe(classified)
       << (classifier_found ? " is" : " is NOT") << " an equilibrium\n";
  }
  if (!sink.ok()) return usage_error(err, "cannot write output");
  if (config.expect_classifier && !classifier_found) {
    err << "expectation failed: classifier profile is not an equilibrium\n";
    return static_cast<int>(ExitCode::ExpectationFailed);
  }
  return 0;
}

int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.n || !config.seed) {
    return usage_error(err, "--n and --seed are required for simulate");
  }
  if (*config.n == 0) return usage_error(err, "--n: replication count must be at least 1");
  const auto params = checked_params(config.params, err);
  if (!params) return static_cast<int>(ExitCode::Usage);

  StrategyProfile profile;
  if (config.profile == "classified") {
    profile = classify(*params).profile;
  } else if (auto parsed = parse_profile(config.profile)) {
    profile = *parsed;
  } else {
    return usage_error(err, "--profile: unknown profile '" + config.profile + "'");
  }

  const Metrics empirical = simulate(*params, profile, *config.n, *config.seed, config.threads);
  const Metrics exact = theoretical_metrics(*params, profile);

  Sink sink(config, out);
  std::ostream& os = sink.get();
  auto row = [&](const char* source, const Metrics& m) {
    os << source << ',' << m.n_replications << ',' << *config.seed << ','
       << format_number(m.p_high_retained) << ',' << format_number(m.p_low_retained) << ','
       << format_number(m.p_subversive_retained) << ','
       << format_number(m.expected_voter_welfare) << "\n";
  };
  if (config.format.value_or(Format::Csv) == Format::Csv) {
    os << "source,n,seed,p_high_retained,p_low_retained,p_subversive_retained,welfare\n";
    row("empirical", empirical);
    row("theoretical", exact);
  } else {
    os << "profile: " << describe(profile) << "\n";
    os << "replications: " << *config.n << " (seed " << *config.seed << ")\n";
    os << "                 empirical    exact\n";
    auto line = [&](const char* name, double a, double b) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "  %-14s %10.6f %10.6f\n", name, a, b);
      os << buf;
    };
    line("High kept", empirical.p_high_retained, exact.p_high_retained);
    line("Low kept", empirical.p_low_retained, exact.p_low_retained);
    line("Subv. kept", empirical.p_subversive_retained, exact.p_subversive_retained);
    line("welfare", empirical.expected_voter_welfare, exact.expected_voter_welfare);
  }
  return sink.ok() ? 0 : usage_error(err, "cannot write output");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  // Canonical point; every field can be overridden by flag or config file.
  config.params = RawParams{0.05, 0.5, 0.7, 0.1, 1.0, 0.4, 0.3};

  CLI::App app{"Electoral accountability with mainstream and alternative media"};
  app.set_config("--config", "", "Flat key=value file; flags override its values");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  app.add_option("--sigma", config.params.sigma, "Pr(incumbent is subversive)")->capture_default_str();
  app.add_option("--pi", config.params.pi, "Pr(high type | not subversive)")->capture_default_str();
  app.add_option("--q", config.params.q, "Mainstream accuracy")->capture_default_str();
  app.add_option("--k", config.params.k, "Effort cost")->capture_default_str();
  app.add_option("--s", config.params.s, "Loss from a retained subversive")->capture_default_str();
  app.add_option("--uc", config.params.u_c, "Challenger's expected utility")->capture_default_str();
  app.add_option("--phi", config.params.phi, "Pr(alternative media malicious)")->capture_default_str();

  std::string format;
  app.add_option("--format", format, "csv or pretty")->check(CLI::IsMember({"csv", "pretty"}));
  app.add_option("--out", config.out_path, "Write output here instead of stdout");
  app.add_option("--vary", config.vary, "Field to sweep")->capture_default_str();
  double from = 0.0;
  double to = 0.0;
  auto* from_opt = app.add_option("--from", from, "Sweep start");
  auto* to_opt = app.add_option("--to", to, "Sweep end");
  app.add_option("--steps", config.steps, "Sweep grid points")->capture_default_str();
  app.add_flag("--expect-classifier", config.expect_classifier,
               "Exit 1 unless the classifier's profile is an equilibrium");
  app.add_flag("--all", config.list_all, "verify: report every profile");
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  auto* n_opt = app.add_option("--n", n, "Replications");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed");
  app.add_option("--profile", config.profile, "Profile to simulate")->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)");

  for (const char* name : {"classify", "sweep", "verify", "simulate"}) {
    app.add_subcommand(name)->fallthrough();
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage_error(err, e.what());
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!format.empty()) config.format = format == "csv" ? Format::Csv : Format::Pretty;
  if (from_opt->count() > 0) config.from = from;
  if (to_opt->count() > 0) config.to = to;
  if (n_opt->count() > 0) config.n = n;
  if (seed_opt->count() > 0) config.seed = seed;

  if (config.command == "classify") return run_classify(config, out, err);
  if (config.command == "sweep") return run_sweep(config, out, err);
  if (config.command == "verify") return run_verify(config, out, err);
  return run_simulate(config, out, err);
}

}  // namespace mediagame::cli
