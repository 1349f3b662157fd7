#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mediagame/model.hpp"

namespace mediagame::cli {

enum class ExitCode : int { Ok = 0, ExpectationFailed = 1, Usage = 2 };

enum class Format { Csv, Pretty };

struct RunConfig {
  std::string command;  // classify | sweep | verify | simulate
  RawParams params;
  std::optional<Format> format;  // per-command default when unset
  std::string out_path;          // empty: standard output

  // sweep
  std::string vary = "phi";
  std::optional<double> from;
  std::optional<double> to;
  std::size_t steps = 101;

  // verify
  bool expect_classifier = false;
  bool list_all = false;

  // simulate
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> seed;
  std::string profile = "classified";
  unsigned threads = 0;
};

// Parses argv-style arguments (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);

// CSV rendering of floating-point fields: 9 significant digits.
std::string format_number(double v);

// Named profiles: listen-both, mainstream-only, select-on-alt,
// retain-iff-ns, retain-always, remove-always, or an index 0..31.
// "classified" is resolved by the caller.
std::optional<StrategyProfile> parse_profile(const std::string& name);

}  // namespace mediagame::cli
