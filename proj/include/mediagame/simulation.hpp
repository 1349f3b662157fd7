#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mediagame/beliefs.hpp"
#include "mediagame/model.hpp"

namespace mediagame {

class InvalidCount : public std::invalid_argument {
 public:
  InvalidCount() : std::invalid_argument("replication count must be at least 1") {}
};

struct Metrics {
  std::array<double, 3> retain_prob_by_type{};  // indexed by IncumbentType
  double p_subversive_retained = 0.0;
  double p_high_retained = 0.0;
  double p_low_retained = 0.0;
  // Election-stage payoff: retained type's utility, or U_C.
  double expected_voter_welfare = 0.0;
  std::array<std::optional<Posterior>, kNumClasses> empirical_posteriors{};
  std::uint64_t n_replications = 0;  // 0 for exact metrics
  std::uint64_t seed = 0;
};

// Plays the one-shot game n times. Deterministic in (params, profile, n,
// seed); the thread count only changes wall time. threads = 0 picks the
// hardware concurrency.
Metrics simulate(const ModelParams& params, const StrategyProfile& profile, std::uint64_t n,
                 std::uint64_t seed, unsigned threads = 0);

// Exact expectations from the outcome table.
Metrics theoretical_metrics(const ModelParams& params, const StrategyProfile& profile);

}  // namespace mediagame
