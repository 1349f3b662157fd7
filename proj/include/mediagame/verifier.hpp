#pragma once

// Brute-force equilibrium check over the 32 pure policy-symmetric profiles.
// Beliefs come from the exact outcome table, never from the closed forms.

#include <array>
#include <optional>
#include <vector>

#include "mediagame/beliefs.hpp"
#include "mediagame/model.hpp"

namespace mediagame {

struct VoterDeviation {
  ObservationClass observation;
  VoteAction prescribed;
  VoteAction better;
  double gain;
};

struct IncumbentDeviation {
  bool flip_to_effort;   // true: deviating means starting to exert effort
  double win_prob_gain;  // Pr(retain | effort) - Pr(retain | no effort)
  double net_gain;       // payoff improvement from the flip
};

struct VerifyResult {
  bool is_equilibrium = false;
  std::vector<VoterDeviation> voter_deviations;
  std::optional<IncumbentDeviation> incumbent_deviation;
  std::vector<ObservationClass> offpath_classes;
  // Low and subversive types earn the same re-election odds from either
  // policy, so the 1/2 mixing is a best response.
  bool symmetric_mixing_ok = false;
};

// Partial map: classes with zero probability hold nullopt.
using BeliefMap = std::array<std::optional<Posterior>, kNumClasses>;

// All 32 profiles: no-effort first, then by voter-rule mask ascending, so the
// first entry removes at every observation.
std::vector<StrategyProfile> enumerate_profiles();

BeliefMap beliefs_from_profile(const ModelParams& params, const StrategyProfile& profile);

// Pr(retain | type, policy x) for x = 0, 1, by direct enumeration.
std::array<double, 2> policy_win_probabilities(const ModelParams& params,
                                               const StrategyProfile& profile,
                                               IncumbentType type);

VerifyResult is_pbe(const ModelParams& params, const StrategyProfile& profile);

std::vector<StrategyProfile> find_equilibria(const ModelParams& params);

}  // namespace mediagame
