#include "mediagame/verifier.hpp"

#include <cmath>

namespace mediagame {

std::vector<StrategyProfile> enumerate_profiles() {
  std::vector<StrategyProfile> out;
  out.reserve(32);
  for (unsigned i = 0; i < 32; ++i) out.push_back(StrategyProfile::from_index(i));
  return out;
}

BeliefMap beliefs_from_profile(const ModelParams& params, const StrategyProfile& profile) {
  const OutcomeTable table = outcome_distribution(params, profile);
  BeliefMap beliefs;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    const auto c = ObservationClass::from_index(i);
    if (!(table.class_probability(c) > 0.0)) continue;
    beliefs[i] = Posterior::from_weights(table.joint(IncumbentType::High, c),
                                         table.joint(IncumbentType::Low, c),
                                         table.joint(IncumbentType::Subversive, c));
  }
  return beliefs;
}

namespace {

double retain_probability(const OutcomeTable& table, const VoterRule& rule, IncumbentType t) {
  double p = 0.0;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    const auto c = ObservationClass::from_index(i);
    if (rule.retains(c)) p += table.conditional(c, t);
  }
  return p;
}

}  // namespace

std::array<double, 2> policy_win_probabilities(const ModelParams& params,
                                               const StrategyProfile& profile,
                                               IncumbentType type) {
  const OutcomeTable table = outcome_distribution(params, profile);
  std::array<double, 2> win{};
  std::array<double, 2> mass{};
  for (const Atom& a : table.atoms()) {
    if (a.type != type) continue;
    mass[a.policy] += a.weight;
    if (profile.voter_rule.retains(a.observation())) win[a.policy] += a.weight;
  }
  for (int x = 0; x < 2; ++x) win[x] = mass[x] > 0.0 ? win[x] / mass[x] : 0.0;
  return win;
}

VerifyResult is_pbe(const ModelParams& params, const StrategyProfile& profile) {
  VerifyResult result;

  const BeliefMap beliefs = beliefs_from_profile(params, profile);
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    const auto c = ObservationClass::from_index(i);
    if (!beliefs[i]) {
      result.offpath_classes.push_back(c);
      continue;
    }
    const double retain = retention_value(params, *beliefs[i]);
    const double remove = params.u_c();
    const bool retains = profile.voter_rule.retains(c);
    const double gain = retains ? remove - retain : retain - remove;
    if (gain > kTieTolerance) {
      result.voter_deviations.push_back(VoterDeviation{
          c, profile.voter_rule.action(c),
          retains ? VoteAction::ElectChallenger : VoteAction::RetainIncumbent, gain});
    }
  }

  // High type: compare re-election odds with and without effort under the
  // same voter rule.
  StrategyProfile with_effort = profile;
  with_effort.high_effort = true;
  StrategyProfile without_effort = profile;
  without_effort.high_effort = false;
  const double p_effort = retain_probability(outcome_distribution(params, with_effort),
                                             profile.voter_rule, IncumbentType::High);
  const double p_idle = retain_probability(outcome_distribution(params, without_effort),
                                           profile.voter_rule, IncumbentType::High);
  const double win_gain = p_effort - p_idle;
  const double effort_value = win_gain * params.ego_rent() - params.k();
  const double net = profile.high_effort ? -effort_value : effort_value;
  if (net > kTieTolerance) {
    result.incumbent_deviation = IncumbentDeviation{!profile.high_effort, win_gain, net};
  }

  result.symmetric_mixing_ok = true;
  for (IncumbentType t : {IncumbentType::Low, IncumbentType::Subversive}) {
    const auto win = policy_win_probabilities(params, profile, t);
    if (std::abs(win[0] - win[1]) > kTieTolerance) result.symmetric_mixing_ok = false;
  }

  result.is_equilibrium = result.voter_deviations.empty() && !result.incumbent_deviation;
  return result;
}

std::vector<StrategyProfile> find_equilibria(const ModelParams& params) {
  std::vector<StrategyProfile> out;
  for (const StrategyProfile& profile : enumerate_profiles()) {
    if (is_pbe(params, profile).is_equilibrium) out.push_back(profile);
  }
  return out;
}

}  // namespace mediagame
