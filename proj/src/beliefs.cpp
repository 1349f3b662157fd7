#include "mediagame/beliefs.hpp"

#include <string>

namespace mediagame {

Posterior Posterior::from_weights(double high, double low, double subversive) {
  const double total = high + low + subversive;
  return Posterior{high / total, low / total, subversive / total};
}

double retention_value(const ModelParams& params, const Posterior& post) {
  return post.p_high - params.s() * post.p_subversive;
}

std::string_view to_string(Conditioning c) {
  switch (c) {
    case Conditioning::ConsistentAny: return "ConsistentAny";
    case Conditioning::Inconsistent: return "Inconsistent";
    case Conditioning::ConsistentNS: return "ConsistentNS";
    case Conditioning::ConsistentS: return "ConsistentS";
    case Conditioning::AltOnlyS: return "AltOnlyS";
    case Conditioning::AltOnlyNS: return "AltOnlyNS";
  }
  return "?";
}

std::vector<ObservationClass> observation_classes(Conditioning c) {
  constexpr auto NS = AltReport::NotSubversive;
  constexpr auto S = AltReport::Subversive;
  switch (c) {
    case Conditioning::ConsistentAny: return {{true, NS}, {true, S}};
    case Conditioning::Inconsistent: return {{false, NS}, {false, S}};
    case Conditioning::ConsistentNS: return {{true, NS}};
    case Conditioning::ConsistentS: return {{true, S}};
    case Conditioning::AltOnlyS: return {{true, S}, {false, S}};
    case Conditioning::AltOnlyNS: return {{true, NS}, {false, NS}};
  }
  return {};
}

UnreachableConditioning::UnreachableConditioning(Conditioning c)
    : std::domain_error("conditioning event " + std::string(to_string(c)) +
                        " has probability zero"),
      cond_(c) {}

std::array<double, 3> event_weights(const ModelParams& params, Conditioning cond) {
  const double high = prior_mass(params, IncumbentType::High);
  const double low = prior_mass(params, IncumbentType::Low);
  const double sub = prior_mass(params, IncumbentType::Subversive);
  const double q = params.q();
  const double phi = params.phi();

  // Per-type likelihoods of the event: the informed high type agrees with
  // probability q, an uninformed type with probability 1/2, the captured
  // outlet always agrees. The alternative outlet accuses non-subversives with
  // probability phi and subversives always.
  switch (cond) {
    case Conditioning::ConsistentAny:
      return {high * q, low * 0.5, sub};
    case Conditioning::Inconsistent:
      return {high * (1.0 - q), low * 0.5, 0.0};
    case Conditioning::ConsistentNS:
      return {high * q * (1.0 - phi), low * 0.5 * (1.0 - phi), 0.0};
    case Conditioning::ConsistentS:
      return {high * q * phi, low * 0.5 * phi, sub};
    case Conditioning::AltOnlyS:
      return {high * phi, low * phi, sub};
    case Conditioning::AltOnlyNS:
      return {high * (1.0 - phi), low * (1.0 - phi), 0.0};
  }
  return {0.0, 0.0, 0.0};
}

Posterior posterior(const ModelParams& params, Conditioning cond) {
  const auto w = event_weights(params, cond);
  if (!(w[0] + w[1] + w[2] > 0.0)) throw UnreachableConditioning(cond);
  return Posterior::from_weights(w[0], w[1], w[2]);
}

double retention_utility(const ModelParams& params, Conditioning cond) {
  return retention_value(params, posterior(params, cond));
}

double mainstream_trust(double sigma, double phi) {
  const double truthful = (1.0 - sigma) * (1.0 - phi);
  return truthful / (truthful + sigma);
}

}  // namespace mediagame
