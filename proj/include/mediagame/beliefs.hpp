#pragma once

#include <array>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mediagame/model.hpp"

namespace mediagame {

struct Posterior {
  double p_high = 0.0;
  double p_low = 0.0;
  double p_subversive = 0.0;

  double of(IncumbentType t) const {
    switch (t) {
      case IncumbentType::High: return p_high;
      case IncumbentType::Low: return p_low;
      case IncumbentType::Subversive: return p_subversive;
    }
    return 0.0;
  }

  // Normalizes non-negative type weights. Caller guarantees a positive sum.
  static Posterior from_weights(double high, double low, double subversive);
};

// Expected payoff to the voter from retaining an incumbent drawn from `post`.
double retention_value(const ModelParams& params, const Posterior& post);

// Information sets on which closed-form beliefs are available. All of them
// assume the accountability play: the high type is informed, the others mix.
enum class Conditioning {
  ConsistentAny,  // m = x, report ignored
  Inconsistent,   // m != x
  ConsistentNS,   // m = x and r = NS
  ConsistentS,    // m = x and r = S
  AltOnlyS,       // r = S, message ignored
  AltOnlyNS,      // r = NS, message ignored
};

inline constexpr std::array<Conditioning, 6> kAllConditionings{
    Conditioning::ConsistentAny, Conditioning::Inconsistent, Conditioning::ConsistentNS,
    Conditioning::ConsistentS,   Conditioning::AltOnlyS,     Conditioning::AltOnlyNS};

std::string_view to_string(Conditioning c);

// Observation classes whose union is the conditioning event.
std::vector<ObservationClass> observation_classes(Conditioning c);

class UnreachableConditioning : public std::domain_error {
 public:
  explicit UnreachableConditioning(Conditioning c);
  Conditioning conditioning() const { return cond_; }

 private:
  Conditioning cond_;
};

// Unnormalized (high, low, subversive) joint masses of the event.
std::array<double, 3> event_weights(const ModelParams& params, Conditioning cond);

Posterior posterior(const ModelParams& params, Conditioning cond);

// 1 * Pr(H | event) - s * Pr(S | event).
double retention_utility(const ModelParams& params, Conditioning cond);

// Belief that the mainstream outlet is truthful once the alternative outlet
// accuses it of propaganda: (1-sigma)(1-phi) / ((1-sigma)(1-phi) + sigma).
double mainstream_trust(double sigma, double phi);

}  // namespace mediagame
