#pragma once

// Primitives of the one-shot accountability game with a mainstream outlet
// (truthful or captured) and an alternative outlet (truthful or malicious),
// plus the exact joint outcome distribution used as ground truth elsewhere.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mediagame {

// Weak inequalities (a <= b) are evaluated as a <= b + kTieTolerance so that
// decimal inputs sitting exactly on a boundary resolve the way the model's
// inclusive/exclusive brackets intend.
inline constexpr double kTieTolerance = 1e-12;

inline bool weakly_le(double a, double b) { return a <= b + kTieTolerance; }
inline bool strictly_lt(double a, double b) { return !weakly_le(b, a); }

enum class ParamField { Sigma, Pi, Q, K, S, UC, Phi };

inline constexpr std::array<ParamField, 7> kAllFields{
    ParamField::Sigma, ParamField::Pi, ParamField::Q, ParamField::K,
    ParamField::S,     ParamField::UC, ParamField::Phi};

std::string_view field_name(ParamField f);
ParamField parse_field(std::string_view name);

enum class ParamErrorKind { OutOfRange, NonFinite };

class ParamError : public std::invalid_argument {
 public:
  ParamError(ParamErrorKind kind, ParamField field, const std::string& what)
      : std::invalid_argument(what), kind_(kind), field_(field) {}

  ParamErrorKind kind() const { return kind_; }
  ParamField field() const { return field_; }

 private:
  ParamErrorKind kind_;
  ParamField field_;
};

// Unvalidated parameter bundle, as read from flags or a config file.
struct RawParams {
  double sigma = 0.0;  // Pr(incumbent subversive)
  double pi = 0.0;     // Pr(high | not subversive)
  double q = 0.0;      // truthful mainstream accuracy
  double k = 0.0;      // effort cost
  double s = 0.0;      // voter loss from a retained subversive
  double u_c = 0.0;    // challenger's expected utility
  double phi = 0.0;    // Pr(alternative outlet malicious)

  double get(ParamField f) const;
  void set(ParamField f, double v);
};

// Validated primitives. Only obtainable through validate_params, so every
// instance satisfies the range invariants.
class ModelParams {
 public:
  double sigma() const { return raw_.sigma; }
  double pi() const { return raw_.pi; }
  double q() const { return raw_.q; }
  double k() const { return raw_.k; }
  double s() const { return raw_.s; }
  double u_c() const { return raw_.u_c; }
  double phi() const { return raw_.phi; }
  double ego_rent() const { return 1.0; }

  // Odds that the incumbent is subversive, sigma / (1 - sigma).
  double likelihood() const { return raw_.sigma / (1.0 - raw_.sigma); }

  double get(ParamField f) const { return raw_.get(f); }
  const RawParams& raw() const { return raw_; }

  // Copy with one field replaced, revalidated.
  ModelParams with(ParamField f, double value) const;

 private:
  friend ModelParams validate_params(const RawParams& raw);
  explicit ModelParams(const RawParams& raw) : raw_(raw) {}
  RawParams raw_;
};

// Throws ParamError naming the first offending field. Finiteness is checked
// for every field before any range check.
ModelParams validate_params(const RawParams& raw);

enum class IncumbentType : std::uint8_t { High = 0, Low = 1, Subversive = 2 };

inline constexpr std::array<IncumbentType, 3> kAllTypes{
    IncumbentType::High, IncumbentType::Low, IncumbentType::Subversive};

inline constexpr std::size_t index_of(IncumbentType t) {
  return static_cast<std::size_t>(t);
}

std::string_view to_string(IncumbentType t);

// Prior mass of each type: (1-sigma)pi, (1-sigma)(1-pi), sigma.
double prior_mass(const ModelParams& p, IncumbentType t);

// Voter's payoff from retaining an incumbent of type t: 1, 0, -s.
double type_utility(const ModelParams& p, IncumbentType t);

enum class AltReport : std::uint8_t { NotSubversive = 0, Subversive = 1 };

// Sufficient statistic of the voter's observation (x, m, r) under
// policy-symmetric play: whether the mainstream message endorsed the policy,
// and the alternative outlet's report.
struct ObservationClass {
  bool agree = true;
  AltReport report = AltReport::NotSubversive;

  // (agree,NS)=0, (agree,S)=1, (disagree,NS)=2, (disagree,S)=3
  constexpr std::size_t index() const {
    return (agree ? 0U : 2U) + (report == AltReport::Subversive ? 1U : 0U);
  }
  static constexpr ObservationClass from_index(std::size_t i) {
    return ObservationClass{i < 2, (i % 2 == 1) ? AltReport::Subversive
                                                : AltReport::NotSubversive};
  }
  friend constexpr bool operator==(ObservationClass, ObservationClass) = default;
};

inline constexpr std::size_t kNumClasses = 4;

std::string to_string(ObservationClass c);

enum class VoteAction : std::uint8_t { ElectChallenger = 0, RetainIncumbent = 1 };

// Total map from observation class to the voter's action, stored as a 4-bit
// mask (bit i set = retain at class index i).
class VoterRule {
 public:
  constexpr VoterRule() = default;
  static constexpr VoterRule from_mask(unsigned mask) {
    VoterRule r;
    r.mask_ = mask & 0xFU;
    return r;
  }

  constexpr bool retains(ObservationClass c) const {
    return ((mask_ >> c.index()) & 1U) != 0;
  }
  constexpr VoteAction action(ObservationClass c) const {
    return retains(c) ? VoteAction::RetainIncumbent : VoteAction::ElectChallenger;
  }
  constexpr VoterRule with(ObservationClass c, VoteAction a) const {
    const unsigned bit = 1U << c.index();
    return from_mask(a == VoteAction::RetainIncumbent ? (mask_ | bit) : (mask_ & ~bit));
  }
  constexpr unsigned mask() const { return mask_; }
  friend constexpr bool operator==(VoterRule, VoterRule) = default;

 private:
  unsigned mask_ = 0;
};

// High type's effort choice plus the voter's rule. Low and subversive types
// always mix 1/2 over the two policies, so they carry no field here.
struct StrategyProfile {
  bool high_effort = false;
  VoterRule voter_rule;

  // Position in the canonical 32-profile order: effort * 16 + rule mask.
  constexpr unsigned index() const {
    return (high_effort ? 16U : 0U) + voter_rule.mask();
  }
  static constexpr StrategyProfile from_index(unsigned i) {
    return StrategyProfile{(i & 16U) != 0, VoterRule::from_mask(i)};
  }
  friend constexpr bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

std::string describe(const StrategyProfile& profile);

namespace profiles {
// Effort; retain iff (agree, NS).
inline constexpr StrategyProfile kListenBoth{true, VoterRule::from_mask(0b0001)};
// Effort; retain iff agree, ignoring the alternative report.
inline constexpr StrategyProfile kMainstreamOnly{true, VoterRule::from_mask(0b0011)};
// No effort; remove only when an accusation meets an endorsing message.
inline constexpr StrategyProfile kSelectOnAlt{false, VoterRule::from_mask(0b1101)};
// No effort; retain iff r = NS.
inline constexpr StrategyProfile kRetainIffNotAccused{false, VoterRule::from_mask(0b0101)};
inline constexpr StrategyProfile kRetainAlways{false, VoterRule::from_mask(0b1111)};
inline constexpr StrategyProfile kRemoveAlways{false, VoterRule::from_mask(0b0000)};
}  // namespace profiles

struct Atom {
  IncumbentType type;
  int state;
  bool effort_applied;
  int policy;
  int message;
  bool alt_malicious;
  AltReport alt_report;
  double weight;

  ObservationClass observation() const {
    return ObservationClass{message == policy, alt_report};
  }
};

struct EnumerationOptions {
  // Relabel states, policies and messages 0 <-> 1 in the emitted atoms.
  bool swap_labels = false;
};

// Exact joint distribution over (type, state, policy, message, alt type).
// Every combination is listed, including zero-weight ones, in a fixed order:
// type, state, policy, message, alt_malicious (innermost).
class OutcomeTable {
 public:
  static constexpr std::size_t kNumAtoms = 3 * 2 * 2 * 2 * 2;

  const std::vector<Atom>& atoms() const { return atoms_; }

  double total() const;
  double class_probability(ObservationClass c) const { return by_class_[c.index()]; }
  double joint(IncumbentType t, ObservationClass c) const {
    return by_type_class_[index_of(t)][c.index()];
  }
  double type_mass(IncumbentType t) const;
  // Pr(class | type); 0 for types with no mass.
  double conditional(ObservationClass c, IncumbentType t) const;

 private:
  friend OutcomeTable outcome_distribution(const ModelParams&, const StrategyProfile&,
                                           EnumerationOptions);
  std::vector<Atom> atoms_;
  std::array<double, kNumClasses> by_class_{};
  std::array<std::array<double, kNumClasses>, 3> by_type_class_{};
};

OutcomeTable outcome_distribution(const ModelParams& params, const StrategyProfile& profile,
                                  EnumerationOptions options = {});

// Marginal probability of an observation class; exactly 0 when unreachable.
double observation_probability(const OutcomeTable& table, ObservationClass obs);

}  // namespace mediagame
