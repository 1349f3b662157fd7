#include "mediagame/thresholds.hpp"

#include <algorithm>
#include <limits>

#include "mediagame/beliefs.hpp"

namespace mediagame {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double ratio_or_inf(double num, double den) { return den > 0.0 ? num / den : kInf; }
}  // namespace

PhiThreshold PhiThreshold::from_raw(double raw) {
  return PhiThreshold{raw, std::clamp(raw, 0.0, 1.0)};
}

Thresholds compute_thresholds(const ModelParams& p) {
  const double pi = p.pi();
  const double q = p.q();
  const double s = p.s();
  const double uc = p.u_c();
  const double l = p.likelihood();

  Thresholds t;
  t.phi_e = PhiThreshold::from_raw(1.0 - p.k() / (q - 0.5));
  t.phi_v = PhiThreshold::from_raw(
      ratio_or_inf((s + uc) * l, pi * q * (1.0 - uc) - (1.0 - pi) * 0.5 * uc));
  t.phi_a = PhiThreshold::from_raw(ratio_or_inf((s + uc) * l, pi - uc));

  t.u_lo = pi * (1.0 - q) / (pi * (1.0 - q) + (1.0 - pi) * 0.5);
  t.u_hi = (pi * q - s * l) / (pi * q + (1.0 - pi) * 0.5 + l);
  t.u_hi2 = pi * q / (pi * q + (1.0 - pi) * 0.5);

  t.u_v = retention_utility(p, Conditioning::ConsistentS);
  t.u_a = retention_utility(p, Conditioning::AltOnlyS);
  t.u_accused_endorsed = accused_endorsed_utility_without_effort(p);
  t.prior_utility = (1.0 - p.sigma()) * pi - p.sigma() * s;
  return t;
}

bool listens_to_alt(const ModelParams& p) {
  return weakly_le(retention_utility(p, Conditioning::ConsistentS), p.u_c());
}

bool effort_sustainable(const ModelParams& p, bool requires_alt_clearance) {
  double reward = p.q() - 0.5;
  if (requires_alt_clearance) reward *= 1.0 - p.phi();
  return weakly_le(p.k(), reward * p.ego_rent());
}

double accused_endorsed_utility_without_effort(const ModelParams& p) {
  // Uninformed non-subversives are endorsed half the time; the captured
  // outlet always endorses and the accusation always comes.
  const double l = p.likelihood();
  return (p.pi() * p.phi() - 2.0 * p.s() * l) / (p.phi() + 2.0 * l);
}

bool removes_accused_without_effort(const ModelParams& p) {
  return weakly_le(accused_endorsed_utility_without_effort(p), p.u_c());
}

}  // namespace mediagame
