#include "mediagame/regimes.hpp"

#include <stdexcept>

namespace mediagame {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::AccountabilityListenBoth: return "AccountabilityListenBoth";
    case Regime::AccountabilityMainstreamOnly: return "AccountabilityMainstreamOnly";
    case Regime::NoAccountabilitySelectOnAlt: return "NoAccountabilitySelectOnAlt";
    case Regime::NoAccountabilityRetainAlways: return "NoAccountabilityRetainAlways";
    case Regime::NoAccountabilityRemoveAlways: return "NoAccountabilityRemoveAlways";
  }
  return "?";
}

StrategyProfile profile_for(Regime r) {
  switch (r) {
    case Regime::AccountabilityListenBoth: return profiles::kListenBoth;
    case Regime::AccountabilityMainstreamOnly: return profiles::kMainstreamOnly;
    case Regime::NoAccountabilitySelectOnAlt: return profiles::kSelectOnAlt;
    case Regime::NoAccountabilityRetainAlways: return profiles::kRetainAlways;
    case Regime::NoAccountabilityRemoveAlways: return profiles::kRemoveAlways;
  }
  return profiles::kRemoveAlways;
}

namespace {

RegimeReport make_report(Regime r, const Thresholds& t, std::vector<std::string> notes) {
  return RegimeReport{r, profile_for(r), t, std::move(notes)};
}

}  // namespace

RegimeReport classify(const ModelParams& p) {
  const Thresholds t = compute_thresholds(p);
  const double uc = p.u_c();
  std::vector<std::string> notes;

  const bool listens = listens_to_alt(p);
  const bool effort_with_alt = effort_sustainable(p, true);
  const bool effort_base = effort_sustainable(p, false);
  const bool above_lo = weakly_le(t.u_lo, uc);

  if (above_lo && strictly_lt(uc, t.u_hi)) {
    notes.emplace_back("moderate challenger: U_lo <= U_C < U_hi");
    if (listens && effort_with_alt) {
      notes.emplace_back("voter listens: U_C >= U_v (phi <= phi_v)");
      notes.emplace_back("effort survives false accusations: phi <= phi_e");
      return make_report(Regime::AccountabilityListenBoth, t, std::move(notes));
    }
    if (!listens && effort_base) {
      notes.emplace_back("voter ignores alternative media: U_C < U_v (phi > phi_v)");
      notes.emplace_back("baseline effort condition: k <= q - 1/2");
      return make_report(Regime::AccountabilityMainstreamOnly, t, std::move(notes));
    }
    if (listens) {
      notes.emplace_back("accountability impossible: voter listens but phi > phi_e");
    } else {
      notes.emplace_back("accountability impossible: k > q - 1/2");
    }
  } else if (above_lo && weakly_le(t.u_hi, uc) && strictly_lt(uc, t.u_hi2)) {
    notes.emplace_back("appealing challenger: U_hi <= U_C < U_hi2");
    if (listens && effort_with_alt) {
      notes.emplace_back("alternative media clears the incumbent: phi <= phi_e");
      return make_report(Regime::AccountabilityListenBoth, t, std::move(notes));
    }
    notes.emplace_back(listens ? "accountability impossible: phi > phi_e"
                               : "accountability impossible: voter ignores alternative media");
  } else if (!above_lo) {
    notes.emplace_back("unappealing challenger: U_C < U_lo");
  } else {
    notes.emplace_back("challenger too appealing: U_C >= U_hi2");
  }

  // No accountability: the high type stays uninformed.
  const bool in_effort_gap = strictly_lt(t.phi_e.raw, p.phi()) && weakly_le(p.phi(), t.phi_v.raw);
  if (strictly_lt(uc, p.pi()) && removes_accused_without_effort(p)) {
    notes.emplace_back("selection on the alternative report: pi > U_C and U_C >= U(agree,S)");
    return make_report(Regime::NoAccountabilitySelectOnAlt, t, std::move(notes));
  }
  if (in_effort_gap) notes.emplace_back("appendix-dependent");
  if (strictly_lt(uc, t.prior_utility)) {
    notes.emplace_back("prior retention value exceeds U_C");
    return make_report(Regime::NoAccountabilityRetainAlways, t, std::move(notes));
  }
  notes.emplace_back("prior retention value does not exceed U_C");
  return make_report(Regime::NoAccountabilityRemoveAlways, t, std::move(notes));
}

SweepResult sweep(const ModelParams& params, ParamField field, std::span<const double> grid) {
  SweepResult result{field, {}, {}};
  result.points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ModelParams point = params.with(field, grid[i]);
    result.points.push_back(SweepPoint{grid[i], classify(point)});
    if (i > 0) {
      const Regime prev = result.points[i - 1].report.regime;
      const Regime cur = result.points[i].report.regime;
      if (prev != cur) result.transitions.push_back(Transition{i, grid[i - 1], grid[i], prev, cur});
    }
  }
  return result;
}

std::vector<double> uniform_grid(double from, double to, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("grid needs at least one step");
  std::vector<double> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(from);
    return grid;
  }
  const double span = to - from;
  const auto last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    grid.push_back(i + 1 == steps ? to : from + span * static_cast<double>(i) / last);
  }
  return grid;
}

}  // namespace mediagame
