#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mediagame/model.hpp"
#include "mediagame/thresholds.hpp"

namespace mediagame {

enum class Regime {
  AccountabilityListenBoth,
  AccountabilityMainstreamOnly,
  NoAccountabilitySelectOnAlt,
  NoAccountabilityRetainAlways,
  NoAccountabilityRemoveAlways,
};

std::string_view to_string(Regime r);

// Strategy profile that supports each regime.
StrategyProfile profile_for(Regime r);

struct RegimeReport {
  Regime regime;
  StrategyProfile profile;
  Thresholds thresholds;
  std::vector<std::string> notes;  // conditions that decided the classification
};

RegimeReport classify(const ModelParams& params);

struct SweepPoint {
  double value;
  RegimeReport report;
};

struct Transition {
  std::size_t index;  // first grid index showing the new regime
  double before;      // grid value at index - 1
  double after;       // grid value at index
  Regime from;
  Regime to;
};

struct SweepResult {
  ParamField field;
  std::vector<SweepPoint> points;
  std::vector<Transition> transitions;
};

// Classifies params.with(field, v) for each grid value, in grid order.
// Throws ParamError for the first invalid grid value.
SweepResult sweep(const ModelParams& params, ParamField field, std::span<const double> grid);

// `steps` evenly spaced values from `from` to `to` inclusive; a single step
// yields {from}.
std::vector<double> uniform_grid(double from, double to, std::size_t steps);

}  // namespace mediagame
