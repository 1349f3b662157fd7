#pragma once

#include "mediagame/model.hpp"

namespace mediagame {

// A threshold on phi. `raw` may lie outside [0, 1] or be +inf when the
// defining denominator is not positive; `clamped` is raw projected onto [0, 1].
struct PhiThreshold {
  double raw = 0.0;
  double clamped = 0.0;

  static PhiThreshold from_raw(double raw);
};

struct Thresholds {
  PhiThreshold phi_e;  // effort survives false accusations iff phi <= phi_e
  PhiThreshold phi_v;  // voter acts on (agree, S) iff phi <= phi_v
  PhiThreshold phi_a;  // accusation alone justifies removal iff phi <= phi_a
  double u_lo = 0.0;   // retention value after m != x
  double u_hi = 0.0;   // retention value after m = x
  double u_hi2 = 0.0;  // retention value after m = x, r = NS

  // Diagnostics at the point's own phi.
  double u_v = 0.0;              // after m = x, r = S, high type informed
  double u_a = 0.0;              // after r = S alone
  double u_accused_endorsed = 0.0;  // after m = x, r = S, nobody informed
  double prior_utility = 0.0;    // retention value with no information
};

Thresholds compute_thresholds(const ModelParams& params);

// U_C >= U_v: the voter removes an endorsed incumbent who is accused.
bool listens_to_alt(const ModelParams& params);

// Without alternative-media clearance: k <= q - 1/2.
// With it: k <= (q - 1/2)(1 - phi).
bool effort_sustainable(const ModelParams& params, bool requires_alt_clearance);

// Retention value at (agree, S) when the high type does not exert effort:
// (pi*phi - 2*s*l) / (phi + 2*l).
double accused_endorsed_utility_without_effort(const ModelParams& params);

// Absent effort, the voter prefers the challenger at (agree, S).
bool removes_accused_without_effort(const ModelParams& params);

}  // namespace mediagame
