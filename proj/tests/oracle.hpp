#pragma once

// Test-only brute force over every (type, state, policy, message, alt type)
// path of the game, written directly from the game's rules and sharing no
// code with the library's enumeration.

#include <functional>

namespace oracle {

struct Point {
  double sigma, pi, q, k, s, uc, phi;
};

inline constexpr Point kCanonical{0.05, 0.5, 0.7, 0.1, 1.0, 0.4, 0.3};

inline Point with_phi(Point p, double phi) {
  p.phi = phi;
  return p;
}

enum Type { H = 0, L = 1, S = 2 };

struct Path {
  Type type;
  int state;
  int policy;
  int message;
  bool accused;  // r = S
  bool agree() const { return message == policy; }
};

// Sum of path probabilities where pred holds. `effort`: high type learns the
// state and matches it.
inline double prob(const Point& p, bool effort, const std::function<bool(const Path&)>& pred) {
  double total = 0.0;
  const double prior[3] = {(1 - p.sigma) * p.pi, (1 - p.sigma) * (1 - p.pi), p.sigma};
  for (int t = 0; t < 3; ++t) {
    for (int w = 0; w < 2; ++w) {
      for (int x = 0; x < 2; ++x) {
        double px = 0.5;
        if (t == H && effort) px = (x == w) ? 1.0 : 0.0;
        for (int m = 0; m < 2; ++m) {
          double pm = (m == w) ? p.q : 1 - p.q;
          if (t == S) pm = (m == x) ? 1.0 : 0.0;
          for (int bad = 0; bad < 2; ++bad) {
            const double pb = bad ? p.phi : 1 - p.phi;
            const bool accused = bad || t == S;
            const double w_path = prior[t] * 0.5 * px * pm * pb;
            if (w_path == 0.0) continue;
            if (pred(Path{static_cast<Type>(t), w, x, m, accused})) total += w_path;
          }
        }
      }
    }
  }
  return total;
}

inline double cond(const Point& p, bool effort, const std::function<bool(const Path&)>& event,
                   const std::function<bool(const Path&)>& given) {
  const double den = prob(p, effort, given);
  const double num = prob(p, effort, [&](const Path& path) { return event(path) && given(path); });
  return num / den;
}

}  // namespace oracle
