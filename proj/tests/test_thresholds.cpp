#include <doctest.h>

#include <cmath>

#include "mediagame/beliefs.hpp"
#include "mediagame/thresholds.hpp"
#include "test_util.hpp"

using namespace mediagame;

namespace {

// U_v(phi) from the brute-force oracle.
double oracle_uv(oracle::Point p, double phi) {
  p.phi = phi;
  auto given = [](const oracle::Path& x) { return x.agree() && x.accused; };
  const double h = oracle::cond(p, true, [](const oracle::Path& x) { return x.type == oracle::H; }, given);
  const double s = oracle::cond(p, true, [](const oracle::Path& x) { return x.type == oracle::S; }, given);
  return h - p.s * s;
}

// Largest phi with U_v(phi) <= U_C, by bisection (U_v increases in phi).
double bisect_phi_v(const oracle::Point& p) {
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (oracle_uv(p, mid) <= p.uc ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("thresholds at the canonical point") {
  const Thresholds t = compute_thresholds(testutil::canonical());
  CHECK(t.phi_e.raw == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(t.phi_v.raw == doctest::Approx((1.4 / 19.0) / 0.11).epsilon(1e-13));
  CHECK(t.phi_v.raw == doctest::Approx(0.66986).epsilon(1e-5));
  CHECK(t.phi_v.raw == doctest::Approx(bisect_phi_v(oracle::kCanonical)).epsilon(1e-12));
  CHECK(t.phi_a.raw == doctest::Approx((1.4 / 19.0) / 0.1).epsilon(1e-13));
  CHECK(t.phi_a.raw == doctest::Approx(0.73684).epsilon(1e-5));
  CHECK(t.u_lo == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(t.u_hi == doctest::Approx(0.45565).epsilon(1e-4));
  CHECK(t.u_hi2 == doctest::Approx(0.58333).epsilon(1e-4));
  CHECK(t.phi_v.clamped == t.phi_v.raw);
}

TEST_CASE("threshold edge cases") {
  RawParams r = testutil::canonical().raw();
  r.k = 0.0;
  CHECK(compute_thresholds(validate_params(r)).phi_e.raw == 1.0);

  r = testutil::canonical().raw();
  r.u_c = r.pi;
  const Thresholds t = compute_thresholds(validate_params(r));
  CHECK(std::isinf(t.phi_a.raw));
  CHECK(t.phi_a.clamped == 1.0);

  r = testutil::canonical().raw();
  r.k = 0.3;  // > q - 1/2
  const Thresholds neg = compute_thresholds(validate_params(r));
  CHECK(neg.phi_e.raw < 0.0);
  CHECK(neg.phi_e.clamped == 0.0);
}

TEST_CASE("listens_to_alt") {
  CHECK(listens_to_alt(testutil::canonical(0.3)));
  CHECK_FALSE(listens_to_alt(testutil::canonical(0.8)));
  CHECK(retention_utility(testutil::canonical(0.8), Conditioning::ConsistentS) ==
        doctest::Approx((0.28 - 1.0 / 19.0) / (0.28 + 0.2 + 1.0 / 19.0)).epsilon(1e-12));
  for (const auto& pt : testutil::random_points(200, 4)) {
    CHECK(listens_to_alt(testutil::make(oracle::with_phi(pt, 0.0))));
  }
}

TEST_CASE("effort_sustainable") {
  CHECK(effort_sustainable(testutil::canonical(0.3), true));
  CHECK_FALSE(effort_sustainable(testutil::canonical(0.6), true));
  CHECK(effort_sustainable(testutil::canonical(0.6), false));
  RawParams r = testutil::canonical().raw();
  r.k = r.q - 0.5;
  CHECK(effort_sustainable(validate_params(r), false));
  r.k = r.q - 0.5 + 1e-9;
  CHECK_FALSE(effort_sustainable(validate_params(r), false));
}

TEST_CASE("property: predicates agree with threshold forms") {
  int checked_v = 0;
  for (const auto& pt : testutil::random_points(3000, 17)) {
    const ModelParams p = testutil::make(pt);
    const Thresholds t = compute_thresholds(p);
    const double den = pt.pi * pt.q * (1 - pt.uc) - (1 - pt.pi) * 0.5 * pt.uc;
    if (den > 0.0 && std::abs(pt.phi - t.phi_v.raw) > 1e-9) {
      CHECK(listens_to_alt(p) == (pt.phi <= t.phi_v.raw));
      ++checked_v;
    }
    if (den <= 0.0) CHECK(listens_to_alt(p));
    if (std::abs(pt.phi - t.phi_e.raw) > 1e-9) {
      CHECK(effort_sustainable(p, true) == (pt.phi <= t.phi_e.raw));
    }
    if (std::abs(t.phi_a.raw - pt.phi) > 1e-9) {
      CHECK((t.u_a <= pt.uc) == (pt.phi <= t.phi_a.raw));
    }
    CHECK(t.phi_e.raw <= 1.0);
    CHECK((t.phi_e.raw < 0.0) == (pt.k > pt.q - 0.5));
    CHECK(t.u_lo >= 0.0);
    CHECK(t.u_lo <= 1.0);
    CHECK(t.u_hi2 >= 0.0);
    CHECK(t.u_hi2 <= 1.0);
    CHECK(t.u_hi >= -pt.s - 1e-12);
    CHECK(t.u_hi <= 1.0);
    if (t.phi_v.raw >= 0.0 && t.phi_v.raw <= 1.0) {
      const double cut = (pt.q - 0.5) * (1 - t.phi_v.raw);
      if (std::abs(pt.k - cut) > 1e-9 && std::abs(t.phi_v.raw - t.phi_e.raw) > 1e-9) {
        CHECK((t.phi_v.raw < t.phi_e.raw) == (pt.k < cut));
      }
    }
  }
  CHECK(checked_v > 500);
}

TEST_CASE("property: threshold monotonicity") {
  const ModelParams base = testutil::canonical();
  auto th = [&](ParamField f, double v) { return compute_thresholds(base.with(f, v)); };
  for (double k = 0.0; k < 0.5; k += 0.01) {
    CHECK(th(ParamField::K, k + 0.01).phi_e.raw < th(ParamField::K, k).phi_e.raw);
  }
  for (double q = 0.55; q < 0.98; q += 0.01) {
    CHECK(th(ParamField::Q, q + 0.01).phi_e.raw > th(ParamField::Q, q).phi_e.raw);
  }
  for (double sigma = 0.01; sigma < 0.5; sigma += 0.01) {
    CHECK(th(ParamField::Sigma, sigma + 0.01).phi_v.raw > th(ParamField::Sigma, sigma).phi_v.raw);
    CHECK(th(ParamField::Sigma, sigma + 0.01).phi_a.raw > th(ParamField::Sigma, sigma).phi_a.raw);
  }
  for (double s = 0.0; s < 3.0; s += 0.1) {
    CHECK(th(ParamField::S, s + 0.1).phi_v.raw > th(ParamField::S, s).phi_v.raw);
    CHECK(th(ParamField::S, s + 0.1).phi_a.raw > th(ParamField::S, s).phi_a.raw);
  }
}

TEST_CASE("accused-and-endorsed value without effort matches the oracle") {
  for (const auto& pt : testutil::random_points(300, 23)) {
    const ModelParams p = testutil::make(pt);
    auto given = [](const oracle::Path& x) { return x.agree() && x.accused; };
    const double h = oracle::cond(pt, false, [](const oracle::Path& x) { return x.type == oracle::H; }, given);
    const double s = oracle::cond(pt, false, [](const oracle::Path& x) { return x.type == oracle::S; }, given);
    CHECK(std::abs(accused_endorsed_utility_without_effort(p) - (h - pt.s * s)) <= 1e-12);
  }
}
