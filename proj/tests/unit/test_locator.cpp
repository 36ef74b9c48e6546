#include "doctest.h"
#include "fixtures.hpp"
#include "gznt/errors.hpp"
#include "gznt/locator.hpp"

using namespace gznt;
using namespace fx;

namespace {
LocatorConfig cfg;
GzntResult at(const N1Function& q, double tau) { return locate(q, TauParameter::from_tau(tau), cfg); }
}  // namespace

TEST_CASE("config validation") {
  LocatorConfig c;
  c.ray_depth = 4;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = LocatorConfig{};
  c.newton_tol = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("locate_complex") {
  auto z = locate_complex(z2(), -0.25, cfg);
  REQUIRE(z);
  CHECK(std::abs(*z - cplx(0, 0.5)) < 1e-12);
  z = locate_complex(noton_r(), 0, cfg);
  REQUIRE(z);
  CHECK(std::abs(*z - cplx(0, 2)) < 1e-12);
  // z^2 = (1-4i)/(i-1) = -2.5 + 1.5i
  z = locate_complex(noton_r(), 1, cfg);
  REQUIRE(z);
  CHECK(std::abs(*z - std::sqrt(cplx(-2.5, 1.5))) < 1e-12);
  CHECK(std::abs(*z - cplx(0.4564, 1.6454)) < 1e-3);
  CHECK_FALSE(locate_complex(minus_z(), 1, cfg));
}

TEST_CASE("test_real_point") {
  auto t = test_real_point(z2(), 0, 0, cfg);
  CHECK(t.is_gznt);
  CHECK(std::abs(t.value().value()) < 1e-7);
  t = test_real_point(minus_z(), 2, -2, cfg);
  CHECK(t.is_gznt);
  CHECK(t.value().value() == doctest::Approx(-1).epsilon(1e-9));
  t = test_real_point(z2(), 1, 1, cfg);
  CHECK_FALSE(t.is_gznt);
  CHECK(t.value().value() == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("test_infinity") {
  auto t = test_infinity(r0(0, 1, 1), 1, cfg);
  CHECK(t.is_gznt);
  CHECK(t.value().value() == doctest::Approx(1).epsilon(1e-7));
  t = test_infinity(minus_z(), 0, cfg);
  CHECK_FALSE(t.is_gznt);
  CHECK(t.value().is_pos_inf());
  CHECK_FALSE(test_infinity(z2(), 5, cfg).is_gznt);
}

TEST_CASE("locate: intro closed forms") {
  auto r = at(z3(), -0.008);
  CHECK(r.regime == Regime::Complex);
  CHECK(chordal(r.point, cplx(0.1, 0.1 * std::sqrt(3.0))) < 1e-12);
  r = at(z3(), 0.008);
  CHECK(chordal(r.point, cplx(-0.1, 0.1 * std::sqrt(3.0))) < 1e-12);
  r = at(z2(), 0.25);
  CHECK(r.regime == Regime::Real);
  CHECK(chordal(r.point, -0.5) < 1e-12);
  CHECK(*r.limit_value < 0);
  r = at(z2(), 0);
  CHECK(chordal(r.point, 0.0) < 1e-12);
  r = locate(minus_z(), TauParameter::infinity(), cfg);
  CHECK(r.regime == Regime::Infinity);
  CHECK(r.point.is_infinity());
  CHECK(*r.limit_value == doctest::Approx(1.0).epsilon(1e-7));
  for (double t : {-3.0, -0.5, 0.0, 0.5, 3.0, 1e3}) CHECK(chordal(at(minus_z(), t).point, -t) < 1e-10);
  r = at(noton_r(), 0);
  CHECK(chordal(r.point, cplx(0, 2)) < 1e-12);
  CHECK(chordal(locate(noton_r(), TauParameter::infinity(), cfg).point, cplx(0, 1)) < 1e-12);
}

TEST_CASE("locate: boundary points and the R0 form") {
  auto r = at(z2_log(), 0);
  CHECK(r.regime == Regime::Real);
  CHECK(chordal(r.point, 0.0) < 1e-12);
  CHECK(chordal(at(z2_log(), -0.1).point, 0.28046097818921573) < 1e-10);
  r = at(z2_pow(), -1);
  CHECK(chordal(r.point, std::polar(1.0, 2 * kPi / 5)) < 1e-10);
  const N1Function q = r0(0, 1, 1);
  CHECK(chordal(at(q, 0.5).point, -1.0) < 1e-10);
  CHECK(at(q, 1).point.is_infinity());
  CHECK(chordal(locate(q, TauParameter::infinity(), cfg).point, 1.0) < 1e-10);
}

TEST_CASE("locate: warm start and seed order give the same answer") {
  LocatorConfig shuffled;
  shuffled.seed = 42;
  for (double t : {-2.0, -0.1, 0.3, 4.0}) {
    const auto a = at(noton_r(), t);
    const auto b = locate(noton_r(), TauParameter::from_tau(t), shuffled);
    const auto c = locate(noton_r(), TauParameter::from_tau(t), cfg, ExtendedPoint(cplx(0, 1.5)));
    CHECK(chordal_distance(a.point, b.point) < 1e-10);
    CHECK(chordal_distance(a.point, c.point) < 1e-10);
  }
}

TEST_CASE("property: regime contracts, level set, nondegeneracy") {
  const std::vector<N1Function> qs{z2(), z3(), minus_z(), noton_r(), z2_log(), z2_pow(), drie(1, 2), r0(0, 1, 1), semicircle()};
  for (const auto& q : qs)
    for (int k = 0; k < 12; ++k) {
      const double tau = std::tan(-kPi / 2 + (k + 0.5) * kPi / 12);
      const auto r = at(q, tau);
      switch (r.regime) {
        case Regime::Complex: {
          const cplx z = r.point.value();
          CHECK(z.imag() > cfg.im_threshold);
          CHECK(std::abs(q.jet(z).value() - tau) <= 1e-9 * std::max(1.0, std::abs(tau)));
          CHECK(std::abs(q.jet(z).c[1]) > 1e-8);
          // Im Q level set: re-locating at Re Q(z) returns z
          const double t2 = q.jet(z).value().real();
          CHECK(chordal_distance(at(q, t2).point, r.point) < 1e-8);
          break;
        }
        case Regime::Real:
          REQUIRE(r.limit_value);
          CHECK(*r.limit_value <= cfg.limit_tol);
          break;
        case Regime::Infinity:
          REQUIRE(r.limit_value);
          CHECK(*r.limit_value >= -cfg.limit_tol);
          break;
      }
    }
}

TEST_CASE("locate: density term, iterates near the support") {
  const auto q = semicircle();
  auto r = at(q, -20);
  REQUIRE(r.regime == Regime::Real);
  const double x = r.point.value().real();
  CHECK(x > 3);
  CHECK(q.jet(cplx(x, 0)).value().real() == doctest::Approx(-20).epsilon(1e-10));
  CHECK(at(q, 0).regime == Regime::Real);
  CHECK(locate(q, TauParameter::infinity(), cfg).regime == Regime::Infinity);
}
