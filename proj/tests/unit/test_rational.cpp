#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gznt/errors.hpp"
#include "gznt/path.hpp"
#include "gznt/rational.hpp"

using namespace gznt;
using doctest::Approx;

TEST_CASE("circle_of") {
  auto g = circle_of(cplx(1, 1), cplx(-1, 1));
  CHECK(g.kind == CircleGeometry::Kind::Circle);
  CHECK(g.center_x == Approx(0));
  CHECK(g.radius == Approx(std::sqrt(2.0)));
  CHECK(*g.p_left == Approx(-std::sqrt(2.0)));
  CHECK(*g.p_right == Approx(std::sqrt(2.0)));
  g = circle_of(cplx(0, 1), cplx(0, 2));
  CHECK(g.kind == CircleGeometry::Kind::VerticalLine);
  CHECK(g.x == 0);
  CHECK(*g.p_single == 0);
  g = circle_of(2.0, 0.0);
  CHECK(g.center_x == Approx(1));
  CHECK(g.radius == Approx(1));
  CHECK(*g.p_left == Approx(0));
  CHECK(*g.p_right == Approx(2));
  CHECK_THROWS_AS(circle_of(cplx(1, 1), cplx(1, 1)), DegenerateInput);
  CHECK_THROWS_AS(circle_of(cplx(1, -1), cplx(1, 1)), ValidationError);
}

TEST_CASE("sign_poly") {
  CHECK(sign_poly(cplx(1, 1), cplx(-1, 1), 0) == Approx(-4));
  CHECK(sign_poly(cplx(1, 1), cplx(-1, 1), 2) == Approx(4));
  for (double x : {-2.0, -0.5, 0.5, 3.0}) CHECK(sign_poly(cplx(0, 1), cplx(0, 2), x) == Approx(3 * x));
}

TEST_CASE("closed_form_path and infinity membership") {
  auto c = closed_form_path(cplx(1, 1), cplx(-1, 1));
  CHECK(c.kind == RationalCase::Case1);
  CHECK(c.contains(ExtendedPoint(cplx(0, std::sqrt(2.0))), 1e-12));
  CHECK(c.contains(ExtendedPoint(cplx(0.3, 0)), 1e-12));
  CHECK_FALSE(c.contains(ExtendedPoint(cplx(2, 0)), 1e-12));
  CHECK_FALSE(c.contains(ExtendedPoint::infinity(), 1e-12));
  c = closed_form_path(cplx(-1, 1), cplx(1, 1));
  CHECK(c.kind == RationalCase::Case2);
  CHECK(c.contains(ExtendedPoint(cplx(5, 0)), 1e-12));
  CHECK(c.contains(ExtendedPoint::infinity(), 1e-12));
  CHECK_FALSE(c.contains(ExtendedPoint(cplx(0.3, 0)), 1e-12));
  c = closed_form_path(cplx(0, 2), cplx(0, 1));
  CHECK(c.kind == RationalCase::Case3a);
  CHECK(c.contains(ExtendedPoint(cplx(0, 7)), 1e-12));
  CHECK(c.contains(ExtendedPoint(cplx(3, 0)), 1e-12));
  CHECK_FALSE(c.contains(ExtendedPoint(cplx(-3, 0)), 1e-12));
  CHECK(closed_form_path(cplx(0, 1), cplx(0, 2)).kind == RationalCase::Case3b);

  CHECK(infinity_membership(cplx(-1, 1), cplx(1, 1)));
  CHECK_FALSE(infinity_membership(cplx(1, 1), cplx(-1, 1)));
  CHECK(infinity_membership(cplx(0, 1), cplx(0, 2)));
  LocatorConfig cfg;
  for (auto [a, b] : std::vector<std::pair<cplx, cplx>>{
           {cplx(-1, 1), cplx(1, 1)}, {cplx(1, 1), cplx(-1, 1)}, {cplx(0, 1), cplx(0, 2)}, {cplx(0, 2), cplx(0, 1)}}) {
    const auto ic = check_infinity_membership(a, b, cfg);
    CHECK(ic.formula == ic.located);
    CHECK(ic.limit == Approx(ic.expected).epsilon(1e-6));
  }
}

TEST_CASE("traversal directions match the tracer") {
  LocatorConfig cfg;
  for (auto [a, b] : std::vector<std::pair<cplx, cplx>>{
           {cplx(1, 1), cplx(-1, 1)}, {cplx(-1, 1), cplx(1, 1)}, {cplx(0, 2), cplx(0, 1)}, {cplx(0, 1), cplx(0, 2)}}) {
    const ClosedFormPath cf = closed_form_path(a, b);
    const Path p = trace(rational_q(a, b), cfg, 64, false);
    for (std::size_t i = 0; i + 1 < p.samples.size(); ++i) {
      const auto& s = p.samples[i];
      const auto& t = p.samples[i + 1];
      if (s.regime != t.regime || !s.point.is_finite() || !t.point.is_finite()) continue;
      const cplx dz = t.point.value() - s.point.value();
      for (const auto& pc : cf.pieces) {
        if (s.regime == Regime::Real && pc.kind != PathPiece::Kind::Arc && pc.kind != PathPiece::Kind::VerticalRay)
          CHECK(dz.real() < 0);
        if (s.regime == Regime::Complex && pc.kind == PathPiece::Kind::Arc) {
          const double turn = std::arg((t.point.value() - cf.circle.center_x) / (s.point.value() - cf.circle.center_x));
          CHECK(turn * pc.direction > 0);
        }
        if (s.regime == Regime::Complex && pc.kind == PathPiece::Kind::VerticalRay) CHECK(dz.imag() * pc.direction > 0);
      }
    }
  }
}

TEST_CASE("property: geometry of random rational factors") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.2, 2.5);
  LocatorConfig cfg;
  for (int k = 0; k < 12; ++k) {
    cplx a(ux(rng), uy(rng)), b(ux(rng), uy(rng));
    if (k % 3 == 2) b = cplx(a.real(), uy(rng));
    if (a == b) continue;
    const N1Function q = rational_q(a, b);
    const ClosedFormPath cf = closed_form_path(a, b);
    // sign of Q' on the line
    for (int j = 0; j < 40; ++j) {
      const double x = -6 + 12 * (j + 0.5) / 40;
      const double d = q.jet(x).c[1].real(), s = sign_poly(a, b, x);
      if (std::abs(s) > 1e-9) CHECK((d > 0) == (s > 0));
    }
    const Path p = trace(q, cfg, 64, false);
    for (const auto& s : p.samples) {
      CHECK(cf.contains(s.point, 1e-6));
      if (s.regime == Regime::Complex) CHECK(zwei_residual(a, b, s.point.value()) <= 1e-8);
    }
    CHECK(cf.contains(ExtendedPoint(a), 1e-12));
  }
}

TEST_CASE("real alpha: perpendicular landing") {
  LocatorConfig cfg;
  const N1Function q = rational_q(0.5, cplx(-1, 1));
  const auto m = predict_local_path(q, 0.5);
  const auto ang = m.approach_angle ? m.approach_angle : m.departure_angle;
  REQUIRE(ang);
  CHECK(*ang == Approx(kPi / 2));
  const double sgn = m.approach_angle ? -1 : 1;
  const auto r = locate(q, TauParameter::from_tau(sgn * 1e-6), cfg);
  REQUIRE(r.regime == Regime::Complex);
  CHECK(std::abs(std::arg(r.point.value() - 0.5) - kPi / 2) < 0.05);
}
