#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gznt/errors.hpp"
#include "gznt/nevanlinna.hpp"

using namespace gznt;
using doctest::Approx;

namespace {

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::vector<NevanlinnaFunction> zoo() {
  return {
      NevanlinnaFunction(0, 0, {PointMass{1, 2}}),
      NevanlinnaFunction(0.5, 0.25, {PointMass{-1, 1}, PointMass{2, 3}}),
      NevanlinnaFunction(0, 0, {LogPrimitive{1}}),
      NevanlinnaFunction(0, 0, {PowerPrimitive{0.3, 2}}),
      NevanlinnaFunction(1, 0, {Density{0, 1, DensityWeight::Uniform, 1}}),
      NevanlinnaFunction(0, 0, {Density{-1, 1, DensityWeight::Semicircle, 2}, RationalTail{50, 1}}),
      NevanlinnaFunction(0, 0, {UniformLine{1}}),
  };
}

}  // namespace

TEST_CASE("eval_m closed forms") {
  auto v = eval_m(NevanlinnaFunction(0, 0, {PointMass{1, 2}}), cplx(0, 1), 0);
  CHECK(near(v[0], cplx(1, 1), 1e-14));

  v = eval_m(NevanlinnaFunction(0, 1, {}), 5.0, 1);
  CHECK(near(v[0], 5.0, 1e-15));
  CHECK(near(v[1], 1.0, 1e-15));

  v = eval_m(NevanlinnaFunction(0, 0, {PointMass{0, 1}}), -1.0, 1);
  CHECK(near(v[0], 1.0, 1e-15));
  CHECK(near(v[1], 1.0, 1e-15));

  // uniform density on [0,1]: int (1/(s-z) - s/(s^2+1)) ds
  const cplx z(0.3, 0.7);
  const cplx exact = std::log((1.0 - z) / (-z)) - 0.5 * std::log(2.0);
  CHECK(near(NevanlinnaFunction(0, 0, {Density{0, 1, DensityWeight::Uniform, 1}}).jet(z).value(), exact, 1e-10));
}

TEST_CASE("eval_m errors on the support") {
  CHECK_THROWS_AS(eval_m(NevanlinnaFunction(0, 0, {PointMass{0, 1}}), 0.0, 0), EvaluationAtSingularity);
  CHECK_THROWS_AS(eval_m(NevanlinnaFunction(0, 0, {Density{0, 1}}), 0.5, 0), EvaluationAtSingularity);
  CHECK_THROWS_AS(eval_m(NevanlinnaFunction(0, 0, {LogPrimitive{1}}), -1.0, 0), BranchCutViolation);
  CHECK_THROWS_AS(eval_m(NevanlinnaFunction(0, 0, {PowerPrimitive{0.5, 1}}), -2.0, 0), BranchCutViolation);
}

TEST_CASE("term validation") {
  CHECK_THROWS_AS(NevanlinnaFunction(0, 0, {PointMass{0, -1}}), ValidationError);
  CHECK_THROWS_AS(NevanlinnaFunction(0, 0, {PowerPrimitive{1.5, 1}}), ValidationError);
  CHECK_THROWS_AS(NevanlinnaFunction(0, 0, {Density{1, 0}}), ValidationError);
  CHECK_THROWS_AS(NevanlinnaFunction(0, -1, {}), ValidationError);
}

TEST_CASE("boundary limits") {
  CHECK(boundary_limit(NevanlinnaFunction(0, 0, {PointMass{0, 1}}), 0.0, Side::Left).is_pos_inf());
  CHECK(boundary_limit(NevanlinnaFunction(0, 0, {PointMass{0, 1}}), 0.0, Side::Right).is_neg_inf());
  CHECK(boundary_limit(NevanlinnaFunction(0, 0, {LogPrimitive{1}}), 0.0, Side::Right).is_neg_inf());
  CHECK(boundary_limit(NevanlinnaFunction(0, 0, {PowerPrimitive{0.5, 1}}), 0.0, Side::Right).value() ==
        Approx(0.0).epsilon(1e-6));
  CHECK(boundary_limit(NevanlinnaFunction(0, 1, {}), 0.0, Side::Left).value() == Approx(0.0));
  CHECK_THROWS_AS(boundary_limit(NevanlinnaFunction(0, 0, {LogPrimitive{1}}), 0.0, Side::Left), NotAGapEndpoint);
}

TEST_CASE("point masses and the linear coefficient") {
  const NevanlinnaFunction m(0, 0, {PointMass{2, 3}});
  CHECK(point_mass(m, 2.0) == 3.0);
  CHECK(point_mass(m, 0.0) == 0.0);
  CHECK(point_mass_ray(m, 2.0).value.real() == Approx(3.0).epsilon(1e-8));
  CHECK(point_mass(NevanlinnaFunction(0, 0, {LogPrimitive{1}}), 0.0) == 0.0);
  CHECK(std::abs(point_mass_ray(NevanlinnaFunction(0, 0, {LogPrimitive{1}}), 0.0).value) < 1e-6);

  CHECK(linear_coefficient(NevanlinnaFunction(0, 1, {})) == 1.0);
  CHECK(linear_coefficient(NevanlinnaFunction(0, 0, {PointMass{0, 1}})) == 0.0);
  CHECK(linear_coefficient(NevanlinnaFunction(5, 0.25, {})) == 0.25);
  CHECK(linear_coefficient_ray(NevanlinnaFunction(5, 0.25, {})).value.real() == Approx(0.25).epsilon(1e-8));
}

TEST_CASE("stieltjes inversion") {
  const NevanlinnaFunction pm(0, 0, {PointMass{0, 1}});
  CHECK(stieltjes_inversion(pm, -1, 1) == Approx(1.0).epsilon(1e-7));
  CHECK(std::abs(stieltjes_inversion(NevanlinnaFunction(7, 0, {}), -1, 1)) < 1e-9);
  CHECK(std::abs(stieltjes_inversion(pm, 1, 2)) < 1e-7);
  // endpoint mass counts half
  CHECK(stieltjes_inversion(pm, 0, 1) == Approx(0.5).epsilon(1e-6));
  // density of total mass 2 on [-1,1]
  const NevanlinnaFunction sc(0, 0, {Density{-1, 1, DensityWeight::Uniform, 1}});
  CHECK(stieltjes_inversion(sc, -2, 2) == Approx(2.0).epsilon(1e-6));
  CHECK(stieltjes_inversion(sc, 0, 0.5) == Approx(0.5).epsilon(1e-6));
  // shrinking windows around an isolated atom
  const NevanlinnaFunction two(0.3, 0.1, {PointMass{-1, 0.7}, PointMass{2, 1.5}});
  for (double d : {0.5, 0.1, 0.01}) CHECK(stieltjes_inversion(two, 2 - d, 2 + d) == Approx(1.5).epsilon(1e-6));
}

TEST_CASE("holomorphy gaps") {
  auto g = holomorphy_gaps(NevanlinnaFunction(0, 0, {PointMass{0, 1}, PointMass{1, 1}}));
  REQUIRE(g.size() == 3);
  CHECK(g[0].hi == 0.0);
  CHECK(g[1].lo == 0.0);
  CHECK(g[1].hi == 1.0);
  CHECK(g[2].lo == 1.0);
  g = holomorphy_gaps(NevanlinnaFunction(0, 0, {LogPrimitive{1}}));
  REQUIRE(g.size() == 1);
  CHECK(g[0].lo == 0.0);
  CHECK(std::isinf(g[0].hi));
  g = holomorphy_gaps(NevanlinnaFunction(0, 0, {Density{0, 1}}));
  REQUIRE(g.size() == 2);
  CHECK(g[0].hi == 0.0);
  CHECK(g[1].lo == 1.0);
  CHECK(holomorphy_gaps(NevanlinnaFunction(0, 0, {UniformLine{1}})).empty());
}

TEST_CASE("property: Herglotz, reflection, derivatives, gap monotonicity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.1, 3);
  for (const auto& m : zoo()) {
    for (int k = 0; k < 40; ++k) {
      const cplx z(ux(rng), uy(rng));
      const Jet j = m.jet(z);
      CHECK(j.value().imag() >= -1e-12);
      CHECK(near(m.jet(std::conj(z)).value(), std::conj(j.value()), 1e-13));
      const double h = 1e-4;
      const cplx fd = (m.jet(z + h).value() - m.jet(z - h).value()) / (2 * h);
      CHECK(std::abs(fd - j.derivative(1)) <= 1e-6 * std::max(1e-3, std::abs(j.derivative(1))));
    }
    for (const Gap& g : holomorphy_gaps(m)) {
      const double lo = std::isfinite(g.lo) ? g.lo : -10.0, hi = std::isfinite(g.hi) ? g.hi : 10.0;
      for (int k = 1; k < 10; ++k) {
        const double x = lo + (hi - lo) * k / 10.0;
        CHECK(m.jet(x).derivative(1).real() > 0.0);
      }
    }
  }
}
