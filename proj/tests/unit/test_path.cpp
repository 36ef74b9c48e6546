#include "doctest.h"
#include "fixtures.hpp"
#include "gznt/errors.hpp"
#include "gznt/invariants.hpp"
#include "gznt/path.hpp"

using namespace gznt;
using namespace fx;

namespace {

LocatorConfig cfg;

ExtendedPoint exact_z2(double tau) {
  if (std::isinf(tau)) return ExtendedPoint::infinity();
  return ExtendedPoint(tau > 0 ? cplx(-std::sqrt(tau), 0) : cplx(0, std::sqrt(-tau)));
}

ExtendedPoint exact_z3(double tau) {
  if (std::isinf(tau)) return ExtendedPoint::infinity();
  const double s = tau > 0 ? 1 : tau < 0 ? -1 : 0;
  return ExtendedPoint(cplx(-s, std::sqrt(3.0)) / 2.0 * std::cbrt(std::abs(tau)));
}

ExtendedPoint exact_mz(double tau) {
  return std::isinf(tau) ? ExtendedPoint::infinity() : ExtendedPoint(cplx(-tau, 0));
}

template <class F>
double worst(const Path& p, F&& exact) {
  double w = 0;
  for (const auto& s : p.samples) w = std::max(w, chordal_distance(s.point, exact(s.tau)));
  return w;
}

}  // namespace

TEST_CASE("trace: closed forms") {
  const Path p2 = trace(z2(), cfg, 64, false);
  CHECK(worst(p2, exact_z2) <= 1e-6);
  CHECK(p2.samples.back().theta == doctest::Approx(kPi / 2));
  CHECK(p2.samples.back().point.is_infinity());
  CHECK(p2.samples.back().event == "gpnt");
  bool transition = false;
  for (const auto& s : p2.samples)
    if (s.event == "transition:Case2a") transition = std::abs(s.tau) < 1e-12;
  CHECK(transition);

  CHECK(worst(trace(z3(), cfg, 64, false), exact_z3) <= 1e-6);

  const Path pm = trace(minus_z(), cfg, 64, false);
  CHECK(worst(pm, exact_mz) <= 1e-6);
  for (const auto& s : pm.samples) CHECK(s.regime != Regime::Complex);

  const Path pn = trace(noton_r(), cfg, 64, false);
  for (const auto& s : pn.samples) {
    REQUIRE(s.point.is_finite());
    CHECK(s.point.value().imag() >= 0.5);
  }
}

TEST_CASE("trace: options") {
  CHECK_THROWS_AS(trace(z2(), cfg, 4, false), ValidationError);
  const Path a = trace(z2(), cfg, 16, true);
  for (std::size_t i = 0; i + 1 < a.samples.size(); ++i) {
    CHECK(a.samples[i].theta < a.samples[i + 1].theta);
  }
  CHECK(a.samples.size() > 16);
  TraceOptions par;
  par.steps = 32;
  par.parallel = true;
  const Path b = trace(std::make_shared<const N1Function>(noton_r()), cfg, par);
  const Path c = trace(noton_r(), cfg, 32, false);
  REQUIRE(b.samples.size() == c.samples.size());
  for (std::size_t i = 0; i < b.samples.size(); ++i)
    CHECK(chordal_distance(b.samples[i].point, c.samples[i].point) < 1e-10);
}

TEST_CASE("trace: z^2 log z real segment") {
  const Path p = trace(z2_log(), cfg, 64, false);
  double right = -1;
  for (const auto& s : p.samples)
    if (s.regime == Regime::Real && s.point.value().real() > right) right = s.point.value().real();
  CHECK(std::abs(right - std::exp(-0.5)) < 1e-3);
}

TEST_CASE("check_injectivity") {
  CHECK(check_injectivity(trace(z2(), cfg, 64, false), 1e-9));
  CHECK(check_injectivity(trace(minus_z(), cfg, 64, false), 1e-9));
  Path p = trace(z2(), cfg, 16, false);
  PathSample dup = p.samples[3];
  dup.theta += 0.01;
  p.samples.push_back(dup);
  std::string w;
  CHECK_FALSE(check_injectivity(p, 1e-9, &w));
  CHECK_FALSE(w.empty());
}

TEST_CASE("check_alphbet and check_reparam") {
  CHECK(check_alphbet(z2(), {1}, cfg) <= 1e-6);
  CHECK(check_alphbet(minus_z(), {2}, cfg) <= 1e-6);
  CHECK(check_alphbet(r0(0, 1, 1), {1}, cfg) <= 1e-12);
  CHECK_THROWS_AS(check_alphbet(z2(), {0}, cfg), ValidationError);
  CHECK(check_reparam(z2(), 0, {-1, 0.5, 3}, cfg) <= 1e-12);
  CHECK(check_reparam(z2(), 1, {0.5}, cfg) <= 1e-6);
  CHECK(check_reparam(minus_z(), 2, {-1}, cfg) <= 1e-6);
  CHECK_THROWS_AS(check_reparam(z2(), 1, {1}, cfg), ValidationError);
}

TEST_CASE("realline_characterize") {
  const N1Function q = r0(0, 1, 1);
  const RealLineForm f = realline_characterize(q, trace(q, cfg, 64, false));
  REQUIRE(std::holds_alternative<FormR0>(f));
  const auto& r = std::get<FormR0>(f);
  CHECK(std::abs(r.alpha) < 1e-9);
  CHECK(r.beta == doctest::Approx(1));
  CHECK(r.c == doctest::Approx(1));
  // alpha(tau) = -tau/(1-tau)
  for (double t : {-2.0, 0.3, 0.9, 4.0})
    CHECK(chordal(locate(q, TauParameter::from_tau(t), cfg).point, -t / (1 - t)) < 1e-9);

  const N1Function rc = make_q(ZeroAtInfinity{2.0}, NevanlinnaFunction(-6, 3, {}));
  const RealLineForm g = realline_characterize(rc, trace(rc, cfg, 64, false));
  REQUIRE(std::holds_alternative<FormRc>(g));
  CHECK(std::get<FormRc>(g).gamma == doctest::Approx(2));
  CHECK(std::get<FormRc>(g).d == doctest::Approx(3));

  const RealLineForm h = realline_characterize(z2(), trace(z2(), cfg, 64, false));
  REQUIRE(std::holds_alternative<NotRealLine>(h));
  REQUIRE(std::get<NotRealLine>(h).witness);
  CHECK(std::get<NotRealLine>(h).witness->tau < 0);
}

TEST_CASE("make_realline_family") {
  auto fam = make_realline_family(FormR0{0, 1, 1});
  CHECK(fam.residual <= 1e-10);
  const cplx z(0.3, 0.8);
  // the Nevanlinna pair is minus (1 - 1/(1-z), -1 + 1/z)
  CHECK(std::abs(fam.u.jet(z).value() + (1.0 - 1.0 / (1.0 - z))) < 1e-14);
  CHECK(std::abs(fam.v.jet(z).value() + (-1.0 + 1.0 / z)) < 1e-14);
  CHECK(fam.u.jet(z).value().imag() > 0);
  CHECK(fam.v.jet(z).value().imag() > 0);
  fam = make_realline_family(FormRc{2, 3});
  CHECK(fam.residual <= 1e-10);
  CHECK(std::abs(fam.u.jet(z).value() - 3.0 / (2.0 - z)) < 1e-14);
  CHECK(std::abs(fam.v.jet(z).value() - 3.0 * (z - 2.0)) < 1e-14);
  fam = make_realline_family(FormR1c{1, 0.5});
  CHECK(fam.residual <= 1e-10);
  CHECK(std::abs(fam.u.jet(z).value() - 2.0 * (z - 1.0)) < 1e-14);
  CHECK(std::abs(fam.v.jet(z).value() - 2.0 / (1.0 - z)) < 1e-14);
  CHECK_THROWS_AS(make_realline_family(FormR0{1, 0, 1}), ConstraintViolation);
  CHECK_THROWS_AS(make_realline_family(FormRc{0, -1}), ConstraintViolation);
  CHECK_THROWS_AS(make_realline_family(FormR1c{0, 0}), ConstraintViolation);
}

TEST_CASE("check_holomorphy") {
  CHECK(check_holomorphy_on_interval(minus_z(), -5, 5, cfg).ok);
  const auto h = check_holomorphy_on_interval(r0(0, 1, 1), -3, 3, cfg);
  CHECK(h.ok);
  REQUIRE(h.pole);
  CHECK(*h.pole == doctest::Approx(1));
  CHECK(check_holomorphy_on_interval(z2_log(), 0, 0.6, cfg).ok);
  CHECK_FALSE(check_holomorphy_on_interval(z2_log(), -1, 0.6, cfg).ok);
}

TEST_CASE("property: real-line theorem both ways and identities on fixtures") {
  for (const RealLineForm& f : {RealLineForm{FormR0{-1, 2, 0.5}}, RealLineForm{FormRc{-1, 0.25}},
                                RealLineForm{FormR1c{3, 2}}}) {
    const auto fam = make_realline_family(f);
    const Path p = trace(fam.q, cfg, 64, false);
    for (const auto& s : p.samples)
      if (s.point.is_finite()) CHECK(std::abs(s.point.value().imag()) <= 1e-9);
    CHECK(realline_characterize(fam.q, p).index() == f.index());
  }
  for (const auto& q : {z2(), z3(), noton_r(), z2_log(), z2_pow()})
    CHECK(std::holds_alternative<NotRealLine>(realline_characterize(q, trace(q, cfg, 64, false))));

  const auto taus = parameter_samples();
  for (const auto& q : {z2(), z3(), minus_z(), noton_r(), r0(0, 1, 1)}) {
    CHECK(check_alphbet(q, taus, cfg) <= 1e-6);
    std::vector<double> rhos;
    for (double r : taus)
      if (std::abs(1 - 0.7 * r) > 1e-6) rhos.push_back(r);
    CHECK(check_reparam(q, 0.7, rhos, cfg) <= 1e-6);
    CHECK(check_injectivity(trace(q, cfg, 64, false), 1e-9));
  }
}
