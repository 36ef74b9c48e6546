#include "gznt/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gznt/errors.hpp"
#include "gznt/log.hpp"

namespace gznt {

namespace {

template <class F>
double fd_error(F&& jet_at, double scale, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-scale, scale), uy(0.05 * scale, scale);
  double worst = 0.0;
  for (int p = 0; p < points; ++p) {
    const cplx z(ux(rng), uy(rng));
    const double h = 1e-3 * z.imag();
    const Jet j0 = jet_at(z);
    Jet jp1 = jet_at(z + h), jm1 = jet_at(z - h), jp2 = jet_at(z + 2.0 * h), jm2 = jet_at(z - 2.0 * h);
    for (int k = 1; k <= 3; ++k) {
      const cplx fd = (-jp2.derivative(k - 1) + 8.0 * jp1.derivative(k - 1) - 8.0 * jm1.derivative(k - 1) +
                       jm2.derivative(k - 1)) /
                      (12.0 * h);
      const cplx an = j0.derivative(k);
      // floor: a derivative that vanishes is compared against the function's size
      const double den = std::max(std::abs(an), 1e-6 * std::abs(j0.derivative(k - 1)) / z.imag());
      if (den == 0.0) continue;
      worst = std::max(worst, std::abs(fd - an) / den);
    }
  }
  return worst;
}

}  // namespace

double derivative_fd_error(const N1Function& q, int points, std::uint64_t seed) {
  return fd_error([&](cplx z) { return q.jet(z); }, q.scale(), points, seed);
}

double derivative_fd_error(const NevanlinnaFunction& m, double scale, int points, std::uint64_t seed) {
  return fd_error([&](cplx z) { return m.jet(z); }, scale, points, seed);
}

double mass_agreement(const NevanlinnaFunction& m) {
  double worst = 0.0;
  for (const auto& t : m.terms()) {
    const auto* pm = std::get_if<PointMass>(&t);
    if (!pm) continue;
    double w = 0.0;
    for (const auto& u : m.terms())
      if (const auto* q = std::get_if<PointMass>(&u); q && q->t == pm->t) w += q->c;
    const double d = 0.5 * m.distance_to_singularity(pm->t, 1.0);
    worst = std::max(worst, std::abs(point_mass(m, pm->t) - w));
    worst = std::max(worst, std::abs(point_mass_ray(m, pm->t).value.real() - w));
    if (d > 0.0) worst = std::max(worst, std::abs(stieltjes_inversion(m, pm->t - d, pm->t + d) - w));
  }
  return worst;
}

std::vector<double> parameter_samples() {
  std::vector<double> out;
  for (int k = 0; k < 16; ++k) out.push_back(std::tan(-kPi / 2 + (k + 0.5) * kPi / 16));
  return out;
}

std::vector<CheckResult> run_invariants(const N1Function& q, const LocatorConfig& cfg, int steps,
                                        std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, double v, double tol, std::string note = {}) {
    out.push_back({std::move(name), v, tol, v <= tol, std::move(note)});
  };
  auto guarded = [&](const std::string& name, double tol, auto&& fn) {
    try {
      add(name, fn(), tol);
    } catch (const Error& e) {
      out.push_back({name, kInf, tol, false, std::string(e.name()) + ": " + e.what()});
    }
  };

  guarded("derivative_fd", 1e-6, [&] { return derivative_fd_error(q, 100, seed == 0 ? 1 : seed); });
  guarded("mass_agreement", 1e-6, [&] { return mass_agreement(q.m()); });

  const auto qp = std::make_shared<const N1Function>(q);
  TraceOptions topt;
  topt.steps = steps;
  Path p;
  try {
    p = trace(qp, cfg, topt);
  } catch (const Error& e) {
    out.push_back({"trace", kInf, 0.0, false, std::string(e.name()) + ": " + e.what()});
    return out;
  }
  std::string witness;
  const bool inj = check_injectivity(p, 1e-9, &witness);
  out.push_back({"injectivity", inj ? 0.0 : 1.0, 0.0, inj, witness});

  const auto taus = parameter_samples();
  guarded("alphbet", 1e-6, [&] { return check_alphbet(q, taus, cfg); });
  guarded("reparam", 1e-6, [&] {
    const double tau0 = 0.7;
    std::vector<double> rhos;
    for (double r : taus)
      if (std::abs(1.0 - r * tau0) > 1e-6) rhos.push_back(r);
    return check_reparam(q, tau0, rhos, cfg);
  });

  const bool all_real = std::all_of(p.samples.begin(), p.samples.end(), [](const PathSample& s) {
    return s.regime != Regime::Complex;
  });
  try {
    const RealLineForm f = realline_characterize(q, p);
    const bool is_form = !std::holds_alternative<NotRealLine>(f);
    out.push_back({"realline_theorem", is_form == all_real ? 0.0 : 1.0, 0.0, is_form == all_real,
                   form_name(f)});
  } catch (const Error& e) {
    out.push_back({"realline_theorem", kInf, 0.0, false, std::string(e.name()) + ": " + e.what()});
  }

  const bool has_real_run = [&] {
    for (std::size_t i = 0; i + 1 < p.samples.size(); ++i)
      if (p.samples[i].regime == Regime::Real && p.samples[i + 1].regime == Regime::Real) return true;
    return false;
  }();
  if (has_real_run) {
    try {
      const HolomorphyReport h = check_holomorphy_on_path(q, p, cfg);
      out.push_back({"holomorphy_on_real_run", h.ok ? 0.0 : 1.0, 0.0, h.ok, h.witness});
    } catch (const Error& e) {
      out.push_back({"holomorphy_on_real_run", kInf, 0.0, false, e.what()});
    }
  }
  return out;
}

}  // namespace gznt
