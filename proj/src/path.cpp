#include "gznt/path.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include <Eigen/Dense>

#include "gznt/errors.hpp"
#include "gznt/log.hpp"

namespace gznt {

namespace {

PathSample sample_at(const std::shared_ptr<const N1Function>& q, const TauParameter& t,
                     const LocatorConfig& cfg, std::optional<ExtendedPoint> hint) {
  PathSample s;
  s.theta = t.theta();
  s.tau = t.tau();
  try {
    const GzntResult r = locate(q, t, cfg, hint);
    s.point = r.point;
    s.regime = r.regime;
    s.limit = r.limit_value;
    s.residual = r.residual;
  } catch (const Error& e) {
    rethrow_with_context(e, "theta=" + format_number(t.theta()));
  }
  return s;
}

void add_event(PathSample& s, const std::string& ev) {
  if (ev.empty()) return;
  if (s.event.empty()) {
    s.event = ev;
    return;
  }
  // ';'-separated, no repeats
  std::size_t pos = 0;
  while (pos <= s.event.size()) {
    const std::size_t end = std::min(s.event.find(';', pos), s.event.size());
    if (s.event.compare(pos, end - pos, ev) == 0) return;
    pos = end + 1;
  }
  s.event += ";" + ev;
}

void insert_sample(std::vector<PathSample>& v, PathSample s) {
  for (auto& e : v)
    if (std::abs(e.theta - s.theta) <= 1e-12) {
      add_event(e, s.event);
      return;
    }
  v.insert(std::upper_bound(v.begin(), v.end(), s,
                            [](const PathSample& a, const PathSample& b) { return a.theta < b.theta; }),
           std::move(s));
}

double dist(const PathSample& a, const PathSample& b) { return chordal_distance(a.point, b.point); }

// Bisect a Complex/Real switch between two samples and land on the real side.
std::optional<PathSample> locate_transition(const std::shared_ptr<const N1Function>& q,
                                            const PathSample& a, const PathSample& b,
                                            const LocatorConfig& cfg, int iters) {
  double lo = a.theta, hi = b.theta;
  PathSample slo = a, shi = b;
  for (int it = 0; it < iters && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const PathSample m = sample_at(q, TauParameter::from_theta(mid), cfg,
                                   (a.regime == Regime::Real ? slo : shi).point);
    if (m.regime == a.regime) {
      lo = mid;
      slo = m;
    } else {
      hi = mid;
      shi = m;
    }
  }
  const PathSample& real_side = a.regime == Regime::Real ? slo : shi;
  if (real_side.regime != Regime::Real) return std::nullopt;
  const bool near_inf = chordal_distance(real_side.point, ExtendedPoint::infinity()) < 1e-2;

  PathSample out = real_side;
  double x = real_side.point.value().real();
  std::string tag = "transition:boundary";
  if (q->holomorphic_at(x)) {
    // the landing point is a critical point of Q
    double xn = x;
    bool ok = true;
    try {
      for (int it = 0; it < 30; ++it) {
        const Jet j = q->jet(cplx(xn, 0.0));
        const double d2 = j.derivative(2).real();
        if (d2 == 0.0) break;
        const double step = j.c[1].real() / d2;
        xn -= step;
        if (!q->holomorphic_at(xn)) {
          ok = false;
          break;
        }
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(xn))) break;
      }
    } catch (const Error&) {
      ok = false;
    }
    const bool critical = ok && std::abs(xn - x) <= 1e-3 * std::max(1.0, std::abs(x));
    // passes through infinity: covered by the infinity sample
    if (near_inf && !critical) return std::nullopt;
    if (critical) x = xn;
    const double tau = q->jet(cplx(x, 0.0)).c[0].real();
    try {
      tag = "transition:" + zero_class_name(classify_real_zero(*q, x, tau));
    } catch (const Error& e) {
      log().debug("transition at {} not classified: {}", x, e.what());
    }
    const TauParameter tp = TauParameter::from_tau(tau);
    out.theta = tp.theta();
    out.tau = tau;
    out.point = ExtendedPoint(cplx(x, 0.0));
    out.limit = q->jet(cplx(x, 0.0)).c[1].real();
  } else if (near_inf) {
    return std::nullopt;
  }
  out.event = tag;
  out.regime = Regime::Real;
  return out;
}

}  // namespace

Path trace(std::shared_ptr<const N1Function> q, const LocatorConfig& cfg, const TraceOptions& opt) {
  if (opt.steps < 8) throw ValidationError("trace needs at least 8 steps");
  cfg.validate();
  const int n = opt.steps;
  std::vector<double> thetas(n);
  for (int j = 0; j < n; ++j) thetas[j] = -kPi / 2 + (j + 1) * kPi / n;
  thetas.back() = kPi / 2;

  Path path;
  path.function_id = q->label();
  auto& s = path.samples;
  if (opt.parallel) {
    std::vector<std::future<PathSample>> fut;
    for (double th : thetas)
      fut.push_back(std::async(std::launch::async, [&, th] {
        return sample_at(q, TauParameter::from_theta(th), cfg, std::nullopt);
      }));
    for (auto& f : fut) s.push_back(f.get());
  } else {
    std::optional<ExtendedPoint> hint;
    for (double th : thetas) {
      s.push_back(sample_at(q, TauParameter::from_theta(th), cfg, hint));
      hint = s.back().point;
    }
  }
  s.back().event = "gpnt";

  // alpha(tau) = inf at tau = lim Q(iy) when that limit is real
  try {
    const LimitEstimate e = limit_as_h_to_zero(
        [&](double h) { return q->jet(cplx(0.0, q->scale() / h)).value(); }, 1.0);
    if (e.finite() && std::abs(e.value.imag()) <= 1e-9 * std::max(1.0, std::abs(e.value.real()))) {
      PathSample inf = sample_at(q, TauParameter::from_tau(e.value.real()), cfg,
                                 ExtendedPoint::infinity());
      if (inf.regime == Regime::Infinity) {
        inf.event = "infinity";
        insert_sample(s, inf);
      }
    }
  } catch (const LimitUnstable&) {
  }

  // a real piece can hide between a complex sample and infinity; probe next to infinity
  std::vector<PathSample> probes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].regime != Regime::Infinity) continue;
    for (std::size_t j : {i - 1, i + 1}) {
      if (j >= s.size() || s[j].regime != Regime::Complex) continue;
      const double th = s[i].theta + 1e-6 * (s[j].theta - s[i].theta);
      try {
        PathSample pr = sample_at(q, TauParameter::from_theta(th), cfg, std::nullopt);
        if (pr.regime == Regime::Real) probes.push_back(pr);
      } catch (const Error& e) {
        log().debug("probe next to infinity failed: {}", e.what());
      }
    }
  }
  for (auto& pr : probes) insert_sample(s, pr);

  if (opt.adaptive) {
    for (int depth = 0; depth < opt.adaptive_depth; ++depth) {
      std::vector<PathSample> next;
      bool added = false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        next.push_back(s[i]);
        if (i + 1 == s.size()) break;
        if (dist(s[i], s[i + 1]) > opt.adaptive_gap && s[i + 1].theta - s[i].theta > 1e-12) {
          next.push_back(sample_at(q, TauParameter::from_theta(0.5 * (s[i].theta + s[i + 1].theta)),
                                   cfg, s[i].point));
          added = true;
        }
      }
      s.swap(next);
      if (!added || s.size() > 20000) break;
    }
  }

  std::vector<PathSample> events;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const bool cr = s[i].regime == Regime::Complex && s[i + 1].regime == Regime::Real;
    const bool rc = s[i].regime == Regime::Real && s[i + 1].regime == Regime::Complex;
    if (!cr && !rc) continue;
    if (auto ev = locate_transition(q, s[i], s[i + 1], cfg, opt.bisect_iters)) events.push_back(*ev);
  }
  for (auto& ev : events) insert_sample(s, ev);
  return path;
}

Path trace(const N1Function& q, const LocatorConfig& cfg, int steps, bool adaptive) {
  TraceOptions o;
  o.steps = steps;
  o.adaptive = adaptive;
  return trace(std::make_shared<const N1Function>(q), cfg, o);
}

bool check_injectivity(const Path& p, double tol, std::string* witness) {
  const auto& s = p.samples;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (std::abs(s[i].theta - s[j].theta) <= 1e-12) continue;
      if (dist(s[i], s[j]) <= tol) {
        if (witness)
          *witness = "theta " + format_number(s[i].theta) + " and " + format_number(s[j].theta) +
                     " share the point " + s[i].point.to_string();
        return false;
      }
    }
  return true;
}

double check_alphbet(const N1Function& q, const std::vector<double>& taus, const LocatorConfig& cfg) {
  auto qp = std::make_shared<const N1Function>(q);
  double worst = 0.0;
  for (double t : taus) {
    if (t == 0.0) throw ValidationError("check_alphbet needs nonzero tau");
    const GzntResult a = locate(qp, TauParameter::from_tau(t), cfg);
    const GzntResult b = gpnt_of(q, TauParameter::from_tau(-1.0 / t), cfg);
    worst = std::max(worst, chordal_distance(a.point, b.point));
  }
  return worst;
}

double check_reparam(const N1Function& q, double tau0, const std::vector<double>& rhos,
                     const LocatorConfig& cfg) {
  auto qp = std::make_shared<const N1Function>(q);
  const FamilyMember base = transform(qp, TauParameter::from_tau(tau0));
  double worst = 0.0;
  for (double r : rhos) {
    const double den = 1.0 - r * tau0;
    if (den == 0.0) throw ValidationError("check_reparam needs 1 - rho tau0 != 0");
    const GzntResult a = find_gznt(base.then(TauParameter::from_tau(r)), cfg);
    const GzntResult b = locate(qp, TauParameter::from_tau((tau0 + r) / den), cfg);
    worst = std::max(worst, chordal_distance(a.point, b.point));
  }
  return worst;
}

std::string form_name(const RealLineForm& f) {
  switch (f.index()) {
    case 0:
      return "FormR0";
    case 1:
      return "FormRc";
    case 2:
      return "FormR1c";
    default:
      return "NotRealLine";
  }
}

namespace {

double form_value(const RealLineForm& f, double x) {
  if (const auto* r = std::get_if<FormR0>(&f)) return r->c * (x - r->alpha) / (x - r->beta);
  if (const auto* r = std::get_if<FormRc>(&f)) return r->d / (x - r->gamma);
  if (const auto* r = std::get_if<FormR1c>(&f)) return (r->gamma - x) / r->d;
  return 0.0;
}

bool form_constraint(const RealLineForm& f) {
  if (const auto* r = std::get_if<FormR0>(&f)) return r->c * (r->alpha - r->beta) < 0.0;
  if (const auto* r = std::get_if<FormRc>(&f)) return r->d > 0.0;
  if (const auto* r = std::get_if<FormR1c>(&f)) return r->d > 0.0;
  return false;
}

}  // namespace

RealLineForm realline_characterize(const N1Function& q, const Path& p, double tol) {
  for (const auto& s : p.samples)
    if (s.point.is_finite() && s.point.value().imag() > tol)
      return NotRealLine{s, "sample leaves the real line"};

  const double L = q.scale();
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k < 41; ++k) {
    const double x = L * std::tan(-kPi / 2 + (k + 0.5) * kPi / 41);
    if (!q.holomorphic_at(x)) continue;
    try {
      const double y = q.jet(cplx(x, 0.0)).value().real();
      if (std::isfinite(y) && std::abs(y) < 1e12) pts.emplace_back(x, y);
    } catch (const Error&) {
    }
  }
  if (pts.size() < 6) return NotRealLine{std::nullopt, "too few regular real points to fit"};

  const std::size_t n = pts.size();
  Eigen::Matrix<double, 3, 4> A;
  const std::size_t pick[3] = {n / 6, n / 2, (5 * n) / 6};
  for (int r = 0; r < 3; ++r) {
    const auto [x, y] = pts[pick[r]];
    A.row(r) << x, 1.0, -x * y, -y;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  Eigen::Vector4d v = svd.matrixV().col(3);
  v /= v.norm();
  const double a = v(0), b = v(1), c = v(2), d = v(3);
  constexpr double eps = 1e-9;

  std::vector<RealLineForm> cands;
  if (std::abs(a) > eps && std::abs(c) > eps) cands.push_back(FormR0{-b / a, -d / c, a / c});
  if (std::abs(c) > eps) cands.push_back(FormRc{-d / c, b / c});
  if (std::abs(d) > eps && std::abs(a) > eps) {
    const double dd = -d / a;  // slope a/d = -1/dd
    cands.push_back(FormR1c{(b / d) * dd, dd});
  }

  std::vector<RealLineForm> ok;
  for (const auto& f : cands) {
    if (!form_constraint(f)) continue;
    bool fits = true;
    for (const auto& [x, y] : pts) {
      const double fy = form_value(f, x);
      if (!(std::abs(fy - y) <= 1e-8 * std::max(1.0, std::abs(y)))) {
        fits = false;
        break;
      }
    }
    if (fits) ok.push_back(f);
  }
  if (ok.size() > 1) throw FitAmbiguous(form_name(ok[0]) + " and " + form_name(ok[1]) + " both fit");
  if (ok.empty()) return NotRealLine{std::nullopt, "no real-line closed form fits Q"};
  return ok.front();
}

RealLineFamily make_realline_family(const RealLineForm& form) {
  if (std::holds_alternative<NotRealLine>(form))
    throw ValidationError("make_realline_family needs a real-line form");
  if (!form_constraint(form)) {
    if (std::holds_alternative<FormR0>(form)) throw ConstraintViolation("FormR0 needs c (alpha - beta) < 0");
    throw ConstraintViolation("d must be positive");
  }

  std::optional<N1Function> q;
  std::optional<NevanlinnaFunction> u, v;
  std::function<cplx(cplx)> rel;  // U = rel(z) V
  double g0 = 0.0;
  if (const auto* f = std::get_if<FormR0>(&form)) {
    const double al = f->alpha, be = f->beta, c = f->c;
    q = make_q(BothFinite{al, be}, NevanlinnaFunction(c, 0.0, {PointMass{al, c * (be - al)}}),
               "R0");
    const double cl = -c;  // U = -Q
    u = NevanlinnaFunction(cl, 0.0, {PointMass{be, cl * (al - be)}});
    v = NevanlinnaFunction(-cl, 0.0, {PointMass{al, cl * (al - be)}});
    rel = [=](cplx z) { return -(z - al) * (z - al) / ((z - be) * (z - be)); };
    g0 = 0.5 * (al + be);
  } else if (const auto* f = std::get_if<FormRc>(&form)) {
    const double ga = f->gamma, d = f->d;
    q = make_q(ZeroAtInfinity{ga}, NevanlinnaFunction(-d * ga, d, {}), "Rc");
    u = NevanlinnaFunction(0.0, 0.0, {PointMass{ga, d}});
    v = NevanlinnaFunction(-d * ga, d, {});
    rel = [=](cplx z) { return -1.0 / ((z - ga) * (z - ga)); };
    g0 = ga;
  } else {
    const auto& r = std::get<FormR1c>(form);
    const double ga = r.gamma, e = 1.0 / r.d;
    q = make_q(PoleAtInfinity{ga}, NevanlinnaFunction(0.0, 0.0, {PointMass{ga, e}}), "R1c");
    u = NevanlinnaFunction(-e * ga, e, {});
    v = NevanlinnaFunction(0.0, 0.0, {PointMass{ga, e}});
    rel = [=](cplx z) { return -(z - ga) * (z - ga); };
    g0 = ga;
  }

  double worst = 0.0;
  const double L = q->scale();
  for (int k = 0; k < 50; ++k) {
    const cplx z(g0 - L + 2.0 * L * k / 49.0, 0.05 * L + (k % 7) * 0.3 * L);
    const cplx uz = u->jet(z).value(), vz = v->jet(z).value(), qz = q->jet(z).value();
    const double sc = std::max(1.0, std::abs(uz));
    worst = std::max({worst, std::abs(uz - rel(z) * vz) / sc, std::abs(uz + qz) / sc});
  }
  return RealLineFamily{*q, *u, *v, worst};
}

HolomorphyReport check_holomorphy_on_interval(const N1Function& q, double lo, double hi,
                                              const LocatorConfig& cfg) {
  HolomorphyReport r;
  r.lo = lo;
  r.hi = hi;
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw ValidationError("check_holomorphy needs a finite interval lo < hi");
  std::optional<double> gp;
  try {
    const GzntResult g = gpnt_of(q, TauParameter::from_tau(0.0), cfg);
    if (g.point.is_finite() && g.point.value().imag() == 0.0) {
      const double x = g.point.value().real();
      if (x > lo && x < hi) gp = x;
    }
  } catch (const Error& e) {
    log().debug("gpnt lookup failed: {}", e.what());
  }
  const double excl = 1e-6 * std::max(1.0, hi - lo);
  constexpr int kGrid = 2001;
  for (int k = 1; k < kGrid; ++k) {
    const double x = lo + (hi - lo) * k / kGrid;
    if (gp && std::abs(x - *gp) <= excl) continue;
    try {
      const cplx v = q.jet(cplx(x, 0.0)).value();
      if (!std::isfinite(v.real()) || std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v))) {
        r.ok = false;
        r.witness = "Q not real and finite at " + format_number(x);
        return r;
      }
    } catch (const Error& e) {
      r.ok = false;
      r.witness = format_number(x) + ": " + e.what();
      return r;
    }
  }
  if (gp) {
    double prev = 0.0;
    for (int k = 2; k <= 8; ++k) {
      const double h = std::pow(10.0, -k);
      double m = 0.0;
      try {
        m = std::min(std::abs(q.jet(cplx(*gp - h, 0.0)).value()),
                     std::abs(q.jet(cplx(*gp + h, 0.0)).value()));
      } catch (const Error&) {
        m = 0.0;
      }
      if (!(m > prev)) {
        r.ok = false;
        r.witness = "GPNT " + format_number(*gp) + " inside the interval is not a pole";
        return r;
      }
      prev = m;
    }
    r.pole = gp;
  }
  return r;
}

HolomorphyReport check_holomorphy_on_path(const N1Function& q, const Path& p,
                                          const LocatorConfig& cfg) {
  std::size_t best_len = 0, best_start = 0;
  for (std::size_t i = 0; i < p.samples.size();) {
    std::size_t j = i;
    while (j < p.samples.size() && p.samples[j].regime == Regime::Real) ++j;
    if (j - i > best_len) {
      best_len = j - i;
      best_start = i;
    }
    i = j + 1;
  }
  if (best_len < 2) throw ValidationError("path has no real sub-interval");
  double lo = kInf, hi = -kInf;
  for (std::size_t k = best_start; k < best_start + best_len; ++k) {
    const double x = p.samples[k].point.value().real();
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return check_holomorphy_on_interval(q, lo, hi, cfg);
}

}  // namespace gznt
