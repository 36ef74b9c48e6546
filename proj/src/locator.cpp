#include "gznt/locator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "gznt/errors.hpp"
#include "gznt/log.hpp"

namespace gznt {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Complex:
      return "complex";
    case Regime::Real:
      return "real";
    case Regime::Infinity:
      return "infinity";
  }
  return "?";
}

void LocatorConfig::validate() const {
  auto pos = [](double v, const char* n) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ValidationError(std::string(n) + " must be a positive finite number");
  };
  pos(newton_tol, "newton_tol");
  pos(real_scan_resolution, "real_scan_resolution");
  pos(ray_base_height, "ray_base_height");
  pos(im_threshold, "im_threshold");
  pos(limit_tol, "limit_tol");
  pos(deriv_tol, "deriv_tol");
  pos(merge_tol, "merge_tol");
  if (max_iters < 4) throw ValidationError("max_iters must be at least 4");
  if (ray_depth < 8) throw ValidationError("ray_depth must be at least 8");
  if (seed_grid.nx < 1 || seed_grid.ny < 1) throw ValidationError("seed grid counts must be positive");
  if (seed_grid.half_width < 0 || seed_grid.y_min < 0 || seed_grid.y_max < 0)
    throw ValidationError("seed grid extents must be nonnegative");
}

namespace {

struct Candidate {
  ExtendedPoint point = ExtendedPoint::infinity();
  Regime regime = Regime::Infinity;
  double score = 0.0;  // signed test quantity, negative is better
  bool strict = false;
  std::optional<double> limit;
  double residual = 0.0;
  std::string source;
};

GzntResult to_result(const Candidate& c) {
  GzntResult r;
  r.point = c.point;
  r.regime = c.regime;
  r.limit_value = c.limit;
  r.residual = c.residual;
  r.source = c.source;
  return r;
}

bool accept_residual(const FamilyMember& g, cplx z, const LocatorConfig& cfg, double* res) {
  const cplx qv = g.q().jet(z).value();
  const cplx num = g.a() * qv + g.b();
  const cplx den = g.c() * qv + g.d();
  const double mag = std::abs(g.a() * qv) + std::abs(g.b());
  const double gv = std::abs(num / den);
  *res = gv;
  return gv <= cfg.newton_tol || std::abs(num) <= cfg.newton_tol * std::max(1.0, mag);
}

// How far rounding in a Q + b can move a root at z.
double root_spread(const FamilyMember& g, cplx z) {
  if (g.a() == 0.0) return 0.0;
  const Jet j = g.q().jet(z);
  const double noise = 4.4e-16 * (std::abs(g.a() * j.c[0]) + std::abs(g.b()));
  if (noise == 0.0) return 0.0;
  double best = kInf;
  for (int k = 1; k <= 3; ++k) {
    const double ck = std::abs(g.a() * j.c[k]);
    if (ck > 0.0) best = std::min(best, std::pow(noise / ck, 1.0 / k));
  }
  return best;
}

// Newton in C+ with reflection, Muller after max_iters/2 iterations.
std::optional<cplx> newton_complex(const FamilyMember& g, cplx z, const LocatorConfig& cfg,
                                   double L, double* residual) {
  if (z.imag() < 0) z = std::conj(z);
  if (z.imag() == 0) z += cplx(0, 1e-3 * std::max(1.0, std::abs(z)));
  std::vector<std::pair<cplx, cplx>> hist;  // (z, G)
  int low = 0;
  bool converged = false;
  for (int it = 0; it < cfg.max_iters; ++it) {
    Jet j;
    try {
      j = g.jet(z);
    } catch (const EvaluationAtSingularity&) {
      if (g.a() == 0.0 && z.imag() > cfg.im_threshold) {  // a pole of Q is a zero of -1/Q
        *residual = 0.0;
        return z;
      }
      z += cplx(1e-9, 1e-9) * std::max(1.0, std::abs(z));
      continue;
    } catch (const PoleOfFamily&) {
      z += cplx(1e-9, 1e-9) * std::max(1.0, std::abs(z));
      continue;
    } catch (const QuadratureFailure&) {  // iterate pressed onto a density support
      log().trace("newton: quadrature failed at {}+{}i", z.real(), z.imag());
      return std::nullopt;
    }
    const cplx G = j.c[0], dG = j.c[1];
    if (!std::isfinite(std::abs(G))) return std::nullopt;
    if (G == 0.0) {
      converged = true;
      break;
    }
    hist.emplace_back(z, G);
    cplx step;
    if (it < cfg.max_iters / 2 && dG != 0.0) {
      step = G / dG;
    } else if (hist.size() >= 3) {
      const auto [z0, f0] = hist[hist.size() - 3];
      const auto [z1, f1] = hist[hist.size() - 2];
      const auto [z2, f2] = hist[hist.size() - 1];
      const cplx h1 = z1 - z0, h2 = z2 - z1;
      if (h1 == 0.0 || h2 == 0.0 || h1 + h2 == 0.0) return std::nullopt;
      const cplx d1 = (f1 - f0) / h1, d2 = (f2 - f1) / h2;
      const cplx aa = (d2 - d1) / (h2 + h1);
      const cplx bb = aa * h2 + d2;
      const cplx disc = std::sqrt(bb * bb - 4.0 * aa * f2);
      const cplx den = std::abs(bb + disc) > std::abs(bb - disc) ? bb + disc : bb - disc;
      if (den == 0.0) return std::nullopt;
      step = 2.0 * f2 / den;
    } else if (dG != 0.0) {
      step = G / dG;
    } else {
      return std::nullopt;
    }
    // damp wild steps
    const double cap = 10.0 * std::max(L, std::abs(z));
    if (std::abs(step) > cap) step *= cap / std::abs(step);
    cplx zn = z - step;
    if (zn.imag() < 0) zn = std::conj(zn);
    if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag())) return std::nullopt;
    if (std::abs(zn) > 1e9 * L) return std::nullopt;
    low = zn.imag() < 0.1 * cfg.im_threshold ? low + 1 : 0;
    if (low >= 4) return std::nullopt;  // drawn to a real root
    // at the rounding floor Newton can cycle between neighbours of the root
    const bool tiny = std::abs(zn - z) <= 1e-12 * std::max(1.0, std::abs(z));
    z = zn;
    if (tiny) {
      converged = true;
      break;
    }
  }
  if (z.imag() <= cfg.im_threshold * std::max(1.0, std::abs(z))) return std::nullopt;
  double res = 0.0;
  try {
    // a genuine simple root: small residual and a small Newton correction
    const Jet j = g.jet(z);
    const cplx qz = g.q().jet(z).value();
    const double floor = 16 * 4.4e-16 * (std::abs(g.a() * qz) + std::abs(g.b())) / std::abs(g.c() * qz + g.d());
    if (!(std::abs(j.c[0]) <= 1e-10 * std::abs(j.c[1]) * std::max(1.0, std::abs(z))) &&
        !(std::abs(j.c[0]) <= floor)) {
      log().trace("newton: {}+{}i rejected, correction too large", z.real(), z.imag());
      return std::nullopt;
    }
    const double spread = root_spread(g, z);
    if (!(spread <= 1e-5 * std::max(1.0, std::abs(z))) || z.imag() <= 10.0 * spread) {
      log().trace("newton: {}+{}i rejected, spread {}", z.real(), z.imag(), spread);
      return std::nullopt;
    }
    if (!accept_residual(g, z, cfg, &res)) {
      if (!converged || res > 1e3 * cfg.newton_tol) {
        log().trace("newton: {}+{}i rejected, residual {}", z.real(), z.imag(), res);
        return std::nullopt;
      }
    }
  } catch (const EvaluationAtSingularity&) {
    if (g.a() != 0.0) return std::nullopt;
    res = 0.0;
  } catch (const PoleOfFamily&) {
    return std::nullopt;
  } catch (const QuadratureFailure&) {
    return std::nullopt;
  }
  *residual = res;
  return z;
}

std::vector<cplx> make_seeds(const FamilyMember& g, const LocatorConfig& cfg) {
  const N1Function& q = g.q();
  const double L = q.scale();
  const double hw = cfg.seed_grid.half_width > 0 ? cfg.seed_grid.half_width : L;
  const double y1 = cfg.seed_grid.y_max > 0 ? cfg.seed_grid.y_max : L;
  const double y0 = cfg.seed_grid.y_min > 0 ? cfg.seed_grid.y_min : 0.01 * L;
  std::vector<cplx> seeds;
  const int nx = cfg.seed_grid.nx, ny = cfg.seed_grid.ny;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      seeds.emplace_back(-hw + (i + 0.5) * 2.0 * hw / nx, y0 + (j + 1) * (y1 - y0) / ny);

  std::vector<double> centres{0.0};
  if (auto a = q.alpha()) centres.push_back(a->real());
  if (auto b = q.beta()) centres.push_back(b->real());
  for (double x : q.boundary_points()) centres.push_back(x);
  std::sort(centres.begin(), centres.end());
  centres.erase(std::unique(centres.begin(), centres.end()), centres.end());
  for (double c : centres)
    for (int k = 1; k <= 12; ++k) {
      const double r = L * std::ldexp(1.0, -k);
      for (double ph : {kPi / 6, kPi / 2, 5 * kPi / 6}) seeds.push_back(c + std::polar(r, ph));
    }
  // the zero can sit in a tiny basin next to alpha or beta, e.g. for large |tau|
  for (auto p : {q.alpha(), q.beta()}) {
    if (!p || p->imag() <= 0.0) continue;
    for (int k = 1; k <= 20; ++k) {
      const double r = L * std::ldexp(1.0, -k);
      for (double ph : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
        const cplx s = *p + std::polar(r, ph);
        if (s.imag() > 0.0) seeds.push_back(s);
      }
    }
  }
  for (int k = 1; k <= 20; ++k) {
    const double r = L * std::ldexp(1.0, k);
    seeds.push_back(std::polar(r, kPi / 2));
    if (k <= 8) {
      seeds.push_back(std::polar(r, kPi / 4));
      seeds.push_back(std::polar(r, 3 * kPi / 4));
    }
  }
  if (cfg.seed != 0) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(seeds.begin(), seeds.end(), rng);
  }
  return seeds;
}

std::optional<Candidate> complex_search(const FamilyMember& g, const LocatorConfig& cfg,
                                        std::optional<cplx> hint) {
  const double L = g.q().scale();
  auto wrap = [&](cplx z, double res, const char* src) {
    Candidate c;
    c.point = ExtendedPoint(z);
    c.regime = Regime::Complex;
    c.strict = true;
    c.residual = res;
    c.source = src;
    return c;
  };
  double res = 0.0;
  if (hint) {
    if (auto z = newton_complex(g, *hint, cfg, L, &res)) return wrap(*z, res, "newton-hint");
  }
  for (const cplx& s : make_seeds(g, cfg))
    if (auto z = newton_complex(g, s, cfg, L, &res)) return wrap(*z, res, "newton-multistart");
  return std::nullopt;
}

LimitEstimate ray_limit_at(const FamilyMember& g, double x0, double y0, int depth) {
  LimitOptions lo;
  lo.depth = depth;
  return limit_as_h_to_zero(
      [&](double y) {
        const cplx z(x0, y);
        return g.value(z) / (z - x0);
      },
      y0, lo);
}

LimitEstimate ray_limit_infinity(const FamilyMember& g, double y0, int depth) {
  LimitOptions lo;
  lo.depth = depth;
  return limit_as_h_to_zero(
      [&](double h) {
        const cplx z(0.0, 1.0 / h);
        return z * g.value(z);
      },
      1.0 / y0, lo);
}

double band(const LimitEstimate& e, const LocatorConfig& cfg) {
  return std::max(cfg.limit_tol, 10.0 * e.error);
}

// Verdict for lim G/(z-x0) in (-inf, 0]; fills the candidate.
std::optional<Candidate> judge_real_limit(const LimitEstimate& e, double x0,
                                          const LocatorConfig& cfg, const char* src) {
  if (!e.finite()) return std::nullopt;
  const double b = band(e, cfg);
  const double re = e.value.real();
  if (std::abs(e.value.imag()) > b * std::max(1.0, std::abs(re))) return std::nullopt;
  if (re > b) return std::nullopt;
  Candidate c;
  c.point = ExtendedPoint(cplx(x0, 0.0));
  c.regime = Regime::Real;
  c.score = re;
  c.strict = re < -b;
  c.limit = re;
  c.source = src;
  return c;
}

std::optional<Candidate> judge_infinity_limit(const LimitEstimate& e, const LocatorConfig& cfg) {
  if (!e.finite()) return std::nullopt;
  const double b = band(e, cfg);
  const double re = e.value.real();
  if (std::abs(e.value.imag()) > b * std::max(1.0, std::abs(re))) return std::nullopt;
  if (re < -b) return std::nullopt;
  Candidate c;
  c.point = ExtendedPoint::infinity();
  c.regime = Regime::Infinity;
  c.score = -re;
  c.strict = re > b;
  c.limit = re;
  c.source = "ray-infinity";
  return c;
}

// Real root x0 of G inside a gap, judged by the sign of G'(x0).
std::optional<Candidate> judge_gap_root(const FamilyMember& g, double x0, const LocatorConfig& cfg,
                                        const char* src, bool check_spread = true) {
  Jet j;
  try {
    j = g.jet(cplx(x0, 0.0));
  } catch (const Error&) {
    return std::nullopt;
  }
  const double d = j.c[1].real();
  if (d > cfg.deriv_tol) return std::nullopt;
  if (check_spread && !(root_spread(g, cplx(x0, 0.0)) <= 1e-5 * std::max(1.0, std::abs(x0))))
    return std::nullopt;  // rounding-level root
  Candidate c;
  c.point = ExtendedPoint(cplx(x0, 0.0));
  c.regime = Regime::Real;
  c.score = d;
  c.strict = d < -cfg.deriv_tol;
  c.limit = d;
  c.residual = std::abs(j.c[0]);
  c.source = src;
  return c;
}

struct Sample {
  double x;
  double f;
  double df;
  bool ok;
};

std::vector<double> real_roots(const FamilyMember& g, const LocatorConfig& cfg) {
  std::vector<double> roots;
  if (g.a() == 0.0) return roots;  // -1/Q has no zeros where Q is holomorphic
  const N1Function& q = g.q();
  const double L = q.scale();
  const double ftol = cfg.newton_tol * std::max(1.0, std::abs(g.b()));

  auto fx = [&](double x) -> std::pair<double, double> {
    const Jet j = q.jet(cplx(x, 0.0));
    return {g.a() * j.c[0].real() + g.b(), g.a() * j.c[1].real()};
  };

  for (const Gap& gap : q.gaps()) {
    const double plo = std::isfinite(gap.lo) ? std::atan(gap.lo / L) : -kPi / 2;
    const double phi = std::isfinite(gap.hi) ? std::atan(gap.hi / L) : kPi / 2;
    const int n = std::max(8, static_cast<int>(std::ceil((phi - plo) / cfg.real_scan_resolution)));
    std::vector<double> xs;
    for (int k = 1; k < n; ++k) {
      const double x = L * std::tan(plo + k * (phi - plo) / n);
      if (gap.contains(x)) xs.push_back(x);
    }
    if (xs.empty()) {
      if (std::isfinite(gap.lo) && std::isfinite(gap.hi)) xs.push_back(0.5 * (gap.lo + gap.hi));
      else continue;
    }
    const double first = xs.front(), last = xs.back();
    for (int k = 1; k <= 40; ++k) {
      const double s = std::ldexp(1.0, -k);
      xs.push_back(std::isfinite(gap.lo) ? gap.lo + (first - gap.lo) * s
                                         : first - std::abs(first) * (std::ldexp(1.0, k) - 1.0));
      xs.push_back(std::isfinite(gap.hi) ? gap.hi - (gap.hi - last) * s
                                         : last + std::abs(last) * (std::ldexp(1.0, k) - 1.0));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Sample> s;
    s.reserve(xs.size());
    for (double x : xs) {
      if (!gap.contains(x)) continue;
      try {
        auto [f, df] = fx(x);
        s.push_back({x, f, df, std::isfinite(f) && std::isfinite(df)});
      } catch (const Error&) {
        s.push_back({x, 0, 0, false});
      }
    }

    auto bracket = [&](auto&& fn, double a, double b, double fa, double fb) {
      boost::uintmax_t it = 200;
      auto r = boost::math::tools::toms748_solve(fn, a, b, fa, fb,
                                                 boost::math::tools::eps_tolerance<double>(52), it);
      return 0.5 * (r.first + r.second);
    };
    auto f_only = [&](double x) { return fx(x).first; };
    auto df_only = [&](double x) { return fx(x).second; };

    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      const Sample& A = s[i];
      const Sample& B = s[i + 1];
      if (!A.ok || !B.ok) continue;
      if (A.f == 0.0) roots.push_back(A.x);
      std::vector<std::pair<double, double>> pieces{{A.x, A.f}};
      if (A.df * B.df < 0.0) {
        try {
          const double xc = bracket(df_only, A.x, B.x, A.df, B.df);
          const double fc = f_only(xc);
          // a double root only at the rounding floor; flat functions keep both roots apart
          const double floor = 16 * 4.4e-16 * (std::abs(fc - g.b()) + std::abs(g.b()));
          const bool dip = (fc > 0) != (A.f > 0) && (fc > 0) != (B.f > 0);
          if (std::abs(fc) <= (dip ? floor : ftol)) roots.push_back(xc);
          else pieces.emplace_back(xc, fc);
        } catch (const std::exception& e) {
          log().debug("critical point bracket failed: {}", e.what());
        }
      }
      pieces.emplace_back(B.x, B.f);
      for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
        const auto [a, fa] = pieces[k];
        const auto [b, fb] = pieces[k + 1];
        if (fa * fb < 0.0) {
          try {
            roots.push_back(bracket(f_only, a, b, fa, fb));
          } catch (const std::exception& e) {
            log().debug("root bracket failed: {}", e.what());
          }
        }
      }
    }
    if (!s.empty() && s.back().ok && s.back().f == 0.0) roots.push_back(s.back().x);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double u, double v) {
                            return std::abs(u - v) <= 1e-13 * std::max(1.0, std::abs(u));
                          }),
              roots.end());
  return roots;
}

std::optional<Candidate> fast_path(const FamilyMember& g, const LocatorConfig& cfg,
                                   const ExtendedPoint& hint) {
  const N1Function& q = g.q();
  if (hint.is_infinity()) {
    try {
      auto c = judge_infinity_limit(ray_limit_infinity(g, q.scale(), cfg.ray_depth), cfg);
      if (c && c->strict) return c;
    } catch (const LimitUnstable&) {
    }
    return std::nullopt;
  }
  const cplx h = hint.value();
  if (h.imag() > cfg.im_threshold) {
    double res = 0.0;
    if (auto z = newton_complex(g, h, cfg, q.scale(), &res)) {
      Candidate c;
      c.point = ExtendedPoint(*z);
      c.regime = Regime::Complex;
      c.strict = true;
      c.residual = res;
      c.source = "newton-hint";
      return c;
    }
    return std::nullopt;
  }
  // real hint: Newton along the real axis inside the hint's gap
  const double x0 = h.real();
  if (g.a() == 0.0) return std::nullopt;
  const Gap* gap = nullptr;
  for (const auto& gg : q.gaps())
    if (gg.contains(x0)) gap = &gg;
  if (!gap) return std::nullopt;
  double x = x0;
  try {
    for (int it = 0; it < 40; ++it) {
      const Jet j = q.jet(cplx(x, 0.0));
      const double f = g.a() * j.c[0].real() + g.b();
      const double df = g.a() * j.c[1].real();
      if (df == 0.0) return std::nullopt;
      const double xn = x - f / df;
      if (!gap->contains(xn)) return std::nullopt;
      const bool done = std::abs(xn - x) <= 4e-16 * std::max(1.0, std::abs(x));
      x = xn;
      if (done) break;
    }
    double res = 0.0;
    if (!accept_residual(g, cplx(x, 0.0), cfg, &res)) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  auto c = judge_gap_root(g, x, cfg, "newton-real-hint");
  if (c && c->strict) return c;
  return std::nullopt;
}

}  // namespace

GzntResult find_gznt(const FamilyMember& g, const LocatorConfig& cfg,
                     std::optional<ExtendedPoint> hint) {
  cfg.validate();
  if (hint) {
    if (auto c = fast_path(g, cfg, *hint)) return to_result(*c);
  }
  if (auto c = complex_search(g, cfg, std::nullopt)) return to_result(*c);

  std::vector<Candidate> cands;
  std::vector<Candidate> weak;  // ill-conditioned real roots, last resort
  for (double x : real_roots(g, cfg)) {
    if (auto c = judge_gap_root(g, x, cfg, "gap-root")) {
      cands.push_back(*c);
    } else if (auto w = judge_gap_root(g, x, cfg, "gap-root-illconditioned", false)) {
      w->strict = false;
      weak.push_back(*w);
    }
  }

  const N1Function& q = g.q();
  const int bdepth = std::max(cfg.ray_depth, 36);
  for (double x : q.boundary_points()) {
    // cancellation near a real pole can swamp the deep samples; back off
    for (int depth : {bdepth, cfg.ray_depth}) {
      try {
        const auto e = ray_limit_at(g, x, cfg.ray_base_height, depth);
        if (auto c = judge_real_limit(e, x, cfg, "ray-boundary")) {
          cands.push_back(*c);
          break;
        }
      } catch (const LimitUnstable& e) {
        log().debug("boundary test at {} depth {}: {}", x, depth, e.what());
      } catch (const Error& e) {
        log().debug("boundary test at {} skipped: {}", x, e.what());
        break;
      }
    }
  }
  try {
    const auto e = ray_limit_infinity(g, q.scale(), cfg.ray_depth);
    if (auto c = judge_infinity_limit(e, cfg)) cands.push_back(*c);
  } catch (const Error& e) {
    log().debug("infinity test skipped: {}", e.what());
  }

  if (cands.empty() && !weak.empty()) {
    log().debug("only ill-conditioned real roots; taking the best");
    cands = weak;
  }
  if (cands.empty())
    throw NotFound("no GZNT candidate passed; refine real_scan_resolution or enlarge the seed grid");

  // merge candidates that coincide
  std::vector<Candidate> strict;
  for (const auto& c : cands) {
    if (!c.strict) continue;
    const bool dup = std::any_of(strict.begin(), strict.end(), [&](const Candidate& s) {
      return chordal_distance(s.point, c.point) <= cfg.merge_tol;
    });
    if (!dup) strict.push_back(c);
  }
  if (strict.size() > 1) {
    std::string list;
    for (const auto& s : strict) list += " " + s.point.to_string();
    throw MultipleCandidates("several points pass the GZNT test:" + list);
  }
  if (strict.size() == 1) return to_result(strict.front());
  const auto best = std::min_element(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.score < b.score;
  });
  return to_result(*best);
}

GzntResult locate(std::shared_ptr<const N1Function> q, const TauParameter& tau,
                  const LocatorConfig& cfg, std::optional<ExtendedPoint> hint) {
  if (tau.is_infinity()) return find_gznt(transform(std::move(q), tau), cfg, hint);
  const double t = tau.tau();
  if (std::abs(t) <= 1.0) return find_gznt(shifted(std::move(q), t), cfg, hint);
  // large |tau|: Q - tau has its zero near the poles of Q, Q_tau stays bounded there
  GzntResult r = find_gznt(transform(std::move(q), tau), cfg, hint);
  if (r.limit_value) *r.limit_value *= 1.0 + t * t;
  return r;
}

GzntResult locate(const N1Function& q, const TauParameter& tau, const LocatorConfig& cfg,
                  std::optional<ExtendedPoint> hint) {
  return locate(std::make_shared<const N1Function>(q), tau, cfg, hint);
}

GzntResult gpnt_of(const N1Function& q, const TauParameter& tau, const LocatorConfig& cfg) {
  return find_gznt(transform(q, tau).reciprocal(), cfg);
}

std::optional<cplx> locate_complex(const N1Function& q, double tau, const LocatorConfig& cfg,
                                   std::optional<cplx> hint) {
  cfg.validate();
  const FamilyMember g = shifted(std::make_shared<const N1Function>(q), tau);
  if (auto c = complex_search(g, cfg, hint)) return c->point.value();
  return std::nullopt;
}

PointTest test_real_point(const N1Function& q, double tau, double x0, const LocatorConfig& cfg) {
  cfg.validate();
  const FamilyMember g = shifted(std::make_shared<const N1Function>(q), tau);
  PointTest t;
  const int depth = q.holomorphic_at(x0) ? cfg.ray_depth : std::max(cfg.ray_depth, 36);
  t.limit = ray_limit_at(g, x0, cfg.ray_base_height, depth);
  t.is_gznt = judge_real_limit(t.limit, x0, cfg, "ray").has_value();
  if (q.holomorphic_at(x0)) {
    const Jet j = q.jet(cplx(x0, 0.0));
    const bool zero = std::abs(j.c[0].real() - tau) <= 1e-9 * std::max(1.0, std::abs(tau));
    const bool alg = zero && j.c[1].real() <= cfg.deriv_tol;
    if (alg != t.is_gznt)
      log().warn("ray and algebraic GZNT tests disagree at x0={} (ray {}, algebraic {})", x0,
                 t.is_gznt, alg);
  }
  return t;
}

PointTest test_infinity(const N1Function& q, double tau, const LocatorConfig& cfg) {
  cfg.validate();
  const FamilyMember g = shifted(std::make_shared<const N1Function>(q), tau);
  PointTest t;
  t.limit = ray_limit_infinity(g, q.scale(), cfg.ray_depth);
  t.is_gznt = judge_infinity_limit(t.limit, cfg).has_value();
  return t;
}

}  // namespace gznt
