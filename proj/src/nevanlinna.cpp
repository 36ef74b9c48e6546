#include "gznt/nevanlinna.hpp"

#include <algorithm>
#include <cmath>

#include "gznt/errors.hpp"
#include "gznt/log.hpp"

namespace gznt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same_point(double a, double b) { return std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a)); }

// Taylor coefficients of c/(t - z) at z0.
void add_pole(Jet& j, double t, double c, cplx z0) {
  const cplx d = t - z0;
  if (d == 0.0) throw EvaluationAtSingularity("point mass at " + format_number(t) + " hit exactly");
  cplx p = c / d;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    j.c[k] += p;
    p /= d;
  }
}

}  // namespace

double Density::w(double s) const {
  switch (weight) {
    case DensityWeight::Uniform:
      return scale;
    case DensityWeight::Semicircle:
      return scale * std::sqrt(std::max(0.0, (s - lo) * (hi - s)));
  }
  return 0.0;
}

std::string term_name(const MeasureTerm& t) {
  return std::visit(overloaded{[](const PointMass&) { return std::string("point_mass"); },
                               [](const RationalTail&) { return std::string("rational_tail"); },
                               [](const Density&) { return std::string("density"); },
                               [](const LogPrimitive&) { return std::string("log"); },
                               [](const PowerPrimitive&) { return std::string("power"); },
                               [](const UniformLine&) { return std::string("uniform_line"); }},
                    t);
}

void validate_term(const MeasureTerm& term) {
  auto positive = [](double c, const char* what) {
    if (!(c > 0.0) || !std::isfinite(c))
      throw ValidationError(std::string(what) + " weight must be positive, got " + format_number(c));
  };
  auto finite = [](double x, const char* what) {
    if (!std::isfinite(x)) throw ValidationError(std::string(what) + " must be finite");
  };
  std::visit(overloaded{[&](const PointMass& p) {
                          finite(p.t, "point_mass location");
                          positive(p.c, "point_mass");
                        },
                        [&](const RationalTail& p) {
                          finite(p.t, "rational_tail location");
                          positive(p.c, "rational_tail");
                        },
                        [&](const Density& d) {
                          finite(d.lo, "density lo");
                          finite(d.hi, "density hi");
                          if (!(d.lo < d.hi)) throw ValidationError("density needs lo < hi");
                          positive(d.scale, "density");
                        },
                        [&](const LogPrimitive& l) { positive(l.c, "log"); },
                        [&](const PowerPrimitive& p) {
                          if (!(p.rho > 0.0 && p.rho < 1.0))
                            throw ValidationError("power exponent rho must lie in (0,1), got " +
                                                  format_number(p.rho));
                          positive(p.c, "power");
                        },
                        [&](const UniformLine& u) { positive(u.c, "uniform_line"); }},
             term);
}

NevanlinnaFunction::NevanlinnaFunction(double a, double b, std::vector<MeasureTerm> terms,
                                       NevanlinnaOptions opt)
    : a_(a), b_(b), terms_(std::move(terms)), opt_(opt) {
  if (!std::isfinite(a_)) throw ValidationError("a must be finite");
  if (!(b_ >= 0.0) || !std::isfinite(b_))
    throw ValidationError("b must be a finite nonnegative number, got " + format_number(b_));
  for (const auto& t : terms_) validate_term(t);
}

bool NevanlinnaFunction::is_trivially_zero() const { return a_ == 0.0 && b_ == 0.0 && terms_.empty(); }

Jet NevanlinnaFunction::jet(cplx z) const {
  if (z.imag() < 0.0) return conj(jet_upper(std::conj(z)));
  return jet_upper(z);
}

Jet NevanlinnaFunction::jet_upper(cplx z0) const {
  Jet j;
  j.c[0] = a_ + b_ * z0;
  j.c[1] = b_;
  const bool real = z0.imag() == 0.0;
  const double x = z0.real();

  for (const auto& term : terms_) {
    std::visit(
        overloaded{
            [&](const PointMass& p) { add_pole(j, p.t, p.c, z0); },
            [&](const RationalTail& p) {
              add_pole(j, p.t, p.c, z0);
              j.c[0] -= p.c * p.t / (p.t * p.t + 1.0);
            },
            [&](const Density& d) {
              if (real && x >= d.lo && x <= d.hi)
                throw EvaluationAtSingularity("density support [" + format_number(d.lo) + "," +
                                              format_number(d.hi) + "] contains " + format_number(x));
              // s = mid - half cos(th) removes the endpoint behaviour of both weights
              const double mid = 0.5 * (d.lo + d.hi), half = 0.5 * (d.hi - d.lo);
              auto f = [&](double th) {
                const double s = mid - half * std::cos(th);
                const double ws = d.w(s) * half * std::sin(th);
                std::array<cplx, 5> r;
                const cplx inv = 1.0 / (s - z0);
                cplx p = inv;
                for (int k = 0; k < 4; ++k, p *= inv) r[k] = ws * p;
                r[4] = ws * s / (s * s + 1.0);
                return r;
              };
              std::array<cplx, 5> acc{};
              double th_split = -1.0;
              if (z0.real() > d.lo && z0.real() < d.hi) th_split = std::acos((mid - z0.real()) / half);
              auto add = [&](double a, double b) {
                auto r = integrate<5>(f, a, b, opt_.quad);
                for (int k = 0; k < 5; ++k) acc[k] += r[k];
              };
              if (th_split > 0.0) {
                add(0.0, th_split);
                add(th_split, kPi);
              } else {
                add(0.0, kPi);
              }
              for (int k = 0; k < 4; ++k) j.c[k] += acc[k];
              j.c[0] -= acc[4];
            },
            [&](const LogPrimitive& l) {
              if (real && x <= 0.0)
                throw BranchCutViolation("log evaluated on its cut at " + format_number(x));
              j.c[0] += l.c * std::log(z0);
              j.c[1] += l.c / z0;
              j.c[2] += -l.c / (2.0 * z0 * z0);
              j.c[3] += l.c / (3.0 * z0 * z0 * z0);
            },
            [&](const PowerPrimitive& p) {
              if (real && x <= 0.0)
                throw BranchCutViolation("power evaluated on its cut at " + format_number(x));
              cplx binom = 1.0;
              cplx zp = std::pow(z0, p.rho);
              for (int k = 0; k <= Jet::kOrder; ++k) {
                j.c[k] += p.c * binom * zp;
                binom *= (p.rho - k) / (k + 1.0);
                zp /= z0;
              }
            },
            [&](const UniformLine& u) {
              if (real) throw EvaluationAtSingularity("uniform line measure is singular on all of R");
              j.c[0] += cplx(0.0, u.c);
            }},
        term);
  }
  return j;
}

bool NevanlinnaFunction::is_singular_real(double x) const {
  for (const auto& term : terms_) {
    const bool s = std::visit(
        overloaded{[&](const PointMass& p) { return p.t == x; },
                   [&](const RationalTail& p) { return p.t == x; },
                   [&](const Density& d) { return x >= d.lo && x <= d.hi; },
                   [&](const LogPrimitive&) { return x <= 0.0; },
                   [&](const PowerPrimitive&) { return x <= 0.0; },
                   [&](const UniformLine&) { return true; }},
        term);
    if (s) return true;
  }
  return false;
}

double NevanlinnaFunction::distance_to_singularity(double x, double cap) const {
  double r = cap;
  for (const auto& term : terms_) {
    const double d = std::visit(
        overloaded{[&](const PointMass& p) { return std::abs(x - p.t); },
                   [&](const RationalTail& p) { return std::abs(x - p.t); },
                   [&](const Density& dd) {
                     return x < dd.lo ? dd.lo - x : (x > dd.hi ? x - dd.hi : 0.0);
                   },
                   [&](const LogPrimitive&) { return std::max(0.0, x); },
                   [&](const PowerPrimitive&) { return std::max(0.0, x); },
                   [&](const UniformLine&) { return 0.0; }},
        term);
    r = std::min(r, d);
  }
  return r;
}

NevanlinnaFunction NevanlinnaFunction::without_mass_at(double x, double& removed) const {
  removed = 0.0;
  double a = a_;
  std::vector<MeasureTerm> kept;
  for (const auto& term : terms_) {
    if (const auto* p = std::get_if<PointMass>(&term); p && same_point(p->t, x)) {
      removed += p->c;
      continue;
    }
    if (const auto* p = std::get_if<RationalTail>(&term); p && same_point(p->t, x)) {
      removed += p->c;
      a -= p->c * p->t / (p->t * p->t + 1.0);
      continue;
    }
    kept.push_back(term);
  }
  return NevanlinnaFunction(a, b_, std::move(kept), opt_);
}

std::vector<cplx> eval_m(const NevanlinnaFunction& m, cplx z, int order) {
  if (order < 0 || order > Jet::kOrder) throw ValidationError("derivative order must be 0..3");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ValidationError("evaluation point must be finite");
  return m.jet(z).derivatives(order);
}

ExtendedReal boundary_limit(const NevanlinnaFunction& m, double x, Side side) {
  const GapList gaps = holomorphy_gaps(m);
  const Gap* g = nullptr;
  for (const auto& gap : gaps) {
    const bool ok = side == Side::Right ? (gap.lo <= x && x < gap.hi) : (gap.lo < x && x <= gap.hi);
    if (ok) g = &gap;
  }
  if (!g)
    throw NotAGapEndpoint("no gap of the representation adjoins " + format_number(x) + " on the " +
                          (side == Side::Right ? "right" : "left"));
  const double room = side == Side::Right ? g->hi - x : x - g->lo;
  const double h0 = std::min(1.0, 0.5 * room);
  const double sgn = side == Side::Right ? 1.0 : -1.0;
  LimitOptions lo;
  lo.depth = m.options().boundary_depth;
  const LimitEstimate e =
      limit_as_h_to_zero([&](double h) { return m.jet(cplx(x + sgn * h, 0.0)).value(); }, h0, lo);
  return e.as_real();
}

double point_mass(const NevanlinnaFunction& m, double c) {
  double w = 0.0;
  for (const auto& term : m.terms()) {
    if (const auto* p = std::get_if<PointMass>(&term); p && same_point(p->t, c)) w += p->c;
    if (const auto* p = std::get_if<RationalTail>(&term); p && same_point(p->t, c)) w += p->c;
  }
  return w;
}

LimitEstimate point_mass_ray(const NevanlinnaFunction& m, double c) {
  return limit_as_h_to_zero(
      [&](double y) { return cplx(0.0, -y) * m.jet(cplx(c, y)).value(); }, 1.0);
}

double linear_coefficient(const NevanlinnaFunction& m) { return m.b(); }

LimitEstimate linear_coefficient_ray(const NevanlinnaFunction& m) {
  return limit_as_h_to_zero(
      [&](double h) {
        const cplx z(0.0, 1.0 / h);
        return m.jet(z).value() / z;
      },
      1.0);
}

double stieltjes_inversion(const NevanlinnaFunction& m, double t1, double t2, double tol) {
  if (!(t1 <= t2)) throw ValidationError("stieltjes_inversion needs t1 <= t2");
  if (t1 == t2) return 0.0;

  std::vector<double> cuts{t1, t2};
  auto inside = [&](double s) {
    if (s > t1 && s < t2) cuts.push_back(s);
  };
  for (const auto& term : m.terms()) {
    if (const auto* p = std::get_if<PointMass>(&term)) inside(p->t);
    if (const auto* p = std::get_if<RationalTail>(&term)) inside(p->t);
    if (const auto* d = std::get_if<Density>(&term)) {
      inside(d->lo);
      inside(d->hi);
    }
    if (std::holds_alternative<LogPrimitive>(term) || std::holds_alternative<PowerPrimitive>(term))
      inside(0.0);
  }
  std::sort(cuts.begin(), cuts.end());

  QuadratureOptions q = m.options().quad;
  q.abs_tol = std::min(q.abs_tol, 1e-3 * tol);
  auto at_eps = [&](double eps) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      auto r = integrate<1>(
          [&](double x) { return std::array<cplx, 1>{m.jet(cplx(x, eps)).value().imag()}; },
          cuts[i], cuts[i + 1], q);
      s += r[0].real();
    }
    return s / kPi;
  };

  // Richardson in eps with eps_k = eps0 2^-k, error expansion in integer powers
  const double eps0 = 1e-2 * (t2 - t1);
  constexpr int kLevels = 14;
  std::vector<std::vector<double>> R(kLevels);
  double prev = 0.0;
  for (int k = 0; k < kLevels; ++k) {
    R[k].resize(k + 1);
    R[k][0] = at_eps(eps0 * std::ldexp(1.0, -k));
    for (int j = 1; j <= k; ++j) {
      const double f = std::ldexp(1.0, j) - 1.0;
      R[k][j] = R[k][j - 1] + (R[k][j - 1] - R[k - 1][j - 1]) / f;
    }
    const double best = R[k][std::min(k, 3)];
    if (k >= 3 && std::abs(best - prev) <= tol) return best;
    prev = best;
  }
  throw QuadratureFailure("eps-extrapolation of the Stieltjes inversion did not stabilise on [" +
                          format_number(t1) + "," + format_number(t2) + "]");
}

GapList holomorphy_gaps(const NevanlinnaFunction& m) {
  std::vector<std::pair<double, double>> sing;
  for (const auto& term : m.terms()) {
    std::visit(overloaded{[&](const PointMass& p) { sing.emplace_back(p.t, p.t); },
                          [&](const RationalTail& p) { sing.emplace_back(p.t, p.t); },
                          [&](const Density& d) { sing.emplace_back(d.lo, d.hi); },
                          [&](const LogPrimitive&) { sing.emplace_back(-kInf, 0.0); },
                          [&](const PowerPrimitive&) { sing.emplace_back(-kInf, 0.0); },
                          [&](const UniformLine&) { sing.emplace_back(-kInf, kInf); }},
               term);
  }
  std::sort(sing.begin(), sing.end());
  GapList gaps;
  double covered = -kInf;
  for (const auto& [a, b] : sing) {
    if (a > covered) gaps.push_back({covered, a});
    covered = std::max(covered, b);
  }
  if (covered < kInf) gaps.push_back({covered, kInf});

  // numerical face of the gap property: M is real on the gap
  GapList verified;
  for (const auto& g : gaps) {
    const double x = std::isfinite(g.lo) && std::isfinite(g.hi) ? 0.5 * (g.lo + g.hi)
                     : std::isfinite(g.lo)                     ? g.lo + 1.0
                     : std::isfinite(g.hi)                     ? g.hi - 1.0
                                                               : 0.0;
    const double eps = 1e-9 * std::max(1.0, std::abs(x));
    const Jet jr = m.jet(cplx(x, 0.0));
    const double im = m.jet(cplx(x, eps)).value().imag();
    const double bound = 10.0 * eps * std::abs(jr.c[1]) + 1e-12 * std::max(1.0, std::abs(jr.c[0]));
    if (std::abs(jr.value().imag()) > 1e-12 * std::max(1.0, std::abs(jr.c[0])) || std::abs(im) > bound) {
      log().warn("interval ({}, {}) failed the gap check", g.lo, g.hi);
      continue;
    }
    verified.push_back(g);
  }
  return verified;
}

}  // namespace gznt
