#include "gznt/n1.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "gznt/errors.hpp"
#include "gznt/log.hpp"

namespace gznt {

namespace {

bool is_real(cplx z) { return z.imag() == 0.0; }

void check_upper(cplx z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ValidationError(std::string(what) + " must be finite");
  if (z.imag() < 0.0)
    throw ValidationError(std::string(what) + " must lie in the closed upper half plane");
}

Jet quadratic(cplx z, cplx r) {
  const Jet x = Jet::variable(z);
  return (x - Jet::constant(r)) * (x - Jet::constant(std::conj(r)));
}

}  // namespace

std::string factor_name(const FactorForm& f) {
  switch (f.index()) {
    case 0:
      return "both_finite";
    case 1:
      return "zero_at_inf";
    default:
      return "pole_at_inf";
  }
}

N1Function::N1Function(FactorForm factor, NevanlinnaFunction m, std::string label)
    : factor_(factor), m_(std::move(m)), m_reg_(m_), label_(std::move(label)) {
  const auto al = alpha();
  const auto be = beta();
  if (al) check_upper(*al, "alpha");
  if (be) check_upper(*be, "beta");

  if (al && is_real(*al)) {
    double w = 0.0;
    NevanlinnaFunction reg = m_.without_mass_at(al->real(), w);
    if (w > 0.0) {
      m_reg_ = std::move(reg);
      w_alpha_ = w;
    }
  }

  double s = 1.0;
  if (al) s = std::max(s, std::abs(*al));
  if (be) s = std::max(s, std::abs(*be));
  for (const auto& t : m_.terms()) {
    if (const auto* p = std::get_if<PointMass>(&t)) s = std::max(s, std::abs(p->t));
    if (const auto* p = std::get_if<RationalTail>(&t)) s = std::max(s, std::abs(p->t));
    if (const auto* d = std::get_if<Density>(&t)) s = std::max({s, std::abs(d->lo), std::abs(d->hi)});
  }
  scale_ = 2.0 * s;

  for (const auto& g : holomorphy_gaps(m_reg_)) {
    if (be && is_real(*be) && g.contains(be->real())) {
      gaps_.push_back({g.lo, be->real()});
      gaps_.push_back({be->real(), g.hi});
    } else {
      gaps_.push_back(g);
    }
  }
  for (const auto& g : gaps_) {
    if (std::isfinite(g.lo)) boundary_.push_back(g.lo);
    if (std::isfinite(g.hi)) boundary_.push_back(g.hi);
  }
  if (be && is_real(*be)) boundary_.push_back(be->real());
  if (al && is_real(*al) && !holomorphic_at(al->real())) boundary_.push_back(al->real());
  std::sort(boundary_.begin(), boundary_.end());
  boundary_.erase(std::unique(boundary_.begin(), boundary_.end()), boundary_.end());
}

std::optional<cplx> N1Function::alpha() const {
  if (const auto* f = std::get_if<BothFinite>(&factor_)) return f->alpha;
  if (const auto* f = std::get_if<PoleAtInfinity>(&factor_)) return f->alpha;
  return std::nullopt;
}

std::optional<cplx> N1Function::beta() const {
  if (const auto* f = std::get_if<BothFinite>(&factor_)) return f->beta;
  if (const auto* f = std::get_if<ZeroAtInfinity>(&factor_)) return f->beta;
  return std::nullopt;
}

bool N1Function::holomorphic_at(double x) const {
  return std::any_of(gaps_.begin(), gaps_.end(), [x](const Gap& g) { return g.contains(x); });
}

Jet N1Function::jet(cplx z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ValidationError("evaluation point must be finite");
  if (z.imag() < 0.0) return conj(jet_upper(std::conj(z)));
  return jet_upper(z);
}

Jet N1Function::jet_upper(cplx z) const {
  Jet s = Jet::constant(1.0);
  if (const auto be = beta()) {
    const Jet den = quadratic(z, *be);
    if (den.c[0] == 0.0)
      throw EvaluationAtSingularity("evaluation at the pole " + format_number(be->real()) + "," +
                                    format_number(be->imag()) + " of the rational factor");
    s = Jet::constant(1.0) / den;
  }
  const auto al = alpha();
  if (w_alpha_ > 0.0) {
    const Jet x = Jet::variable(z) - Jet::constant(al->real());
    return x * x * s * m_reg_.jet(z) - w_alpha_ * (x * s);
  }
  Jet p = Jet::constant(1.0);
  if (al) p = quadratic(z, *al);
  return p * s * m_.jet(z);
}

int kernel_negative_squares(const std::vector<cplx>& values, const std::vector<cplx>& points) {
  const int n = static_cast<int>(points.size());
  Eigen::MatrixXcd H(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      H(i, j) = (values[i] - std::conj(values[j])) / (points[i] - std::conj(points[j]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double tol = 1e-9 * ev.cwiseAbs().maxCoeff();
  int neg = 0;
  for (int i = 0; i < n; ++i)
    if (ev(i) < -tol) ++neg;
  return neg;
}

N1Function make_q(FactorForm factor, NevanlinnaFunction m, std::string label) {
  if (const auto* f = std::get_if<BothFinite>(&factor); f && std::abs(f->alpha - f->beta) == 0.0)
    throw DegenerateFactor("alpha and beta coincide");
  if (m.is_trivially_zero()) throw ZeroFunction("M vanishes identically");

  N1Function q(factor, std::move(m), std::move(label));

  std::mt19937_64 rng(0x6a6e7431ULL);
  const double L = q.scale();
  std::uniform_real_distribution<double> ux(-L, L), uy(0.02 * L, L);
  bool nonzero = false;
  int worst = 0, ones = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<cplx> pts, vals;
    try {
      for (int k = 0; k < 3; ++k) {
        const cplx z(ux(rng), uy(rng));
        pts.push_back(z);
        vals.push_back(q.m().jet(z).value());
        if (vals.back() != 0.0) nonzero = true;
        vals.back() = q.jet(z).value();
      }
    } catch (const EvaluationAtSingularity&) {
      continue;
    }
    const int n2 = kernel_negative_squares({vals[0], vals[1]}, {pts[0], pts[1]});
    const int n3 = kernel_negative_squares(vals, pts);
    worst = std::max({worst, n2, n3});
    if (n2 == 1 || n3 == 1) ++ones;
  }
  if (!nonzero) throw ZeroFunction("M vanishes on the sample grid");
  if (worst > 1)
    throw ValidationError("sampled Nevanlinna kernel has " + std::to_string(worst) +
                          " negative squares; Q is not in the one-negative-square class");
  if (ones == 0)
    throw ValidationError("sampled Nevanlinna kernel has no negative square");
  log().debug("make_q: kernel check passed ({} samples with one negative square)", ones);
  return q;
}

std::vector<cplx> eval_q(const N1Function& q, cplx z, int order) {
  if (order < 0 || order > Jet::kOrder) throw ValidationError("derivative order must be 0..3");
  return q.jet(z).derivatives(order);
}

TauParameter TauParameter::from_tau(double tau) {
  if (std::isnan(tau)) throw ValidationError("tau is NaN");
  if (std::isinf(tau)) return TauParameter(kPi / 2, kInf);
  return TauParameter(std::atan(tau), tau);
}

TauParameter TauParameter::from_theta(double theta) {
  if (!(theta > -kPi / 2 && theta <= kPi / 2 + 1e-15))
    throw ValidationError("theta must lie in (-pi/2, pi/2], got " + format_number(theta));
  if (theta >= kPi / 2 - 1e-15) return TauParameter(kPi / 2, kInf);
  return TauParameter(theta, std::tan(theta));
}

FamilyMember::FamilyMember(std::shared_ptr<const N1Function> q, double a, double b, double c,
                           double d)
    : q_(std::move(q)), a_(a), b_(b), c_(c), d_(d) {
  const double s = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
  if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("degenerate Moebius coefficients");
  a_ /= s;
  b_ /= s;
  c_ /= s;
  d_ /= s;
  if (!(det() > 0.0)) throw ValidationError("Moebius map must have positive determinant");
}

Jet FamilyMember::jet(cplx z) const {
  const Jet qj = q_->jet(z);
  Jet num = a_ * qj;
  num.c[0] += b_;
  Jet den = c_ * qj;
  den.c[0] += d_;
  if (den.c[0] == 0.0)
    throw PoleOfFamily("1 + tau Q vanishes at " + format_number(z.real()) + "," +
                       format_number(z.imag()));
  return num / den;
}

cplx FamilyMember::derivative_identity(cplx z) const {
  const Jet qj = q_->jet(z);
  const cplx den = c_ * qj.c[0] + d_;
  if (den == 0.0) throw PoleOfFamily("pole of the family member");
  return det() * qj.c[1] / (den * den);
}

FamilyMember FamilyMember::then(const TauParameter& rho) const {
  if (rho.is_infinity()) return reciprocal();
  const double r = rho.tau();
  // [[1, -r], [r, 1]] * [[a, b], [c, d]]
  return FamilyMember(q_, a_ - r * c_, b_ - r * d_, r * a_ + c_, r * b_ + d_);
}

FamilyMember FamilyMember::reciprocal() const { return FamilyMember(q_, -c_, -d_, a_, b_); }

FamilyMember transform(std::shared_ptr<const N1Function> q, const TauParameter& tau) {
  if (tau.is_infinity()) return FamilyMember(std::move(q), 0.0, -1.0, 1.0, 0.0);
  const double t = tau.tau();
  return FamilyMember(std::move(q), 1.0, -t, t, 1.0);
}

FamilyMember transform(const N1Function& q, const TauParameter& tau) {
  return transform(std::make_shared<const N1Function>(q), tau);
}

FamilyMember shifted(std::shared_ptr<const N1Function> q, double tau) {
  return FamilyMember(std::move(q), 1.0, -tau, 0.0, 1.0);
}

}  // namespace gznt
