#include "gznt/local.hpp"

#include <algorithm>
#include <cmath>

#include "gznt/errors.hpp"
#include "gznt/log.hpp"

namespace gznt {

std::string zero_class_name(ZeroClass c) {
  switch (c) {
    case ZeroClass::Case0:
      return "Case0";
    case ZeroClass::Case1:
      return "Case1";
    case ZeroClass::Case2a:
      return "Case2a";
    case ZeroClass::Case2b:
      return "Case2b";
    case ZeroClass::Case3:
      return "Case3";
  }
  return "?";
}

namespace {

constexpr double kFact[4] = {1, 1, 2, 6};

double deriv_scale(const Jet& j) {
  double s = 1.0;
  for (int k = 1; k <= 3; ++k) s = std::max(s, std::abs(j.derivative(k)));
  return s;
}

Jet holomorphic_zero_jet(const N1Function& q, double x0, double tau, const LocalOptions& opt) {
  if (!q.holomorphic_at(x0))
    throw NotHolomorphic("Q is not holomorphic at " + format_number(x0));
  const Jet j = q.jet(cplx(x0, 0.0));
  if (std::abs(j.c[0].real() - tau) > opt.zero_tol * std::max(1.0, std::abs(tau)))
    throw NotAZero("Q(" + format_number(x0) + ") - tau = " + format_number(j.c[0].real() - tau));
  return j;
}

// The n roots of s n!/Q^(n)(z0), i.e. the first-order displacements for Q - Q(z0) = s.
std::vector<cplx> nth_roots(cplx r, int n) {
  std::vector<cplx> out;
  const double mod = std::pow(std::abs(r), 1.0 / n);
  const double arg = std::arg(r);
  for (int k = 0; k < n; ++k) out.push_back(std::polar(mod, (arg + 2.0 * kPi * k) / n));
  return out;
}

std::string describe(double angle) {
  const double s = std::sin(angle), c = std::cos(angle);
  if (std::abs(s) < 1e-12) return c > 0 ? "real, right of x0" : "real, left of x0";
  return std::string(s > 0 ? "upper" : "lower") + " half-plane at angle " + format_number(angle);
}

}  // namespace

ZeroClass classify_real_zero(const N1Function& q, double x0, double tau, const LocalOptions& opt) {
  const Jet j = holomorphic_zero_jet(q, x0, tau, opt);
  const double t = opt.deriv_rel * deriv_scale(j);
  const double d1 = j.derivative(1).real(), d2 = j.derivative(2).real(), d3 = j.derivative(3).real();
  if (d1 > t) return ZeroClass::Case0;
  if (d1 < -t) return ZeroClass::Case1;
  if (d2 > t) return ZeroClass::Case2a;
  if (d2 < -t) return ZeroClass::Case2b;
  if (d3 > t) return ZeroClass::Case3;
  throw DerivativeSignatureMismatch("Q' = Q'' = 0 at " + format_number(x0) +
                                    " but Q''' = " + format_number(d3) + " is not positive");
}

BranchSolution::BranchSolution(std::shared_ptr<const N1Function> q, cplx z0, int n,
                               std::vector<cplx> phi1)
    : q_(std::move(q)), z0_(z0), n_(n), phi1_(std::move(phi1)) {
  q0_ = q_->jet(z0_).value();
}

cplx BranchSolution::map(int i, cplx w) const {
  if (i < 0 || i >= n_) throw ValidationError("branch index out of range");
  if (w == 0.0) return z0_;
  const cplx target = q0_ + std::pow(w, n_);
  cplx z = z0_ + phi1_[i] * w;
  for (int it = 0; it < 40; ++it) {
    const Jet j = q_->jet(z);
    if (j.c[1] == 0.0) break;
    const cplx step = (j.c[0] - target) / j.c[1];
    z -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

double BranchSolution::crit_residual() const {
  const cplx qn = q_->jet(z0_).derivative(n_);
  double r = 0.0;
  for (const cplx& p : phi1_) r = std::max(r, std::abs(std::pow(p, n_) * qn / kFact[n_] - 1.0));
  return r;
}

double BranchSolution::disc_residual(double r) const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < 16; ++k) {
      const cplx w = std::polar(r, 2.0 * kPi * (k + 0.5) / 16);
      const cplx z = map(i, w);
      const cplx lin = z0_ + phi1_[i] * w;
      if (std::abs(z - lin) > 0.5 * std::abs(phi1_[i] * w)) return kInf;  // slid onto another branch
      worst = std::max(worst, std::abs(q_->jet(z).value() - q0_ - std::pow(w, n_)));
    }
  return worst;
}

BranchSolution branch_solve(std::shared_ptr<const N1Function> q, cplx z0, int n,
                            const LocalOptions& opt) {
  if (n < 1 || n > 3) throw ValidationError("branch order n must be 1, 2 or 3");
  if (z0.imag() == 0.0 && !q->holomorphic_at(z0.real()))
    throw NotHolomorphic("Q is not holomorphic at " + format_number(z0.real()));
  const Jet j = q->jet(z0);
  const double t = opt.deriv_rel * deriv_scale(j);
  for (int i = 1; i < n; ++i)
    if (std::abs(j.derivative(i)) > t)
      throw DerivativeSignatureMismatch("Q^(" + std::to_string(i) + ")(z0) does not vanish");
  const cplx qn = j.derivative(n);
  if (std::abs(qn) <= t) throw DerivativeSignatureMismatch("Q^(n)(z0) vanishes");

  BranchSolution b(q, z0, n, nth_roots(kFact[n] / qn, n));
  const double r = 1e-3 * std::max(1.0, std::abs(z0)) / std::abs(b.first_coeffs()[0]);
  const double res = b.disc_residual(r);
  if (!(res <= 1e-10 * std::max(1.0, std::abs(b.map(0, 0.0)))))
    log().warn("branch_solve: residual {} on the validation disc", res);
  return b;
}

BranchSolution branch_solve(const N1Function& q, cplx z0, int n, const LocalOptions& opt) {
  return branch_solve(std::make_shared<const N1Function>(q), z0, n, opt);
}

LocalPathModel predict_local_path(const N1Function& q, double x0, double tau,
                                  const LocalOptions& opt) {
  LocalPathModel m;
  m.zero_class = classify_real_zero(q, x0, tau, opt);
  const Jet j = q.jet(cplx(x0, 0.0));
  int n = 1;
  switch (m.zero_class) {
    case ZeroClass::Case0:
      m.companions.push_back("x0 is a zero with Q'(x0) > 0; it is not the GZNT of Q_tau");
      return m;
    case ZeroClass::Case1:
      return m;
    case ZeroClass::Case2a:
    case ZeroClass::Case2b:
      n = 2;
      break;
    case ZeroClass::Case3:
      n = 3;
      break;
  }
  const cplx qn = j.derivative(n);
  // s = -1: tau below tau0 (approach), s = +1: tau above tau0 (departure)
  for (int s : {-1, 1}) {
    const auto roots = nth_roots(s * kFact[n] / qn, n);
    std::optional<double> gz;
    for (const cplx& r : roots) {
      const double a = std::arg(r);
      if (a > 1e-9 && a < kPi - 1e-9 && !gz) gz = a;
    }
    if (!gz) {
      // real on this side of tau0: the GZNT is the real root with Q' < 0
      for (const cplx& r : roots)
        if (std::abs(r.imag()) <= 1e-12 * std::abs(r)) {
          const double dq = (qn * std::pow(r, n - 1)).real();
          if (dq < 0) m.real_side = r.real() < 0 ? Side::Left : Side::Right;
        }
    }
    (s < 0 ? m.approach_angle : m.departure_angle) = gz;
    for (const cplx& r : roots) {
      const double a = std::arg(r);
      const bool is_gznt = gz ? std::abs(a - *gz) < 1e-12
                              : (m.real_side && std::abs(r.imag()) <= 1e-12 * std::abs(r) &&
                                 ((r.real() < 0) == (*m.real_side == Side::Left)));
      if (!is_gznt)
        m.companions.push_back(std::string(s < 0 ? "tau<tau0: " : "tau>tau0: ") + "zero " +
                               describe(a));
    }
  }
  return m;
}

bool real_segment_test(const N1Function& q, Side side) {
  const auto a = q.alpha();
  if (!a || a->imag() != 0.0)
    throw FormMismatch("real_segment_test needs a factor form with a finite real alpha");
  try {
    const ExtendedReal lim = boundary_limit(q.m(), a->real(), side);
    constexpr double zero_band = 1e-9;  // extrapolated 0 lands on either side
    return side == Side::Left ? lim.value() > zero_band : lim.value() < -zero_band;
  } catch (const NotAGapEndpoint& e) {
    log().info("real_segment_test: {}", e.what());
    return false;
  }
}

LaurentData laurent_expansion(const NevanlinnaFunction& m, double alpha) {
  double w = 0.0;
  const NevanlinnaFunction reg = m.without_mass_at(alpha, w);
  if (reg.is_singular_real(alpha))
    throw HigherOrderSingularity("M is not meromorphic with a simple pole at " +
                                 format_number(alpha));
  const Jet j = reg.jet(cplx(alpha, 0.0));
  LaurentData d;
  d.m_minus1 = -w;
  d.m0 = j.c[0].real();
  d.m1 = j.c[1].real();
  return d;
}

}  // namespace gznt
