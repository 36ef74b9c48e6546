#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gznt/nevanlinna.hpp"

namespace gznt {

/// R(z) = (z-alpha)(z-conj alpha) / ((z-beta)(z-conj beta))
struct BothFinite {
  cplx alpha;
  cplx beta;
};
/// R(z) = 1 / ((z-beta)(z-conj beta))
struct ZeroAtInfinity {
  cplx beta;
};
/// R(z) = (z-alpha)(z-conj alpha)
struct PoleAtInfinity {
  cplx alpha;
};
using FactorForm = std::variant<BothFinite, ZeroAtInfinity, PoleAtInfinity>;

std::string factor_name(const FactorForm& f);

/// Q = R M.
///
/// When alpha is real and M carries a point mass w at alpha the product is
/// evaluated as (z-alpha)^2 S M_reg - w (z-alpha) S so that Q stays
/// holomorphic at alpha (e.g. -z = z^2 (-1/z)).
class N1Function {
 public:
  N1Function(FactorForm factor, NevanlinnaFunction m, std::string label = {});

  const FactorForm& factor() const { return factor_; }
  const NevanlinnaFunction& m() const { return m_; }
  const std::string& label() const { return label_; }

  /// GZNT / GPNT at tau = 0; nullopt is the point at infinity.
  std::optional<cplx> alpha() const;
  std::optional<cplx> beta() const;

  /// Jet of Q at z; Im z < 0 by reflection.
  Jet jet(cplx z) const;

  /// Open real intervals where Q is holomorphic.
  const GapList& gaps() const { return gaps_; }
  bool holomorphic_at(double x) const;
  /// Finite endpoints of the gaps: where Q may have a singular GZNT or GPNT.
  const std::vector<double>& boundary_points() const { return boundary_; }
  /// Length scale of the data (>= 2).
  double scale() const { return scale_; }

  /// M with the cancelled mass at alpha removed, and that mass.
  const NevanlinnaFunction& m_regular() const { return m_reg_; }
  double alpha_mass() const { return w_alpha_; }

 private:
  Jet jet_upper(cplx z) const;

  FactorForm factor_;
  NevanlinnaFunction m_;
  NevanlinnaFunction m_reg_;
  double w_alpha_ = 0.0;
  std::string label_;
  GapList gaps_;
  std::vector<double> boundary_;
  double scale_ = 2.0;
};

/// Validating constructor: DegenerateFactor, ZeroFunction, ValidationError on a
/// kernel with more than one (or no) negative square on the seeded sample.
N1Function make_q(FactorForm factor, NevanlinnaFunction m, std::string label = {});

/// Number of negative eigenvalues of the Nevanlinna kernel at the given points.
int kernel_negative_squares(const std::vector<cplx>& values, const std::vector<cplx>& points);

/// [Q, Q', ..., Q^(order)] at z.
std::vector<cplx> eval_q(const N1Function& q, cplx z, int order);

/// theta in (-pi/2, pi/2], tau = tan theta, theta = pi/2 is tau = inf.
class TauParameter {
 public:
  static TauParameter from_tau(double tau);
  static TauParameter from_theta(double theta);
  static TauParameter infinity() { return from_tau(kInf); }

  double theta() const { return theta_; }
  double tau() const { return tau_; }
  bool is_infinity() const { return std::isinf(tau_); }
  std::string to_string() const { return format_number(tau_); }

 private:
  TauParameter(double th, double t) : theta_(th), tau_(t) {}
  double theta_;
  double tau_;
};

/// G = (a Q + b) / (c Q + d) with real coefficients and ad - bc > 0.
class FamilyMember {
 public:
  FamilyMember(std::shared_ptr<const N1Function> q, double a, double b, double c, double d);

  const N1Function& q() const { return *q_; }
  std::shared_ptr<const N1Function> q_ptr() const { return q_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double det() const { return a_ * d_ - b_ * c_; }

  /// Throws PoleOfFamily where c Q + d = 0.
  Jet jet(cplx z) const;
  cplx value(cplx z) const { return jet(z).value(); }
  /// G' = det Q' / (c Q + d)^2
  cplx derivative_identity(cplx z) const;

  /// (G)_rho = (G - rho) / (1 + rho G); rho = inf gives -1/G.
  FamilyMember then(const TauParameter& rho) const;
  /// -1/G
  FamilyMember reciprocal() const;

 private:
  std::shared_ptr<const N1Function> q_;
  double a_, b_, c_, d_;
};

/// Q_tau = (Q - tau)/(1 + tau Q), Q_inf = -1/Q.
FamilyMember transform(const N1Function& q, const TauParameter& tau);
FamilyMember transform(std::shared_ptr<const N1Function> q, const TauParameter& tau);
/// Q - tau (finite tau), used for the zero tests.
FamilyMember shifted(std::shared_ptr<const N1Function> q, double tau);

}  // namespace gznt
