#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gznt/n1.hpp"

namespace gznt {

enum class ZeroClass { Case0, Case1, Case2a, Case2b, Case3 };
std::string zero_class_name(ZeroClass c);

struct LocalOptions {
  double zero_tol = 1e-9;    // |Q(x0) - tau| relative to max(1, |tau|)
  double deriv_rel = 1e-8;   // derivative-zero band, times the derivative scale
};

/// Sign classification of a holomorphic real zero of Q - tau.
ZeroClass classify_real_zero(const N1Function& q, double x0, double tau = 0.0,
                             const LocalOptions& opt = {});

/// Branches of Q(z) - Q(z0) = w^n near z0.
class BranchSolution {
 public:
  BranchSolution(std::shared_ptr<const N1Function> q, cplx z0, int n, std::vector<cplx> phi1);

  int n() const { return n_; }
  cplx z0() const { return z0_; }
  const std::vector<cplx>& first_coeffs() const { return phi1_; }
  /// i-th local inverse at w, Newton-refined from z0 + phi1_i w.
  cplx map(int i, cplx w) const;
  /// max_i |phi1_i^n Q^(n)(z0)/n! - 1|
  double crit_residual() const;
  /// max over branches and a circle of radius r of |Q(phi(w)) - Q(z0) - w^n| / |w|^n
  double disc_residual(double r) const;

 private:
  std::shared_ptr<const N1Function> q_;
  cplx z0_;
  int n_;
  std::vector<cplx> phi1_;
  cplx q0_;
};

BranchSolution branch_solve(std::shared_ptr<const N1Function> q, cplx z0, int n,
                            const LocalOptions& opt = {});
BranchSolution branch_solve(const N1Function& q, cplx z0, int n, const LocalOptions& opt = {});

struct LocalPathModel {
  ZeroClass zero_class = ZeroClass::Case1;
  std::optional<double> approach_angle;   // arg(alpha(tau) - x0) as tau increases to tau0
  std::optional<double> departure_angle;  // as tau decreases to tau0
  std::optional<Side> real_side;          // side where alpha(tau) is real; none means both (Case1)
  std::vector<std::string> companions;
};

LocalPathModel predict_local_path(const N1Function& q, double x0, double tau = 0.0,
                                  const LocalOptions& opt = {});

/// Theorem-level test: does a real interval on the given side of alpha belong to the path?
bool real_segment_test(const N1Function& q, Side side);

struct LaurentData {
  double m_minus1 = 0.0;
  double m0 = 0.0;
  double m1 = 0.0;
};

LaurentData laurent_expansion(const NevanlinnaFunction& m, double alpha);

}  // namespace gznt
