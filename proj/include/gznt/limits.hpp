#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gznt/extended.hpp"

namespace gznt {

/// Outcome of extrapolating a sequence f(h_k), h_k = h0 * 2^-k, to h -> 0.
struct LimitEstimate {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  cplx value{};      // Finite: the limit. Infinite: unit direction of growth.
  double error = 0;  // Finite only.

  bool finite() const { return kind == Kind::Finite; }
  /// Real reading of the limit; an infinite limit maps to -inf only when it
  /// grows along the negative real axis.
  ExtendedReal as_real() const;
  std::string to_string() const;
};

struct LimitOptions {
  int depth = 22;         // number of halvings
  double rel_noise = 1e-13;
  double accept = 1e-7;   // relative error accepted for a finite verdict
};

/// Richardson-accelerated limit of the samples v[k] = f(h0 2^-k).
/// Throws LimitUnstable when neither convergence nor divergence is evident.
LimitEstimate extrapolate_limit(const std::vector<cplx>& v, const LimitOptions& opt = {});

/// Samples f at h0 * 2^-k for k = 0..depth and extrapolates.
LimitEstimate limit_as_h_to_zero(const std::function<cplx(double)>& f, double h0,
                                 const LimitOptions& opt = {});

}  // namespace gznt
