#pragma once

#include <array>
#include <vector>

#include "gznt/extended.hpp"

namespace gznt {

/// Truncated Taylor series f(z0 + h) = c0 + c1 h + c2 h^2 + c3 h^3.
///
/// All evaluators in the library produce jets; derivatives up to third order
/// are read off as k! * c_k.
struct Jet {
  static constexpr int kOrder = 3;
  std::array<cplx, kOrder + 1> c{};

  static Jet constant(cplx v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  /// The identity function expanded at z0.
  static Jet variable(cplx z0) {
    Jet j;
    j.c[0] = z0;
    j.c[1] = 1.0;
    return j;
  }

  cplx value() const { return c[0]; }
  cplx derivative(int k) const;
  /// [f, f', ..., f^(order)]
  std::vector<cplx> derivatives(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(cplx s);
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(cplx s, Jet a);
/// Series quotient; the caller guarantees b.c[0] != 0.
Jet operator/(const Jet& a, const Jet& b);
Jet conj(const Jet& a);

}  // namespace gznt
