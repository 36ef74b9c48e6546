#include "gznt/jet.hpp"

#include <stdexcept>

namespace gznt {

namespace {
constexpr std::array<double, 4> kFactorial{1.0, 1.0, 2.0, 6.0};
}

cplx Jet::derivative(int k) const {
  if (k < 0 || k > kOrder) throw std::out_of_range("Jet::derivative order must be 0..3");
  return c[k] * kFactorial[k];
}

std::vector<cplx> Jet::derivatives(int order) const {
  if (order < 0 || order > kOrder) throw std::out_of_range("derivative order must be 0..3");
  std::vector<cplx> out(order + 1);
  for (int k = 0; k <= order; ++k) out[k] = derivative(k);
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  for (int k = 0; k <= kOrder; ++k) c[k] += o.c[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (int k = 0; k <= kOrder; ++k) c[k] -= o.c[k];
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& v : c) v *= s;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator-(const Jet& a) {
  Jet r = a;
  r *= -1.0;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= Jet::kOrder; ++i)
    for (int j = 0; i + j <= Jet::kOrder; ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

Jet operator*(cplx s, Jet a) { return a *= s; }

Jet operator/(const Jet& a, const Jet& b) {
  Jet q;
  for (int k = 0; k <= Jet::kOrder; ++k) {
    cplx s = a.c[k];
    for (int j = 1; j <= k; ++j) s -= b.c[j] * q.c[k - j];
    q.c[k] = s / b.c[0];
  }
  return q;
}

Jet conj(const Jet& a) {
  Jet r;
  for (int k = 0; k <= Jet::kOrder; ++k) r.c[k] = std::conj(a.c[k]);
  return r;
}

}  // namespace gznt
