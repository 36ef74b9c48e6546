#include "gznt/extended.hpp"

#include <cstdio>
#include <stdexcept>

#include "gznt/errors.hpp"

namespace gznt {

ExtendedPoint::ExtendedPoint(cplx z) : z_(z) {
  if (!(z.imag() >= 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ValidationError("ExtendedPoint requires a finite point with Im >= 0, got " +
                          format_number(z.real()) + "," + format_number(z.imag()));
}

cplx ExtendedPoint::value() const {
  if (!z_) throw std::logic_error("ExtendedPoint::value() on the point at infinity");
  return *z_;
}

std::string ExtendedPoint::to_string() const {
  if (!z_) return "inf";
  return format_number(z_->real()) + (z_->imag() < 0 ? "" : "+") + format_number(z_->imag()) + "i";
}

double chordal_distance(cplx z, cplx w) {
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

double chordal_distance(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  return chordal_distance(a.value(), b.value());
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace gznt
