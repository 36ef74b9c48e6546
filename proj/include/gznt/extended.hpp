#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

namespace gznt {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;

enum class Side { Left, Right };

/// A point of [-inf, +inf].
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : v_(v) {}  // NOLINT: implicit on purpose

  static constexpr ExtendedReal pos_inf() { return ExtendedReal(kInf); }
  static constexpr ExtendedReal neg_inf() { return ExtendedReal(-kInf); }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_pos_inf() const { return v_ == kInf; }
  bool is_neg_inf() const { return v_ == -kInf; }
  constexpr double value() const { return v_; }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
  friend bool operator<(ExtendedReal a, ExtendedReal b) { return a.v_ < b.v_; }

 private:
  double v_ = 0.0;
};

/// A point of C+ u R u {inf}: the codomain of the GZNT / GPNT paths.
class ExtendedPoint {
 public:
  /// Finite point. A negative imaginary part is rejected.
  explicit ExtendedPoint(cplx z);
  static ExtendedPoint infinity() { return ExtendedPoint(); }

  bool is_infinity() const { return !z_.has_value(); }
  bool is_finite() const { return z_.has_value(); }
  /// Throws std::logic_error for the point at infinity.
  cplx value() const;

  std::string to_string() const;

 private:
  ExtendedPoint() = default;
  std::optional<cplx> z_;
};

/// Distance on the Riemann sphere; finite when either argument is infinite.
double chordal_distance(cplx z, cplx w);
double chordal_distance(const ExtendedPoint& a, const ExtendedPoint& b);

/// Format a double with 17 significant digits; "inf" / "-inf" for infinities.
std::string format_number(double x);

}  // namespace gznt
