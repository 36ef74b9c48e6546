#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gznt/locator.hpp"

namespace gznt {

/// Q = (z-alpha)(z-conj alpha) / ((z-beta)(z-conj beta)) with M = 1.
N1Function rational_q(cplx alpha, cplx beta);

struct CircleGeometry {
  enum class Kind { Circle, VerticalLine };
  Kind kind = Kind::Circle;
  double center_x = 0.0;
  double radius = 0.0;
  double x = 0.0;  // VerticalLine
  std::optional<double> p_left;
  std::optional<double> p_right;
  std::optional<double> p_single;
};

CircleGeometry circle_of(cplx alpha, cplx beta);

/// (Re a - Re b) x^2 + (|b|^2 - |a|^2) x + |a|^2 Re b - |b|^2 Re a
double sign_poly(cplx alpha, cplx beta, double x);

/// Same polynomial with x^2 -> |z|^2, divided by the sum of the term magnitudes.
double zwei_residual(cplx alpha, cplx beta, cplx z);

enum class RationalCase { Case1, Case2, Case3a, Case3b };
std::string rational_case_name(RationalCase c);

struct PathPiece {
  enum class Kind { Arc, Segment, LeftHalfLine, RightHalfLine, VerticalRay, Infinity };
  Kind kind;
  double lo = 0.0;  // Segment [lo, hi], LeftHalfLine (-inf, hi], RightHalfLine [lo, inf), VerticalRay x = lo
  double hi = 0.0;
  // +1: counterclockwise on arcs, upward on rays, rightward on the real line, as tau increases
  int direction = 0;
};
std::string piece_name(PathPiece::Kind k);

struct ClosedFormPath {
  RationalCase kind;
  CircleGeometry circle;
  std::vector<PathPiece> pieces;

  bool contains(const ExtendedPoint& p, double tol) const;
  std::string describe() const;
};

ClosedFormPath closed_form_path(cplx alpha, cplx beta);

/// Re alpha <= Re beta
bool infinity_membership(cplx alpha, cplx beta);

struct InfinityCheck {
  bool formula = false;
  bool located = false;     // GZNT of Q_1 is infinity
  double limit = 0.0;       // measured lim z Q_1(z)
  double expected = 0.0;    // Re beta - Re alpha
};
InfinityCheck check_infinity_membership(cplx alpha, cplx beta, const LocatorConfig& cfg);

}  // namespace gznt
