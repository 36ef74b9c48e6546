#include "gznt/rational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gznt/errors.hpp"

namespace gznt {

namespace {

void check_pair(cplx a, cplx b) {
  if (a.imag() < 0.0 || b.imag() < 0.0)
    throw ValidationError("alpha and beta need Im >= 0");
  if (a == b) throw DegenerateInput("alpha = beta");
}

double norm2(cplx z) { return std::norm(z); }

}  // namespace

N1Function rational_q(cplx alpha, cplx beta) {
  check_pair(alpha, beta);
  return make_q(BothFinite{alpha, beta}, NevanlinnaFunction(1.0, 0.0, {}), "rational");
}

CircleGeometry circle_of(cplx a, cplx b) {
  check_pair(a, b);
  CircleGeometry g;
  if (a.real() == b.real()) {
    g.kind = CircleGeometry::Kind::VerticalLine;
    g.x = a.real();
    g.p_single = a.real();
    return g;
  }
  g.center_x = (norm2(b) - norm2(a)) / (2.0 * (b.real() - a.real()));
  g.radius = std::abs(a - g.center_x);
  g.p_left = g.center_x - g.radius;
  g.p_right = g.center_x + g.radius;
  return g;
}

double sign_poly(cplx a, cplx b, double x) {
  return (a.real() - b.real()) * x * x + (norm2(b) - norm2(a)) * x + norm2(a) * b.real() -
         norm2(b) * a.real();
}

double zwei_residual(cplx a, cplx b, cplx z) {
  const double t1 = (a.real() - b.real()) * norm2(z);
  const double t2 = (norm2(b) - norm2(a)) * z.real();
  const double t3 = norm2(a) * b.real() - norm2(b) * a.real();
  const double s = std::abs(t1) + std::abs(t2) + std::abs(t3);
  return s == 0.0 ? 0.0 : std::abs(t1 + t2 + t3) / s;
}

std::string rational_case_name(RationalCase c) {
  switch (c) {
    case RationalCase::Case1:
      return "Case1";
    case RationalCase::Case2:
      return "Case2";
    case RationalCase::Case3a:
      return "Case3a";
    case RationalCase::Case3b:
      return "Case3b";
  }
  return "?";
}

std::string piece_name(PathPiece::Kind k) {
  switch (k) {
    case PathPiece::Kind::Arc:
      return "arc";
    case PathPiece::Kind::Segment:
      return "segment";
    case PathPiece::Kind::LeftHalfLine:
      return "left_half_line";
    case PathPiece::Kind::RightHalfLine:
      return "right_half_line";
    case PathPiece::Kind::VerticalRay:
      return "vertical_ray";
    case PathPiece::Kind::Infinity:
      return "infinity";
  }
  return "?";
}

ClosedFormPath closed_form_path(cplx a, cplx b) {
  const CircleGeometry g = circle_of(a, b);
  const N1Function q = rational_q(a, b);
  // dz/dtau = 1/Q'
  auto velocity = [&](cplx z) { return 1.0 / q.jet(z).c[1]; };

  ClosedFormPath out{RationalCase::Case1, g, {}};
  if (g.kind == CircleGeometry::Kind::Circle) {
    out.kind = a.real() > b.real() ? RationalCase::Case1 : RationalCase::Case2;
    double ang = kPi / 2;
    cplx z = g.center_x + std::polar(g.radius, ang);
    if (std::abs(z - b) < 1e-6 * g.radius) z = g.center_x + std::polar(g.radius, ang = kPi / 3);
    const cplx ccw = cplx(0.0, 1.0) * (z - g.center_x);
    const int dir = (velocity(z) * std::conj(ccw)).real() > 0 ? 1 : -1;
    out.pieces.push_back({PathPiece::Kind::Arc, *g.p_left, *g.p_right, dir});
    if (out.kind == RationalCase::Case1) {
      out.pieces.push_back({PathPiece::Kind::Segment, *g.p_left, *g.p_right, -1});
    } else {
      out.pieces.push_back({PathPiece::Kind::LeftHalfLine, -kInf, *g.p_left, -1});
      out.pieces.push_back({PathPiece::Kind::RightHalfLine, *g.p_right, kInf, -1});
      out.pieces.push_back({PathPiece::Kind::Infinity, 0.0, 0.0, 0});
    }
  } else {
    out.kind = a.imag() > b.imag() ? RationalCase::Case3a : RationalCase::Case3b;
    const cplx z = a.imag() > 0.0 ? a : cplx(g.x, 0.5 * b.imag());
    const int dir = velocity(z).imag() > 0 ? 1 : -1;
    out.pieces.push_back({PathPiece::Kind::VerticalRay, g.x, g.x, dir});
    if (out.kind == RationalCase::Case3a)
      out.pieces.push_back({PathPiece::Kind::RightHalfLine, g.x, kInf, -1});
    else
      out.pieces.push_back({PathPiece::Kind::LeftHalfLine, -kInf, g.x, -1});
    out.pieces.push_back({PathPiece::Kind::Infinity, 0.0, 0.0, 0});
  }
  return out;
}

bool ClosedFormPath::contains(const ExtendedPoint& p, double tol) const {
  const bool has_inf = std::any_of(pieces.begin(), pieces.end(),
                                   [](const PathPiece& q) { return q.kind == PathPiece::Kind::Infinity; });
  if (!p.is_finite()) return has_inf;
  const cplx z = p.value();
  const double s = tol * std::max(1.0, std::abs(z));
  for (const auto& pc : pieces) {
    switch (pc.kind) {
      case PathPiece::Kind::Arc:
        if (z.imag() >= -s && std::abs(std::abs(z - circle.center_x) - circle.radius) <= s) return true;
        break;
      case PathPiece::Kind::VerticalRay:
        if (z.imag() >= -s && std::abs(z.real() - pc.lo) <= s) return true;
        break;
      case PathPiece::Kind::Segment:
      case PathPiece::Kind::LeftHalfLine:
      case PathPiece::Kind::RightHalfLine:
        if (std::abs(z.imag()) <= s && z.real() >= pc.lo - s && z.real() <= pc.hi + s) return true;
        break;
      case PathPiece::Kind::Infinity:
        if (chordal_distance(p, ExtendedPoint::infinity()) <= tol) return true;
        break;
    }
  }
  return false;
}

std::string ClosedFormPath::describe() const {
  std::ostringstream os;
  os << rational_case_name(kind) << ":";
  for (const auto& pc : pieces) {
    os << " " << piece_name(pc.kind);
    switch (pc.kind) {
      case PathPiece::Kind::Arc:
        os << "(center=" << format_number(circle.center_x) << ",radius=" << format_number(circle.radius) << ")";
        break;
      case PathPiece::Kind::VerticalRay:
        os << "(x=" << format_number(pc.lo) << ")";
        break;
      case PathPiece::Kind::Infinity:
        break;
      default:
        os << "[" << format_number(pc.lo) << "," << format_number(pc.hi) << "]";
    }
    if (pc.direction) os << (pc.direction > 0 ? "+" : "-");
  }
  return os.str();
}

bool infinity_membership(cplx a, cplx b) {
  check_pair(a, b);
  return a.real() <= b.real();
}

InfinityCheck check_infinity_membership(cplx a, cplx b, const LocatorConfig& cfg) {
  InfinityCheck c;
  c.formula = infinity_membership(a, b);
  c.expected = b.real() - a.real();
  const N1Function q = rational_q(a, b);
  // z Q_1 = z (Q - 1) / (1 + Q), and Q -> 1
  const PointTest t = test_infinity(q, 1.0, cfg);
  c.limit = t.limit.finite() ? t.limit.value.real() / 2.0 : kInf;
  c.located = locate(q, TauParameter::from_tau(1.0), cfg).regime == Regime::Infinity;
  return c;
}

}  // namespace gznt
