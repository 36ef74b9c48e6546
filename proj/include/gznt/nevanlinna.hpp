#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gznt/extended.hpp"
#include "gznt/jet.hpp"
#include "gznt/limits.hpp"
#include "gznt/quadrature.hpp"

namespace gznt {

/// c / (t - z)
struct PointMass {
  double t = 0.0;
  double c = 1.0;
};

/// c (1/(t - z) - t/(t^2 + 1))
struct RationalTail {
  double t = 0.0;
  double c = 1.0;
};

enum class DensityWeight { Uniform, Semicircle };

/// int_lo^hi (1/(s - z) - s/(s^2 + 1)) w(s) ds, w = scale * shape(s)
struct Density {
  double lo = 0.0;
  double hi = 1.0;
  DensityWeight weight = DensityWeight::Uniform;
  double scale = 1.0;

  double w(double s) const;
};

/// c log z, cut on (-inf, 0]
struct LogPrimitive {
  double c = 1.0;
};

/// c z^rho, 0 < rho < 1, positive on (0, inf)
struct PowerPrimitive {
  double rho = 0.5;
  double c = 1.0;
};

/// i c on C+ (Lebesgue measure c/pi on the whole line)
struct UniformLine {
  double c = 1.0;
};

using MeasureTerm =
    std::variant<PointMass, RationalTail, Density, LogPrimitive, PowerPrimitive, UniformLine>;

std::string term_name(const MeasureTerm& t);
/// Throws ValidationError on a non-positive weight, rho outside (0,1) or lo >= hi.
void validate_term(const MeasureTerm& t);

/// Open interval (lo, hi); ends may be infinite.
struct Gap {
  double lo = -kInf;
  double hi = kInf;
  bool contains(double x) const { return lo < x && x < hi; }
};
using GapList = std::vector<Gap>;

struct NevanlinnaOptions {
  QuadratureOptions quad{};
  int boundary_depth = 40;
};

/// M(z) = a + b z + sum of terms. Immutable once built.
class NevanlinnaFunction {
 public:
  NevanlinnaFunction() = default;
  NevanlinnaFunction(double a, double b, std::vector<MeasureTerm> terms,
                     NevanlinnaOptions opt = {});

  double a() const { return a_; }
  double b() const { return b_; }
  const std::vector<MeasureTerm>& terms() const { return terms_; }
  const NevanlinnaOptions& options() const { return opt_; }

  /// Structurally zero: a = b = 0 and no terms.
  bool is_trivially_zero() const;

  /// Taylor jet at z. Im z < 0 is handled by reflection.
  Jet jet(cplx z) const;
  /// Singular real points: point mass locations, density supports, cuts.
  bool is_singular_real(double x) const;
  /// Largest radius (capped at 'cap') of a real neighbourhood of x free of singularities.
  double distance_to_singularity(double x, double cap) const;

  /// Copy with the point masses at x removed; returns their total weight via 'removed'.
  NevanlinnaFunction without_mass_at(double x, double& removed) const;

 private:
  Jet jet_upper(cplx z) const;

  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<MeasureTerm> terms_;
  NevanlinnaOptions opt_{};
};

/// [M(z), M'(z), ..., M^(order)(z)]
std::vector<cplx> eval_m(const NevanlinnaFunction& m, cplx z, int order);

/// lim M(x+) (side Right) or lim M(x-) (side Left) along the real axis.
ExtendedReal boundary_limit(const NevanlinnaFunction& m, double x, Side side);

/// sigma({c}) from the representation.
double point_mass(const NevanlinnaFunction& m, double c);
/// lim (c - z) M(z) along z = c + iy, y -> 0.
LimitEstimate point_mass_ray(const NevanlinnaFunction& m, double c);

/// b from the representation.
double linear_coefficient(const NevanlinnaFunction& m);
/// lim M(iy)/(iy), y -> inf.
LimitEstimate linear_coefficient_ray(const NevanlinnaFunction& m);

/// sigma(t2) - sigma(t1), endpoint masses counted half.
double stieltjes_inversion(const NevanlinnaFunction& m, double t1, double t2,
                           double tol = 1e-8);

/// Maximal open intervals free of singularities.
GapList holomorphy_gaps(const NevanlinnaFunction& m);

}  // namespace gznt
