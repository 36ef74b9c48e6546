#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "gznt/limits.hpp"
#include "gznt/n1.hpp"

namespace gznt {

/// Rectangle [-half_width, half_width] x (y_min, y_max] of Newton seeds.
/// Zero extents are replaced by the function's length scale.
struct SeedGrid {
  int nx = 16;
  int ny = 16;
  double half_width = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
};

struct LocatorConfig {
  double newton_tol = 1e-11;
  int max_iters = 60;
  SeedGrid seed_grid{};
  double real_scan_resolution = kPi / 4000;  // step in atan(x/L)
  double ray_base_height = 0.1;
  int ray_depth = 22;
  double im_threshold = 1e-9;
  double limit_tol = 1e-7;
  double deriv_tol = 1e-10;
  double merge_tol = 1e-7;
  std::uint64_t seed = 0;  // 0 keeps the natural seed order

  /// Throws ValidationError on nonpositive tolerances or ray_depth < 8.
  void validate() const;
};

enum class Regime { Complex, Real, Infinity };
std::string regime_name(Regime r);

struct GzntResult {
  ExtendedPoint point = ExtendedPoint::infinity();
  Regime regime = Regime::Infinity;
  std::optional<double> limit_value;  // Real: lim G/(z-x0); Infinity: lim z G (G = Q - tau in locate)
  double residual = 0.0;              // |G(point)| for finite points
  std::string source;                 // how the point was certified
};

/// Zero of Q - tau in C+ (Newton from the hint, else multistart).
std::optional<cplx> locate_complex(const N1Function& q, double tau, const LocatorConfig& cfg,
                                   std::optional<cplx> hint = std::nullopt);

struct PointTest {
  LimitEstimate limit;
  bool is_gznt = false;
  ExtendedReal value() const { return limit.as_real(); }
};

/// lim (Q(z) - tau)/(z - x0) along x0 + iy.
PointTest test_real_point(const N1Function& q, double tau, double x0, const LocatorConfig& cfg);
/// lim z (Q(z) - tau) along iy.
PointTest test_infinity(const N1Function& q, double tau, const LocatorConfig& cfg);

/// GZNT of Q_tau.
GzntResult locate(const N1Function& q, const TauParameter& tau, const LocatorConfig& cfg,
                  std::optional<ExtendedPoint> hint = std::nullopt);
GzntResult locate(std::shared_ptr<const N1Function> q, const TauParameter& tau,
                  const LocatorConfig& cfg, std::optional<ExtendedPoint> hint = std::nullopt);

/// GZNT of an arbitrary member G of the family.
GzntResult find_gznt(const FamilyMember& g, const LocatorConfig& cfg,
                     std::optional<ExtendedPoint> hint = std::nullopt);

/// GPNT of Q_tau, i.e. the GZNT of -1/Q_tau.
GzntResult gpnt_of(const N1Function& q, const TauParameter& tau, const LocatorConfig& cfg);

}  // namespace gznt
