#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gznt/local.hpp"
#include "gznt/locator.hpp"

namespace gznt {

struct PathSample {
  double theta = 0.0;
  double tau = 0.0;  // inf at theta = pi/2
  ExtendedPoint point = ExtendedPoint::infinity();
  Regime regime = Regime::Infinity;
  std::string event;
  std::optional<double> limit;
  double residual = 0.0;
};

struct Path {
  std::vector<PathSample> samples;
  std::string function_id;
};

struct TraceOptions {
  int steps = 64;
  bool adaptive = false;
  bool parallel = false;
  double adaptive_gap = 0.05;  // chordal distance between neighbours
  int adaptive_depth = 12;
  int bisect_iters = 48;
};

/// theta_j = -pi/2 + (j+1) pi/steps, j < steps, plus event samples (regime
/// transitions, the tau with alpha(tau) = inf).
Path trace(std::shared_ptr<const N1Function> q, const LocatorConfig& cfg, const TraceOptions& opt);
Path trace(const N1Function& q, const LocatorConfig& cfg, int steps, bool adaptive);

/// Distinct parameters must give chordally distinct points.
bool check_injectivity(const Path& p, double tol, std::string* witness = nullptr);

/// max chordal distance between alpha(tau) and beta(-1/tau).
double check_alphbet(const N1Function& q, const std::vector<double>& taus, const LocatorConfig& cfg);

/// max chordal distance between the GZNT of (Q_tau0)_rho and alpha((tau0+rho)/(1-rho tau0)).
double check_reparam(const N1Function& q, double tau0, const std::vector<double>& rhos,
                     const LocatorConfig& cfg);

/// Q = c (z-alpha)/(z-beta), c (alpha-beta) < 0
struct FormR0 {
  double alpha;
  double beta;
  double c;
};
/// Q = d/(z-gamma), d > 0
struct FormRc {
  double gamma;
  double d;
};
/// Q = (gamma-z)/d, d > 0
struct FormR1c {
  double gamma;
  double d;
};
struct NotRealLine {
  std::optional<PathSample> witness;
  std::string reason;
};
using RealLineForm = std::variant<FormR0, FormRc, FormR1c, NotRealLine>;

std::string form_name(const RealLineForm& f);

RealLineForm realline_characterize(const N1Function& q, const Path& p, double tol = 1e-9);

struct RealLineFamily {
  N1Function q;
  NevanlinnaFunction u;
  NevanlinnaFunction v;
  double residual = 0.0;  // max relative defect of the U/V relation on the grid
};

RealLineFamily make_realline_family(const RealLineForm& form);

struct HolomorphyReport {
  bool ok = true;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> pole;  // GPNT inside (lo, hi), behaving as a pole
  std::string witness;
};

HolomorphyReport check_holomorphy_on_interval(const N1Function& q, double lo, double hi,
                                              const LocatorConfig& cfg);
/// Uses the longest run of real samples of p.
HolomorphyReport check_holomorphy_on_path(const N1Function& q, const Path& p,
                                          const LocatorConfig& cfg);

}  // namespace gznt
