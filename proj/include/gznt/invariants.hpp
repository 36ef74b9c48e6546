#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gznt/path.hpp"

namespace gznt {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

/// Max relative gap between jet derivatives (orders 1..3) and a 5-point difference
/// of the next lower order, at random points with Im z in [0.05 L, L].
double derivative_fd_error(const N1Function& q, int points, std::uint64_t seed);
double derivative_fd_error(const NevanlinnaFunction& m, double scale, int points, std::uint64_t seed);

/// Max over the point masses of M of the deviation of point_mass, point_mass_ray and
/// stieltjes_inversion around the atom from the true weight. 0 if there are none.
double mass_agreement(const NevanlinnaFunction& m);

/// 16 nonzero parameters tan(-pi/2 + (k + 1/2) pi/16).
std::vector<double> parameter_samples();

std::vector<CheckResult> run_invariants(const N1Function& q, const LocatorConfig& cfg, int steps,
                                        std::uint64_t seed);

}  // namespace gznt
