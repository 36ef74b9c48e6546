#pragma once

#include "gznt/n1.hpp"

namespace fx {

using namespace gznt;

inline N1Function z2() { return make_q(PoleAtInfinity{0.0}, NevanlinnaFunction(1, 0, {}), "z^2"); }
inline N1Function z3() { return make_q(PoleAtInfinity{0.0}, NevanlinnaFunction(0, 1, {}), "z^3"); }
inline N1Function minus_z() {
  return make_q(PoleAtInfinity{0.0}, NevanlinnaFunction(0, 0, {PointMass{0, 1}}), "-z");
}
// i(z^2+4)/(z^2+1)
inline N1Function noton_r() {
  return make_q(BothFinite{cplx(0, 2), cplx(0, 1)}, NevanlinnaFunction(0, 0, {UniformLine{1}}), "notonR");
}
inline N1Function z2_log() {
  return make_q(PoleAtInfinity{0.0}, NevanlinnaFunction(0, 0, {LogPrimitive{1}}), "z^2 log z");
}
inline N1Function z2_pow(double rho = 0.5) {
  return make_q(PoleAtInfinity{0.0}, NevanlinnaFunction(0, 0, {PowerPrimitive{rho, 1}}), "z^(2+rho)");
}
// z^2 (d1/(-1-z) + d2/(1-z))
inline N1Function drie(double d1, double d2) {
  return make_q(PoleAtInfinity{0.0}, NevanlinnaFunction(0, 0, {PointMass{-1, d1}, PointMass{1, d2}}), "drie");
}
// c (z - a)/(z - b)
inline N1Function r0(double a, double b, double c) {
  return make_q(BothFinite{a, b}, NevanlinnaFunction(c, 0, {PointMass{a, c * (b - a)}}), "R0");
}

// z^2 (1/2 + semicircle on [1,3] + 1/2 at -2)
inline N1Function semicircle() {
  return make_q(PoleAtInfinity{0.0},
                NevanlinnaFunction(0.5, 0, {Density{1, 3, DensityWeight::Semicircle, 1}, PointMass{-2, 0.5}}),
                "semicircle");
}

inline double chordal(const ExtendedPoint& a, cplx b) { return chordal_distance(a, ExtendedPoint(b)); }

}  // namespace fx
