#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "gznt/errors.hpp"
#include "gznt/extended.hpp"

namespace gznt {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_depth = 60;
  long max_evals = 200000;  // integrand calls per integrate()
};

namespace detail {

template <std::size_t N>
using CVec = std::array<cplx, N>;

template <std::size_t N>
double sup_norm(const CVec<N>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Fixed 15-point Gauss-Legendre rule on [a, b] for a vector-valued integrand.
/// mass, if given, receives the rule applied to sup|f|.
template <std::size_t N, class F>
CVec<N> gauss15(const F& f, double a, double b, double* mass = nullptr) {
  using rule = boost::math::quadrature::gauss<double, 15>;
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  CVec<N> acc{};
  CVec<N> v = f(mid);
  double am = sup_norm(v) * w[0];
  for (std::size_t k = 0; k < N; ++k) acc[k] = v[k] * w[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const CVec<N> p = f(mid + half * x[i]);
    const CVec<N> m = f(mid - half * x[i]);
    am += (sup_norm(p) + sup_norm(m)) * w[i];
    for (std::size_t k = 0; k < N; ++k) acc[k] += (p[k] + m[k]) * w[i];
  }
  for (auto& s : acc) s *= half;
  if (mass) *mass = am * std::abs(half);
  return acc;
}

template <std::size_t N, class F>
CVec<N> adapt(const F& f, double a, double b, const CVec<N>& whole, double tol, int depth,
              const QuadratureOptions& opt, long& evals) {
  const double mid = 0.5 * (a + b);
  double ml = 0.0, mr = 0.0;
  CVec<N> left = gauss15<N>(f, a, mid, &ml);
  CVec<N> right = gauss15<N>(f, mid, b, &mr);
  evals += 58;
  CVec<N> sum{};
  CVec<N> diff{};
  for (std::size_t k = 0; k < N; ++k) {
    sum[k] = left[k] + right[k];
    diff[k] = sum[k] - whole[k];
  }
  const double err = sup_norm(diff);
  // below the rounding noise of the pieces there is nothing left to resolve
  const double noise = 64.0 * 2.2e-16 * (ml + mr);
  if (err <= std::max({tol, opt.rel_tol * sup_norm(sum), noise}) || mid <= a || mid >= b)
    return sum;
  if (depth >= opt.max_depth || evals >= opt.max_evals)
    throw QuadratureFailure("adaptive Gauss-Legendre did not reach tolerance on [" +
                            format_number(a) + ", " + format_number(b) + "]");
  CVec<N> l = adapt<N>(f, a, mid, left, 0.5 * tol, depth + 1, opt, evals);
  CVec<N> r = adapt<N>(f, mid, b, right, 0.5 * tol, depth + 1, opt, evals);
  for (std::size_t k = 0; k < N; ++k) l[k] += r[k];
  return l;
}

}  // namespace detail

/// Adaptive Gauss-Legendre quadrature of a vector of complex integrands over
/// the finite interval [a, b]. Throws QuadratureFailure when bisection depth
/// or the evaluation budget is exhausted.
template <std::size_t N, class F>
std::array<cplx, N> integrate(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
  if (a == b) return {};
  if (a > b) {
    auto r = integrate<N>(f, b, a, opt);
    for (auto& v : r) v = -v;
    return r;
  }
  long evals = 15;
  const auto whole = detail::gauss15<N>(f, a, b);
  return detail::adapt<N>(f, a, b, whole, opt.abs_tol, 0, opt, evals);
}

}  // namespace gznt
