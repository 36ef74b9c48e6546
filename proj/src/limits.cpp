#include "gznt/limits.hpp"

#include <algorithm>
#include <cmath>

#include "gznt/errors.hpp"

namespace gznt {

ExtendedReal LimitEstimate::as_real() const {
  if (finite()) return ExtendedReal(value.real());
  return value.real() < -0.5 ? ExtendedReal::neg_inf() : ExtendedReal::pos_inf();
}

std::string LimitEstimate::to_string() const {
  if (finite()) return format_number(value.real()) + "," + format_number(value.imag());
  return value.real() < -0.5 ? "-inf" : "inf";
}

LimitEstimate extrapolate_limit(const std::vector<cplx>& v, const LimitOptions& opt) {
  const int n = static_cast<int>(v.size());
  if (n < 4) throw LimitUnstable("too few samples to extrapolate a limit");
  for (const auto& x : v)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      // overflow along the approach: treat as growth in the direction of the last finite sample
      LimitEstimate e;
      e.kind = LimitEstimate::Kind::Infinite;
      cplx last = 1.0;
      for (const auto& y : v)
        if (std::isfinite(y.real()) && std::isfinite(y.imag()) && std::abs(y) > 0) last = y;
      e.value = last / std::abs(last);
      return e;
    }

  double scale = 1.0;
  for (const auto& x : v) scale = std::max(scale, std::abs(x));
  const double noise = opt.rel_noise * scale;

  std::vector<cplx> d(n - 1);
  for (int k = 0; k + 1 < n; ++k) d[k] = v[k + 1] - v[k];
  auto sig = [&](int k) { return std::abs(d[k]) > 10.0 * noise; };

  LimitEstimate out;
  const int m = n - 1;
  if (!sig(m - 1) && !sig(m - 2) && !sig(m - 3)) {
    out.value = v.back();
    out.error = 10.0 * noise;
    return out;
  }

  // ratios of successive increments over the tail
  std::vector<double> ratios;
  for (int k = std::max(1, m - 8); k < m; ++k)
    if (sig(k) && sig(k - 1)) ratios.push_back(std::abs(d[k]) / std::abs(d[k - 1]));
  if (ratios.empty()) {
    out.value = v.back();
    out.error = std::abs(d[m - 1]);
    return out;
  }
  std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
  const double med = ratios[ratios.size() / 2];

  if (med >= 0.98) {
    cplx sum = 0.0;
    double total = 0.0;
    for (int k = std::max(0, m - 8); k < m; ++k) {
      sum += d[k];
      total += std::abs(d[k]);
    }
    if (std::abs(sum) < 0.5 * total || std::abs(v.back()) < std::abs(v.front()))
      throw LimitUnstable("limit estimate oscillates without settling (increment ratio " +
                          format_number(med) + ")");
    out.kind = LimitEstimate::Kind::Infinite;
    out.value = v.back() / std::abs(v.back());
    return out;
  }

  // Aitken tail correction for a geometric error sequence, any power of h.
  auto aitken = [&](int k) {
    const cplx q = d[k] / d[k - 1];
    if (std::abs(1.0 - q) < 1e-3) return v[k + 1];
    return v[k + 1] + d[k] * q / (1.0 - q);
  };
  const cplx a1 = aitken(m - 1), a0 = aitken(m - 2);
  const double aerr = std::abs(a1 - a0);
  const double raw_err = std::abs(d[m - 1]) * med / (1.0 - med);
  if (aerr < raw_err) {
    out.value = a1;
    out.error = std::max(aerr, 10.0 * noise);
  } else {
    out.value = v.back();
    out.error = std::max(raw_err, 10.0 * noise);
  }
  return out;
}

LimitEstimate limit_as_h_to_zero(const std::function<cplx(double)>& f, double h0,
                                 const LimitOptions& opt) {
  std::vector<cplx> v;
  v.reserve(opt.depth + 1);
  double h = h0;
  for (int k = 0; k <= opt.depth; ++k, h *= 0.5) v.push_back(f(h));
  return extrapolate_limit(v, opt);
}

}  // namespace gznt
