#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jackson::numeric {

inline constexpr double golden = 0.61803398874989484820;

// n points, log-uniform on [lo, hi], endpoints included.
inline std::vector<double> log_grid_n(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("log_grid_n: need n >= 2");
  const double e0 = std::log10(lo), e1 = std::log10(hi);
  const double step = (e1 - e0) / (n - 1);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, e0 + i * step);
  out.front() = lo;
  out.back() = hi;
  return out;
}

inline std::vector<double> log_grid(double lo, double hi, int per_decade) {
  const int n = std::max(2, static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade)) + 1);
  return log_grid_n(lo, hi, n);
}

// Maximizer of a unimodal f on [a, b].
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double abs_tol = 1e-13) {
  double c = b - golden * (b - a), d = a + golden * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > abs_tol * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d; d = c; fd = fc;
      c = b - golden * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + golden * (b - a); fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double abs_tol = 1e-13) {
  auto [x, v] = golden_max([&](double t) { return -f(t); }, a, b, abs_tol);
  return {x, -v};
}

// Grid scan on n points of [lo, hi] then golden refinement between the argmax's neighbours.
template <class F>
std::pair<double, double> grid_golden_max(F&& f, double lo, double hi, int n) {
  const double step = (hi - lo) / (n - 1);
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double v = f(lo + i * step);
    if (v > best_val) { best_val = v; best = i; }
  }
  const double a = lo + std::max(0, best - 1) * step, b = lo + std::min(n - 1, best + 1) * step;
  auto [x, v] = golden_max(f, a, b);
  if (v >= best_val) return {x, v};
  return {lo + best * step, best_val};
}

template <class F>
std::pair<double, double> grid_golden_min(F&& f, double lo, double hi, int n) {
  auto [x, v] = grid_golden_max([&](double t) { return -f(t); }, lo, hi, n);
  return {x, -v};
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Shortest round-trip decimal form; identical bits give identical text.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t m = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
  double hi = v[m];
  if (v.size() % 2 == 1) return hi;
  double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
  return 0.5 * (lo + hi);
}

// Least-squares slope of log y against log x over the positive pairs.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace jackson::numeric
