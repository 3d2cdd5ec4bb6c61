#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jackson/numeric.hpp"

namespace jackson {

class YoungFunction;
YoungFunction complementary(const YoungFunction& phi, double y_max = 1e6, int resolution = 241);

// Convex, strictly increasing Phi on [0, inf) with Phi(0) = 0.
class YoungFunction {
 public:
  enum class Kind { power, two_power, log_power, zygmund, exp, patched, complementary };

  static YoungFunction power(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("power: need p >= 1, got " + fmt(p));
    return YoungFunction(Kind::power, {p});
  }
  static YoungFunction two_power(double alpha, double beta) {
    if (!(alpha > 1.0 && beta > alpha) || !std::isfinite(beta))
      throw std::invalid_argument("two_power: need 1 < alpha < beta, got " + fmt(alpha) + ", " + fmt(beta));
    return YoungFunction(Kind::two_power, {alpha, beta});
  }
  static constexpr double log_power_min_r = (3.0 + 2.2360679774997896964) / 2.0;
  static YoungFunction log_power(double r) {
    if (!(r >= log_power_min_r) || !std::isfinite(r))
      throw std::invalid_argument("log_power: need r >= (3+sqrt 5)/2 ~ 2.618, got " + fmt(r));
    return YoungFunction(Kind::log_power, {r});
  }
  static YoungFunction zygmund(double p, double alpha) {
    if (!(p >= 1.0) || !(alpha * p >= 1.0) || !std::isfinite(p) || !std::isfinite(alpha))
      throw std::invalid_argument("zygmund: need p >= 1 and alpha*p >= 1, got " + fmt(p) + ", " + fmt(alpha));
    return YoungFunction(Kind::zygmund, {p, alpha});
  }
  // e^u - 1 - u; fails Delta_2, used for negative tests.
  static YoungFunction exp() { return YoungFunction(Kind::exp, {}); }

  static YoungFunction builtin(std::string_view kind, std::span<const double> params) {
    auto need = [&](std::size_t k) {
      if (params.size() != k)
        throw std::invalid_argument(std::string(kind) + ": expected " + std::to_string(k) + " parameter(s), got " +
                                    std::to_string(params.size()));
    };
    if (kind == "power") { need(1); return power(params[0]); }
    if (kind == "two_power") { need(2); return two_power(params[0], params[1]); }
    if (kind == "log_power") { need(1); return log_power(params[0]); }
    if (kind == "zygmund") { need(2); return zygmund(params[0], params[1]); }
    if (kind == "exp") { need(0); return exp(); }
    throw std::invalid_argument("unknown Young function kind '" + std::string(kind) + "'");
  }

  // Assembled by patch(); see young.hpp patch() for the construction.
  static YoungFunction make_patched(const YoungFunction& base, double s, double a, double b, double c1, double slope_k) {
    YoungFunction f(Kind::patched, {s});
    f.breakpoints_ = {a, b};
    f.c1_ = c1;
    f.k_ = slope_k;
    f.base_ = std::make_shared<const YoungFunction>(base);
    const double e = 2.0 - 1.0 / s;
    const double phi_b = c1 * base(a) + slope_k * (std::pow(b, e) - std::pow(a, e)) / e;
    f.c2_ = phi_b - base(b);
    return f;
  }

  static YoungFunction make_complementary(const YoungFunction& base, double y_max, int resolution, double x_hi) {
    YoungFunction f(Kind::complementary, {y_max, static_cast<double>(resolution)});
    f.base_ = std::make_shared<const YoungFunction>(base);
    f.x_hi_ = x_hi;
    return f;
  }

  Kind kind() const { return kind_; }
  std::string kind_name() const {
    switch (kind_) {
      case Kind::power: return "power";
      case Kind::two_power: return "two_power";
      case Kind::log_power: return "log_power";
      case Kind::zygmund: return "zygmund";
      case Kind::exp: return "exp";
      case Kind::patched: return "patched";
      case Kind::complementary: return "complementary";
    }
    return "?";
  }
  const std::vector<double>& params() const { return params_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  const YoungFunction* base() const { return base_.get(); }

  double operator()(double u) const {
    if (!(u > 0.0)) return 0.0;
    switch (kind_) {
      case Kind::power: return std::pow(u, params_[0]);
      case Kind::two_power: return u <= 1.0 ? std::pow(u, params_[0]) : std::pow(u, params_[1]);
      case Kind::log_power: return std::pow(u, params_[0]) * (1.0 + std::abs(std::log(u)));
      case Kind::zygmund: {
        const double p = params_[0], ap = params_[0] * params_[1];
        return std::pow(u, p) * std::pow(std::log(2.0 + u), ap);
      }
      case Kind::exp:
        if (u < 1e-2) return u * u * 0.5 * (1.0 + u / 3.0 * (1.0 + u / 4.0 * (1.0 + u / 5.0)));
        return std::expm1(u) - u;
      case Kind::patched: {
        const double a = breakpoints_[0], b = breakpoints_[1];
        if (u <= a) return c1_ * (*base_)(u);
        if (u <= b) {
          const double e = 2.0 - 1.0 / params_[0];
          return c1_ * (*base_)(a) + k_ * (std::pow(u, e) - std::pow(a, e)) / e;
        }
        return c2_ + (*base_)(u);
      }
      case Kind::complementary: return conjugate(u).second;
    }
    return 0.0;
  }

  double derivative_left(double u) const { return derivative(u, true); }
  double derivative_right(double u) const { return derivative(u, false); }

  // argmax and value of x*y - base(x) over x >= 0 (complementary kind only).
  std::pair<double, double> conjugate(double y) const {
    if (kind_ != Kind::complementary) throw std::logic_error("conjugate() on a non-complementary function");
    return detail_conjugate(*base_, y, static_cast<int>(params_[1]), x_hi_);
  }

  static std::pair<double, double> detail_conjugate(const YoungFunction& phi, double y, int resolution, double x_hi) {
    if (!(y > phi.derivative_right(0.0))) return {0.0, 0.0};
    auto g = [&](double v) {
      const double x = std::exp(v);
      const double val = x * y - phi(x);
      return std::isnan(val) ? -std::numeric_limits<double>::infinity() : val;
    };
    double lo = std::log(1e-6), hi = std::log(x_hi);
    const int n = std::max(resolution, 16);
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto [v, val] = numeric::grid_golden_max(g, lo, hi, n);
      const double step = (hi - lo) / (n - 1);
      if (v <= lo + step && lo > -700.0) {
        hi = lo + 2.0 * step;
        lo -= 14.0;
        continue;
      }
      if (v >= hi - step && hi < 700.0) {
        lo = hi - 2.0 * step;
        hi += 7.0;
        continue;
      }
      if (val <= 0.0) return {0.0, 0.0};
      return {std::exp(v), val};
    }
    throw std::domain_error("complement undefined at working precision");
  }

 private:
  YoungFunction(Kind k, std::vector<double> p) : kind_(k), params_(std::move(p)) {}

  static std::string fmt(double v) { return std::to_string(v); }

  double derivative(double u, bool left) const {
    if (u < 0.0) return 0.0;
    switch (kind_) {
      case Kind::power: {
        const double p = params_[0];
        if (u == 0.0) return left ? 0.0 : (p == 1.0 ? 1.0 : 0.0);
        return p * std::pow(u, p - 1.0);
      }
      case Kind::two_power: {
        if (u == 0.0) return 0.0;
        const double e = (u < 1.0 || (u == 1.0 && left)) ? params_[0] : params_[1];
        return e * std::pow(u, e - 1.0);
      }
      case Kind::log_power: {
        if (u == 0.0) return 0.0;
        const double r = params_[0], l = std::log(u);
        if (u < 1.0 || (u == 1.0 && left)) return std::pow(u, r - 1.0) * (r - 1.0 - r * l);
        return std::pow(u, r - 1.0) * (r + 1.0 + r * l);
      }
      case Kind::zygmund: {
        const double p = params_[0], al = params_[1], ap = p * al;
        if (u == 0.0) return p == 1.0 ? std::pow(std::log(2.0), ap) : 0.0;
        const double L = std::log(2.0 + u);
        return p * std::pow(u, p - 1.0) * std::pow(L, ap - 1.0) * (L + al * u / (2.0 + u));
      }
      case Kind::exp: return std::expm1(u);
      case Kind::patched: {
        const double a = breakpoints_[0], b = breakpoints_[1], s = params_[0];
        if (u < a || (u == a && left)) return c1_ * (left ? base_->derivative_left(u) : base_->derivative_right(u));
        if (u < b || (u == b && left)) return k_ * std::pow(u, 1.0 - 1.0 / s);
        return left ? base_->derivative_left(u) : base_->derivative_right(u);
      }
      case Kind::complementary: return conjugate(u).first;
    }
    return 0.0;
  }

  Kind kind_;
  std::vector<double> params_;
  std::vector<double> breakpoints_;
  double c1_ = 1.0;
  double c2_ = 0.0;
  double k_ = 0.0;
  double x_hi_ = 1e6;
  std::shared_ptr<const YoungFunction> base_;
};

// Phi(x)/x growth between x_hi/1e3 and x_hi.
inline bool is_superlinear(const YoungFunction& phi, double x_hi = 1e6) {
  const double r_hi = phi(x_hi) / x_hi;
  const double r_lo = phi(x_hi * 1e-3) / (x_hi * 1e-3);
  if (std::isinf(r_hi)) return true;
  return std::isfinite(r_lo) && r_hi > 1.5 * r_lo;
}

inline YoungFunction complementary(const YoungFunction& phi, double y_max, int resolution) {
  if (!(y_max > 0.0)) throw std::invalid_argument("complementary: y_max must be positive");
  if (resolution < 16) throw std::invalid_argument("complementary: resolution must be >= 16");
  double x_hi = 1e6;
  while (x_hi < 1e15 && phi.derivative_right(x_hi) < y_max) x_hi *= 10.0;
  if (!is_superlinear(phi, x_hi)) throw std::domain_error("complement undefined at working precision");
  return YoungFunction::make_complementary(phi, y_max, resolution, x_hi);
}

struct Delta2Result {
  bool holds;
  double K;
};

inline Delta2Result check_delta2(const YoungFunction& phi, double u_lo = 1e-6, double u_hi = 1e6, int per_decade = 20) {
  if (!(u_lo > 0.0 && u_hi > u_lo)) throw std::invalid_argument("check_delta2: need 0 < u_lo < u_hi");
  auto ratio = [&](double u) { return phi(2.0 * u) / phi(u); };
  const auto grid = numeric::log_grid(u_lo, u_hi, per_decade);
  double K = 0.0;
  bool finite = true;
  for (double u : grid) {
    const double r = ratio(u);
    if (!std::isfinite(r)) { finite = false; break; }
    K = std::max(K, r);
  }
  if (!finite) return {false, std::numeric_limits<double>::infinity()};
  const double r_top = ratio(u_hi), r_prev = ratio(u_hi / 10.0);
  const bool flat = std::isfinite(r_top) && std::isfinite(r_prev) && std::log10(r_top / r_prev) < 0.01;
  return {flat, K};
}

struct Nabla2Result {
  bool holds;
  double a;
};

inline Nabla2Result check_nabla2(const YoungFunction& psi, double u_lo, double u_hi, int per_decade = 10) {
  if (!(u_lo > 0.0 && u_hi > u_lo)) throw std::invalid_argument("check_nabla2: need 0 < u_lo < u_hi");
  const auto grid = numeric::log_grid(u_lo, u_hi, per_decade);
  std::vector<double> base(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) base[i] = psi(grid[i]);
  for (int k = 1; k <= 96; ++k) {
    const double a = std::exp2(k / 16.0);
    bool ok = true;
    for (std::size_t i = 0; i < grid.size() && ok; ++i) {
      const double rhs = psi(a * grid[i]) / (2.0 * a);
      ok = base[i] <= rhs * (1.0 + 1e-12);
    }
    if (ok) return {true, a};
  }
  return {false, std::numeric_limits<double>::quiet_NaN()};
}

struct Interval {
  double lo, hi;
  bool contains(double a, double b) const { return lo <= a && b <= hi; }
};

struct ConcavityRegions {
  double s;
  std::vector<Interval> intervals;
  bool covers(double a, double b) const {
    return std::any_of(intervals.begin(), intervals.end(), [&](const Interval& I) { return I.contains(a, b); });
  }
};

// Maximal runs of nonpositive second differences of u -> Phi(u^{1/s}) on a log grid.
inline ConcavityRegions power_concavity_regions(const YoungFunction& phi, double s, double u_lo = 1e-6,
                                                double u_hi = 1e6, int resolution = 4097) {
  if (!(s >= 2.0)) throw std::invalid_argument("power_concavity_regions: need s >= 2");
  if (!(u_lo > 0.0 && u_hi > u_lo)) throw std::invalid_argument("power_concavity_regions: need 0 < u_lo < u_hi");
  if (resolution < 5) throw std::invalid_argument("power_concavity_regions: resolution too small");
  const auto u = numeric::log_grid_n(u_lo, u_hi, resolution);
  const std::size_t n = u.size();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = phi(std::pow(u[i], 1.0 / s));
  std::vector<double> slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) slope[i] = (g[i + 1] - g[i]) / (u[i + 1] - u[i]);
  ConcavityRegions out{s, {}};
  std::size_t i = 1;
  while (i + 1 < n) {
    auto concave = [&](std::size_t k) {
      const double scale = std::max(std::abs(slope[k - 1]), std::abs(slope[k]));
      return slope[k] - slope[k - 1] <= 1e-10 * scale;
    };
    if (!concave(i)) { ++i; continue; }
    std::size_t j = i;
    while (j + 2 < n && concave(j + 1)) ++j;
    out.intervals.push_back({u[i - 1], u[j + 1]});
    i = j + 1;
  }
  return out;
}

struct PatchResult {
  YoungFunction phi_tilde;
  double c1;
  double c2;
  double A;
};

// Equivalent function with Phi~(u^{1/s}) concave everywhere: c1*Phi on [0,a], Phi + c2 on [b, inf),
// and derivative K x^{1-1/s} in between.
inline PatchResult patch(const YoungFunction& phi, double s, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("patch: breakpoints must be positive");
  if (!(a < b)) throw std::invalid_argument("patch: need a < b");
  if (!(s >= 2.0)) throw std::invalid_argument("patch: need s >= 2");
  const double as = std::pow(a, s), bs = std::pow(b, s);
  const double u_lo = std::min(1e-6, as * 1e-3), u_hi = std::max(1e6, bs * 1e3);
  const auto regions = power_concavity_regions(phi, s, u_lo, u_hi, 4097);
  // the grid endpoints bracket a^s and b^s; allow one grid step of slack
  const double step = std::pow(u_hi / u_lo, 1.0 / 4096.0);
  if (!regions.covers(u_lo, as / step) || !regions.covers(bs * step, u_hi))
    throw std::invalid_argument("patch: concavity of Phi(u^{1/s}) fails on [0,a^s] or [b^s,inf)");
  const double K = phi.derivative_right(b) * std::pow(b, 1.0 / s - 1.0);
  const double c1 = K / (phi.derivative_left(a) * std::pow(a, 1.0 / s - 1.0));
  auto tilde = YoungFunction::make_patched(phi, s, a, b, c1, K);
  double A = 1.0;
  for (double x : numeric::log_grid_n(1e-6, 1e6, 4097)) {
    const double p = phi(x), q = tilde(x);
    if (p > 0.0 && q > 0.0 && std::isfinite(p) && std::isfinite(q)) A = std::max({A, p / q, q / p});
  }
  return {tilde, c1, tilde.c2(), A};
}

}  // namespace jackson
