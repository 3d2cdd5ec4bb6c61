#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "jackson/numeric.hpp"
#include "jackson/young.hpp"

namespace jackson {

// Samples on the uniform periodic grid x_j = 2*pi*j/N over [0, 2*pi)^d; row-major for d = 2.
class GridFunction {
 public:
  GridFunction(int dim, std::size_t n, std::vector<double> samples) : dim_(dim), n_(n), v_(std::move(samples)) {
    validate_shape(dim, n);
    if (v_.size() != count(dim, n))
      throw std::invalid_argument("GridFunction: expected " + std::to_string(count(dim, n)) + " samples, got " +
                                  std::to_string(v_.size()));
    for (double x : v_)
      if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: samples must be finite");
  }

  static GridFunction zeros(int dim, std::size_t n) {
    validate_shape(dim, n);
    return GridFunction(dim, n, std::vector<double>(count(dim, n), 0.0));
  }
  static GridFunction constant(int dim, std::size_t n, double c) {
    validate_shape(dim, n);
    return GridFunction(dim, n, std::vector<double>(count(dim, n), c));
  }

  static void validate_shape(int dim, std::size_t n) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid dimension must be 1 or 2, got " + std::to_string(dim));
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid size N must be even and >= 8, got " + std::to_string(n));
  }
  static std::size_t count(int dim, std::size_t n) { return dim == 1 ? n : n * n; }
  static double node(std::size_t j, std::size_t n) { return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n); }

  int dim() const { return dim_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return v_.size(); }
  const std::vector<double>& samples() const { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }
  double at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

  bool same_shape(const GridFunction& o) const { return dim_ == o.dim_ && n_ == o.n_; }
  void require_same_shape(const GridFunction& o) const {
    if (!same_shape(o)) throw std::invalid_argument("grid functions have different shapes");
  }

  GridFunction& operator+=(const GridFunction& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  GridFunction& operator-=(const GridFunction& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  GridFunction& operator*=(double c) {
    for (double& x : v_) x *= c;
    return *this;
  }
  // y += c*x
  GridFunction& axpy(double c, const GridFunction& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += c * o.v_[i];
    return *this;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }
  double max_abs_diff(const GridFunction& o) const {
    require_same_shape(o);
    double m = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) m = std::max(m, std::abs(v_[i] - o.v_[i]));
    return m;
  }

 private:
  int dim_;
  std::size_t n_;
  std::vector<double> v_;
};

inline GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
inline GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
inline GridFunction operator*(double c, GridFunction a) { return a *= c; }

// Samples a pointwise map: f(x) for d = 1, f(x1, x2) for d = 2.
template <class F>
GridFunction discretize(F&& f, std::size_t n, int dim = 1) {
  GridFunction::validate_shape(dim, n);
  std::vector<double> v(GridFunction::count(dim, n));
  if (dim == 1) {
    if constexpr (std::is_invocable_r_v<double, F, double>) {
      for (std::size_t j = 0; j < n; ++j) v[j] = f(GridFunction::node(j, n));
    } else {
      throw std::invalid_argument("discretize: d = 1 needs a map of one variable");
    }
  } else {
    if constexpr (std::is_invocable_r_v<double, F, double, double>) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = f(GridFunction::node(i, n), GridFunction::node(j, n));
    } else {
      throw std::invalid_argument("discretize: d = 2 needs a map of two variables");
    }
  }
  return GridFunction(dim, n, std::move(v));
}

// Optional density w with mean 1 against the normalized measure; empty means uniform.
class Measure {
 public:
  Measure() = default;
  static Measure uniform() { return {}; }
  static Measure weighted(std::vector<double> w) {
    if (w.empty()) throw std::invalid_argument("Measure: empty weight array");
    double s = 0.0;
    for (double x : w) {
      if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("Measure: weights must be finite and >= 0");
      s += x;
    }
    if (!(s > 0.0)) throw std::invalid_argument("Measure: weights sum to zero");
    const double scale = static_cast<double>(w.size()) / s;
    for (double& x : w) x *= scale;
    Measure m;
    m.w_ = std::make_shared<const std::vector<double>>(std::move(w));
    return m;
  }
  bool is_uniform() const { return !w_; }
  const std::vector<double>* weights() const { return w_.get(); }

  // mean over the grid of g(f_j) against this measure
  template <class G>
  double integrate(std::span<const double> f, G&& g) const {
    double s = 0.0;
    if (!w_) {
      for (double x : f) s += g(x);
    } else {
      if (w_->size() != f.size()) throw std::invalid_argument("Measure: weight array does not match grid size");
      for (std::size_t j = 0; j < f.size(); ++j)
        if ((*w_)[j] > 0.0) s += (*w_)[j] * g(f[j]);
    }
    return s / static_cast<double>(f.size());
  }
  double ess_sup_abs(std::span<const double> f) const {
    double m = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!w_ || (*w_)[j] > 0.0) m = std::max(m, std::abs(f[j]));
    return m;
  }

 private:
  std::shared_ptr<const std::vector<double>> w_;
};

inline double lp_norm(std::span<const double> f, double p, const Measure& mu = {}) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: need p >= 1");
  if (std::isinf(p)) return mu.ess_sup_abs(f);
  if (p == 1.0) return mu.integrate(f, [](double x) { return std::abs(x); });
  if (p == 2.0) return std::sqrt(mu.integrate(f, [](double x) { return x * x; }));
  const double a = mu.ess_sup_abs(f);
  if (a == 0.0) return 0.0;
  const double inv = 1.0 / a;
  return a * std::pow(mu.integrate(f, [&](double x) { return std::pow(std::abs(x) * inv, p); }), 1.0 / p);
}
inline double lp_norm(const GridFunction& f, double p, const Measure& mu = {}) { return lp_norm(f.samples(), p, mu); }

inline double orlicz_functional(std::span<const double> f, const YoungFunction& phi, const Measure& mu = {}) {
  return mu.integrate(f, [&](double x) { return phi(std::abs(x)); });
}
inline double orlicz_functional(const GridFunction& f, const YoungFunction& phi, const Measure& mu = {}) {
  return orlicz_functional(f.samples(), phi, mu);
}

inline double luxemburg_norm(std::span<const double> f, const YoungFunction& phi, const Measure& mu = {}) {
  const double amax = mu.ess_sup_abs(f);
  if (amax == 0.0) return 0.0;
  auto M = [&](double a) {
    const double inv = 1.0 / a;
    return mu.integrate(f, [&](double x) { return phi(std::abs(x) * inv); });
  };
  double hi = amax;
  while (M(hi) > 1.0) hi *= 2.0;
  double lo = hi;
  while (M(lo) <= 1.0) lo *= 0.5;
  while (hi / lo - 1.0 > 1e-14) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    (M(mid) > 1.0 ? lo : hi) = mid;
  }
  return hi;
}
inline double luxemburg_norm(const GridFunction& f, const YoungFunction& phi, const Measure& mu = {}) {
  return luxemburg_norm(f.samples(), phi, mu);
}

struct OrliczEvaluation {
  double value;
  double k;  // minimizer of (1 + M(k f))/k
};

inline OrliczEvaluation orlicz_norm_detail(std::span<const double> f, const YoungFunction& phi, const Measure& mu = {}) {
  if (!is_superlinear(phi)) throw std::domain_error("orlicz_norm: Young function is not superlinear");
  const double lux = luxemburg_norm(f, phi, mu);
  if (lux == 0.0) return {0.0, std::numeric_limits<double>::infinity()};
  auto F = [&](double v) {
    const double k = std::exp(v);
    const double val = (1.0 + mu.integrate(f, [&](double x) { return phi(k * std::abs(x)); })) / k;
    return std::isfinite(val) ? val : std::numeric_limits<double>::infinity();
  };
  const double v0 = -std::log(lux);
  double lo = v0 - 8.0, hi = v0 + 8.0;
  constexpr int n = 65;
  for (int attempt = 0; attempt < 32; ++attempt) {
    auto [v, val] = numeric::grid_golden_min(F, lo, hi, n);
    const double step = (hi - lo) / (n - 1);
    if (v <= lo + step) { hi = lo + 2 * step; lo -= 16.0; continue; }
    if (v >= hi - step) { lo = hi - 2 * step; hi += 16.0; continue; }
    return {val, std::exp(v)};
  }
  throw std::domain_error("orlicz_norm: Amemiya minimizer not bracketed");
}
inline double orlicz_norm(std::span<const double> f, const YoungFunction& phi, const Measure& mu = {}) {
  return orlicz_norm_detail(f, phi, mu).value;
}
inline double orlicz_norm(const GridFunction& f, const YoungFunction& phi, const Measure& mu = {}) {
  return orlicz_norm(f.samples(), phi, mu);
}

// sup of mean|f g| over g = Phi'(k|f|) with M_Psi(g) <= 1; M_Psi(g) is exact by Young's equality.
inline double orlicz_dual_lower_bound(std::span<const double> f, const YoungFunction& phi, const Measure& mu = {}) {
  if (mu.ess_sup_abs(f) == 0.0) return 0.0;
  auto m_psi = [&](double k) {
    return mu.integrate(f, [&](double x) {
      const double u = k * std::abs(x);
      return u * phi.derivative_right(u) - phi(u);
    });
  };
  double lo = 1.0, hi = 1.0;
  while (m_psi(hi) < 1.0 && hi < 1e300) hi *= 2.0;
  while (m_psi(lo) > 1.0 && lo > 1e-300) lo *= 0.5;
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-14; ++it) {
    const double mid = std::sqrt(lo * hi);
    (m_psi(mid) > 1.0 ? hi : lo) = mid;
  }
  auto value = [&](double k) {
    return mu.integrate(f, [&](double x) { return std::abs(x) * phi.derivative_right(k * std::abs(x)); });
  };
  // M_Psi jumps where a sample crosses a kink of Phi; mix g_lo and g_hi (M_Psi convex keeps it feasible)
  const double m_lo = m_psi(lo), m_hi = m_psi(hi);
  if (m_hi > 1.0 && m_lo < 1.0) {
    const double theta = (1.0 - m_lo) / (m_hi - m_lo);
    return (1.0 - theta) * value(lo) + theta * value(hi);
  }
  return value(lo);
}
inline double orlicz_dual_lower_bound(const GridFunction& f, const YoungFunction& phi, const Measure& mu = {}) {
  return orlicz_dual_lower_bound(f.samples(), phi, mu);
}

struct LpNorm {
  double p;
};
struct LuxemburgNorm {
  YoungFunction phi;
};
struct OrliczNorm {
  YoungFunction phi;
};

// Banach norm on grid functions plus the optional geometric exponents s, q and constants m, M.
class NormSpec {
 public:
  using Variant = std::variant<LpNorm, LuxemburgNorm, OrliczNorm>;

  static NormSpec lp(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("NormSpec: L_p needs p >= 1");
    return NormSpec(LpNorm{p});
  }
  static NormSpec luxemburg(YoungFunction phi) { return NormSpec(LuxemburgNorm{std::move(phi)}); }
  static NormSpec orlicz(YoungFunction phi) {
    if (!is_superlinear(phi)) throw std::invalid_argument("NormSpec: Orlicz norm needs a superlinear Young function");
    return NormSpec(OrliczNorm{std::move(phi)});
  }

  NormSpec& with_s(double s) {
    if (!(s >= 2.0) || !std::isfinite(s)) throw std::invalid_argument("NormSpec: s must be a finite real >= 2");
    s_ = s;
    check_pair();
    return *this;
  }
  NormSpec& with_q(double q) {
    if (!(q > 1.0 && q <= 2.0)) throw std::invalid_argument("NormSpec: q must lie in (1, 2]");
    q_ = q;
    check_pair();
    return *this;
  }
  NormSpec& with_m(double m) {
    if (!(m > 0.0)) throw std::invalid_argument("NormSpec: m must be positive");
    m_ = m;
    return *this;
  }
  NormSpec& with_M(double M) {
    if (!(M > 0.0)) throw std::invalid_argument("NormSpec: M must be positive");
    M_ = M;
    return *this;
  }
  NormSpec& with_measure(Measure mu) {
    mu_ = std::move(mu);
    return *this;
  }

  const Variant& variant() const { return v_; }
  const Measure& measure() const { return mu_; }
  std::optional<double> m() const { return m_; }
  std::optional<double> M() const { return M_; }

  // Explicit s, else s = q/(q-1), else max(p, 2) for L_p with 1 < p < inf.
  std::optional<double> s() const {
    if (s_) return s_;
    if (q_) return *q_ / (*q_ - 1.0);
    if (auto* lp = std::get_if<LpNorm>(&v_); lp && lp->p > 1.0 && std::isfinite(lp->p)) return std::max(lp->p, 2.0);
    return std::nullopt;
  }
  std::optional<double> q() const {
    if (q_) return q_;
    if (auto sv = s()) return *sv / (*sv - 1.0);
    return std::nullopt;
  }

  bool is_lp() const { return std::holds_alternative<LpNorm>(v_); }
  bool is_uniform_l2() const {
    auto* lp = std::get_if<LpNorm>(&v_);
    return lp && lp->p == 2.0 && mu_.is_uniform();
  }

  double operator()(std::span<const double> f) const {
    return std::visit(
        [&](const auto& n) -> double {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LpNorm>) return lp_norm(f, n.p, mu_);
          else if constexpr (std::is_same_v<T, LuxemburgNorm>) return luxemburg_norm(f, n.phi, mu_);
          else return orlicz_norm(f, n.phi, mu_);
        },
        v_);
  }
  double operator()(const GridFunction& f) const { return (*this)(std::span<const double>(f.samples())); }

  std::string label() const {
    return std::visit(
        [](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LpNorm>) return "L" + numeric::format_double(n.p);
          else if constexpr (std::is_same_v<T, LuxemburgNorm>) return "luxemburg(" + n.phi.kind_name() + ")";
          else return "orlicz(" + n.phi.kind_name() + ")";
        },
        v_);
  }

  // A subgradient direction of the norm at f (positive scaling irrelevant).
  std::vector<double> subgradient(std::span<const double> f) const {
    std::vector<double> g(f.size(), 0.0);
    auto sgn = [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); };
    const auto* w = mu_.weights();
    auto weight = [&](std::size_t j) { return w ? (*w)[j] : 1.0; };
    if (auto* lp = std::get_if<LpNorm>(&v_)) {
      if (std::isinf(lp->p)) {
        std::size_t best = 0;
        double m = -1.0;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (weight(j) > 0.0 && std::abs(f[j]) > m) { m = std::abs(f[j]); best = j; }
        g[best] = sgn(f[best]);
        return g;
      }
      const double a = std::max(mu_.ess_sup_abs(f), std::numeric_limits<double>::min());
      for (std::size_t j = 0; j < f.size(); ++j) g[j] = weight(j) * sgn(f[j]) * std::pow(std::abs(f[j]) / a, lp->p - 1.0);
      return g;
    }
    if (auto* lx = std::get_if<LuxemburgNorm>(&v_)) {
      const double a = luxemburg_norm(f, lx->phi, mu_);
      if (a == 0.0) return g;
      for (std::size_t j = 0; j < f.size(); ++j) g[j] = weight(j) * sgn(f[j]) * lx->phi.derivative_right(std::abs(f[j]) / a);
      return g;
    }
    const auto& on = std::get<OrliczNorm>(v_);
    const auto ev = orlicz_norm_detail(f, on.phi, mu_);
    if (ev.value == 0.0) return g;
    for (std::size_t j = 0; j < f.size(); ++j) g[j] = weight(j) * sgn(f[j]) * on.phi.derivative_right(ev.k * std::abs(f[j]));
    return g;
  }

 private:
  explicit NormSpec(Variant v) : v_(std::move(v)) {}
  void check_pair() const {
    if (s_ && q_ && std::abs(1.0 / *s_ + 1.0 / *q_ - 1.0) > 1e-12)
      throw std::invalid_argument("NormSpec: s and q must satisfy 1/s + 1/q = 1");
  }

  Variant v_;
  std::optional<double> s_, q_, m_, M_;
  Measure mu_;
};

inline double norm(const GridFunction& f, const NormSpec& B) { return B(f); }

}  // namespace jackson
