#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jackson/grid.hpp"
#include "jackson/spectral.hpp"

namespace jackson::ops {

using spectral::cplx;
using Vec2 = std::array<double, 2>;

namespace detail {

inline void require_dim(const GridFunction& f, int d, const char* what) {
  if (f.dim() != d) throw std::invalid_argument(std::string(what) + " requires d = " + std::to_string(d));
}

// e^{i theta} - 1 without cancellation
inline cplx expi_minus_one(double theta) {
  const double s = std::sin(0.5 * theta);
  return {-2.0 * s * s, std::sin(theta)};
}

inline cplx ipow(cplx z, int r) {
  cplx out = 1.0;
  for (int i = 0; i < r; ++i) out *= z;
  return out;
}

inline double dot(int k1, int k2, const Vec2& h) { return k1 * h[0] + k2 * h[1]; }

inline double norm2(int k1, int k2) { return static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2; }

}  // namespace detail

inline GridFunction translate(const GridFunction& f, Vec2 h) {
  return spectral::apply(f, [&](int k1, int k2) {
    const double th = detail::dot(k1, k2, h);
    return cplx(std::cos(th), std::sin(th));
  });
}
inline GridFunction translate(const GridFunction& f, double h) { return translate(f, Vec2{h, 0.0}); }

// r-fold forward difference, as the multiplier (e^{ik.h} - 1)^r.
inline GridFunction difference(const GridFunction& f, Vec2 h, int r) {
  if (r < 0) throw std::invalid_argument("difference: r must be >= 0");
  return spectral::apply(f, [&](int k1, int k2) { return detail::ipow(detail::expi_minus_one(detail::dot(k1, k2, h)), r); });
}
inline GridFunction difference(const GridFunction& f, double h, int r) { return difference(f, Vec2{h, 0.0}, r); }

struct ModulusGrid {
  int radii = 64;
  int directions = 64;
};

namespace detail {

// ||Delta_h^r f||_B from a precomputed spectrum.
inline double difference_norm(const spectral::Spectrum& S, Vec2 h, int r, const NormSpec& B) {
  auto m = [&](int k1, int k2) { return ipow(expi_minus_one(dot(k1, k2, h)), r); };
  if (B.is_uniform_l2()) {
    // |e^{i th} - 1|^{2r} = (2 - 2 cos th)^r away from the Nyquist aliases
    double acc = 0.0;
    S.for_each_mode([&](std::size_t i, int k1, int k2, double w) {
      const double c2 = std::norm(S.c[i]);
      if (c2 == 0.0) return;
      if (S.is_nyquist(k1, k2)) {
        acc += w * c2 * std::norm(spectral::effective(S, m, k1, k2));
        return;
      }
      const double sh = std::sin(0.5 * dot(k1, k2, h));
      acc += w * c2 * std::pow(4.0 * sh * sh, r);
    });
    return std::sqrt(acc);
  }
  return B(spectral::apply(S, m));
}

// Parseval data of the modes that carry energy; exact zeros and FFT dust below 1e-30 of the total are dropped.
struct EnergyModes {
  std::vector<double> k1, k2, e;
  struct Nyq {
    std::size_t i;
    int k1, k2;
    double w;
  };
  std::vector<Nyq> nyquist;  // handled through the alias-averaged multiplier
};

inline EnergyModes energy_modes(const spectral::Spectrum& S) {
  double total = 0.0;
  S.for_each_mode([&](std::size_t i, int, int, double w) { total += w * std::norm(S.c[i]); });
  EnergyModes m;
  S.for_each_mode([&](std::size_t i, int k1, int k2, double w) {
    const double e = w * std::norm(S.c[i]);
    if (!(e > 1e-30 * total)) return;
    if (S.is_nyquist(k1, k2)) {
      m.nyquist.push_back({i, k1, k2, w});
      return;
    }
    m.k1.push_back(k1);
    m.k2.push_back(k2);
    m.e.push_back(e);
  });
  return m;
}

inline double difference_norm_l2(const spectral::Spectrum& S, const EnergyModes& em, Vec2 h, int r) {
  double acc = 0.0;
  for (std::size_t i = 0; i < em.e.size(); ++i) {
    const double sh = std::sin(0.5 * (em.k1[i] * h[0] + em.k2[i] * h[1]));
    acc += em.e[i] * std::pow(4.0 * sh * sh, r);
  }
  auto m = [&](int k1, int k2) { return ipow(expi_minus_one(dot(k1, k2, h)), r); };
  for (const auto& q : em.nyquist) acc += q.w * std::norm(S.c[q.i] * spectral::effective(S, m, q.k1, q.k2));
  return std::sqrt(acc);
}

}  // namespace detail

// Sup of ||Delta_h^r f|| over a polar grid of |h| <= t; a lower bound for the true modulus.
inline double modulus_raw(const spectral::Spectrum& S, int r, double t, const NormSpec& B, ModulusGrid g = {}) {
  if (!(t >= 0.0)) throw std::invalid_argument("modulus: t must be >= 0");
  if (t == 0.0 || r == 0) return r == 0 ? B(spectral::inverse(S)) : 0.0;
  if (g.radii < 1 || g.directions < 1) throw std::invalid_argument("modulus: resolution must be positive");
  const double cap = std::numbers::pi * std::sqrt(static_cast<double>(S.dim));
  const double te = std::min(t, cap);
  const bool both_signs = !B.measure().is_uniform();
  const bool l2 = B.is_uniform_l2();
  const auto em = l2 ? detail::energy_modes(S) : detail::EnergyModes{};
  auto eval = [&](Vec2 h) { return l2 ? detail::difference_norm_l2(S, em, h, r) : detail::difference_norm(S, h, r, B); };
  double best = 0.0;
  const int dirs = S.dim == 1 ? 1 : g.directions;
  for (int j = 0; j < dirs; ++j) {
    const double th = std::numbers::pi * j / dirs;
    const Vec2 e{std::cos(th), S.dim == 1 ? 0.0 : std::sin(th)};
    for (int k = 1; k <= g.radii; ++k) {
      const double rho = te * k / g.radii;
      best = std::max(best, eval({rho * e[0], rho * e[1]}));
      if (both_signs) best = std::max(best, eval({-rho * e[0], -rho * e[1]}));
    }
  }
  return best;
}

inline double modulus(const GridFunction& f, int r, double t, const NormSpec& B, ModulusGrid g = {}) {
  return modulus_raw(spectral::forward(f), r, t, B, g);
}

// Moduli at ascending ts, made monotone by a running max (still lower bounds).
inline std::vector<double> modulus_profile(const GridFunction& f, int r, const std::vector<double>& ts,
                                           const NormSpec& B, ModulusGrid g = {}) {
  if (!std::is_sorted(ts.begin(), ts.end())) throw std::invalid_argument("modulus_profile: ts must be ascending");
  const auto S = spectral::forward(f);
  std::vector<double> out(ts.size());
  double run = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    run = std::max(run, modulus_raw(S, r, ts[i], B, g));
    out[i] = run;
  }
  return out;
}

// Strongly continuous contraction semigroups acting by Fourier multipliers.
struct Semigroup {
  enum class Kind { shift, heat, abel };
  Kind kind = Kind::shift;
  Vec2 direction{1.0, 0.0};

  static Semigroup shift(Vec2 xi = {1.0, 0.0}) { return {Kind::shift, xi}; }
  static Semigroup heat() { return {Kind::heat, {1.0, 0.0}}; }
  static Semigroup abel() { return {Kind::abel, {1.0, 0.0}}; }

  static Semigroup parse(const std::string& name) {
    if (name == "shift") return shift();
    if (name == "heat") return heat();
    if (name == "abel") return abel();
    throw std::invalid_argument("unknown semigroup '" + name + "' (expected shift, heat or abel)");
  }
  std::string name() const {
    switch (kind) {
      case Kind::shift: return "shift";
      case Kind::heat: return "heat";
      case Kind::abel: return "abel";
    }
    return "?";
  }

  // multiplier of T(u) - I
  cplx minus_one(double u, int k1, int k2) const {
    switch (kind) {
      case Kind::shift: return detail::expi_minus_one(u * detail::dot(k1, k2, direction));
      case Kind::heat: return std::expm1(-u * detail::norm2(k1, k2));
      case Kind::abel: return std::expm1(-u * std::sqrt(detail::norm2(k1, k2)));
    }
    return 0.0;
  }
  cplx multiplier(double u, int k1, int k2) const { return 1.0 + minus_one(u, k1, k2); }

  // Beyond this parameter the sup over u in [0, t] no longer grows (period, or decay below 1e-17).
  double saturation() const {
    if (kind == Kind::shift) {
      const double len = std::max(std::abs(direction[0]), std::abs(direction[1]));
      return 2.0 * std::numbers::pi / len;
    }
    return 40.0;
  }
};

inline GridFunction apply_semigroup(const GridFunction& f, const Semigroup& T, double u) {
  return spectral::apply(f, [&](int k1, int k2) { return T.multiplier(u, k1, k2); });
}

// (T(u) - I)^r f
inline GridFunction semigroup_difference(const GridFunction& f, const Semigroup& T, double u, int r) {
  return spectral::apply(f, [&](int k1, int k2) { return detail::ipow(T.minus_one(u, k1, k2), r); });
}

inline double semigroup_difference_norm(const spectral::Spectrum& S, const Semigroup& T, double u, int r,
                                        const NormSpec& B) {
  auto m = [&](int k1, int k2) { return detail::ipow(T.minus_one(u, k1, k2), r); };
  if (B.is_uniform_l2()) return spectral::l2_norm_multiplied(S, m);
  return B(spectral::apply(S, m));
}

enum class SemigroupKind { heat, abel };

inline GridFunction spectral_semigroup(const GridFunction& f, double t, SemigroupKind kind) {
  if (!(t >= 0.0)) throw std::invalid_argument("spectral_semigroup: t must be >= 0");
  return apply_semigroup(f, kind == SemigroupKind::heat ? Semigroup::heat() : Semigroup::abel(), t);
}

// sup over u in (0, t] on an R-point grid of ||(T(u) - I)^r f||
inline double semigroup_modulus_raw(const spectral::Spectrum& S, const Semigroup& T, int r, double t,
                                    const NormSpec& B, int radii = 64) {
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup modulus: t must be >= 0");
  if (t == 0.0) return 0.0;
  const double te = std::min(t, T.saturation());
  double best = 0.0;
  for (int k = 1; k <= radii; ++k) best = std::max(best, semigroup_difference_norm(S, T, te * k / radii, r, B));
  return best;
}

// (1/t) int_0^t ||(T(u) - I)^r f|| du by the composite midpoint rule.
inline double averaged_modulus(const spectral::Spectrum& S, int r, double t, const Semigroup& T, const NormSpec& B,
                               int quad_points = 128) {
  if (!(t > 0.0)) throw std::invalid_argument("averaged_modulus: t must be > 0");
  if (quad_points < 1) throw std::invalid_argument("averaged_modulus: quad_points must be >= 1");
  double acc = 0.0;
  for (int q = 0; q < quad_points; ++q) acc += semigroup_difference_norm(S, T, (q + 0.5) * t / quad_points, r, B);
  return acc / quad_points;
}
inline double averaged_modulus(const GridFunction& f, int r, double t, const Semigroup& T, const NormSpec& B,
                               int quad_points = 128) {
  return averaged_modulus(spectral::forward(f), r, t, T, B, quad_points);
}

// A^l_m / A^l_n with A^l_m = (m+l)!/(l! m!)
inline double cesaro_weight(int n, int l, int k) {
  if (k > n) return 0.0;
  double w = 1.0;
  for (int i = 1; i <= l; ++i) w *= static_cast<double>(n - k + i) / (n + i);
  return w;
}

inline GridFunction cesaro(const GridFunction& f, int n, int l) {
  detail::require_dim(f, 1, "cesaro");
  if (n < 0 || l < 1) throw std::invalid_argument("cesaro: need n >= 0 and l >= 1");
  return spectral::apply(f, [&](int k1, int) { return cplx(cesaro_weight(n, l, std::abs(k1))); });
}

inline GridFunction laplacian_power(const GridFunction& f, int l) {
  if (l < 0) throw std::invalid_argument("laplacian_power: l must be >= 0");
  return spectral::apply(f, [&](int k1, int k2) { return cplx(std::pow(-detail::norm2(k1, k2), l)); });
}

// (d/d xi)^r as the multiplier (i k.xi)^r
inline GridFunction directional_derivative(const GridFunction& f, Vec2 xi, int r) {
  return spectral::apply(f, [&](int k1, int k2) { return detail::ipow(cplx(0.0, detail::dot(k1, k2, xi)), r); });
}

namespace detail {

// m_tau(a, b) = (1/Q) sum_q cos(tau (a cos th_q + b sin th_q)) for a, b in [0, N/2]; even in a and b.
inline std::vector<double> circle_mean_table(std::size_t n, double tau, int quad_points) {
  const std::size_t h = n / 2 + 1;
  std::vector<double> cs(static_cast<std::size_t>(quad_points)), sn(cs.size());
  for (int q = 0; q < quad_points; ++q) {
    const double th = 2.0 * std::numbers::pi * q / quad_points;
    cs[static_cast<std::size_t>(q)] = std::cos(th);
    sn[static_cast<std::size_t>(q)] = std::sin(th);
  }
  std::vector<double> tab(h * h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = a; b < h; ++b) {
      double acc = 0.0;
      for (std::size_t q = 0; q < cs.size(); ++q) acc += std::cos(tau * (a * cs[q] + b * sn[q]));
      tab[a * h + b] = tab[b * h + a] = acc / quad_points;
    }
  return tab;
}

// weights c_j with V_{l,t} = sum_j c_j V_{jt}: c_j = -2 (-1)^j C(2l, l-j) / C(2l, l)
inline std::vector<double> spherical_combination(int l) {
  std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
  const double mid = numeric::binomial(2 * l, l);
  for (int j = 1; j <= l; ++j) c[static_cast<std::size_t>(j)] = -2.0 * ((j % 2) ? -1.0 : 1.0) * numeric::binomial(2 * l, l - j) / mid;
  return c;
}

}  // namespace detail

// Multiplier table of V_{l,t} over (|k1|, |k2|).
inline std::vector<double> spherical_mean_table(std::size_t n, double t, int l, int quad_points = 256) {
  if (l < 1) throw std::invalid_argument("spherical_mean: l must be >= 1");
  if (quad_points < 4 || quad_points % 4 != 0) throw std::invalid_argument("spherical_mean: quad_points must be a positive multiple of 4");
  const auto c = detail::spherical_combination(l);
  const std::size_t h = n / 2 + 1;
  std::vector<double> tab(h * h, 0.0);
  for (int j = 1; j <= l; ++j) {
    const auto m = detail::circle_mean_table(n, j * t, quad_points);
    for (std::size_t i = 0; i < tab.size(); ++i) tab[i] += c[static_cast<std::size_t>(j)] * m[i];
  }
  return tab;
}

inline GridFunction spherical_mean(const spectral::Spectrum& S, double t, int l, int quad_points = 256) {
  if (S.dim != 2) throw std::invalid_argument("spherical_mean requires d = 2");
  if (!(t > 0.0)) throw std::invalid_argument("spherical_mean: t must be > 0");
  const auto tab = spherical_mean_table(S.n, t, l, quad_points);
  const std::size_t h = S.n / 2 + 1;
  return spectral::apply(S, [&](int k1, int k2) {
    return cplx(tab[static_cast<std::size_t>(std::abs(k1)) * h + static_cast<std::size_t>(std::abs(k2))]);
  });
}
inline GridFunction spherical_mean(const GridFunction& f, double t, int l = 1, int quad_points = 256) {
  detail::require_dim(f, 2, "spherical_mean");
  return spherical_mean(spectral::forward(f), t, l, quad_points);
}

struct Shift {
  Vec2 h;
};
struct Heat {
  double t;
};
struct Abel {
  double t;
};
struct Cesaro {
  int n;
  int l;
};
struct SphericalMean {
  double t;
  int l;
};
struct LaplacianPower {
  int l;
};

using OperatorSpec = std::variant<Shift, Heat, Abel, Cesaro, SphericalMean, LaplacianPower>;

inline GridFunction apply(const OperatorSpec& op, const GridFunction& f) {
  return std::visit(
      [&](const auto& o) -> GridFunction {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Shift>) return translate(f, o.h);
        else if constexpr (std::is_same_v<T, Heat>) return spectral_semigroup(f, o.t, SemigroupKind::heat);
        else if constexpr (std::is_same_v<T, Abel>) return spectral_semigroup(f, o.t, SemigroupKind::abel);
        else if constexpr (std::is_same_v<T, Cesaro>) return cesaro(f, o.n, o.l);
        else if constexpr (std::is_same_v<T, SphericalMean>) return spherical_mean(f, o.t, o.l);
        else return laplacian_power(f, o.l);
      },
      op);
}

inline std::string operator_name(const OperatorSpec& op) {
  static const char* names[] = {"shift", "heat", "abel", "cesaro", "sphmean", "lap"};
  return names[op.index()];
}

}  // namespace jackson::ops
