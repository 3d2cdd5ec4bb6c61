#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jackson/grid.hpp"
#include "jackson/ops.hpp"
#include "jackson/spectral.hpp"

namespace jackson::approx {

using spectral::cplx;

enum class MeanKind { partial_sum, vallee_poussin };

namespace detail {

inline double radius(int k1, int k2) { return std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2); }
inline std::int64_t radius2(int k1, int k2) { return static_cast<std::int64_t>(k1) * k1 + static_cast<std::int64_t>(k2) * k2; }

// keeps modes with |k|^2 <= q
inline auto band_multiplier(std::int64_t q) {
  return [q](int k1, int k2) { return cplx(radius2(k1, k2) <= q ? 1.0 : 0.0); };
}

inline auto vp_multiplier(int n) {
  return [n](int k1, int k2) {
    const double r = radius(k1, k2);
    if (n == 0) return cplx(r == 0.0 ? 1.0 : 0.0);
    if (r <= n) return cplx(1.0);
    if (r >= 2.0 * n) return cplx(0.0);
    return cplx((2.0 * n - r) / n);
  };
}

// largest |k|^2 of a lattice mode with |k| < 2m
inline std::int64_t vp_reach2(int m, int dim) {
  if (m == 0) return 0;
  if (dim == 1) return static_cast<std::int64_t>(2 * m - 1) * (2 * m - 1);
  const std::int64_t lim = 4LL * m * m;
  std::int64_t best = 0;
  for (std::int64_t a = 0; a <= 2 * m; ++a)
    for (std::int64_t b = 0; b <= 2 * m; ++b)
      if (a * a + b * b < lim) best = std::max(best, a * a + b * b);
  return best;
}

// largest de la Vallee Poussin index whose output stays in {|k|^2 <= q}
inline int vp_index_within(std::int64_t q, int dim) {
  int m = 0;
  while (vp_reach2(m + 1, dim) <= q && m < (1 << 20)) ++m;
  return m;
}

}  // namespace detail

inline GridFunction projection(const spectral::Spectrum& S, int n, MeanKind kind) {
  if (n < 0) throw std::invalid_argument("projection: n must be >= 0");
  if (kind == MeanKind::partial_sum) return spectral::apply(S, detail::band_multiplier(static_cast<std::int64_t>(n) * n));
  return spectral::apply(S, detail::vp_multiplier(n));
}
inline GridFunction projection(const GridFunction& f, int n, MeanKind kind) {
  return projection(spectral::forward(f), n, kind);
}

struct ApproxResult {
  double n;  // degree bound (or lambda for the strict class)
  double upper;
  std::optional<double> optimized;
  std::string method;
  double value() const { return optimized ? std::min(*optimized, upper) : upper; }
};

struct DescentOptions {
  int iterations = 500;
  double step_fraction = 0.25;
};

namespace detail {

inline ApproxResult best_approx_band(const GridFunction& f, std::int64_t q, double label_n, const NormSpec& B,
                                     bool refine, DescentOptions opt) {
  const auto S = spectral::forward(f);
  const GridFunction ps = spectral::apply(S, band_multiplier(q));
  const int m = vp_index_within(q, f.dim());
  const GridFunction vp = spectral::apply(S, vp_multiplier(m));
  const double e_ps = B(f - ps), e_vp = B(f - vp);
  ApproxResult res{label_n, std::min(e_ps, e_vp), std::nullopt, e_ps <= e_vp ? "partial_sum" : "vallee_poussin"};
  if (!refine || res.upper == 0.0) return res;
  if (B.is_uniform_l2()) {
    res.optimized = spectral::l2_norm_multiplied(S, [q](int k1, int k2) { return cplx(radius2(k1, k2) <= q ? 0.0 : 1.0); });
    res.method = "parseval_tail";
    return res;
  }
  // projected subgradient descent on the coefficients of the approximant
  GridFunction p = e_ps <= e_vp ? ps : vp;
  double best = res.upper;
  const double alpha0 = opt.step_fraction * best;
  for (int it = 0; it < opt.iterations; ++it) {
    const GridFunction resid = f - p;
    const auto g = B.subgradient(resid.samples());
    const GridFunction dir = spectral::apply(GridFunction(f.dim(), f.n(), g), band_multiplier(q));
    const double dn = lp_norm(dir, 2.0);
    if (!(dn > 0.0)) break;
    p.axpy(alpha0 / std::sqrt(it + 1.0) / dn, dir);
    best = std::min(best, B(f - p));
  }
  res.optimized = best;
  res.method = "subgradient";
  return res;
}

}  // namespace detail

// E_n: distance to trigonometric polynomials with |k| <= n (Euclidean |k| in d = 2).
inline ApproxResult best_approx(const GridFunction& f, int n, const NormSpec& B, bool refine = false,
                                DescentOptions opt = {}) {
  if (n < 0) throw std::invalid_argument("best_approx: n must be >= 0");
  return detail::best_approx_band(f, static_cast<std::int64_t>(n) * n, n, B, refine, opt);
}

// E_lambda: distance to the modes with |k| < lambda.
inline ApproxResult best_approx_strict(const GridFunction& f, double lambda, const NormSpec& B, bool refine = false,
                                       DescentOptions opt = {}) {
  if (!(lambda > 0.0)) throw std::invalid_argument("best_approx_strict: lambda must be > 0");
  const double l2 = lambda * lambda;
  std::int64_t q = l2 > 9e18 ? INT64_MAX / 2 : static_cast<std::int64_t>(std::ceil(l2)) - 1;
  return detail::best_approx_band(f, std::max<std::int64_t>(q, 0), lambda, B, refine, opt);
}

// E_lambda over the ball |k| <= lambda (real lambda).
inline ApproxResult best_approx_ball(const GridFunction& f, double lambda, const NormSpec& B, bool refine = false,
                                     DescentOptions opt = {}) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("best_approx_ball: lambda must be >= 0");
  const double l2 = lambda * lambda;
  const std::int64_t q = l2 > 9e18 ? INT64_MAX / 2 : static_cast<std::int64_t>(std::floor(l2 * (1 + 1e-14)));
  return detail::best_approx_band(f, q, lambda, B, refine, opt);
}

enum class KRoute { realization, heat_difference, spherical_mean };

inline std::string route_name(KRoute r) {
  switch (r) {
    case KRoute::realization: return "realization";
    case KRoute::heat_difference: return "heat-difference";
    case KRoute::spherical_mean: return "spherical-mean";
  }
  return "?";
}
inline KRoute parse_route(const std::string& s) {
  if (s == "realization") return KRoute::realization;
  if (s == "heat" || s == "heat-difference") return KRoute::heat_difference;
  if (s == "spherical" || s == "spherical-mean") return KRoute::spherical_mean;
  throw std::invalid_argument("unknown K-functional route '" + s + "'");
}

struct KFuncResult {
  double t;
  int l;
  KRoute route;
  double value;
  std::vector<std::pair<KRoute, double>> companions;
};

namespace detail {

// min over candidates g of ||f - g|| + weight ||D g||, D a Fourier multiplier
template <class D>
double realization(const spectral::Spectrum& S, const GridFunction& f, double t, double weight, D&& op, const NormSpec& B) {
  std::vector<int> degrees;
  const int top = static_cast<int>(S.n / 4);
  for (int m = 1; m <= top; m *= 2) degrees.push_back(m);
  const double inv = 1.0 / t;
  if (inv < 1e6) {
    const int c = static_cast<int>(std::ceil(inv - 1e-12));
    degrees.push_back(c);
    degrees.push_back(2 * c);
  }
  double best = B(f);  // g = 0
  best = std::min(best, B(spectral::apply(S, [](int k1, int k2) { return cplx(k1 == 0 && k2 == 0 ? 0.0 : 1.0); })));  // g = mean
  best = std::min(best, weight * B(spectral::apply(S, op)));  // g = f
  for (int n : degrees) {
    auto vp = vp_multiplier(n);
    const GridFunction resid = spectral::apply(S, [&](int k1, int k2) { return 1.0 - vp(k1, k2); });
    const double a = B(resid);
    if (a >= best) continue;
    const GridFunction dg = spectral::apply(S, [&](int k1, int k2) { return vp(k1, k2) * cplx(op(k1, k2)); });
    best = std::min(best, a + weight * B(dg));
  }
  return best;
}

inline double k_route_value(const spectral::Spectrum& S, const GridFunction& f, int l, double t, const NormSpec& B, KRoute route,
                            int sphere_quad) {
  switch (route) {
    case KRoute::realization: {
      auto lap = [l](int k1, int k2) { return cplx(std::pow(-static_cast<double>(radius2(k1, k2)), l)); };
      return realization(S, f, t, std::pow(t, 2 * l), lap, B);
    }
    case KRoute::heat_difference:
      return ops::semigroup_difference_norm(S, ops::Semigroup::heat(), t * t, l, B);
    case KRoute::spherical_mean: {
      if (S.dim != 2) throw std::invalid_argument("spherical-mean route requires d = 2");
      const auto tab = ops::spherical_mean_table(S.n, t, l, sphere_quad);
      const std::size_t h = S.n / 2 + 1;
      auto m = [&](int k1, int k2) {
        return cplx(tab[static_cast<std::size_t>(std::abs(k1)) * h + static_cast<std::size_t>(std::abs(k2))] - 1.0);
      };
      if (B.is_uniform_l2()) return spectral::l2_norm_multiplied(S, m);
      return B(spectral::apply(S, m));
    }
  }
  return 0.0;
}

}  // namespace detail

// K_{Delta^l}(f, t^{2l}) by the requested route; heat route uses heat time t^2.
inline KFuncResult k_functional(const GridFunction& f, int l, double t, const NormSpec& B, KRoute route,
                                const std::vector<KRoute>& also = {}, int sphere_quad = 256) {
  if (l < 1) throw std::invalid_argument("k_functional: l must be >= 1");
  if (!(t > 0.0)) throw std::invalid_argument("k_functional: t must be > 0");
  if (route == KRoute::spherical_mean && f.dim() != 2) throw std::invalid_argument("spherical-mean route requires d = 2");
  const auto S = spectral::forward(f);
  KFuncResult res{t, l, route, detail::k_route_value(S, f, l, t, B, route, sphere_quad), {}};
  for (KRoute r : also)
    if (r != route) res.companions.emplace_back(r, detail::k_route_value(S, f, l, t, B, r, sphere_quad));
  return res;
}

enum class AbelRoute { semigroup, realization };

// K_{A^r}(f, t^r) for the Abel semigroup on T^1 (generator |k|).
inline double k_functional_abel(const spectral::Spectrum& S, const GridFunction& f, int r, double t, const NormSpec& B,
                                AbelRoute route = AbelRoute::semigroup) {
  if (r < 1) throw std::invalid_argument("k_functional_abel: r must be >= 1");
  if (!(t > 0.0)) throw std::invalid_argument("k_functional_abel: t must be > 0");
  if (route == AbelRoute::semigroup) return ops::semigroup_difference_norm(S, ops::Semigroup::abel(), t, r, B);
  auto gen = [r](int k1, int k2) { return cplx(std::pow(detail::radius(k1, k2), r)); };
  return detail::realization(S, f, t, std::pow(t, r), gen, B);
}

}  // namespace jackson::approx
