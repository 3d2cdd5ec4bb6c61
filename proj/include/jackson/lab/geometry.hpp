#pragma once
// Empirical geometry of a normed space: the convexity constant m, the moduli eta_B and delta_X,
// and the smoothness/convexity duality on finite-dimensional l_q.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackson/grid.hpp"
#include "jackson/lab/report.hpp"
#include "jackson/numeric.hpp"

namespace jackson::lab {

namespace detail {

// random trigonometric polynomial of degree <= K with 1/(1+k^2) coefficient decay
inline std::vector<double> random_trig(std::mt19937_64& rng, std::size_t n, int K) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> a(K + 1), b(K + 1);
  for (int k = 0; k <= K; ++k) {
    a[k] = g(rng) / (1.0 + double(k) * k);
    b[k] = g(rng) / (1.0 + double(k) * k);
  }
  std::vector<double> v(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = GridFunction::node(j, n);
    for (int k = 0; k <= K; ++k) v[j] += a[k] * std::cos(k * x) + (k ? b[k] * std::sin(k * x) : 0.0);
  }
  return v;
}

inline std::vector<double> lincomb(const std::vector<double>& a, double ca, const std::vector<double>& b, double cb) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

}  // namespace detail

struct ConvexityEstimate {
  double m_hat = 0.0;
  double raw_min = 0.0;  // before clamping at 0
  std::vector<double> witness_F, witness_G;
  std::string witness_kind;
  int trials = 0;
  std::uint64_t seed = 0;
};

// (max(||F+G||, ||F-G||)^s - ||F||^s) / ||G||^s
inline double convexity_ratio(const NormSpec& B, const std::vector<double>& F, const std::vector<double>& G, double s) {
  const double nf = B(F), ng = B(G);
  const double big = std::max(B(detail::lincomb(F, 1, G, 1)), B(detail::lincomb(F, 1, G, -1)));
  return (std::pow(big, s) - std::pow(nf, s)) / std::pow(ng, s);
}

// Sampled min of the convexity ratio over (F, G) pairs on a 1-d grid of n points.
// The pairs come from one sequential stream, so a longer run only adds samples and m_hat never increases.
inline ConvexityEstimate estimate_convexity_constant(const NormSpec& B, double s, std::uint64_t seed, int trials,
                                                     std::size_t n = 64) {
  if (!(s >= 2.0) || !std::isfinite(s)) throw std::invalid_argument("estimate_convexity_constant: s must be a finite real >= 2");
  if (trials < 100) throw std::invalid_argument("estimate_convexity_constant: trials must be >= 100");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  static const char* kinds[] = {"random", "near_parallel", "disjoint", "constant_cos"};
  ConvexityEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.raw_min = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const int kind = t % 4;
    const double scale = std::exp(std::log(1e-2) + U(rng) * std::log(1e4));  // ||G|| / ||F|| spread over 1e-2 .. 1e2
    std::vector<double> F = detail::random_trig(rng, n, 8), G = detail::random_trig(rng, n, 8);
    if (kind == 1) {
      const double eps = std::exp(std::log(1e-4) + U(rng) * std::log(1e3));
      G = detail::lincomb(F, 1.0, G, eps);
    } else if (kind == 2) {
      for (std::size_t j = 0; j < n; ++j) (j < n / 2 ? G[j] : F[j]) = 0.0;
    } else if (kind == 3) {
      const double c = U(rng);
      for (std::size_t j = 0; j < n; ++j) {
        F[j] = 1.0;
        G[j] = c * std::cos(GridFunction::node(j, n));
      }
    }
    if (kind != 3) {
      const double nf = B(F), ng = B(G);
      if (!(nf > 0.0) || !(ng > 0.0)) continue;
      for (auto& v : G) v *= scale * nf / ng;
    }
    const double v = convexity_ratio(B, F, G, s);
    if (v < est.raw_min) {
      est.raw_min = v;
      est.witness_F = F;
      est.witness_G = G;
      est.witness_kind = kinds[kind];
    }
  }
  est.m_hat = std::max(0.0, est.raw_min);
  return est;
}

struct SpaceGeometry {
  std::vector<double> sigma, eta;  // eta_B(sigma), sigma[0] = 0
  std::vector<double> eps, delta;  // delta_X(eps), eps[0] = 0
  double eta_exponent = 0.0, delta_exponent = 0.0;
};

// Sampled moduli of smoothness (sup) and convexity (inf) of the unit ball, 16 parameter values each.
inline SpaceGeometry space_moduli(const NormSpec& B, std::size_t n, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("space_moduli: trials must be >= 1");
  if (n < 8 || n % 2) throw std::invalid_argument("space_moduli: N must be even and >= 8");
  std::mt19937_64 rng(seed);
  SpaceGeometry geo;
  const auto sig = numeric::log_grid_n(0.01, 0.3, 16);
  const auto eps = numeric::log_grid_n(0.01, 0.5, 16);
  std::vector<double> eta(sig.size(), 0.0), del(eps.size(), std::numeric_limits<double>::infinity());
  const bool l2 = B.is_uniform_l2();
  for (int t = 0; t < trials; ++t) {
    auto F = detail::random_trig(rng, n, 8), H = detail::random_trig(rng, n, 8);
    const double nf = B(F);
    if (!(nf > 0.0)) continue;
    for (auto& v : F) v /= nf;
    if (t % 2 == 0) {
      // remove the component along F (in the l2 sense)
      double fh = 0.0, ff = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        fh += F[j] * H[j];
        ff += F[j] * F[j];
      }
      for (std::size_t j = 0; j < n; ++j) H[j] -= fh / ff * F[j];
    }
    const double nh = B(H);
    if (!(nh > 0.0)) continue;
    for (auto& v : H) v /= nh;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const double val = 0.5 * B(detail::lincomb(F, 1, H, sig[i])) + 0.5 * B(detail::lincomb(F, 1, H, -sig[i])) - 1.0;
      eta[i] = std::max(eta[i], val);
    }
    // psi(a) = (F + a H)/||F + a H|| moves away from F; bisect a for ||F - psi|| = eps
    auto psi = [&](double a) {
      auto v = detail::lincomb(F, 1, H, a);
      const double nv = B(v);
      for (auto& x : v) x /= nv;
      return v;
    };
    auto dist = [&](double a) { return B(detail::lincomb(F, 1, psi(a), -1)); };
    for (std::size_t i = 0; i < eps.size(); ++i) {
      double lo = 0.0, hi = eps[i];
      while (dist(hi) < eps[i] && hi < 1e3) hi *= 2.0;
      if (dist(hi) < eps[i]) continue;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (dist(mid) < eps[i] ? lo : hi) = mid;
      }
      const auto p = psi(hi);
      del[i] = std::min(del[i], 1.0 - 0.5 * B(detail::lincomb(F, 1, p, 1)));
    }
    if (l2 && t >= 1) break;  // every pair is extremal in a Hilbert space once orthogonalized
  }
  // running envelopes keep the bounds valid and monotone
  for (std::size_t i = 1; i < eta.size(); ++i) eta[i] = std::max(eta[i], eta[i - 1]);
  for (std::size_t i = del.size() - 1; i-- > 0;) del[i] = std::min(del[i], del[i + 1]);
  geo.eta_exponent = numeric::loglog_slope(sig, eta);
  geo.delta_exponent = numeric::loglog_slope(eps, del);
  geo.sigma = {0.0};
  geo.eta = {0.0};
  geo.eps = {0.0};
  geo.delta = {0.0};
  geo.sigma.insert(geo.sigma.end(), sig.begin(), sig.end());
  geo.eta.insert(geo.eta.end(), eta.begin(), eta.end());
  geo.eps.insert(geo.eps.end(), eps.begin(), eps.end());
  geo.delta.insert(geo.delta.end(), del.begin(), del.end());
  return geo;
}

// ---- duality between smoothness of power type q and convexity of power type s = q/(q-1) ----

namespace detail {

inline double lq(const std::vector<double>& x, double q) {
  double acc = 0.0;
  for (double v : x) acc += std::pow(std::abs(v), q);
  return std::pow(acc, 1.0 / q);
}

// ((||x+y||/2 + ||x-y||/2)^q - ||x||^q) / ||y||^q on l_q
inline double smoothness_ratio(const std::vector<double>& x, const std::vector<double>& y, double q) {
  const double a = 0.5 * lq(lincomb(x, 1, y, 1), q) + 0.5 * lq(lincomb(x, 1, y, -1), q);
  return (std::pow(a, q) - std::pow(lq(x, q), q)) / std::pow(lq(y, q), q);
}

// (max(||p+r||, ||p-r||)^s - ||p||^s) / ||r||^s on l_s
inline double convexity_ratio_l(const std::vector<double>& p, const std::vector<double>& r, double s) {
  const double a = std::max(lq(lincomb(p, 1, r, 1), s), lq(lincomb(p, 1, r, -1), s));
  return (std::pow(a, s) - std::pow(lq(p, s), s)) / std::pow(lq(r, s), s);
}

struct PairSearch {
  double best;
  std::vector<double> x, y;
};

// Sampled extremum (sign = +1 max, -1 min) of ratio(x, y) followed by a shrinking random-perturbation refinement.
template <class R>
PairSearch search_pairs(R&& ratio, int dim, int trials, int sign, std::mt19937_64& rng, std::vector<double>* halves) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<PairSearch> found;
  double half[2] = {-sign * std::numeric_limits<double>::infinity(), -sign * std::numeric_limits<double>::infinity()};
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x(dim), y(dim);
    for (auto& v : x) v = g(rng);
    for (auto& v : y) v = g(rng);
    const int kind = t % 3;
    if (kind == 1) {  // sparse: two coordinates each
      for (int i = 2; i < dim; ++i) x[i] = y[i] = 0.0;
    } else if (kind == 2) {  // disjoint supports
      for (int i = 0; i < dim; ++i) (i % 2 ? x[i] : y[i]) = 0.0;
    }
    const double scale = std::exp(std::log(0.05) + U(rng) * std::log(400.0));
    for (auto& v : y) v *= scale;
    const double val = ratio(x, y);
    if (!std::isfinite(val)) continue;
    double& h = half[t < trials / 2 ? 0 : 1];
    h = sign > 0 ? std::max(h, val) : std::min(h, val);
    found.push_back({val, x, y});
  }
  if (found.empty()) throw std::runtime_error("duality search: no admissible samples");
  if (halves) *halves = {half[0], half[1]};
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) { return sign * a.best > sign * b.best; });
  found.resize(std::min<std::size_t>(found.size(), 4));
  for (auto& c : found) {
    double step = 0.3;
    for (int it = 0; it < 600; ++it) {
      auto x = c.x, y = c.y;
      for (auto& v : x) v += step * g(rng) * lq(c.x, 2.0) / std::sqrt(double(dim));
      for (auto& v : y) v += step * g(rng) * lq(c.y, 2.0) / std::sqrt(double(dim));
      const double val = ratio(x, y);
      if (std::isfinite(val) && sign * val > sign * c.best) {
        c = {val, std::move(x), std::move(y)};
      } else if (it % 50 == 49) {
        step *= 0.6;
      }
    }
  }
  return *std::max_element(found.begin(), found.end(), [&](const auto& a, const auto& b) { return sign * a.best < sign * b.best; });
}

}  // namespace detail

// Estimate M on l_q^dim, predict m = M^{-1/(q-1)} for l_s^dim, and compare with the sampled m there.
inline CheckReport verify_duality(double q, int dim, std::uint64_t seed, int trials) {
  if (!(q > 1.0)) throw std::invalid_argument("verify_duality: q must be > 1");
  if (q > 2.0)
    throw std::invalid_argument(
        "verify_duality: q > 2 rejected, no nontrivial Banach space has modulus of smoothness of power type q > 2");
  if (dim < 2) throw std::invalid_argument("verify_duality: dim must be >= 2");
  if (trials < 1) throw std::invalid_argument("verify_duality: trials must be >= 1");
  const double s = q / (q - 1.0);
  std::mt19937_64 rng(seed);
  std::vector<double> hM, hm;
  const auto M = detail::search_pairs([&](const auto& x, const auto& y) { return detail::smoothness_ratio(x, y, q); }, dim, trials,
                                      +1, rng, &hM);
  const auto m = detail::search_pairs([&](const auto& p, const auto& r) { return detail::convexity_ratio_l(p, r, s); }, dim,
                                      trials, -1, rng, &hm);
  const double M_hat = M.best;
  const double m_pred = std::pow(M_hat, -1.0 / (q - 1.0));
  const double m_emp = m.best;
  // sampling tolerance: disagreement of the two half-samples, mapped to the m scale
  const double gap_M = std::abs(std::pow(hM[0], -1.0 / (q - 1.0)) - std::pow(hM[1], -1.0 / (q - 1.0)));
  const double gap_m = std::abs(hm[0] - hm[1]);
  const double tol = std::max({gap_M, gap_m, 1e-3 * m_pred});

  CheckReport rep;
  rep.id = "duality";
  rep.seed = seed;
  rep.params = json{{"q", q}, {"s", s}, {"dim", dim}, {"trials", trials}};
  rep.add("", 1, m_emp, m_pred);
  rep.direction = Direction::lower;
  rep.constant = m_emp / m_pred;
  rep.spread = 1.0;
  rep.pass = std::isfinite(m_emp) && m_emp >= m_pred - 3.0 * tol;
  rep.extras = json{{"M_hat", M_hat}, {"m_pred", m_pred}, {"m_emp", m_emp}, {"tolerance", tol}};
  return rep;
}

}  // namespace jackson::lab
