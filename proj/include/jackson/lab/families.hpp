#pragma once
// Named test functions: smooth, Lipschitz, jump-like and seeded random.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jackson/grid.hpp"
#include "jackson/spectral.hpp"

namespace jackson::lab {

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"cos", "abs_sin", "sawtooth", "random"};
  return names;
}

namespace detail {

// sum_{k=1}^{K} sin(k x) / k, built from its coefficients
inline GridFunction sawtooth_1d(std::size_t n, int K) {
  spectral::Spectrum S{1, n, spectral::CVec(n / 2 + 1)};
  for (int k = 1; k <= K && k < static_cast<int>(n / 2); ++k) S.c[k] = spectral::cplx(0.0, -0.5 / k);
  return spectral::inverse(S);
}

// real trigonometric polynomial with Gaussian coefficients of size 1/(1+|k|^2) on 0 < |k| <= K
inline GridFunction random_poly(int dim, std::size_t n, int K, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  const int lim = std::min<int>(K, static_cast<int>(n / 2) - 1);
  spectral::Spectrum S{dim, n, spectral::CVec((dim == 1 ? 1 : n) * (n / 2 + 1))};
  const std::size_t h = n / 2 + 1;
  auto slot = [&](int k1, int k2) -> spectral::cplx& {
    const std::size_t i1 = k1 >= 0 ? static_cast<std::size_t>(k1) : n - static_cast<std::size_t>(-k1);
    return dim == 1 ? S.c[static_cast<std::size_t>(k1)] : S.c[i1 * h + static_cast<std::size_t>(k2)];
  };
  if (dim == 1) {
    for (int k = 1; k <= lim; ++k) {
      const double a = g(rng), b = g(rng);
      slot(k, 0) = spectral::cplx(a, -b) * (0.5 / (1.0 + double(k) * k));
    }
    return spectral::inverse(S);
  }
  // one representative per +-k pair: k2 > 0, or k2 = 0 and k1 > 0
  for (int k2 = 0; k2 <= lim; ++k2)
    for (int k1 = -lim; k1 <= lim; ++k1) {
      if (k2 == 0 && k1 <= 0) continue;
      const double r2 = double(k1) * k1 + double(k2) * k2;
      if (r2 > double(lim) * lim) continue;
      const double a = g(rng), b = g(rng);
      const spectral::cplx c = spectral::cplx(a, -b) * (0.5 / (1.0 + r2));
      slot(k1, k2) = c;
      if (k2 == 0) slot(-k1, 0) = std::conj(c);
    }
  return spectral::inverse(S);
}

}  // namespace detail

// degree <= 0 selects the default N/4 for the truncated families.
inline GridFunction family_function(const std::string& name, int dim, std::size_t n, std::uint64_t seed, int degree = 0) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("test family: d must be 1 or 2");
  const int K = degree > 0 ? degree : static_cast<int>(n / 4);
  if (name == "cos") {
    if (dim == 1) return discretize([](double x) { return std::cos(x); }, n, 1);
    return discretize([](double x, double) { return std::cos(x); }, n, 2);
  }
  if (name == "abs_sin") {
    if (dim == 1) return discretize([](double x) { return std::abs(std::sin(x)); }, n, 1);
    return discretize([](double x, double y) { return std::abs(std::sin(x)) + std::abs(std::sin(y)); }, n, 2);
  }
  if (name == "sawtooth") {
    const auto s = detail::sawtooth_1d(n, K);
    if (dim == 1) return s;
    std::vector<double> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = s[i] + s[j];
    return GridFunction(2, n, std::move(v));
  }
  if (name == "random") return detail::random_poly(dim, n, K, seed);
  throw std::invalid_argument("unknown test function '" + name + "' (expected cos, abs_sin, sawtooth, random or family)");
}

}  // namespace jackson::lab
