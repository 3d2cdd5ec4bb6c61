#pragma once

#include <fftw3.h>

#include <complex>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <new>
#include <utility>
#include <vector>

#include "jackson/grid.hpp"

namespace jackson::spectral {

using cplx = std::complex<double>;

template <class T>
struct FftwAllocator {
  using value_type = T;
  FftwAllocator() = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) {}
  T* allocate(std::size_t n) {
    void* p = fftw_malloc(n * sizeof(T));
    if (!p) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) { fftw_free(p); }
  template <class U>
  bool operator==(const FftwAllocator<U>&) const { return true; }
};

using CVec = std::vector<cplx, FftwAllocator<cplx>>;
using RVec = std::vector<double, FftwAllocator<double>>;

// Plans are created once per (d, N) under a lock and then only executed (new-array API).
class PlanCache {
 public:
  struct Plans {
    fftw_plan r2c;
    fftw_plan c2r;
  };
  static const Plans& get(int dim, std::size_t n) {
    static PlanCache cache;
    std::lock_guard<std::mutex> lock(cache.mu_);
    auto key = std::pair{dim, n};
    auto it = cache.plans_.find(key);
    if (it != cache.plans_.end()) return it->second;
    const std::size_t real_count = GridFunction::count(dim, n);
    const std::size_t cplx_count = (dim == 1 ? 1 : n) * (n / 2 + 1);
    RVec r(real_count);
    CVec c(cplx_count);
    auto* cp = reinterpret_cast<fftw_complex*>(c.data());
    const int ni = static_cast<int>(n);
    Plans p{};
    if (dim == 1) {
      p.r2c = fftw_plan_dft_r2c_1d(ni, r.data(), cp, FFTW_ESTIMATE);
      p.c2r = fftw_plan_dft_c2r_1d(ni, cp, r.data(), FFTW_ESTIMATE);
    } else {
      p.r2c = fftw_plan_dft_r2c_2d(ni, ni, r.data(), cp, FFTW_ESTIMATE);
      p.c2r = fftw_plan_dft_c2r_2d(ni, ni, cp, r.data(), FFTW_ESTIMATE);
    }
    if (!p.r2c || !p.c2r) throw std::runtime_error("FFTW planning failed");
    return cache.plans_.emplace(key, p).first->second;
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [k, p] : plans_) {
      fftw_destroy_plan(p.r2c);
      fftw_destroy_plan(p.c2r);
    }
  }
  std::mutex mu_;
  std::map<std::pair<int, std::size_t>, Plans> plans_;
};

inline int wavenumber(std::size_t i, std::size_t n) {
  return i <= n / 2 ? static_cast<int>(i) : static_cast<int>(i) - static_cast<int>(n);
}

// Normalized Fourier coefficients c_k = mean(f e^{-ik.x}) in FFTW's half-spectrum layout.
struct Spectrum {
  int dim;
  std::size_t n;
  CVec c;

  std::size_t half() const { return n / 2 + 1; }
  std::size_t rows() const { return dim == 1 ? 1 : n; }

  // Visits every stored mode as (storage index, k1, k2, Parseval weight); for d = 1, k2 = 0.
  template <class F>
  void for_each_mode(F&& fn) const {
    const std::size_t h = half();
    if (dim == 1) {
      for (std::size_t i = 0; i < h; ++i) fn(i, static_cast<int>(i), 0, (i == 0 || i == n / 2) ? 1.0 : 2.0);
      return;
    }
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      const int k1 = wavenumber(i1, n);
      for (std::size_t i2 = 0; i2 < h; ++i2)
        fn(i1 * h + i2, k1, static_cast<int>(i2), (i2 == 0 || i2 == n / 2) ? 1.0 : 2.0);
    }
  }

  bool is_nyquist(int k1, int k2) const {
    const int h = static_cast<int>(n / 2);
    return k1 == h || k1 == -h || (dim == 2 && (k2 == h || k2 == -h));
  }
};

inline Spectrum forward(const GridFunction& f) {
  const auto& plans = PlanCache::get(f.dim(), f.n());
  Spectrum s{f.dim(), f.n(), CVec((f.dim() == 1 ? 1 : f.n()) * (f.n() / 2 + 1))};
  RVec in(f.samples().begin(), f.samples().end());
  fftw_execute_dft_r2c(plans.r2c, in.data(), reinterpret_cast<fftw_complex*>(s.c.data()));
  const double scale = 1.0 / static_cast<double>(f.size());
  for (auto& z : s.c) z *= scale;
  return s;
}

inline GridFunction inverse(const Spectrum& s) {
  const auto& plans = PlanCache::get(s.dim, s.n);
  CVec scratch(s.c);  // c2r overwrites its input
  RVec out(GridFunction::count(s.dim, s.n));
  fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
  return GridFunction(s.dim, s.n, std::vector<double>(out.begin(), out.end()));
}

// Multiplier value used for storage mode (k1, k2): at Nyquist indices the mean over the +-N/2 aliases.
template <class M>
cplx effective(const Spectrum& s, M& m, int k1, int k2) {
  if (!s.is_nyquist(k1, k2)) return m(k1, k2);
  const int h = static_cast<int>(s.n / 2);
  const bool n1 = (k1 == h || k1 == -h), n2 = (s.dim == 2 && (k2 == h || k2 == -h));
  cplx acc = 0.0;
  int cnt = 0;
  for (int a : {k1, -k1}) {
    if (a != k1 && !n1) continue;
    for (int b : {k2, -k2}) {
      if (b != k2 && !n2) continue;
      acc += cplx(m(a, b));
      ++cnt;
    }
  }
  return acc / static_cast<double>(cnt);
}

// Multiplies by a Hermitian multiplier m(k1, k2).
template <class M>
Spectrum multiply(const Spectrum& s, M&& m) {
  Spectrum out{s.dim, s.n, CVec(s.c.size())};
  s.for_each_mode([&](std::size_t i, int k1, int k2, double) { out.c[i] = s.c[i] * effective(s, m, k1, k2); });
  return out;
}

template <class M>
GridFunction apply(const Spectrum& s, M&& m) {
  return inverse(multiply(s, m));
}
template <class M>
GridFunction apply(const GridFunction& f, M&& m) {
  return inverse(multiply(forward(f), m));
}

// Discrete L2 norm (normalized measure) of the function with the given spectrum.
inline double l2_norm(const Spectrum& s) {
  double acc = 0.0;
  s.for_each_mode([&](std::size_t i, int, int, double w) { acc += w * std::norm(s.c[i]); });
  return std::sqrt(acc);
}

// L2 norm of the multiplied function without a transform.
template <class M>
double l2_norm_multiplied(const Spectrum& s, M&& m) {
  double acc = 0.0;
  s.for_each_mode([&](std::size_t i, int k1, int k2, double w) {
    if (s.c[i] == cplx(0.0)) return;
    acc += w * std::norm(s.c[i] * effective(s, m, k1, k2));
  });
  return std::sqrt(acc);
}

}  // namespace jackson::spectral
