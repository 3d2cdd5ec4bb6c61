#pragma once
// The inequality checks. Each computes both sides on a dyadic range and judges the ratio.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "jackson/approx.hpp"
#include "jackson/lab/geometry.hpp"
#include "jackson/lab/params.hpp"
#include "jackson/lab/report.hpp"
#include "jackson/ops.hpp"

namespace jackson::lab {

inline constexpr double noise_scale = 1e-11;

namespace detail {

using spectral::cplx;

template <class M>
double mult_norm(const spectral::Spectrum& S, M&& m, const NormSpec& B) {
  if (B.is_uniform_l2()) return spectral::l2_norm_multiplied(S, m);
  return B(spectral::apply(S, m));
}

inline std::string series_name(const std::string& f, int r) { return f + ".r" + std::to_string(r); }

struct Truncated {
  double sum = 0.0;
  int last = 0;
};

// sum_{j >= j0} 2^{-j rs} v(j)^s for nondecreasing v bounded by cap; stops once the geometric bound on
// everything after j falls to rel times the partial sum.
template <class V>
Truncated dyadic_series(V&& v, int j0, double rs, double s, double cap, double rel = 1e-14) {
  Truncated out{0.0, j0};
  if (!(cap > 0.0)) return out;
  const double q = std::exp2(-rs);
  const double caps = std::pow(cap, s);
  for (int j = j0;; ++j) {
    const double w = std::exp2(-j * rs);
    out.sum += w * std::pow(v(j), s);
    out.last = j;
    if (w * q / (1.0 - q) * caps <= rel * out.sum || w == 0.0) break;
  }
  return out;
}

// Moduli at 2^m, made nondecreasing in m by a running max. Beyond the cap pi sqrt(d) the value is constant.
class DyadicModulus {
 public:
  DyadicModulus(const spectral::Spectrum& S, int r, const NormSpec& B, ops::ModulusGrid g, int m_lo)
      : S_(S), r_(r), B_(B), g_(g), m_lo_(m_lo) {
    const double cap = std::numbers::pi * std::sqrt(double(S.dim));
    m_hi_ = static_cast<int>(std::ceil(std::log2(cap)));
  }
  double operator()(int m) {
    m = std::max(m, m_lo_);
    m = std::min(m, m_hi_);
    while (static_cast<int>(vals_.size()) <= m - m_lo_) {
      const int mm = m_lo_ + static_cast<int>(vals_.size());
      const double v = ops::modulus_raw(S_, r_, std::ldexp(1.0, mm), B_, g_);
      vals_.push_back(vals_.empty() ? v : std::max(v, vals_.back()));
    }
    return vals_[m - m_lo_];
  }
  double plateau() { return (*this)(m_hi_); }

 private:
  const spectral::Spectrum& S_;
  int r_;
  const NormSpec& B_;
  ops::ModulusGrid g_;
  int m_lo_, m_hi_;
  std::vector<double> vals_;
};

// Best approximation by modes with |k|^2 <= q, memoized on the attainable q.
class ApproxTable {
 public:
  ApproxTable(const GridFunction& f, const NormSpec& B, bool refine) : f_(f), B_(B), refine_(refine) {
    const long long h = static_cast<long long>(f.n() / 2);
    q_max_ = f.dim() * h * h;
    if (B.is_uniform_l2()) {
      const auto S = spectral::forward(f);
      std::map<long long, double> energy;
      S.for_each_mode([&](std::size_t i, int k1, int k2, double w) {
        energy[static_cast<long long>(k1) * k1 + static_cast<long long>(k2) * k2] += w * std::norm(S.c[i]);
      });
      double tail = 0.0;
      for (auto it = energy.rbegin(); it != energy.rend(); ++it) {
        l2_tail_[it->first] = tail;  // energy strictly above this radius
        tail += it->second;
      }
      l2_tail_[-1] = tail;
    }
  }
  // E over {|k|^2 <= q}
  double by_q(long long q) {
    q = std::min(q, q_max_);
    if (!l2_tail_.empty()) {
      auto it = l2_tail_.upper_bound(q);
      --it;  // largest present radius^2 <= q
      return std::sqrt(std::max(0.0, it->second));
    }
    auto it = memo_.find(q);
    if (it != memo_.end()) return it->second;
    const double v = approx::detail::best_approx_band(f_, q, std::sqrt(double(q)), B_, refine_, {}).value();
    memo_[q] = v;
    return v;
  }
  double ball(double lambda) { return by_q(static_cast<long long>(std::floor(lambda * lambda * (1 + 1e-14)))); }
  double strict(double lambda) {
    if (lambda <= 0.0) return B_(f_);
    return by_q(static_cast<long long>(std::ceil(lambda * lambda * (1 - 1e-14))) - 1);
  }
  double constants() { return by_q(0); }

 private:
  const GridFunction& f_;
  const NormSpec& B_;
  bool refine_;
  long long q_max_ = 0;
  std::map<long long, double> l2_tail_;
  std::map<long long, double> memo_;
};

// K_{Delta^l}(f, t^{2l}) at spatial t = 2^{e/2}, memoized on the integer e.
class KTable {
 public:
  KTable(const GridFunction& f, const spectral::Spectrum& S, int l, const NormSpec& B, approx::KRoute route)
      : f_(f), S_(S), l_(l), B_(B), route_(route) {}
  double half_exp(int e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    const double v = at(std::exp2(0.5 * e));
    memo_[e] = v;
    return v;
  }
  double at(double t) const { return approx::detail::k_route_value(S_, f_, l_, t, B_, route_, 256); }
  double cap() const { return std::ldexp(1.0, l_ + 1) * B_(f_); }

 private:
  const GridFunction& f_;
  const spectral::Spectrum& S_;
  int l_;
  const NormSpec& B_;
  approx::KRoute route_;
  std::map<int, double> memo_;
};

inline approx::KRoute route_param(const Params& p, const std::string& def, int d) {
  approx::KRoute r;
  try {
    r = approx::parse_route(p.string("route", def));
  } catch (const std::invalid_argument& e) {
    throw ParamError(p.field("route"), e.what());
  }
  if (r == approx::KRoute::spherical_mean && d != 2) throw ParamError(p.field("route"), "spherical-mean route requires d = 2");
  return r;
}

inline json common_params(const Params& p, const NormSpec& B, double s, const std::vector<int>& rs, int d, std::size_t n) {
  return json{{"B", io::to_json(B)}, {"s", s}, {"r", rs}, {"d", d}, {"N", n}, {"f", p.raw().value("f", json("family"))}};
}

inline void note_truncation(CheckReport& rep, const std::string& series, int n, int last) {
  rep.extras["truncation"][series.empty() ? "all" : series][std::to_string(n)] = last;
}

inline void require_dim1(const Params& p, int d, const std::string& what) {
  if (d != 1) throw ParamError(p.field("d"), what + " is defined on the circle only (d = 1)");
}

}  // namespace detail

// ---- basic-2.1: ||(T - I)^r f|| >= m1 (sum_j 2^{-jrs} ||(T^{2^j} - I)^{r+1} f||^s)^{1/s} ----

namespace detail {

// Multiplier of T^{2^j}; semigroups scale their parameter, other operators are squared j times.
struct ContractionOp {
  std::string kind;
  ops::Vec2 h{0.3, 0.0};
  double t = 0.1;
  int n = 8, l = 1, quad = 256;
  std::vector<double> table;  // spherical mean multiplier by (|k1|, |k2|)
  std::size_t half = 0;

  cplx base(int k1, int k2) const {
    if (kind == "shift") return std::exp(cplx(0.0, k1 * h[0] + k2 * h[1]));
    if (kind == "heat") return std::exp(-t * (double(k1) * k1 + double(k2) * k2));
    if (kind == "abel") return std::exp(-t * std::sqrt(double(k1) * k1 + double(k2) * k2));
    if (kind == "cesaro") return ops::cesaro_weight(n, l, std::abs(k1));
    return table[static_cast<std::size_t>(std::abs(k1)) * half + static_cast<std::size_t>(std::abs(k2))];
  }
  cplx power(int j, int k1, int k2) const {
    const double f = std::ldexp(1.0, j);
    if (kind == "shift") return std::exp(cplx(0.0, f * (k1 * h[0] + k2 * h[1])));
    if (kind == "heat") return std::exp(-f * t * (double(k1) * k1 + double(k2) * k2));
    if (kind == "abel") return std::exp(-f * t * std::sqrt(double(k1) * k1 + double(k2) * k2));
    cplx z = base(k1, k2);
    for (int i = 0; i < j; ++i) z *= z;
    return z;
  }
  json to_json() const {
    json j{{"op", kind}};
    if (kind == "shift") j["h"] = {h[0], h[1]};
    else if (kind == "heat" || kind == "abel") j["t"] = t;
    else if (kind == "cesaro") j.update({{"n", n}, {"l", l}});
    else j.update({{"t", t}, {"l", l}});
    return j;
  }
};

inline ContractionOp contraction_param(const Params& p, int d, std::size_t N) {
  ContractionOp op;
  op.kind = "shift";
  if (!p.has("T")) return op;
  const json& T = p.at("T");
  const std::string path = p.field("T");
  json obj = T.is_string() ? json{{"op", T}} : T;
  op.kind = io::string_or(obj, "op", "", path);
  if (op.kind.empty()) throw ParamError(io::join(path, "op"), "missing");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    static const std::set<std::string> known = {"op", "h", "t", "n", "l", "quad"};
    if (!known.count(it.key())) throw ParamError(io::join(path, it.key()), "unknown parameter");
  }
  if (op.kind == "shift") {
    if (obj.contains("h")) {
      const json& h = obj.at("h");
      if (h.is_array()) {
        const auto v = io::reals(h, io::join(path, "h"));
        if (v.size() != 2) throw ParamError(io::join(path, "h"), "expected a number or [h1, h2]");
        op.h = {v[0], v[1]};
      } else {
        op.h = {io::as_real(h, io::join(path, "h")), 0.0};
      }
    }
  } else if (op.kind == "heat" || op.kind == "abel" || op.kind == "sphmean") {
    op.t = io::real_or(obj, "t", 0.1, path);
    if (!(op.t > 0.0)) throw ParamError(io::join(path, "t"), "must be > 0");
    if (op.kind == "sphmean") {
      if (d != 2) throw ParamError(io::join(path, "op"), "sphmean requires d = 2");
      op.l = static_cast<int>(io::int_or(obj, "l", 1, path));
      op.quad = static_cast<int>(io::int_or(obj, "quad", 256, path));
      if (op.l < 1) throw ParamError(io::join(path, "l"), "must be >= 1");
      op.table = ops::spherical_mean_table(N, op.t, op.l, op.quad);
      op.half = N / 2 + 1;
    }
  } else if (op.kind == "cesaro") {
    if (d != 1) throw ParamError(io::join(path, "op"), "cesaro requires d = 1");
    op.n = static_cast<int>(io::int_or(obj, "n", 8, path));
    op.l = static_cast<int>(io::int_or(obj, "l", 1, path));
    if (op.n < 0 || op.l < 1) throw ParamError(path, "cesaro needs n >= 0 and l >= 1");
  } else {
    throw ParamError(io::join(path, "op"), "unknown operator '" + op.kind + "' (expected shift, heat, abel, cesaro or sphmean)");
  }
  return op;
}

}  // namespace detail

inline CheckReport check_basic_2_1(const Params& p) {
  CheckReport rep;
  rep.id = "basic-2.1";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const int L = static_cast<int>(p.integer("L", 10));
  if (L < 0 || L > 40) throw ParamError(p.field("L"), "must lie in 0..40");
  const auto op = detail::contraction_param(p, d, fns.front().f.n());
  double m;
  std::string m_source;
  if (p.has("m")) {
    m = p.real("m", 1.0);
    if (!(m > 0.0)) throw ParamError(p.field("m"), "must be > 0");
    m_source = "given";
  } else if (B.m()) {
    m = *B.m();
    m_source = "norm";
  } else if (B.is_uniform_l2() && s == 2.0) {
    m = 1.0;
    m_source = "parallelogram";
  } else {
    m = estimate_convexity_constant(B, s, p.seed(), 400).m_hat;
    m_source = "estimated";
  }
  const double tol = p.real("tolerance", 0.02);
  rep.seed = p.seed();
  p.finish();

  const double m1 = std::pow(m, 1.0 / s) / 2.0;
  bool chain_monotone = true;
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      const double lhs = detail::mult_norm(S, [&](int k1, int k2) { return ops::detail::ipow(op.base(k1, k2) - 1.0, r); }, B);
      double acc = 0.0, prev = -1.0;
      for (int l = 0; l <= L; ++l) {
        const double term = detail::mult_norm(
            S, [&](int k1, int k2) { return ops::detail::ipow(op.power(l, k1, k2) - 1.0, r + 1); }, B);
        acc += std::exp2(-l * r * s) * std::pow(term, s);
        const double rhs = std::pow(acc, 1.0 / s);
        if (rhs < prev) chain_monotone = false;
        prev = rhs;
        rep.add(series, l, lhs, rhs);
      }
    }
  }
  judge_lower(rep, m1 - tol);
  rep.pass = rep.pass && chain_monotone;
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"T", op.to_json()}, {"L", L}, {"m", m}, {"m_source", m_source}, {"tolerance", tol}});
  rep.extras.update({{"m1_proof", m1}, {"threshold", m1 - tol}, {"chain_nondecreasing", chain_monotone}});
  return rep;
}

// ---- jackson-1.4: 2^{-nr} (sum_{j<=n} 2^{jrs} w^{r+1}(2^{-j})^s)^{1/s} <= C w^r(2^{-n}) ----

inline CheckReport check_jackson_1_4(const Params& p) {
  CheckReport rep;
  rep.id = "jackson-1.4";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto grid = p.modulus_grid();
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    for (int r : rs) {
      detail::DyadicModulus wr(S, r, B, grid, -n1), wr1(S, r + 1, B, grid, -n1);
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) acc += std::exp2(j * r * s) * std::pow(wr1(-j), s);
        rep.add(detail::series_name(fn.name, r), n, std::exp2(-n * r) * std::pow(acc, 1.0 / s), wr(-n));
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"n_min", n0}, {"n_max", n1}, {"radii", grid.radii}, {"directions", grid.directions}, {"spread_bound", bound}});
  return rep;
}

// ---- jackson-4.8: K_r(f, tau^r) >= C (sum_j 2^{-jrs} K_{r+1}(f, (2^j tau)^{r+1})^s)^{1/s}, heat time tau = 4^{-n} ----

inline CheckReport check_jackson_4_8(const Params& p) {
  CheckReport rep;
  rep.id = "jackson-4.8";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto form = p.string("form", "sum");
  if (form != "sum" && form != "integral" && form != "moduli")
    throw ParamError(p.field("form"), "expected sum, integral or moduli");
  const auto route = detail::route_param(p, "heat", d);
  const int per_octave = static_cast<int>(p.integer("per_octave", 16));
  if (per_octave < 1) throw ParamError(p.field("per_octave"), "must be >= 1");
  const auto grid = p.modulus_grid();
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();

  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      if (form == "moduli") {
        // w^{2r}(t) >= C t^{2r} (int_t^inf u^{-2rs} w^{2r+2}(u)^s du/u)^{1/s}, spatial t = 2^{-n}
        const double cap = std::numbers::pi * std::sqrt(double(d));
        const double xcap = std::log2(cap);
        std::vector<double> mids;
        for (int i = -n1 * per_octave; (i + 0.0) / per_octave < xcap; ++i)
          mids.push_back(std::exp2(std::min((i + 0.5) / per_octave, 0.5 * (i / double(per_octave) + xcap))));
        const auto w_hi = ops::modulus_profile(fn.f, 2 * r + 2, mids, B, grid);
        const double w_cap = std::max(w_hi.back(), ops::modulus_raw(S, 2 * r + 2, cap, B, grid));
        detail::DyadicModulus w_lo(S, 2 * r, B, grid, -n1);
        const double e = 2.0 * r * s;
        for (int n = std::max(n0, 1); n <= n1; ++n) {
          double acc = std::pow(w_cap, s) * std::pow(cap, -e) / e;  // beyond the cap the modulus is constant
          for (std::size_t i = static_cast<std::size_t>((n1 - n) * per_octave); i < mids.size(); ++i) {
            const double x0 = (static_cast<double>(i) - n1 * per_octave) / per_octave;
            const double x1 = std::min(x0 + 1.0 / per_octave, xcap);
            const double u = mids[i];
            acc += std::pow(u, -e) * std::pow(w_hi[i], s) * (x1 - x0) * std::numbers::ln2;
          }
          const double t = std::exp2(-n);
          rep.add(series, n, std::pow(t, 2.0 * r) * std::pow(acc, 1.0 / s), w_lo(-n));
        }
        continue;
      }
      detail::KTable Kr(fn.f, S, r, B, route), Kr1(fn.f, S, r + 1, B, route);
      const double cap = Kr1.cap();
      if (form == "sum") {
        for (int n = std::max(n0, 1); n <= n1; ++n) {
          // K_{r+1} at heat time 2^j 4^{-n}: spatial 2^{(j - 2n)/2}
          const auto tr = detail::dyadic_series([&](int j) { return Kr1.half_exp(j - 2 * n); }, 1, r * s, s, cap);
          detail::note_truncation(rep, series, n, tr.last);
          rep.add(series, n, std::pow(tr.sum, 1.0 / s), Kr.half_exp(-2 * n));
        }
      } else {
        // tau^r (int_tau^inf u^{-rs} K_{r+1}(f, u^{r+1})^s du/u)^{1/s}; log2 u on a shared midpoint grid
        const double e = r * s;
        for (int n = std::max(n0, 1); n <= n1; ++n) {
          double acc = 0.0;
          int i = -2 * n * per_octave;
          for (;; ++i) {
            const double x = (i + 0.5) / per_octave;
            const double u = std::exp2(x);
            // K at heat time u: spatial sqrt(u); memoized on the grid index through the half exponent table
            const double k = Kr1.at(std::sqrt(u));
            acc += std::pow(u, -e) * std::pow(k, s) * std::numbers::ln2 / per_octave;
            const double U = std::exp2((i + 1.0) / per_octave);
            if (std::pow(U, -e) * std::pow(cap, s) / e <= 1e-14 * acc || std::pow(U, -e) == 0.0) break;
          }
          detail::note_truncation(rep, series, n, i);
          const double tau = std::exp2(-2.0 * n);
          rep.add(series, n, std::pow(tau, r) * std::pow(acc, 1.0 / s), Kr.half_exp(-2 * n));
        }
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"form", form}, {"n_min", n0}, {"n_max", n1}, {"spread_bound", bound}});
  if (form == "moduli") rep.params.update({{"radii", grid.radii}, {"directions", grid.directions}, {"per_octave", per_octave}});
  else rep.params["route"] = approx::route_name(route);
  if (form == "integral") rep.params["per_octave"] = per_octave;
  return rep;
}

// ---- jackson-4.9: K_r(f, tau^r) >= C (sum_j 2^{-jrs} E_{1/(2^{j/2} tau^{1/2})}^s)^{1/s} ----

inline CheckReport check_jackson_4_9(const Params& p) {
  CheckReport rep;
  rep.id = "jackson-4.9";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto form = p.string("form", "sum");
  if (form != "sum" && form != "integral") throw ParamError(p.field("form"), "expected sum or integral");
  const auto route = detail::route_param(p, "heat", d);
  const bool refine = p.boolean("refine", false);
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();

  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    detail::ApproxTable E(fn.f, B, refine);
    const double e0 = E.constants();
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      detail::KTable Kr(fn.f, S, r, B, route);
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        double lhs;
        if (form == "sum") {
          // lambda_j = 2^{n - j/2}, so lambda_j^2 = 2^{2n - j}
          auto Ej = [&](int j) { return j <= 2 * n ? E.by_q(1LL << (2 * n - j)) : e0; };
          const auto tr = detail::dyadic_series(Ej, 1, r * s, s, e0);
          detail::note_truncation(rep, series, n, tr.last);
          lhs = std::pow(tr.sum, 1.0 / s);
        } else {
          // tau^r (int_{tau^{1/2}}^inf u^{-2rs} E_{1/u}^s du/u)^{1/s}; E_{1/u} is constant while floor(1/u^2) = m
          const double e = 2.0 * r * s;
          const long long M = 1LL << (2 * n);
          double acc = std::pow(e0, s) / e;  // u > 1
          for (long long m = 1; m < M; ++m) {
            const double Em = E.by_q(m);
            if (Em == 0.0) break;  // nonincreasing in m
            acc += std::pow(Em, s) * (std::pow(double(m + 1), e / 2) - std::pow(double(m), e / 2)) / e;
          }
          lhs = std::pow(std::exp2(-2.0 * n), r) * std::pow(acc, 1.0 / s);
        }
        rep.add(series, n, lhs, Kr.half_exp(-2 * n));
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"form", form}, {"route", approx::route_name(route)}, {"n_min", n0}, {"n_max", n1},
                     {"refine", refine}, {"spread_bound", bound}});
  return rep;
}

// ---- entire-4.12: E_lambda <= C K_r(f, lambda^{-2r}), lambda = 2^n ----

inline CheckReport check_entire_4_12(const Params& p) {
  CheckReport rep;
  rep.id = "entire-4.12";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range(0, 8);
  const auto route = detail::route_param(p, "realization", d);
  const bool refine = p.boolean("refine", false);
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    detail::ApproxTable E(fn.f, B, refine);
    for (int r : rs) {
      detail::KTable Kr(fn.f, S, r, B, route);
      for (int n = n0; n <= n1; ++n)
        rep.add(detail::series_name(fn.name, r), n, E.ball(std::ldexp(1.0, n)), Kr.half_exp(-2 * n));
    }
  }
  judge_upper(rep, bound);
  rep.params = json{{"B", io::to_json(B)}, {"r", rs}, {"d", d}, {"N", fns.front().f.n()}, {"route", approx::route_name(route)},
                    {"n_min", n0}, {"n_max", n1}, {"refine", refine}, {"spread_bound", bound}};
  return rep;
}

// ---- jackson-5.9 / 5.10: Abel semigroup on the circle ----

inline CheckReport check_jackson_5_9(const Params& p) {
  CheckReport rep;
  rep.id = "jackson-5.9";
  const int d = p.dim();
  detail::require_dim1(p, d, "the Abel semigroup check");
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto rname = p.string("route", "semigroup");
  if (rname != "semigroup" && rname != "realization") throw ParamError(p.field("route"), "expected semigroup or realization");
  const auto route = rname == "semigroup" ? approx::AbelRoute::semigroup : approx::AbelRoute::realization;
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      std::map<int, double> k1;
      auto K1 = [&](int m) {
        auto it = k1.find(m);
        if (it != k1.end()) return it->second;
        return k1[m] = approx::k_functional_abel(S, fn.f, r + 1, std::ldexp(1.0, m), B, route);
      };
      const double cap = std::ldexp(1.0, r + 1) * B(fn.f);
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        const auto tr = detail::dyadic_series([&](int j) { return K1(j - n); }, 1, r * s, s, cap);
        detail::note_truncation(rep, series, n, tr.last);
        rep.add(series, n, std::pow(tr.sum, 1.0 / s), approx::k_functional_abel(S, fn.f, r, std::ldexp(1.0, -n), B, route));
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"route", rname}, {"n_min", n0}, {"n_max", n1}, {"spread_bound", bound}});
  return rep;
}

inline CheckReport check_jackson_5_10(const Params& p) {
  CheckReport rep;
  rep.id = "jackson-5.10";
  const int d = p.dim();
  detail::require_dim1(p, d, "the Abel semigroup check");
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto form = p.string("form", "dyadic");
  if (form != "dyadic" && form != "prime") throw ParamError(p.field("form"), "expected dyadic or prime");
  const auto rname = p.string("route", "semigroup");
  if (rname != "semigroup" && rname != "realization") throw ParamError(p.field("route"), "expected semigroup or realization");
  const auto route = rname == "semigroup" ? approx::AbelRoute::semigroup : approx::AbelRoute::realization;
  const bool refine = p.boolean("refine", false);
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    detail::ApproxTable E(fn.f, B, refine);
    auto En = [&](long long m) { return E.by_q(m * m); };  // degree <= m
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        double lhs = 0.0;
        if (form == "dyadic") {
          for (int j = 1; j <= n; ++j) lhs += std::exp2(-j * r * s) * std::pow(En(1LL << (n - j)), s);
          lhs = std::pow(lhs, 1.0 / s);
        } else {
          const double t = std::ldexp(1.0, -n);
          // weight m^{rs-1}: the dyadic sum with m = 2^{n-j} read as a dm/m integral
          for (long long m = 1; m <= (1LL << n); ++m) lhs += std::pow(double(m), r * s - 1) * std::pow(En(m), s);
          lhs = std::pow(t, r) * std::pow(lhs, 1.0 / s);
        }
        rep.add(series, n, lhs, approx::k_functional_abel(S, fn.f, r, std::ldexp(1.0, -n), B, route));
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"form", form}, {"route", rname}, {"n_min", n0}, {"n_max", n1}, {"refine", refine}, {"spread_bound", bound}});
  return rep;
}

// ---- cesaro-5.1: ||C_n^l f|| <= ||f|| in Luxemburg and Orlicz norms ----

inline std::vector<YoungFunction> young_list(const Params& p, const std::string& key, std::vector<YoungFunction> def) {
  if (!p.has(key)) return def;
  const json& v = p.at(key);
  if (!v.is_array() || v.empty()) throw ParamError(p.field(key), "expected a non-empty array of Young function records");
  std::vector<YoungFunction> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(io::young_from_json(v[i], p.field(key) + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<YoungFunction> default_youngs() {
  return {YoungFunction::power(2.0), YoungFunction::zygmund(2.0, 0.5), YoungFunction::two_power(1.5, 3.0)};
}

inline CheckReport check_cesaro_5_1(const Params& p) {
  CheckReport rep;
  rep.id = "cesaro-5.1";
  const int d = p.dim();
  detail::require_dim1(p, d, "the Cesaro contraction check");
  const std::size_t N = p.grid_n(d);
  const auto phis = young_list(p, "phi", default_youngs());
  const auto norms = p.strings("norms", {"luxemburg", "orlicz"});
  for (const auto& nm : norms)
    if (nm != "luxemburg" && nm != "orlicz") throw ParamError(p.field("norms"), "expected luxemburg or orlicz, got '" + nm + "'");
  const int l = static_cast<int>(p.integer("l", 1));
  if (l < 1) throw ParamError(p.field("l"), "must be >= 1");
  const auto ns = p.ints("n", {1, 2, 4, 8, 16, 32});
  for (int n : ns)
    if (n < 0) throw ParamError(p.field("n"), "degrees must be >= 0");
  const int count = static_cast<int>(p.integer("count", 100));
  if (count < 1) throw ParamError(p.field("count"), "must be >= 1");
  const int degree = static_cast<int>(p.integer("degree", 32));
  const double slack = p.real("slack", 1e-10);
  const std::uint64_t seed = p.seed();
  rep.seed = seed;
  p.finish();

  std::vector<GridFunction> fs;
  for (int i = 0; i < count; ++i) fs.push_back(detail::random_poly(1, N, degree, seed + static_cast<std::uint64_t>(i)));
  double kernel_min = INFINITY;
  {
    std::vector<double> delta(N, 0.0);
    delta[0] = static_cast<double>(N);
    for (int n : ns) {
      const auto k = ops::cesaro(GridFunction(1, N, delta), n, l);
      kernel_min = std::min(kernel_min, *std::min_element(k.samples().begin(), k.samples().end()));
    }
  }
  double worst = 0.0;
  for (const auto& phi : phis)
    for (const auto& nm : norms) {
      const NormSpec B = nm == "luxemburg" ? NormSpec::luxemburg(phi) : NormSpec::orlicz(phi);
      const auto series = nm + "(" + phi.kind_name() + ")";
      std::vector<double> base(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) base[i] = B(fs[i]);
      for (int n : ns) {
        double best = -1.0, bl = 0.0, br = 1.0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
          const double v = B(ops::cesaro(fs[i], n, l));
          if (v / base[i] > best) {
            best = v / base[i];
            bl = v;
            br = base[i];
          }
        }
        rep.add(series, n, bl, br);
        worst = std::max(worst, best);
      }
    }
  rep.direction = Direction::upper;
  rep.constant = worst;
  rep.spread = 1.0;
  rep.pass = worst <= 1.0 + slack && kernel_min >= -1e-12;
  json phij = json::array();
  for (const auto& phi : phis) phij.push_back(io::to_json(phi));
  rep.params = json{{"phi", phij}, {"norms", norms}, {"l", l}, {"n", ns}, {"count", count}, {"degree", degree}, {"N", N},
                    {"slack", slack}};
  rep.extras = json{{"kernel_min", kernel_min}, {"rows", "worst ratio over the sampled functions at each n"}};
  return rep;
}

// ---- averaged-7.3: w_T^r <= omega_T^r <= C(r) w_T^r ----

inline ops::Semigroup semigroup_param(const Params& p, const std::string& def) {
  ops::Semigroup T;
  try {
    T = ops::Semigroup::parse(p.string("T", def));
  } catch (const std::invalid_argument& e) {
    throw ParamError(p.field("T"), e.what());
  }
  return T;
}

inline CheckReport check_averaged_7_3(const Params& p) {
  CheckReport rep;
  rep.id = "averaged-7.3";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const auto T = semigroup_param(p, "shift");
  const auto rs = p.orders("r", {1, 2, 3});
  const auto [n0, n1] = p.dyadic_range(0, 8);
  const int radii = static_cast<int>(p.integer("radii", 64));
  const int quad = static_cast<int>(p.integer("quad_points", 128));
  if (radii < 1) throw ParamError(p.field("radii"), "must be >= 1");
  if (quad < 1) throw ParamError(p.field("quad_points"), "must be >= 1");
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();

  bool bracket = true;
  json cr = json::object();
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      for (int n = n0; n <= n1; ++n) {
        const double t = std::ldexp(1.0, -n);
        // union of the quadrature nodes and the radius grid, so w <= omega holds for the discrete values
        double w = 0.0, om = 0.0;
        for (int q = 0; q < quad; ++q) {
          const double v = ops::semigroup_difference_norm(S, T, (q + 0.5) * t / quad, r, B);
          w += v;
          om = std::max(om, v);
        }
        w /= quad;
        for (int k = 1; k <= radii; ++k) om = std::max(om, ops::semigroup_difference_norm(S, T, t * k / radii, r, B));
        if (w > om + 1e-10) bracket = false;
        rep.add(series, t, om, w);
        const std::string key = "r" + std::to_string(r);
        const double ratio = w > 0.0 ? om / w : (om > 0.0 ? INFINITY : 1.0);
        cr[key] = std::max(cr.value(key, 0.0), ratio);
      }
    }
  }
  judge_upper(rep, bound);
  rep.pass = rep.pass && bracket;
  rep.params = json{{"B", io::to_json(B)}, {"T", T.name()}, {"r", rs}, {"d", d}, {"N", fns.front().f.n()}, {"n_min", n0},
                    {"n_max", n1}, {"radii", radii}, {"quad_points", quad}, {"spread_bound", bound}};
  rep.extras = json{{"C_r", cr}, {"lower_bracket_holds", bracket}};
  return rep;
}

// ---- semigroup-7.4 / shift-7.5: omega_T^r(t) >= C (sum_j 2^{-jrs} omega_T^{r+1}(2^j t)^s)^{1/s} ----

namespace detail {

// omega_T^r at 2^m with a running max, constant beyond the saturation parameter
class DyadicSemigroupModulus {
 public:
  DyadicSemigroupModulus(const spectral::Spectrum& S, const ops::Semigroup& T, int r, const NormSpec& B, int radii, int m_lo)
      : S_(S), T_(T), r_(r), B_(B), radii_(radii), m_lo_(m_lo) {
    m_hi_ = static_cast<int>(std::ceil(std::log2(T.saturation())));
  }
  double operator()(int m) {
    m = std::clamp(m, m_lo_, m_hi_);
    while (static_cast<int>(vals_.size()) <= m - m_lo_) {
      const int mm = m_lo_ + static_cast<int>(vals_.size());
      const double v = ops::semigroup_modulus_raw(S_, T_, r_, std::ldexp(1.0, mm), B_, radii_);
      vals_.push_back(vals_.empty() ? v : std::max(v, vals_.back()));
    }
    return vals_[m - m_lo_];
  }
  double plateau() { return (*this)(m_hi_); }

 private:
  const spectral::Spectrum& S_;
  ops::Semigroup T_;
  int r_;
  const NormSpec& B_;
  int radii_, m_lo_, m_hi_;
  std::vector<double> vals_;
};

inline CheckReport semigroup_sharp(const Params& p, const std::string& id, bool shift_only) {
  CheckReport rep;
  rep.id = id;
  const int d = p.dim();
  if (shift_only) require_dim1(p, d, "the translation check");
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto T = shift_only ? ops::Semigroup::shift() : semigroup_param(p, "heat");
  const int radii = static_cast<int>(p.integer("radii", 64));
  if (radii < 1) throw ParamError(p.field("radii"), "must be >= 1");
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    for (int r : rs) {
      const auto series = series_name(fn.name, r);
      DyadicSemigroupModulus wr(S, T, r, B, radii, -n1), wr1(S, T, r + 1, B, radii, -n1);
      const double cap = wr1.plateau();
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        const auto tr = dyadic_series([&](int j) { return wr1(j - n); }, 1, r * s, s, cap);
        note_truncation(rep, series, n, tr.last);
        rep.add(series, n, std::pow(tr.sum, 1.0 / s), wr(-n));
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"T", T.name()}, {"n_min", n0}, {"n_max", n1}, {"radii", radii}, {"spread_bound", bound}});
  return rep;
}

}  // namespace detail

inline CheckReport check_semigroup_7_4(const Params& p) { return detail::semigroup_sharp(p, "semigroup-7.4", false); }
inline CheckReport check_shift_7_5(const Params& p) { return detail::semigroup_sharp(p, "shift-7.5", true); }

// ---- kfunc-8.9: omega^r(t) >= C (sum_j 2^{-jrs} K_l(f, (2^j t)^{2l})^s)^{1/s}, 2l > r ----

inline CheckReport check_kfunc_8_9(const Params& p) {
  CheckReport rep;
  rep.id = "kfunc-8.9";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto route = detail::route_param(p, "realization", d);
  const long long l_given = p.integer("l", 0);
  const auto grid = p.modulus_grid();
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  for (int r : rs)
    if (l_given > 0 && 2 * l_given <= r) throw ParamError(p.field("l"), "needs 2 l > r");
  int flagged = 0;
  double far_share = 0.0;  // largest share of a row's sum from radii beyond pi/2
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    for (int r : rs) {
      const int l = l_given > 0 ? static_cast<int>(l_given) : r / 2 + 1;
      const auto series = detail::series_name(fn.name, r);
      detail::KTable K(fn.f, S, l, B, route);
      detail::DyadicModulus wr(S, r, B, grid, -n1);
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        auto Kj = [&](int j) { return K.half_exp(2 * (j - n)); };
        const auto tr = detail::dyadic_series(Kj, 1, r * s, s, K.cap());
        detail::note_truncation(rep, series, n, tr.last);
        // the spherical-mean equivalence is only asserted for small radii
        const bool extrap = route == approx::KRoute::spherical_mean && std::ldexp(1.0, -n) > std::numbers::pi / 2;
        flagged += extrap;
        if (route == approx::KRoute::spherical_mean && tr.sum > 0.0) {
          int j0 = 1;
          while (std::ldexp(1.0, j0 - n) <= std::numbers::pi / 2) ++j0;
          const double far = detail::dyadic_series(Kj, j0, r * s, s, K.cap()).sum;
          far_share = std::max(far_share, far / tr.sum);
        }
        rep.add(series, n, std::pow(tr.sum, 1.0 / s), wr(-n), extrap ? "extrapolation" : "");
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"route", approx::route_name(route)}, {"l", l_given > 0 ? json(l_given) : json("floor(r/2)+1")},
                     {"n_min", n0}, {"n_max", n1}, {"radii", grid.radii}, {"directions", grid.directions}, {"spread_bound", bound}});
  rep.extras["extrapolated_rows"] = flagged;
  if (route == approx::KRoute::spherical_mean) rep.extras["max_share_beyond_half_pi"] = far_share;
  return rep;
}

// ---- jackson-8.10: omega^r(t) >= C (sum_j 2^{-jrs} E_{1/(t 2^j)}^s)^{1/s}, E over |k| < lambda ----

inline CheckReport check_jackson_8_10(const Params& p) {
  CheckReport rep;
  rep.id = "jackson-8.10";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const bool refine = p.boolean("refine", false);
  const auto grid = p.modulus_grid();
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    detail::ApproxTable E(fn.f, B, refine);
    const double e0 = E.constants();
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      detail::DyadicModulus wr(S, r, B, grid, -n1);
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        // lambda = 2^{n-j}; from j = n on only constants remain
        auto Ej = [&](int j) { return j < n ? E.strict(std::ldexp(1.0, n - j)) : e0; };
        const auto tr = detail::dyadic_series(Ej, 1, r * s, s, e0);
        detail::note_truncation(rep, series, n, tr.last);
        rep.add(series, n, std::pow(tr.sum, 1.0 / s), wr(-n));
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"n_min", n0}, {"n_max", n1}, {"refine", refine}, {"radii", grid.radii}, {"directions", grid.directions},
                     {"spread_bound", bound}});
  return rep;
}

// ---- lower-8.12: omega^r(2^{-n})^s >= C sum_{j<=n} 2^{-jrs} omega^{r+1}(2^{j-n})^s ----

inline CheckReport check_lower_8_12(const Params& p) {
  CheckReport rep;
  rep.id = "lower-8.12";
  const int d = p.dim();
  const auto fns = test_functions(p, 1);
  const auto B = p.norm();
  const double s = p.s(B);
  const auto rs = p.orders();
  const auto [n0, n1] = p.dyadic_range();
  const auto grid = p.modulus_grid();
  const double bound = p.spread_bound();
  rep.seed = p.seed();
  p.finish();
  double weak = 0.0, deriv = 0.0;
  for (const auto& fn : fns) {
    const auto S = spectral::forward(fn.f);
    rep.noise_floor = noise_scale * B(fn.f);
    detail::ApproxTable E(fn.f, B, false);
    const double nf = B(fn.f);
    for (int r : rs) {
      const auto series = detail::series_name(fn.name, r);
      detail::DyadicModulus wr(S, r, B, grid, -n1), wr1(S, r + 1, B, grid, -n1);
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) acc += std::exp2(-j * r * s) * std::pow(wr1(j - n), s);
        rep.add(series, n, std::pow(acc, 1.0 / s), wr(-n));
        // weak converse: omega^{r+1}(2^{j-n}) against sum_k 2^{-k(r+1)} E_{2^{n-j-k}} + 2^{-(n-j)(r+1)} ||f||
        for (int j = 1; j <= n; ++j) {
          double rhs = std::exp2(-(n - j) * (r + 1.0)) * nf;
          for (int k = 0; k <= n - j; ++k) rhs += std::exp2(-k * (r + 1.0)) * E.strict(std::ldexp(1.0, n - j - k));
          if (rhs > 0.0) weak = std::max(weak, wr1(j - n) / rhs);
        }
      }
      // derivative bound on a smooth approximant, reported only
      const auto g = approx::projection(S, 8, approx::MeanKind::vallee_poussin);
      const auto Sg = spectral::forward(g);
      double dmax = 0.0;
      const int dirs = d == 1 ? 1 : 8;
      for (int q = 0; q < dirs; ++q) {
        const double a = std::numbers::pi * q / dirs;
        dmax = std::max(dmax, B(ops::directional_derivative(g, {std::cos(a), std::sin(a)}, r)));
      }
      for (int n = std::max(n0, 1); n <= n1; ++n) {
        const double tau = std::ldexp(1.0, -n);
        if (dmax > 0.0) deriv = std::max(deriv, ops::modulus_raw(Sg, r, tau, B, {grid.radii, dirs}) / (std::pow(tau, r) * dmax));
      }
    }
  }
  judge_upper(rep, bound);
  rep.params = detail::common_params(p, B, s, rs, d, fns.front().f.n());
  rep.params.update({{"n_min", n0}, {"n_max", n1}, {"radii", grid.radii}, {"directions", grid.directions}, {"spread_bound", bound}});
  rep.extras = json{{"weak_converse_constant", weak}, {"derivative_bound_ratio", deriv}};
  return rep;
}

// ---- orlicz-sandwich: ||f||_lux <= ||f||_orl <= 2 ||f||_lux, plus the dual lower bound ----

inline CheckReport check_orlicz_sandwich(const Params& p) {
  CheckReport rep;
  rep.id = "orlicz-sandwich";
  const int d = p.dim();
  const std::size_t N = p.grid_n(d);
  const auto phis = young_list(p, "phi",
                               {YoungFunction::power(2.0), YoungFunction::power(3.0), YoungFunction::two_power(1.5, 3.0),
                                YoungFunction::zygmund(2.0, 0.5)});
  const int count = static_cast<int>(p.integer("count", 100));
  if (count < 1) throw ParamError(p.field("count"), "must be >= 1");
  const int degree = static_cast<int>(p.integer("degree", 32));
  const double slack = p.real("slack", 1e-8);
  const std::uint64_t seed = p.seed();
  rep.seed = seed;
  p.finish();
  double lo = INFINITY, hi = 0.0, dual_excess = 0.0;
  for (const auto& phi : phis) {
    if (!is_superlinear(phi)) throw ParamError(p.field("phi"), "the Orlicz norm needs a superlinear Young function");
    for (int i = 0; i < count; ++i) {
      const auto f = detail::random_poly(d, N, degree, seed + static_cast<std::uint64_t>(i));
      const double lux = luxemburg_norm(f, phi), orl = orlicz_norm(f, phi), dual = orlicz_dual_lower_bound(f, phi);
      rep.add(phi.kind_name(), i, orl, lux);
      lo = std::min(lo, orl / lux);
      hi = std::max(hi, orl / lux);
      dual_excess = std::max(dual_excess, dual / orl - 1.0);
    }
  }
  rep.direction = Direction::upper;
  rep.constant = hi;
  rep.spread = hi / lo;
  rep.pass = lo >= 1.0 - slack && hi <= 2.0 * (1.0 + slack) && dual_excess <= slack;
  json phij = json::array();
  for (const auto& phi : phis) phij.push_back(io::to_json(phi));
  rep.params = json{{"phi", phij}, {"count", count}, {"degree", degree}, {"d", d}, {"N", N}, {"slack", slack}};
  rep.extras = json{{"min_ratio", lo}, {"max_ratio", hi}, {"dual_excess", dual_excess}};
  return rep;
}

}  // namespace jackson::lab
