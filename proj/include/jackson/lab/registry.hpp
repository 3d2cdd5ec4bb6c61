#pragma once
// Check registry: id -> anchor, description, runner.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jackson/lab/checks.hpp"

namespace jackson::lab {

struct CheckEntry {
  std::string id;
  std::string anchor;  // one line
  std::string describe;
  std::function<CheckReport(const Params&)> run;
};

inline const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"basic-2.1", "iterated inequality for a linear contraction T on an s-convex space",
       "LHS  ||(T - I)^r f||_B\n"
       "RHS  (sum_{j=0..l} 2^{-j r s} ||(T^{2^j} - I)^{r+1} f||_B^s)^{1/s},  one row per l = 0..L\n"
       "Direction  LHS >= m1 * RHS; the proof constant is m1 = m^{1/s}/2 with m the convexity constant of B.\n"
       "Pass  min LHS/RHS >= m^{1/s}/2 - tolerance and the partial sums are nondecreasing in l.\n"
       "Params  T: {op: shift (h, default 0.3) | heat (t) | abel (t) | cesaro (n, l; d = 1) | sphmean (t, l; d = 2)},\n"
       "        r (default 1), L (default 10), m (default: from B, 1 for L2, else estimated), s, B, f, d, N, tolerance (0.02)",
       check_basic_2_1},
      {"jackson-1.4", "sharp Jackson inequality between moduli of orders r and r+1",
       "LHS  2^{-n r} (sum_{j=1..n} 2^{j r s} omega^{r+1}(f, 2^{-j})_B^s)^{1/s}\n"
       "RHS  omega^r(f, 2^{-n})_B\n"
       "Direction  LHS <= C RHS; pass iff C is finite and max/median of LHS/RHS <= spread_bound in every series.\n"
       "Params  f (family | name | {d, N, samples}), r, s, B, d, N, n_min..n_max (1..8), radii, directions (64), spread_bound (10)",
       check_jackson_1_4},
      {"jackson-4.8", "K-functionals of the Laplacian powers, heat-semigroup realization on the torus",
       "form sum       LHS (sum_{j>=1} 2^{-j r s} K_{r+1}(f, (2^j tau)^{r+1})^s)^{1/s},  RHS K_r(f, tau^r),  tau = 4^{-n}\n"
       "form integral  LHS tau^r (int_tau^inf u^{-r s} K_{r+1}(f, u^{r+1})^s du/u)^{1/s}\n"
       "form moduli    LHS t^{2r} (int_t^inf u^{-2 r s} omega^{2r+2}(f, u)^s du/u)^{1/s},  RHS omega^{2r}(f, t),  t = 2^{-n}\n"
       "K_l(f, tau^l) is evaluated by route (heat-difference | realization | spherical-mean), default heat-difference.\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  form, route, per_octave (16), f, r, s, B, d, N, n_min..n_max, spread_bound",
       check_jackson_4_8},
      {"jackson-4.9", "K-functional against best approximation by polynomials of spectral degree < lambda",
       "form sum       LHS (sum_{j>=1} 2^{-j r s} E_{lambda_j}(f)^s)^{1/s},  lambda_j = 1/(2^{j/2} tau^{1/2}),  RHS K_r(f, tau^r),  tau = 4^{-n}\n"
       "form integral  LHS tau^r (int_{tau^{1/2}}^inf u^{-2 r s} E_{1/u}(f)^s du/u)^{1/s}\n"
       "E_lambda is the distance to span{e^{ikx}: |k| <= lambda}.\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  form, route, refine (false), f, r, s, B, d, N, n_min..n_max, spread_bound",
       check_jackson_4_9},
      {"entire-4.12", "best approximation bounded by the K-functional of the Laplacian",
       "LHS  E_lambda(f),  lambda = 2^n\n"
       "RHS  K_r(f, lambda^{-2r})\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  route (realization), refine, f, r, B, d, N, n_min..n_max (0..8), spread_bound",
       check_entire_4_12},
      {"jackson-5.9", "Abel (Poisson) semigroup K-functionals on the circle",
       "LHS  (sum_{j>=1} 2^{-j r s} K_{r+1}(f, (2^j t)^{r+1})^s)^{1/s}\n"
       "RHS  K_r(f, t^r),  t = 2^{-n}\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  route (semigroup | realization), f, r, s, B, N, n_min..n_max, spread_bound",
       check_jackson_5_9},
      {"jackson-5.10", "Abel semigroup K-functional against best approximation by degree-m polynomials",
       "form dyadic  LHS (sum_{j=1..n} 2^{-j r s} E_{2^{n-j}}(f)^s)^{1/s}\n"
       "form prime   LHS t^r (sum_{m=1..[1/t]} m^{r s - 1} E_m(f)^s)^{1/s}\n"
       "RHS  K_r(f, t^r) of the Abel generator,  t = 2^{-n}\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  form, route, refine, f, r, s, B, N, n_min..n_max, spread_bound",
       check_jackson_5_10},
      {"cesaro-5.1", "positive-kernel means are contractions in Luxemburg and Orlicz norms",
       "LHS  ||C_n^l f||,  RHS ||f||  for Luxemburg and Orlicz norms of each Young function\n"
       "Rows report the worst ratio over the sampled random f for each n.\n"
       "Pass  every ratio <= 1 + slack (1e-10), i.e. C_n^l is a contraction, and the Fejer kernel is nonnegative.\n"
       "Params  phi (power(2), zygmund(2,0.5), two_power(1.5,3)), norms, l (1), n ([1,2,4,8,16,32]), count (100), degree, N, seed, slack",
       check_cesaro_5_1},
      {"averaged-7.3", "averaged modulus is equivalent to the semigroup modulus",
       "LHS  omega_T^r(f, t) = sup_{0<u<=t} ||(T(u) - I)^r f||\n"
       "RHS  w_T^r(f, t) = (1/t) int_0^t ||(T(u) - I)^r f|| du,  t = 2^{-n}\n"
       "Pass  w <= omega on every row, C(r) = max omega/w finite, spread bounded; C(r) per order in extras.\n"
       "Params  T (shift | heat | abel), r (1..3), f, B, d, N, n_min..n_max (0..8), radii (64), quad_points (128)",
       check_averaged_7_3},
      {"semigroup-7.4", "sharp Jackson inequality for semigroup moduli",
       "LHS  (sum_{j>=1} 2^{-j r s} omega_T^{r+1}(f, 2^j t)^s)^{1/s}\n"
       "RHS  omega_T^r(f, t),  t = 2^{-n} in the semigroup parameter\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  T (heat), f, r, s, B, d, N, n_min..n_max, radii, spread_bound",
       check_semigroup_7_4},
      {"shift-7.5", "sharp Jackson inequality for the translation group on the circle",
       "Same as semigroup-7.4 with T(u) f(x) = f(x + u).\n"
       "Params  f, r, s, B, N, n_min..n_max, radii, spread_bound",
       check_shift_7_5},
      {"kfunc-8.9", "modulus against Laplacian K-functionals of order l with 2l > r",
       "LHS  (sum_{j>=1} 2^{-j r s} K_l(f, (2^j t)^{2l})^s)^{1/s}\n"
       "RHS  omega^r(f, t),  t = 2^{-n}\n"
       "l defaults to floor(r/2) + 1. With the spherical-mean route, rows with t > pi/2 are flagged as extrapolation\n"
       "and extras give the largest share of a sum coming from sphere radii beyond pi/2.\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  l, route (realization | heat-difference | spherical-mean), f, r, s, B, d, N, n_min..n_max, radii, directions",
       check_kfunc_8_9},
      {"jackson-8.10", "modulus against best approximation by polynomials of spectral radius < lambda",
       "LHS  (sum_{j>=1} 2^{-j r s} E_{2^{n-j}}(f)^s)^{1/s},  E_lambda over |k| < lambda (constants only once lambda <= 1)\n"
       "RHS  omega^r(f, 2^{-n})\n"
       "Direction  LHS <= C RHS with bounded spread.\n"
       "Params  refine, f, r, s, B, d, N, n_min..n_max, radii, directions, spread_bound",
       check_jackson_8_10},
      {"lower-8.12", "moduli lower estimate on the torus",
       "LHS  (sum_{j=1..n} 2^{-j r s} omega^{r+1}(f, 2^{j-n})^s)^{1/s}\n"
       "RHS  omega^r(f, 2^{-n})\n"
       "Direction  LHS <= C RHS with bounded spread. Extras report the weak-converse constant and the derivative-bound ratio\n"
       "omega^r(g, t) / (t^r max_xi ||D_xi^r g||) for a de la Vallee Poussin mean g.\n"
       "Params  f, r, s, B, d, N, n_min..n_max, radii, directions, spread_bound",
       check_lower_8_12},
      {"orlicz-sandwich", "Luxemburg norm <= Orlicz norm <= 2 Luxemburg norm",
       "LHS  ||f||_{Orlicz(phi)},  RHS ||f||_{Luxemburg(phi)}\n"
       "Pass  1 - slack <= LHS/RHS <= 2 (1 + slack) for every sample, and the dual lower bound never exceeds the Orlicz norm.\n"
       "Params  phi (power(2), power(3), two_power(1.5,3), zygmund(2,0.5)), count (100), degree, d, N, seed, slack (1e-8)",
       check_orlicz_sandwich},
  };
  return entries;
}

inline const CheckEntry* find_check(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(const std::string& id) : std::invalid_argument("unknown check id '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Runs one check and stamps its runtime.
inline CheckReport run_check(const std::string& id, const Params& params) {
  const CheckEntry* e = find_check(id);
  if (!e) throw UnknownCheck(id);
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport rep = e->run(params);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline CheckReport run_check(const std::string& id, const json& params, std::uint64_t seed = 0) {
  return run_check(id, Params(params, "params", std::nullopt, seed));
}

}  // namespace jackson::lab
