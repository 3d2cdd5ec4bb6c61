// Acceptance run: one verdict line per criterion, with the measured values underneath.
// Exit status 0 iff every criterion passes, apart from sub-lines registered as expected failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "jackson/experiment.hpp"
#include "jackson/lab/geometry.hpp"
#include "oracles.hpp"

using namespace jackson;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t N1 = 1024, N2 = 256;

struct Line {
  std::string what;
  bool ok;
  std::string detail;
  std::string expected_failure;  // non-empty: known defect, recorded in the README
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Line> lines;
  double seconds = 0.0;

  void check(std::string what, bool ok, std::string detail = {}) { lines.push_back({std::move(what), ok, std::move(detail), {}}); }
  void expect_failure(std::string what, bool ok, std::string detail, std::string why) {
    lines.push_back({std::move(what), ok, std::move(detail), std::move(why)});
  }
  bool unexpected() const {
    for (const auto& l : lines)
      if (l.expected_failure.empty() ? !l.ok : l.ok) return true;  // an expected failure that passes is stale
    return false;
  }
  bool has_expected_failure() const {
    for (const auto& l : lines)
      if (!l.expected_failure.empty() && !l.ok) return true;
    return false;
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

GridFunction cos1(std::size_t n) {
  return discretize([](double x) { return std::cos(x); }, n);
}

// ---- 1: norms ----
void norms(Criterion& c) {
  double worst_lp = 0.0, sw_lo = INFINITY, sw_hi = 0.0, dual_excess = -INFINITY;
  const std::vector<YoungFunction> phis = {YoungFunction::power(2), YoungFunction::power(3), YoungFunction::two_power(1.5, 3),
                                           YoungFunction::zygmund(2, 0.5)};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = oracle::random_poly_1d(1000 + seed, N1, 30);
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
      const double lp = lp_norm(f, p), lx = luxemburg_norm(f, YoungFunction::power(p));
      worst_lp = std::max(worst_lp, std::abs(lx - lp) / lp);
    }
    for (const auto& phi : phis) {
      const double lux = luxemburg_norm(f, phi), orl = orlicz_norm(f, phi), dual = orlicz_dual_lower_bound(f, phi);
      sw_lo = std::min(sw_lo, orl / lux);
      sw_hi = std::max(sw_hi, orl / lux);
      dual_excess = std::max(dual_excess, dual / orl - 1.0);
    }
  }
  c.check("Luxemburg(u^p) = L_p, p in {1.5,2,3,4}, 100 functions", worst_lp <= 1e-10, "max rel err " + num(worst_lp));
  c.check("Luxemburg <= Orlicz <= 2 Luxemburg, slack 1e-8", sw_lo >= 1 - 1e-8 && sw_hi <= 2 * (1 + 1e-8),
          "ratio range [" + num(sw_lo) + ", " + num(sw_hi) + "]");
  c.check("dual lower bound <= Orlicz norm", dual_excess <= 1e-8, "max excess " + num(dual_excess));
  const auto f = cos1(N1);
  const double lx = luxemburg_norm(f, YoungFunction::power(2)), orl = orlicz_norm(f, YoungFunction::power(2));
  c.check("Luxemburg(u^2, cos) = 0.7071068 +- 1e-9", std::abs(lx - std::sqrt(0.5)) <= 1e-9, num(lx));
  c.check("Orlicz(u^2, cos) = 1.4142136 +- 1e-6", std::abs(orl - std::sqrt(2.0)) <= 1e-6, num(orl));
}

// ---- 2: Young toolkit ----
void young(Criterion& c) {
  const auto psi = complementary(YoungFunction::power(2));
  c.check("complementary(x^2)(2) = 1 +- 1e-6", std::abs(psi(2.0) - 1.0) <= 1e-6, num(psi(2.0)));

  const std::vector<YoungFunction> builtins = {YoungFunction::power(1.5), YoungFunction::power(2), YoungFunction::power(3),
                                               YoungFunction::power(4), YoungFunction::two_power(1.5, 3),
                                               YoungFunction::zygmund(2, 0.5), YoungFunction::log_power(3), YoungFunction::exp()};
  double worst = 0.0;
  std::string used;
  for (const auto& phi : builtins) {
    if (!check_delta2(phi).holds) continue;
    const auto back = complementary(complementary(phi));
    if (!check_nabla2(complementary(phi), 1e-3, 1e3).holds) continue;
    used += (used.empty() ? "" : " ") + phi.kind_name();
    for (double x : numeric::log_grid_n(0.01, 10.0, 25)) worst = std::max(worst, std::abs(back(x) - phi(x)) / phi(x));
  }
  c.check("double conjugation on Delta2 & Nabla2 builtins", worst <= 1e-6, "max rel err " + num(worst) + " over " + used);

  bool gate = false;
  try {
    (void)YoungFunction::log_power(2.6);
  } catch (const std::invalid_argument&) {
    gate = true;
  }
  bool accepts = true;
  try {
    (void)YoungFunction::log_power((3 + std::sqrt(5.0)) / 2 + 1e-12);
  } catch (const std::invalid_argument&) {
    accepts = false;
  }
  c.check("log_power gate rejects r < (3+sqrt 5)/2", gate && accepts, "r=2.6 rejected, r=2.618.. accepted");

  const auto regions = power_concavity_regions(YoungFunction::log_power(3), 4.0);
  const double u0 = std::exp(16.0 / 3.0);
  // boundary of the concave region containing large u
  double boundary = NAN;
  for (const auto& I : regions.intervals)
    if (I.hi >= 1e6 * (1 - 1e-12)) boundary = I.lo;
  c.expect_failure("log_power(3), s=4: detected region boundary within 1% of exp(16/3)", std::abs(boundary / u0 - 1) <= 0.01,
                   "detected " + num(boundary) + " vs " + num(u0),
                   "the second derivative of Phi(u^{1/4}) is negative on all of (1, inf), so the detected region starts at 1");
  c.check("log_power(3), s=4: concave on (0,1] and on [exp(16/3), inf)", regions.covers(1e-6, 1.0) && regions.covers(u0, 1e6));

  const double s = 4.0;
  const auto res = patch(YoungFunction::log_power(3), s, 0.5, 2.0);
  const auto u = numeric::log_grid_n(1e-6, 1e6, 4096);
  double worst_d2 = -INFINITY;
  bool concave = true;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    auto g = [&](double v) { return res.phi_tilde(std::pow(v, 1.0 / s)); };
    const double s0 = (g(u[i]) - g(u[i - 1])) / (u[i] - u[i - 1]), s1 = (g(u[i + 1]) - g(u[i])) / (u[i + 1] - u[i]);
    const double scale = std::max(std::abs(s0), std::abs(s1));
    worst_d2 = std::max(worst_d2, (s1 - s0) / scale);
    if (s1 - s0 > 1e-10 * scale) concave = false;
  }
  c.check("patch of log_power(3), s=4: second differences of Phi~(u^{1/s}) <= 0 on 4096 points", concave,
          "max scaled second difference " + num(worst_d2));
  c.check("patch reports finite A", std::isfinite(res.A) && res.A >= 1.0, "A = " + num(res.A));
}

// ---- 3: operator laws ----
void operators(Criterion& c) {
  double law = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = oracle::random_poly_1d(seed, N1, 40);
    for (auto kind : {ops::SemigroupKind::heat, ops::SemigroupKind::abel})
      law = std::max(law, ops::spectral_semigroup(ops::spectral_semigroup(f, 0.13, kind), 0.29, kind)
                              .max_abs_diff(ops::spectral_semigroup(f, 0.42, kind)));
  }
  c.check("semigroup law T(a)T(b) = T(a+b), heat and abel", law <= 1e-12, "max err " + num(law));

  const std::vector<NormSpec> norms = {NormSpec::lp(1), NormSpec::lp(2), NormSpec::lp(4),
                                       NormSpec::luxemburg(YoungFunction::zygmund(2, 0.5)),
                                       NormSpec::luxemburg(YoungFunction::two_power(1.5, 3))};
  double worst = -INFINITY;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = oracle::random_poly_1d(100 + seed, N1, 30);
    const auto g = lab::detail::random_poly(2, N2, 12, 200 + seed);
    std::vector<GridFunction> images1, images2;
    for (double t : {1e-3, 0.1, 1.0}) images1.push_back(ops::spectral_semigroup(f, t, ops::SemigroupKind::heat));
    for (double t : {0.1, 1.0}) images1.push_back(ops::spectral_semigroup(f, t, ops::SemigroupKind::abel));
    for (int n : {1, 4, 16, 64}) images1.push_back(ops::cesaro(f, n, 1));
    const auto Sg = spectral::forward(g);
    for (double t : {0.2, 1.5}) images2.push_back(ops::spherical_mean(Sg, t, 1));
    for (const auto& B : norms) {
      const double nf = B(f);
      for (const auto& im : images1) worst = std::max(worst, B(im) / nf - 1.0);
    }
    for (const auto& B : {norms[1], norms[3]}) {
      const double ng = B(g);
      for (const auto& im : images2) worst = std::max(worst, B(im) / ng - 1.0);
    }
  }
  c.check("heat, abel, Cesaro, spherical mean contract L_p and Luxemburg norms, 100 functions", worst <= 1e-10,
          "max ||Tf||/||f|| - 1 = " + num(worst));

  double fejer = INFINITY;
  for (int n : {1, 4, 16, 64, 256}) {
    std::vector<double> delta(N1, 0.0);
    delta[0] = static_cast<double>(N1);
    const auto K = ops::cesaro(GridFunction(1, N1, delta), n, 1);
    for (double v : K.samples()) fejer = std::min(fejer, v);
  }
  c.check("Fejer kernel >= -1e-12", fejer >= -1e-12, "min " + num(fejer));

  double ident = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = oracle::random_poly_1d(300 + seed, N1, 30);
    const double hh = 0.3 + 0.01 * seed, s = 0.17;
    for (int r = 1; r <= 3; ++r) {
      const auto lhs = ops::semigroup_difference(f, ops::Semigroup::shift(), hh, r);
      GridFunction rhs = GridFunction::zeros(1, N1);
      for (int k = 1; k <= r; ++k) {
        const double cf = (k % 2 ? -1.0 : 1.0) * numeric::binomial(r, k);
        rhs.axpy(cf, ops::translate(ops::semigroup_difference(f, ops::Semigroup::shift(), k * s, r), k * hh));
        rhs.axpy(-cf, ops::semigroup_difference(f, ops::Semigroup::shift(), hh + k * s, r));
      }
      ident = std::max(ident, lhs.max_abs_diff(rhs));
    }
  }
  c.check("averaging identity for (T(h) - I)^r, r <= 3", ident <= 1e-10, "max err " + num(ident));

  const auto one = GridFunction::constant(2, N2, 1.0);
  bool exact = true;
  for (double t : {0.1, 1.0, 3.0}) {
    const auto v = ops::spherical_mean(one, t, 1);
    for (double x : v.samples()) exact = exact && x == 1.0;
  }
  c.check("V_t 1 = 1 exactly", exact);
  const auto cx = discretize([](double x, double) { return std::cos(x); }, N2, 2);
  double bessel = 0.0;
  for (double t : {0.05, 0.5, 1.0, 2.4, 3.0}) {
    GridFunction ref = cx;
    ref *= std::cyl_bessel_j(0.0, t);
    bessel = std::max(bessel, ops::spherical_mean(cx, t, 1).max_abs_diff(ref));
  }
  c.check("V_t cos x = J0(t) cos x +- 1e-8", bessel <= 1e-8, "max err " + num(bessel));
}

// ---- 4: closed-form moduli and the averaged-modulus bracket ----
void moduli(Criterion& c) {
  const auto f = cos1(N1);
  const auto B = NormSpec::lp(2);
  double e1 = 0.0, e2 = 0.0;
  for (int i = 1; i <= 30; ++i) {
    const double t = 0.1 * i;
    e1 = std::max(e1, std::abs(ops::modulus(f, 1, t, B) - std::sqrt(2.0) * std::sin(t / 2)));
    e2 = std::max(e2, std::abs(ops::averaged_modulus(f, 1, t, ops::Semigroup::shift(), B, 1024) -
                               2 * std::sqrt(2.0) / t * (1 - std::cos(t / 2))));
  }
  c.check("omega^1(cos, t) = sqrt2 sin(t/2) +- 1e-6, t = 0.1..3.0", e1 <= 1e-6, "max err " + num(e1));
  c.check("w^1(cos, t) = (2 sqrt2/t)(1 - cos(t/2)) +- 1e-6 (1024 quadrature nodes)", e2 <= 1e-6, "max err " + num(e2));
  const auto rep = lab::run_check("averaged-7.3", json{{"r", {1, 2, 3}}}, 1);
  double cmax = 0.0;
  for (auto& [k, v] : rep.extras["C_r"].items()) cmax = std::max(cmax, v.get<double>());
  c.check("w <= omega <= C(r) w on the standard family, C(r) <= 20 for r <= 3",
          rep.pass && rep.extras["lower_bracket_holds"].get<bool>() && cmax <= 20.0, "C(r) = " + rep.extras["C_r"].dump());
}

// ---- 5: iterated inequality at the proof constant ----
void proof_constant(Criterion& c) {
  for (const char* f : {"cos", "family"}) {
    const auto rep = lab::run_check(
        "basic-2.1", json{{"T", {{"op", "shift"}, {"h", 0.3}}}, {"f", f}, {"r", {1, 2}}, {"s", 2}, {"m", 1}, {"L", 10}}, 1);
    c.check(std::string("shift h=0.3, L2, r in {1,2}, L=10, f=") + f + ": m1 >= 0.48", rep.pass && rep.constant >= 0.48,
            "empirical m1 = " + num(rep.constant));
  }
  const auto heat = lab::run_check("basic-2.1", json{{"T", "heat"}, {"r", {1, 2}}}, 1);
  c.check("heat semigroup on the standard family: m1 >= 0.48", heat.pass && heat.constant >= 0.48,
          "empirical m1 = " + num(heat.constant));
}

// ---- 6: sharp Jackson suite ----
void jackson_suite(Criterion& c) {
  const json L4 = {{"norm", "lp"}, {"p", 4}};
  struct Run {
    std::string id;
    json params;
  };
  const std::vector<Run> runs = {
      {"jackson-1.4", {{"r", {1, 2}}}},
      {"jackson-1.4", {{"r", {1, 2}}, {"B", L4}}},
      {"jackson-8.10", {{"r", {1, 2}}}},
      {"jackson-8.10", {{"r", {1, 2}}, {"d", 2}}},
      {"jackson-8.10", {{"r", {1, 2}}, {"B", L4}}},
      {"kfunc-8.9", {{"r", {1, 2}}}},
      {"kfunc-8.9", {{"r", {1, 2}}, {"B", L4}}},
      {"jackson-5.9", {{"r", {1, 2}}}},
      {"jackson-5.9", {{"r", {1, 2}}, {"B", L4}}},
      {"jackson-5.10", {{"r", {1, 2}}}},
      {"jackson-5.10", {{"r", {1, 2}}, {"form", "prime"}}},
      {"jackson-5.10", {{"r", {1, 2}}, {"B", L4}}},
      {"jackson-4.8", {{"r", {1, 2}}}},
      {"jackson-4.8", {{"r", {1, 2}}, {"form", "integral"}}},
      {"jackson-4.8", {{"r", {1, 2}}, {"B", L4}}},
      {"jackson-4.9", {{"r", {1, 2}}}},
      {"jackson-4.9", {{"r", {1, 2}}, {"form", "integral"}}},
      {"jackson-4.9", {{"r", {1, 2}}, {"B", L4}}},
  };
  for (const auto& r : runs) {
    const auto rep = lab::run_check(r.id, r.params, 1);
    c.check(r.id + " " + r.params.dump(), rep.pass && rep.spread <= 10.0,
            "C = " + num(rep.constant) + ", spread " + num(rep.spread) + ", " + num(rep.runtime_ms / 1000) + " s");
  }
}

// ---- 7: convexity geometry ----
void geometry(Criterion& c) {
  const auto h = lab::estimate_convexity_constant(NormSpec::lp(2), 2.0, 7, 400);
  c.check("estimate_convexity_constant(L2, s=2) >= 0.98", h.m_hat >= 0.98, "m = " + num(h.m_hat));
  const auto l1 = lab::estimate_convexity_constant(NormSpec::lp(1), 2.0, 7, 200);
  const double cert = lab::convexity_ratio(NormSpec::lp(1), l1.witness_F, l1.witness_G, 2.0);
  c.check("L1 witness certifies m = 0", l1.m_hat == 0.0 && std::abs(cert) <= 1e-12,
          "witness " + l1.witness_kind + ", ratio " + num(cert));
  const auto d2 = lab::verify_duality(2.0, 4, 1, 400);
  c.check("verify_duality(q=2, dim=4)", d2.pass, d2.extras.dump());
  const auto d15 = lab::verify_duality(1.5, 8, 2, 400);
  c.check("verify_duality(q=1.5, dim=8)", d15.pass, d15.extras.dump());
  std::string msg;
  try {
    lab::verify_duality(2.5, 4, 1, 100);
  } catch (const std::invalid_argument& e) {
    msg = e.what();
  }
  c.check("q = 2.5 rejected", msg.find("q > 2") != std::string::npos, msg);
  const auto g = lab::space_moduli(NormSpec::lp(2), 64, 5, 50);
  c.check("space_moduli(L2): eta exponent 2 +- 0.1", std::abs(g.eta_exponent - 2) <= 0.1, num(g.eta_exponent));
  c.check("space_moduli(L2): delta exponent 2 +- 0.1", std::abs(g.delta_exponent - 2) <= 0.1, num(g.delta_exponent));
}

// ---- 8: Cesaro contraction in Orlicz spaces ----
void cesaro(Criterion& c) {
  const auto rep = lab::run_check("cesaro-5.1", json::object(), 1);
  c.check("Fejer means contract Luxemburg and Orlicz norms, 3 Young functions, 100 functions, slack 1e-10",
          rep.pass && rep.constant <= 1 + 1e-10, "max ratio " + num(rep.constant) + ", kernel min " + num(rep.extras["kernel_min"].get<double>()));
}

// ---- 9: determinism ----
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// summary.csv without the wall-clock column
std::string summary_without_runtime(const fs::path& p) {
  std::istringstream in(slurp(p));
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

void determinism(Criterion& c) {
  json checks = json::array();
  for (const auto& e : lab::registry()) checks.push_back({{"id", e.id}});
  auto cfg = parse_config(json{{"seed", 2024}, {"checks", checks}});
  const fs::path root = fs::current_path() / "acceptance_runs";
  fs::remove_all(root);
  cfg.out = root / "a";
  run_experiment(cfg, 1);
  cfg.out = root / "b";
  run_experiment(cfg, 2);
  std::size_t files = 0, same = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    if (entry.path().extension() != ".csv" || entry.path().filename() == "summary.csv") continue;
    ++files;
    same += slurp(entry.path()) == slurp(root / "b" / entry.path().filename());
  }
  c.check("full suite twice (1 and 2 jobs): per-check CSVs byte-identical", files == lab::registry().size() && same == files,
          std::to_string(same) + "/" + std::to_string(files) + " identical");
  c.check("summary.csv identical apart from runtime_ms",
          summary_without_runtime(root / "a" / "summary.csv") == summary_without_runtime(root / "b" / "summary.csv"));
}

}  // namespace

// Optional arguments select criteria by number; by default all run.
int main(int argc, char** argv) {
  std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> all;
  auto add = [&](int id, std::string title, std::function<void(Criterion&)> fn) { all.push_back({Criterion{id, std::move(title), {}}, fn}); };
  add(1, "norm conformance", norms);
  add(2, "Young toolkit", young);
  add(3, "operator laws", operators);
  add(4, "closed-form moduli", moduli);
  add(5, "iterated inequality at the proof constant", proof_constant);
  add(6, "sharp Jackson suite", jackson_suite);
  add(7, "convexity geometry", geometry);
  add(8, "Cesaro/Orlicz contraction", cesaro);
  add(9, "determinism", determinism);

  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));

  int bad = 0, ran = 0;
  double total = 0.0;
  for (auto& [c, fn] : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.check("exception", false, e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += c.seconds;
    const char* verdict = c.unexpected() ? "FAIL " : c.has_expected_failure() ? "XFAIL" : "PASS ";
    std::printf("%s criterion %d: %s (%.1f s)\n", verdict, c.id, c.title.c_str(), c.seconds);
    for (const auto& l : c.lines) {
      const char* tag = l.expected_failure.empty() ? (l.ok ? "ok   " : "FAIL ") : (l.ok ? "XPASS" : "xfail");
      std::printf("    %s %s%s%s\n", tag, l.what.c_str(), l.detail.empty() ? "" : ": ", l.detail.c_str());
      if (!l.expected_failure.empty()) std::printf("          known defect: %s\n", l.expected_failure.c_str());
    }
    std::fflush(stdout);
    bad += c.unexpected();
  }
  std::printf("%d of %d criteria with unexpected results; total %.1f s\n", bad, ran, total);
  return bad == 0 ? 0 : 1;
}
