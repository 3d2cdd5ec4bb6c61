#pragma once
// Parameter record of one check: typed access with field paths, defaults, and unknown-key detection.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jackson/io.hpp"
#include "jackson/lab/families.hpp"
#include "jackson/ops.hpp"

namespace jackson::lab {

class Params {
 public:
  Params(json j = json::object(), std::string path = "params", std::optional<std::size_t> global_n = std::nullopt,
         std::uint64_t seed = 0)
      : j_(j.is_null() ? json::object() : std::move(j)), path_(std::move(path)), global_n_(global_n), seed_(seed) {
    if (!j_.is_object()) throw ParamError(path_, "expected an object");
  }

  const json& raw() const { return j_; }
  std::string field(const std::string& key) const { return io::join(path_, key); }
  bool has(const std::string& key) const {
    seen_.insert(key);
    return j_.contains(key);
  }
  const json& at(const std::string& key) const {
    seen_.insert(key);
    return io::require(j_, key, path_);
  }

  double real(const std::string& key, double def) const { return has(key) ? io::as_real(j_.at(key), field(key)) : def; }
  long long integer(const std::string& key, long long def) const {
    return has(key) ? io::as_int(j_.at(key), field(key)) : def;
  }
  std::string string(const std::string& key, const std::string& def) const {
    if (!has(key)) return def;
    if (!j_.at(key).is_string()) throw ParamError(field(key), "expected a string");
    return j_.at(key).get<std::string>();
  }
  bool boolean(const std::string& key, bool def) const {
    if (!has(key)) return def;
    if (!j_.at(key).is_boolean()) throw ParamError(field(key), "expected true or false");
    return j_.at(key).get<bool>();
  }
  // an integer or an array of integers
  std::vector<int> ints(const std::string& key, std::vector<int> def) const {
    if (!has(key)) return def;
    const json& v = j_.at(key);
    std::vector<int> out;
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) out.push_back(static_cast<int>(io::as_int(v[i], field(key) + "[" + std::to_string(i) + "]")));
    } else {
      out.push_back(static_cast<int>(io::as_int(v, field(key))));
    }
    if (out.empty()) throw ParamError(field(key), "must not be empty");
    return out;
  }
  std::vector<std::string> strings(const std::string& key, std::vector<std::string> def) const {
    if (!has(key)) return def;
    const json& v = j_.at(key);
    std::vector<std::string> out;
    if (v.is_string()) return {v.get<std::string>()};
    if (!v.is_array()) throw ParamError(field(key), "expected a string or an array of strings");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) throw ParamError(field(key) + "[" + std::to_string(i) + "]", "expected a string");
      out.push_back(v[i].get<std::string>());
    }
    if (out.empty()) throw ParamError(field(key), "must not be empty");
    return out;
  }

  std::uint64_t seed() const {
    if (!has("seed")) return seed_;
    const auto v = io::as_int(j_.at("seed"), field("seed"));
    if (v < 0) throw ParamError(field("seed"), "must be >= 0");
    return static_cast<std::uint64_t>(v);
  }

  int dim(int def = 1) const {
    const auto d = integer("d", def);
    if (d != 1 && d != 2) throw ParamError(field("d"), "must be 1 or 2");
    return static_cast<int>(d);
  }
  // check-level N, else the experiment-wide N, else 1024 (d = 1) / 256 (d = 2)
  std::size_t grid_n(int d) const {
    long long n = global_n_ ? static_cast<long long>(*global_n_) : (d == 1 ? 1024 : 256);
    n = integer("N", n);
    if (n < 8 || n % 2) throw ParamError(field("N"), "must be even and >= 8");
    return static_cast<std::size_t>(n);
  }

  NormSpec norm() const {
    if (!has("B")) return NormSpec::lp(2.0);
    return io::norm_from_json(j_.at("B"), field("B"));
  }
  // convexity exponent: explicit s, else the norm's own (max(p, 2) for L_p)
  double s(const NormSpec& B) const {
    if (has("s")) {
      const double v = io::as_real(j_.at("s"), field("s"));
      if (!(v >= 2.0) || !std::isfinite(v)) throw ParamError(field("s"), "must be a finite real >= 2");
      return v;
    }
    if (auto v = B.s()) return *v;
    throw ParamError(field("s"), "no default for norm " + B.label() + "; set s >= 2");
  }
  std::vector<int> orders(const std::string& key = "r", std::vector<int> def = {1}) const {
    auto r = ints(key, std::move(def));
    for (int v : r)
      if (v < 1 || v > 12) throw ParamError(field(key), "orders must lie in 1..12");
    return r;
  }
  std::pair<int, int> dyadic_range(int lo_def = 1, int hi_def = 8) const {
    const int lo = static_cast<int>(integer("n_min", lo_def));
    const int hi = static_cast<int>(integer("n_max", hi_def));
    if (lo < 0 || hi < lo || hi > 30) throw ParamError(field("n_max"), "need 0 <= n_min <= n_max <= 30");
    return {lo, hi};
  }
  double spread_bound() const {
    const double v = real("spread_bound", 10.0);
    if (!(v >= 1.0)) throw ParamError(field("spread_bound"), "must be >= 1");
    return v;
  }
  ops::ModulusGrid modulus_grid() const {
    ops::ModulusGrid g;
    g.radii = static_cast<int>(integer("radii", 64));
    g.directions = static_cast<int>(integer("directions", 64));
    if (g.radii < 1 || g.directions < 1) throw ParamError(field(g.radii < 1 ? "radii" : "directions"), "must be >= 1");
    return g;
  }

  // Every key must have been looked at by the check.
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw ParamError(field(it.key()), "unknown parameter");
  }

 private:
  json j_;
  std::string path_;
  std::optional<std::size_t> global_n_;
  std::uint64_t seed_;
  mutable std::set<std::string> seen_;
};

struct NamedFunction {
  std::string name;
  GridFunction f;
};

// "f": a family name, "family" (all four), an array of names, or a {d, N, samples} record.
inline std::vector<NamedFunction> test_functions(const Params& p, int default_dim = 1, const std::string& def = "family") {
  const int d = p.dim(default_dim);
  const std::size_t n = p.grid_n(d);
  const std::uint64_t seed = p.seed();
  const int degree = static_cast<int>(p.integer("degree", 0));
  std::vector<std::string> names;
  if (p.has("f") && p.at("f").is_object()) {
    auto g = io::grid_from_json(p.at("f"), p.field("f"));
    return {{"custom", std::move(g)}};
  }
  for (const auto& nm : p.strings("f", {def})) {
    if (nm == "family") names.insert(names.end(), family_names().begin(), family_names().end());
    else names.push_back(nm);
  }
  std::vector<NamedFunction> out;
  for (const auto& nm : names) {
    try {
      out.push_back({nm, family_function(nm, d, n, seed, degree)});
    } catch (const std::invalid_argument& e) {
      throw ParamError(p.field("f"), e.what());
    }
  }
  return out;
}

}  // namespace jackson::lab
