#pragma once
// JSON records for Young functions, grid functions and norm selections.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jackson/grid.hpp"
#include "jackson/young.hpp"

namespace jackson {

using json = nlohmann::json;

// Configuration error that names the offending field.
class ParamError : public std::invalid_argument {
 public:
  ParamError(std::string field, const std::string& what)
      : std::invalid_argument("field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

namespace io {

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

inline const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParamError(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParamError(join(path, key), "missing");
  return *it;
}

// number, or the strings "inf"/"infinity"
inline double as_real(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Infinity") return std::numeric_limits<double>::infinity();
  }
  throw ParamError(field, "expected a number");
}

inline long long as_int(const json& v, const std::string& field) {
  if (v.is_number_integer() || v.is_number_unsigned()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == std::floor(d) && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  throw ParamError(field, "expected an integer");
}

inline double real_or(const json& j, const std::string& key, double def, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return def;
  return as_real(j.at(key), join(path, key));
}
inline long long int_or(const json& j, const std::string& key, long long def, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return def;
  return as_int(j.at(key), join(path, key));
}
inline std::string string_or(const json& j, const std::string& key, const std::string& def, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return def;
  if (!j.at(key).is_string()) throw ParamError(join(path, key), "expected a string");
  return j.at(key).get<std::string>();
}
inline bool bool_or(const json& j, const std::string& key, bool def, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return def;
  if (!j.at(key).is_boolean()) throw ParamError(join(path, key), "expected true or false");
  return j.at(key).get<bool>();
}
inline std::vector<double> reals(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParamError(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_real(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

// Non-finite reals are written as strings so the output stays valid JSON.
inline json real_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

// ---- Young functions: {kind, params, breakpoints, c1, c2} ----

inline json to_json(const YoungFunction& phi) {
  json j{{"kind", phi.kind_name()}, {"params", phi.params()}, {"breakpoints", phi.breakpoints()},
         {"c1", phi.c1()}, {"c2", phi.c2()}};
  if (phi.base()) j["base"] = to_json(*phi.base());
  return j;
}

inline YoungFunction young_from_json(const json& j, const std::string& path = "phi") {
  const json& kind_v = require(j, "kind", path);
  if (!kind_v.is_string()) throw ParamError(join(path, "kind"), "expected a string");
  const auto kind = kind_v.get<std::string>();
  std::vector<double> params;
  if (j.contains("params")) params = reals(j.at("params"), join(path, "params"));
  try {
    if (kind == "patched") {
      const auto base = young_from_json(require(j, "base", path), join(path, "base"));
      if (params.size() != 1) throw ParamError(join(path, "params"), "patched needs [s]");
      const auto bp = reals(require(j, "breakpoints", path), join(path, "breakpoints"));
      if (bp.size() != 2) throw ParamError(join(path, "breakpoints"), "patched needs [a, b]");
      return patch(base, params[0], bp[0], bp[1]).phi_tilde;
    }
    if (kind == "complementary") {
      const auto base = young_from_json(require(j, "base", path), join(path, "base"));
      const double y_max = params.size() > 0 ? params[0] : 1e6;
      const int res = params.size() > 1 ? static_cast<int>(params[1]) : 241;
      return complementary(base, y_max, res);
    }
    return YoungFunction::builtin(kind, params);
  } catch (const ParamError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParamError(path, e.what());
  }
}

// ---- grid functions: {d, N, samples} ----

inline json to_json(const GridFunction& f) {
  return json{{"d", f.dim()}, {"N", f.n()}, {"samples", f.samples()}};
}

inline GridFunction grid_from_json(const json& j, const std::string& path = "f") {
  const auto d = as_int(require(j, "d", path), join(path, "d"));
  const auto n = as_int(require(j, "N", path), join(path, "N"));
  auto s = reals(require(j, "samples", path), join(path, "samples"));
  if (n < 0 || d < 0) throw ParamError(path, "negative size");
  try {
    return GridFunction(static_cast<int>(d), static_cast<std::size_t>(n), std::move(s));
  } catch (const std::exception& e) {
    throw ParamError(path, e.what());
  }
}

// ---- norms: {"norm": "lp", "p": 2} or {"norm": "luxemburg"/"orlicz", "phi": {...}}, plus s, q, m, M ----

inline NormSpec norm_from_json(const json& j, const std::string& path = "B") {
  const auto kind = string_or(j, "norm", "", path);
  if (kind.empty()) throw ParamError(join(path, "norm"), "missing");
  std::optional<NormSpec> B;
  try {
    if (kind == "lp") {
      B = NormSpec::lp(as_real(require(j, "p", path), join(path, "p")));
    } else if (kind == "luxemburg") {
      B = NormSpec::luxemburg(young_from_json(require(j, "phi", path), join(path, "phi")));
    } else if (kind == "orlicz") {
      B = NormSpec::orlicz(young_from_json(require(j, "phi", path), join(path, "phi")));
    } else {
      throw ParamError(join(path, "norm"), "unknown norm '" + kind + "' (expected lp, luxemburg or orlicz)");
    }
    if (j.contains("weights")) B->with_measure(Measure::weighted(reals(j.at("weights"), join(path, "weights"))));
    if (j.contains("s")) B->with_s(as_real(j.at("s"), join(path, "s")));
    if (j.contains("q")) B->with_q(as_real(j.at("q"), join(path, "q")));
    if (j.contains("m")) B->with_m(as_real(j.at("m"), join(path, "m")));
    if (j.contains("M")) B->with_M(as_real(j.at("M"), join(path, "M")));
  } catch (const ParamError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParamError(path, e.what());
  }
  return *B;
}

inline json to_json(const NormSpec& B) {
  json j = std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LpNorm>) return json{{"norm", "lp"}, {"p", real_json(n.p)}};
        else if constexpr (std::is_same_v<T, LuxemburgNorm>) return json{{"norm", "luxemburg"}, {"phi", to_json(n.phi)}};
        else return json{{"norm", "orlicz"}, {"phi", to_json(n.phi)}};
      },
      B.variant());
  if (auto s = B.s()) j["s"] = *s;
  if (auto m = B.m()) j["m"] = *m;
  if (auto M = B.M()) j["M"] = *M;
  if (!B.measure().is_uniform()) j["weighted"] = true;
  return j;
}

}  // namespace io
}  // namespace jackson
