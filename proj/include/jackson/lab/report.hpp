#pragma once
// CheckReport: per-point table, empirical constant and verdict of one inequality check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "jackson/io.hpp"
#include "jackson/numeric.hpp"

namespace jackson::lab {

struct Row {
  std::string series;  // empty when the report has a single series
  double index = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::string flag;
};

// "upper": lhs <= C rhs, constant = max lhs/rhs.  "lower": lhs >= c rhs, constant = min lhs/rhs.
enum class Direction { upper, lower };

struct CheckReport {
  std::string id;
  json params;
  std::vector<Row> rows;
  Direction direction = Direction::upper;
  double constant = 0.0;
  double spread = 1.0;  // worst max/median of the ratio within one series
  bool pass = false;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
  json extras = json::object();
  // values at or below this are rounding noise and count as 0; set per test function
  double noise_floor = 0.0;

  void add(std::string series, double index, double lhs, double rhs, std::string flag = {}) {
    if (lhs <= noise_floor) lhs = 0.0;
    if (rhs <= noise_floor) rhs = 0.0;
    if (lhs == 0.0 && rhs > 0.0 && flag.empty()) flag = "zero-lhs";
    double ratio;
    if (rhs > 0.0) ratio = lhs / rhs;
    else ratio = lhs > 0.0 ? std::numeric_limits<double>::infinity() : std::numeric_limits<double>::quiet_NaN();
    rows.push_back({std::move(series), index, lhs, rhs, ratio, std::move(flag)});
  }

  std::vector<std::string> series_names() const {
    std::vector<std::string> out;
    for (const auto& r : rows)
      if (std::find(out.begin(), out.end(), r.series) == out.end()) out.push_back(r.series);
    return out;
  }
};

// Ratio statistics over one set of rows; NaN ratios (0/0) are skipped.
struct RatioStats {
  double max = 0.0, min = std::numeric_limits<double>::infinity(), median = 0.0;
  bool any = false, finite = true;
};

inline RatioStats ratio_stats(const std::vector<const Row*>& rows) {
  RatioStats st;
  std::vector<double> pos;
  for (const Row* r : rows) {
    if (std::isnan(r->ratio)) continue;
    st.any = true;
    if (!std::isfinite(r->ratio)) st.finite = false;
    st.max = std::max(st.max, r->ratio);
    st.min = std::min(st.min, r->ratio);
    if (r->ratio > 0.0 && std::isfinite(r->ratio)) pos.push_back(r->ratio);
  }
  if (!pos.empty()) st.median = numeric::median(pos);
  return st;
}

// Verdict for "lhs <= C rhs" checks: C finite, spread max/median <= bound in every series.
inline void judge_upper(CheckReport& rep, double spread_bound) {
  rep.direction = Direction::upper;
  rep.constant = 0.0;
  rep.spread = 1.0;
  bool ok = !rep.rows.empty();
  for (const auto& name : rep.series_names()) {
    std::vector<const Row*> rs;
    for (const auto& r : rep.rows)
      if (r.series == name) rs.push_back(&r);
    const auto st = ratio_stats(rs);
    if (!st.finite) ok = false;
    rep.constant = std::max(rep.constant, st.max);
    if (st.median > 0.0) rep.spread = std::max(rep.spread, st.max / st.median);
    else if (st.max > 0.0) ok = false;
  }
  if (!std::isfinite(rep.constant)) ok = false;
  if (!(rep.spread <= spread_bound)) ok = false;
  rep.pass = ok;
}

// Verdict for "lhs >= c rhs" checks: c = min ratio must reach the threshold.
inline void judge_lower(CheckReport& rep, double threshold) {
  rep.direction = Direction::lower;
  std::vector<const Row*> rs;
  for (const auto& r : rep.rows) rs.push_back(&r);
  const auto st = ratio_stats(rs);
  rep.constant = st.any ? st.min : 0.0;
  rep.spread = (st.min > 0.0 && st.finite) ? st.max / st.min : std::numeric_limits<double>::infinity();
  rep.pass = st.any && rep.constant >= threshold && std::isfinite(rep.constant);
}

inline std::string fmt(double v) { return numeric::format_double(v); }

inline std::string csv_index(const Row& r) {
  const auto idx = fmt(r.index);
  return r.series.empty() ? idx : r.series + "/" + idx;
}

// Header index,lhs,rhs,ratio; multi-series rows carry "series/index".
inline std::string to_csv(const CheckReport& rep) {
  std::ostringstream os;
  os << "index,lhs,rhs,ratio\n";
  for (const auto& r : rep.rows) os << csv_index(r) << ',' << fmt(r.lhs) << ',' << fmt(r.rhs) << ',' << fmt(r.ratio) << '\n';
  return os.str();
}

inline json to_json(const CheckReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row{{"index", r.index}, {"lhs", io::real_json(r.lhs)}, {"rhs", io::real_json(r.rhs)}, {"ratio", io::real_json(r.ratio)}};
    if (!r.series.empty()) row["series"] = r.series;
    if (!r.flag.empty()) row["flag"] = r.flag;
    rows.push_back(std::move(row));
  }
  return json{{"id", rep.id},
              {"params", rep.params},
              {"direction", rep.direction == Direction::upper ? "lhs <= C rhs" : "lhs >= c rhs"},
              {"constant", io::real_json(rep.constant)},
              {"spread", io::real_json(rep.spread)},
              {"verdict", rep.pass ? "pass" : "fail"},
              {"seed", rep.seed},
              {"runtime_ms", rep.runtime_ms},
              {"notes", rep.notes},
              {"extras", rep.extras},
              {"rows", rows}};
}

}  // namespace jackson::lab
