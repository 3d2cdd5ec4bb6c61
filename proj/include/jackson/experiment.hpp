#pragma once
// Experiment configs: parse, run the listed checks (optionally concurrently), write reports.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "jackson/lab/registry.hpp"

namespace jackson {

struct CheckInvocation {
  std::string id;
  json params = json::object();
};

struct ExperimentConfig {
  std::vector<CheckInvocation> checks;
  std::optional<std::size_t> N;
  std::uint64_t seed = 0;
  std::filesystem::path out = "results";
  bool write_json = true;
  bool write_csv = true;
};

// Overrides from the command line take precedence over the file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
};

inline ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ParamError("config", "expected a JSON object");
  static const std::set<std::string> known = {"checks", "N", "seed", "out", "formats"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw ParamError(it.key(), "unknown config key");
  ExperimentConfig c;
  if (j.contains("N")) {
    const auto n = io::as_int(j.at("N"), "N");
    if (n < 8 || n % 2) throw ParamError("N", "must be even and >= 8");
    c.N = static_cast<std::size_t>(n);
  }
  if (j.contains("seed")) {
    const auto s = io::as_int(j.at("seed"), "seed");
    if (s < 0) throw ParamError("seed", "must be >= 0");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("out")) {
    if (!j.at("out").is_string()) throw ParamError("out", "expected a directory path");
    c.out = j.at("out").get<std::string>();
  }
  if (j.contains("formats")) {
    const json& f = j.at("formats");
    if (!f.is_array() || f.empty()) throw ParamError("formats", "expected a non-empty array of \"json\" / \"csv\"");
    c.write_json = c.write_csv = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::string field = "formats[" + std::to_string(i) + "]";
      if (!f[i].is_string()) throw ParamError(field, "expected \"json\" or \"csv\"");
      const auto s = f[i].get<std::string>();
      if (s == "json") c.write_json = true;
      else if (s == "csv") c.write_csv = true;
      else throw ParamError(field, "unknown format '" + s + "'");
    }
  }
  const json& checks = io::require(j, "checks", "");
  if (!checks.is_array() || checks.empty()) throw ParamError("checks", "expected a non-empty array");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string path = "checks[" + std::to_string(i) + "]";
    const json& e = checks[i];
    CheckInvocation inv;
    if (e.is_string()) {
      inv.id = e.get<std::string>();
    } else if (e.is_object()) {
      const json& id = io::require(e, "id", path);
      if (!id.is_string()) throw ParamError(io::join(path, "id"), "expected a string");
      inv.id = id.get<std::string>();
      if (e.contains("params")) {
        if (e.size() != 2) throw ParamError(path, "give parameters either under \"params\" or inline, not both");
        inv.params = e.at("params");
        if (!inv.params.is_object()) throw ParamError(io::join(path, "params"), "expected an object");
      } else {
        inv.params = e;
        inv.params.erase("id");
      }
    } else {
      throw ParamError(path, "expected a check id or an object with \"id\"");
    }
    if (!lab::find_check(inv.id)) throw ParamError(io::join(path, "id"), "unknown check id '" + inv.id + "'");
    c.checks.push_back(std::move(inv));
  }
  return c;
}

inline ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParamError("config", "cannot read '" + file.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParamError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

struct ExperimentResult {
  std::vector<lab::CheckReport> reports;
  std::vector<std::filesystem::path> files;
  bool all_pass() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  }
};

inline std::string file_stem(std::size_t i, const std::string& id) {
  std::ostringstream os;
  os.width(2);
  os.fill('0');
  os << i + 1;
  return os.str() + "_" + id;
}

inline std::string summary_csv(const std::vector<lab::CheckReport>& reports) {
  std::ostringstream os;
  os << "id,verdict,constant,runtime_ms\n";
  for (const auto& r : reports)
    os << r.id << ',' << (r.pass ? "pass" : "fail") << ',' << lab::fmt(r.constant) << ',' << lab::fmt(std::round(r.runtime_ms))
       << '\n';
  return os.str();
}

// Parameter errors surface as ParamError naming "checks[i].params.<field>". Reports are ordered as configured.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned jobs = 1) {
  const std::size_t n = cfg.checks.size();
  std::vector<std::optional<lab::CheckReport>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      const auto& inv = cfg.checks[i];
      try {
        slots[i] = lab::run_check(inv.id, lab::Params(inv.params, "checks[" + std::to_string(i) + "].params", cfg.N, cfg.seed));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExperimentResult res;
  for (auto& s : slots) res.reports.push_back(std::move(*s));
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) throw ParamError("out", "cannot create '" + cfg.out.string() + "': " + ec.message());
  auto write = [&](const std::filesystem::path& p, const std::string& text) {
    std::ofstream o(p, std::ios::binary);
    o << text;
    if (!o) throw std::runtime_error("cannot write " + p.string());
    res.files.push_back(p);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto stem = file_stem(i, res.reports[i].id);
    if (cfg.write_json) write(cfg.out / (stem + ".json"), lab::to_json(res.reports[i]).dump(2) + "\n");
    if (cfg.write_csv) write(cfg.out / (stem + ".csv"), lab::to_csv(res.reports[i]));
  }
  write(cfg.out / "summary.csv", summary_csv(res.reports));
  return res;
}

inline void apply(ExperimentConfig& cfg, const Overrides& o) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.out) cfg.out = *o.out;
}

}  // namespace jackson
