#pragma once

// Command dispatch and report serialization for the haarpt tool. A run is
// fully described by RunConfig; run() returns the report with results that
// depend only on the config (the thread count never changes them).

#include <nlohmann/json.hpp>

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "haarpt/bignum.hpp"
#include "haarpt/bounds.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/moments_exact.hpp"
#include "haarpt/parallel.hpp"
#include "haarpt/random_lab.hpp"
#include "haarpt/verify.hpp"
#include "haarpt/weingarten.hpp"

namespace haarpt {

inline constexpr const char* kToolVersion = "0.1.0";

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"wg",    "moment-exact", "moment-mc", "norm",       "bound",
                                              "verify", "antisym",     "wishart",   "certificate"};
  return names;
}

struct RunConfig {
  std::string command;
  std::optional<long> d_a, d_b, r, d;
  std::optional<int> k;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  std::optional<long> alpha_num, alpha_den;
  std::optional<double> threshold;  // certificate: explicit threshold instead of the exponent's
  int restarts = 16;
  std::string suite = "all";
  int kmax = 6;
  bool per_sample = false;
  std::string cache;
  std::string format = "json";
  std::string out;
  int threads = default_threads();
};

struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  nlohmann::json results = nlohmann::json::object();
  std::vector<nlohmann::json> rows;  // flat records for CSV
  bool passed = true;
  double runtime_ms = 0;

  nlohmann::json to_json() const {
    return {{"tool_version", kToolVersion}, {"command", command},   {"parameters", parameters},
            {"seed", seed},                 {"results", results},   {"runtime_ms", runtime_ms}};
  }

  // Header: every parameter column, then every result column in order of
  // first appearance. Numbers are written exactly as in the JSON report.
  std::string to_csv() const {
    std::vector<std::string> pcols, rcols;
    for (const auto& [key, _] : parameters.items()) pcols.push_back(key);
    for (const auto& row : rows)
      for (const auto& [key, _] : row.items())
        if (std::find(rcols.begin(), rcols.end(), key) == rcols.end()) rcols.push_back(key);
    auto label = [&](const std::string& c) {
      return std::find(pcols.begin(), pcols.end(), c) == pcols.end() ? c : "result." + c;
    };
    auto cell = [](const nlohmann::json& v) -> std::string {
      if (v.is_null()) return "";
      if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
      }
      return v.dump();
    };
    std::ostringstream out;
    bool first = true;
    for (const auto& c : pcols) out << (std::exchange(first, false) ? "" : ",") << c;
    for (const auto& c : rcols) out << (std::exchange(first, false) ? "" : ",") << label(c);
    out << "\n";
    for (const auto& row : rows) {
      first = true;
      for (const auto& c : pcols) out << (std::exchange(first, false) ? "" : ",") << cell(parameters[c]);
      for (const auto& c : rcols) out << (std::exchange(first, false) ? "" : ",") << cell(row.value(c, nlohmann::json()));
      out << "\n";
    }
    return out.str();
  }
};

// Nested objects become dotted keys; arrays are left out.
inline void flatten_into(const nlohmann::json& j, const std::string& prefix, nlohmann::json& out) {
  for (const auto& [key, v] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      flatten_into(v, name, out);
    } else if (!v.is_array()) {
      out[name] = v;
    }
  }
}

inline nlohmann::json flatten(const nlohmann::json& j) {
  nlohmann::json out = nlohmann::json::object();
  flatten_into(j, "", out);
  return out;
}

// --- serialization of library reports ------------------------------------

inline nlohmann::json spec_json(const SubspaceSpec& s) {
  return {{"d_a", s.d_a()}, {"d_b", s.d_b()}, {"r", s.r()}, {"branch", to_string(s.branch())}};
}

inline nlohmann::json estimator_json(const EstimatorReport& e, bool with_samples) {
  nlohmann::json j = {{"n", e.n},     {"mean", e.mean}, {"std_error", e.std_error}, {"min", e.min},
                      {"max", e.max}, {"q05", e.q05},   {"q50", e.q50},             {"q95", e.q95}};
  if (with_samples) j["samples"] = e.samples;
  return j;
}

inline nlohmann::json exponent_json(const ExponentReport& e) {
  return {{"branch", to_string(e.branch)},
          {"epsilon", e.epsilon},
          {"exponent", e.exponent},
          {"threshold", e.threshold},
          {"vacuous", e.vacuous}};
}

inline nlohmann::json bound_json(const BoundReport& b) {
  nlohmann::json j;
  j["spec"] = spec_json(b.spec);
  j["k"] = b.k;
  j["k_from_rule"] = b.k_from_rule;
  j["branch"] = to_string(b.branch);
  j["scale"] = b.scale;
  j["scale_squared"] = to_json(b.scale_squared);
  j["norm_scale"] = b.norm_scale;
  j["exact_moment"] = b.exact_moment ? to_json(*b.exact_moment) : nlohmann::json();
  j["explicit_bound"] = b.explicit_bound ? to_json(*b.explicit_bound) : nlohmann::json();
  j["moment_root"] = b.moment_root ? nlohmann::json(*b.moment_root) : nlohmann::json();
  j["moment_root_source"] = b.moment_root_source;
  j["lp_brute"] = {{"value", to_json(b.lp_brute.value)},
                   {"a", b.lp_brute.argmax.a},
                   {"b", b.lp_brute.argmax.b},
                   {"c", b.lp_brute.argmax.c}};
  j["lp_dual"] = {{"branch", to_string(b.lp_dual.branch)},
                  {"value", to_json(b.lp_dual.value)},
                  {"squared", to_json(b.lp_dual.squared)},
                  {"exact", b.lp_dual.exact}};
  j["lp_weak_duality"] = b.lp_brute.value <= b.lp_dual.value;
  j["tail"] = {{"exponent", b.tail_exponent}, {"prefactor", b.tail_prefactor}};
  if (b.exponents) {
    j["exponents"] = exponent_json(*b.exponents);
  } else {
    j["exponents"] = nullptr;
    j["exponent_error"] = b.exponent_error;
  }
  j["entropy"] = {{"branch", to_string(b.entropy.branch)},
                  {"leading", b.entropy.leading},
                  {"constant", b.entropy.constant},
                  {"floor", b.entropy.floor},
                  {"vacuous", b.entropy.vacuous}};
  bool vacuous = b.entropy.vacuous || !b.exponents || b.exponents->vacuous;
  j["vacuous"] = vacuous;
  return j;
}

inline nlohmann::json suite_json(const SuiteReport& s) {
  return {{"name", s.name},
          {"passed", s.passed},
          {"checks", s.checks},
          {"counterexample", s.counterexample ? nlohmann::json(*s.counterexample) : nlohmann::json()},
          {"details", s.details}};
}

// --- command implementations ---------------------------------------------

namespace detail {

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& command) {
  if (!v) throw UsageError(command + ": missing required flag " + flag);
  return *v;
}

inline SubspaceSpec spec_from(const RunConfig& c, nlohmann::json& params) {
  long da = need(c.d_a, "--da", c.command), db = need(c.d_b, "--db", c.command), r = need(c.r, "--r", c.command);
  params["da"] = da;
  params["db"] = db;
  params["r"] = r;
  return SubspaceSpec(da, db, r);
}

inline std::size_t samples_from(const RunConfig& c, std::size_t fallback, nlohmann::json& params) {
  std::size_t n = c.samples.value_or(fallback);
  require(n >= 1, c.command + ": --samples must be positive");
  require_feasible(n <= 10000000, c.command + ": --samples above 10^7 not supported");
  params["samples"] = n;
  return n;
}

inline void add_sample_rows(RunReport& rep, const std::vector<double>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) rep.rows.push_back({{"sample", i}, {"value", samples[i]}});
}

inline void run_wg(const RunConfig& c, RunReport& rep) {
  int k = need(c.k, "--k", c.command);
  long d = need(c.d, "--d", c.command);
  require(k >= 1, "wg: --k must be positive");
  require_feasible(k <= 12, "wg: k > 12 not supported");
  rep.parameters["k"] = k;
  rep.parameters["d"] = d;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& mu : cycle_types_of(k)) {
    Rational v = wg_exact(mu, d).value;
    nlohmann::json row = {{"cycle_type", mu.to_string()}, {"value", to_json(v)}, {"value_float", to_double(v)}};
    table.push_back(row);
    rep.rows.push_back(flatten(row));
  }
  Rational cycle = wg_exact(CycleType{k}, d).value;
  bool agrees = cycle == wg_cycle_formula(k, d).value;
  rep.results["table"] = table;
  rep.results["cycle_formula_agrees"] = agrees;
  rep.passed = agrees;
}

inline void run_moment_exact(const RunConfig& c, RunReport& rep) {
  SubspaceSpec spec = spec_from(c, rep.parameters);
  int k = need(c.k, "--k", c.command);
  require(k >= 1, "moment-exact: --k must be positive");
  require_feasible(k <= 10, "moment-exact: k > 10 is not enumerable");
  rep.parameters["k"] = k;
  Rational v;
  if (!c.cache.empty()) {
    BinCache cache(c.cache);
    v = exact_moment_from_bins(spec.d_a(), spec.d_b(), spec.r(), k, cache.bins(k, c.threads));
  } else {
    v = exact_moment_from_bins(spec.d_a(), spec.d_b(), spec.r(), k, moment_bins(k, c.threads));
  }
  rep.results = {{"spec", spec_json(spec)}, {"k", k}, {"value", to_json(v)}, {"value_float", to_double(v)}};
  rep.rows.push_back(flatten(rep.results));
}

inline void run_moment_mc(const RunConfig& c, RunReport& rep) {
  SubspaceSpec spec = spec_from(c, rep.parameters);
  int k = need(c.k, "--k", c.command);
  require(k >= 1, "moment-mc: --k must be positive");
  rep.parameters["k"] = k;
  std::size_t n = samples_from(c, 10000, rep.parameters);
  auto est = mc_moment(spec, k, n, RngStream(c.seed), c.threads);
  rep.results = {{"spec", spec_json(spec)}, {"k", k}, {"estimate", estimator_json(est, c.per_sample)}};
  if (k <= 8) {
    Rational exact = exact_moment(spec, k);
    double z = est.std_error > 0 ? (est.mean - to_double(exact)) / est.std_error : 0.0;
    rep.results["exact"] = to_json(exact);
    rep.results["exact_float"] = to_double(exact);
    rep.results["z_score"] = z;
  }
  if (c.per_sample) {
    add_sample_rows(rep, est.samples);
  } else {
    rep.rows.push_back(flatten(rep.results));
  }
}

inline void run_norm(const RunConfig& c, RunReport& rep) {
  SubspaceSpec spec = spec_from(c, rep.parameters);
  std::size_t n = samples_from(c, 100, rep.parameters);
  auto nr = mc_norm(spec, n, RngStream(c.seed), c.threads);
  rep.results = {{"spec", spec_json(spec)},
                 {"estimate", estimator_json(nr.estimate, c.per_sample)},
                 {"scale", nr.scale},
                 {"ratio", nr.ratio}};
  if (c.per_sample) {
    add_sample_rows(rep, nr.estimate.samples);
  } else {
    rep.rows.push_back(flatten(rep.results));
  }
}

inline void run_bound(const RunConfig& c, RunReport& rep) {
  SubspaceSpec spec = spec_from(c, rep.parameters);
  BoundReport b = [&] {
    if (c.k) {
      require(*c.k >= 1, "bound: --k must be positive");
      require_feasible(*c.k <= 200, "bound: k > 200 not supported");
      rep.parameters["k"] = *c.k;
      return bound_report(spec, *c.k);
    }
    return thm_main_bounds(spec);
  }();
  rep.results = bound_json(b);
  rep.rows.push_back(flatten(rep.results));
}

inline void run_verify(const RunConfig& c, RunReport& rep) {
  rep.parameters["suite"] = c.suite;
  rep.parameters["kmax"] = c.kmax;
  std::vector<SuiteReport> suites;
  if (c.suite == "all") {
    suites = verify_suites(c.kmax, c.seed);
  } else {
    suites.push_back(run_suite(c.suite, c.kmax, c.seed));
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : suites) {
    arr.push_back(suite_json(s));
    rep.passed = rep.passed && s.passed;
    nlohmann::json row = {{"suite", s.name}, {"passed", s.passed}, {"checks", s.checks},
                          {"counterexample", s.counterexample ? nlohmann::json(*s.counterexample) : nlohmann::json()}};
    rep.rows.push_back(row);
  }
  rep.results["suites"] = arr;
  rep.results["passed"] = rep.passed;
}

inline void run_antisym(const RunConfig& c, RunReport& rep) {
  long d = need(c.d, "--d", c.command);
  rep.parameters["d"] = d;
  rep.parameters["restarts"] = c.restarts;
  require_feasible(d <= 64, "antisym: d > 64 not supported");
  auto p = antisym_projector(d);
  auto ev = eigenvalues(partial_transpose(p));
  double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  double expected = 0.5 * static_cast<double>(d - 1);
  SeesawOptions opt;
  opt.restarts = c.restarts;
  double h = seesaw_hsep(p, opt, RngStream(c.seed)).value;
  bool norm_ok = std::abs(norm - expected) <= 1e-9 * std::max(1.0, expected);
  bool seesaw_ok = std::abs(h - 0.5) <= 1e-6;
  rep.results = {{"d", d},
                 {"rank", d * (d - 1) / 2},
                 {"pt_norm", norm},
                 {"pt_norm_expected", expected},
                 {"pt_min_eigenvalue", ev(0)},
                 {"pt_max_eigenvalue", ev(ev.size() - 1)},
                 {"seesaw", h},
                 {"norm_matches", norm_ok},
                 {"seesaw_matches", seesaw_ok}};
  rep.passed = norm_ok && seesaw_ok;
  rep.rows.push_back(flatten(rep.results));
}

inline void run_wishart(const RunConfig& c, RunReport& rep) {
  long d = need(c.d, "--d", c.command);
  long num = c.alpha_num.value_or(1), den = c.alpha_den.value_or(4);
  require(den >= 1, "wishart: --alpha-den must be positive");
  rep.parameters["d"] = d;
  rep.parameters["alpha_num"] = num;
  rep.parameters["alpha_den"] = den;
  std::size_t n = samples_from(c, 200, rep.parameters);
  auto w = wishart_pt_experiment(d, make_rational(BigInt(num), BigInt(den)), n, RngStream(c.seed), c.threads);
  rep.results = {{"d", w.d},
                 {"rank", w.rank},
                 {"alpha", w.alpha},
                 {"limit", w.limit},
                 {"estimate", estimator_json(w.estimate, c.per_sample)},
                 {"relative_deviation", w.relative_deviation}};
  if (c.per_sample) {
    add_sample_rows(rep, w.estimate.samples);
  } else {
    rep.rows.push_back(flatten(rep.results));
  }
}

inline void run_certificate(const RunConfig& c, RunReport& rep) {
  SubspaceSpec spec = spec_from(c, rep.parameters);
  std::size_t n = samples_from(c, 50, rep.parameters);
  CertificateReport cert{spec, std::nullopt, 0, {}, 0};
  nlohmann::json exponent;
  if (c.threshold) {
    require(*c.threshold > 0, "certificate: --threshold must be positive");
    rep.parameters["threshold"] = *c.threshold;
    cert = certificate_at_threshold(spec, *c.threshold, n, RngStream(c.seed), c.threads);
    try {
      exponent = exponent_json(weak_mult_exponent(spec));
    } catch (const UsageError& e) {
      exponent = {{"error", e.what()}};
    }
  } else {
    cert = certificate(spec, n, RngStream(c.seed), c.threads);
    exponent = exponent_json(*cert.exponent);
  }
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < cert.samples.size(); ++i) {
    const auto& s = cert.samples[i];
    nlohmann::json row = {{"sample", i}, {"norm", s.norm}, {"passed", s.passed}, {"log2_norm", s.log2_norm}};
    samples.push_back(row);
    if (c.per_sample) rep.rows.push_back(row);
  }
  rep.results = {{"spec", spec_json(spec)},
                 {"exponent", exponent},
                 {"threshold", cert.threshold},
                 {"threshold_source", c.threshold ? "explicit" : "exponent"},
                 {"failure_fraction", cert.failure_fraction},
                 {"samples", samples},
                 {"tensor_power_bound", "log2 h_SEP(M^{(x)n}) <= n * log2_norm"}};
  if (!c.per_sample) rep.rows.push_back(flatten(rep.results));
}

}  // namespace detail

inline RunReport run(const RunConfig& c) {
  auto start = std::chrono::steady_clock::now();
  require(c.threads >= 1, "--threads must be positive");
  require(c.format == "json" || c.format == "csv", "--format must be json or csv");
  RunReport rep;
  rep.command = c.command;
  rep.seed = c.seed;
  if (c.command == "wg") {
    detail::run_wg(c, rep);
  } else if (c.command == "moment-exact") {
    detail::run_moment_exact(c, rep);
  } else if (c.command == "moment-mc") {
    detail::run_moment_mc(c, rep);
  } else if (c.command == "norm") {
    detail::run_norm(c, rep);
  } else if (c.command == "bound") {
    detail::run_bound(c, rep);
  } else if (c.command == "verify") {
    detail::run_verify(c, rep);
  } else if (c.command == "antisym") {
    detail::run_antisym(c, rep);
  } else if (c.command == "wishart") {
    detail::run_wishart(c, rep);
  } else if (c.command == "certificate") {
    detail::run_certificate(c, rep);
  } else {
    throw UsageError("unknown command '" + c.command + "'");
  }
  rep.parameters["seed"] = c.seed;
  rep.parameters["threads"] = c.threads;
  rep.parameters["format"] = c.format;
  if (c.per_sample) rep.parameters["per_sample"] = true;
  if (!c.cache.empty()) rep.parameters["cache"] = c.cache;
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::string render(const RunReport& rep, const std::string& format) {
  return format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
}

// 0 pass, 1 check failure, 2 usage, 3 infeasible.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return 2;
  if (dynamic_cast<const InfeasibleError*>(&e)) return 3;
  return 1;
}

}  // namespace haarpt
