// haarpt: exact Weingarten/moment algebra and Monte-Carlo experiments on the
// partial transpose of random subspace projectors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "haarpt/cli.hpp"

namespace {

struct Flags {
  long da = 0, db = 0, r = 0, d = 0, alpha_num = 0, alpha_den = 0;
  int k = 0;
  std::size_t samples = 0;
};

}  // namespace

int main(int argc, char** argv) {
  using haarpt::RunConfig;
  CLI::App app{"haarpt: Weingarten calculus and partial-transpose experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", haarpt::kToolVersion);

  RunConfig cfg;
  Flags f;
  std::vector<CLI::App*> subs;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "write the report to this file instead of stdout");
    sub->add_option("--threads", cfg.threads, "worker threads (default: machine parallelism)")
        ->check(CLI::PositiveNumber);
  };
  auto dims = [&](CLI::App* sub) {
    sub->add_option("--da", f.da, "d_A")->required();
    sub->add_option("--db", f.db, "d_B")->required();
    sub->add_option("--r", f.r, "subspace dimension")->required();
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", f.samples, "sample count");
    sub->add_flag("--per-sample", cfg.per_sample, "emit one record per sample");
  };

  auto* wg = app.add_subcommand("wg", "exact Weingarten values per cycle type");
  wg->add_option("--k", f.k)->required();
  wg->add_option("--d", f.d)->required();

  auto* mexact = app.add_subcommand("moment-exact", "E tr[(M^G)^k] as an exact rational");
  dims(mexact);
  mexact->add_option("--k", f.k)->required();
  mexact->add_option("--cache", cfg.cache, "moment-bin cache file (used for k >= 8)");

  auto* mmc = app.add_subcommand("moment-mc", "Monte-Carlo estimate of E tr[(M^G)^k]");
  dims(mmc);
  mmc->add_option("--k", f.k)->required();
  sampling(mmc);

  auto* norm = app.add_subcommand("norm", "Monte-Carlo estimate of E||M^G||");
  dims(norm);
  sampling(norm);

  auto* bound = app.add_subcommand("bound", "moment, LP, exponent and entropy bounds");
  dims(bound);
  bound->add_option("--k", f.k, "moment order (default: selection rule)");

  auto* verify = app.add_subcommand("verify", "brute-force verification suites");
  verify->add_option("--suite", cfg.suite, "all or one suite name")
      ->check(CLI::IsMember([] {
        auto names = haarpt::suite_names();
        names.push_back("all");
        return names;
      }()));
  verify->add_option("--kmax", cfg.kmax, "largest k (<= 7)");

  auto* antisym = app.add_subcommand("antisym", "antisymmetric-subspace checks");
  antisym->add_option("--d", f.d)->required();
  antisym->add_option("--restarts", cfg.restarts, "seesaw random restarts")->check(CLI::PositiveNumber);

  auto* wishart = app.add_subcommand("wishart", "largest eigenvalue of a partially transposed Wishart matrix");
  wishart->add_option("--d", f.d)->required();
  wishart->add_option("--alpha-num", f.alpha_num, "alpha numerator (default 1)");
  wishart->add_option("--alpha-den", f.alpha_den, "alpha denominator (default 4)");
  sampling(wishart);

  auto* cert = app.add_subcommand("certificate", "per-sample weak-multiplicativity certificate");
  dims(cert);
  sampling(cert);
  double threshold = 0;
  cert->add_option("--threshold", threshold, "explicit norm threshold (the exponent's is vacuous at dense sizes)")
      ->check(CLI::PositiveNumber);

  subs = {wg, mexact, mmc, norm, bound, verify, antisym, wishart, cert};
  for (auto* s : subs) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (auto* s : subs) {
    if (!s->parsed()) continue;
    cfg.command = s->get_name();
    auto set = [&](const char* flag, auto& target, auto value) {
      if (s->get_option_no_throw(flag) && s->count(flag)) target = value;
    };
    set("--da", cfg.d_a, f.da);
    set("--db", cfg.d_b, f.db);
    set("--r", cfg.r, f.r);
    set("--d", cfg.d, f.d);
    set("--k", cfg.k, f.k);
    set("--samples", cfg.samples, f.samples);
    set("--alpha-num", cfg.alpha_num, f.alpha_num);
    set("--alpha-den", cfg.alpha_den, f.alpha_den);
    set("--threshold", cfg.threshold, threshold);
  }

  try {
    haarpt::RunReport rep = haarpt::run(cfg);
    std::string text = haarpt::render(rep, cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) {
        std::cerr << "error: cannot open " << cfg.out << "\n";
        return 2;
      }
      out << text;
    }
    return rep.passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return haarpt::exit_code_for(e);
  }
}
