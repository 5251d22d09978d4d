// Command-line driver: gen, run, verify, bench.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "saptree/bench.hpp"
#include "saptree/error.hpp"
#include "saptree/levels.hpp"
#include "saptree/scenarios.hpp"
#include "saptree/trace.hpp"
#include "saptree/verify.hpp"

namespace {

using namespace saptree;

constexpr int kChecksFailed = 1;
constexpr int kError = 2;

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T value{};
    if (!(is >> value) || !is.eof()) {
      throw Error(ErrorCode::invalid_argument,
                  std::string("bad entry '") + item + "' in " + what);
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorCode::invalid_argument, std::string(what) + " is empty");
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_gen(const std::string& family, std::uint32_t n, std::uint64_t seed,
            const std::string& out) {
  const auto inst = generate(parse_family(family), n, seed);
  build_forest(inst);
  write_text_file(out, write_instance(inst));
  std::cout << "wrote " << out << ": " << inst.white_count << " white, "
            << inst.arrivals.size() << " arrivals\n";
  return 0;
}

int cmd_run(const std::string& instance, const std::string& csv, double beta) {
  ChargeParams params(beta);
  const auto forest = build_forest(read_instance_file(instance));
  const auto trace = trace_scenario(forest);
  write_text_file(csv, write_run_record(make_run_record(trace, beta)));
  const auto agg = aggregate_bounds(trace, beta);
  const double n = static_cast<double>(trace.n());
  const double ref = n > 1 ? n * std::log2(n) : 0.0;
  std::printf("turns=%u sum_pi=%llu sum_dist=%llu n=%llu n_log2_n=%.3f\n", forest.turn(),
              static_cast<unsigned long long>(agg.sum_pi),
              static_cast<unsigned long long>(agg.sum_dist),
              static_cast<unsigned long long>(trace.n()), ref);
  return 0;
}

int cmd_verify(const std::string& instance, std::size_t budget, const std::string& checks,
               bool alt) {
  const auto forest = build_forest(read_instance_file(instance));
  VerifyOptions opt;
  opt.budget = {budget, budget};
  opt.checks = split_names(checks);
  opt.alt_tiebreak = alt;
  const auto report = verify_instance(forest, opt);
  for (const auto& r : report.results) {
    std::printf("%s %-26s checked=%llu", to_string(r.status), r.name.c_str(),
                static_cast<unsigned long long>(r.checked));
    if (r.skipped) std::printf(" skipped=%llu", static_cast<unsigned long long>(r.skipped));
    if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
    std::printf("\n");
  }
  std::printf("%s\n", report.ok() ? "all executed checks passed" : "some checks failed");
  return report.ok() ? 0 : kChecksFailed;
}

int cmd_bench(const std::string& family, const std::string& n_list, const std::string& seeds,
              double beta, const std::string& report) {
  ChargeParams params(beta);
  const Family fam = parse_family(family);
  BenchSummary summary;
  for (auto n : parse_list<std::uint32_t>(n_list, "--n-list")) {
    for (auto seed : parse_list<std::uint64_t>(seeds, "--seeds")) {
      auto row = bench_cell(fam, n, seed, beta);
      std::printf("%s n=%u seed=%llu sum_dist=%llu sum_pi=%llu ratio=%.4f budgets=%s ledger=%s%s\n",
                  family.c_str(), n, static_cast<unsigned long long>(seed),
                  static_cast<unsigned long long>(row.aggregate.sum_dist),
                  static_cast<unsigned long long>(row.aggregate.sum_pi),
                  row.n_log2_n > 0 ? row.aggregate.sum_dist / row.n_log2_n : 0.0,
                  row.budgets_ok() ? "ok" : "VIOLATED",
                  row.ledger_feasible ? "feasible" : "infeasible",
                  row.lemma12 ? (row.lemma12->ok() ? " degree_two=ok" : " degree_two=VIOLATED")
                              : "");
      std::fflush(stdout);
      summary.rows.push_back(std::move(row));
    }
  }
  summary.fitted_c = fit_constant(summary.rows);
  write_text_file(report, bench_report_json(summary, beta));
  std::printf("fitted C=%.4f (sum_dist ~ C n log2 n), report %s\n", summary.fitted_c,
              report.c_str());
  bool ok = true;
  for (const auto& r : summary.rows) ok &= r.ok();
  return ok ? 0 : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest Augmenting Path on online bipartite trees: simulation and checks"};
  app.require_subcommand(1);

  std::string family, out, instance, csv, checks, n_list, seeds, report;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  double beta = 2.0;
  std::size_t budget = 12;
  bool alt = false;

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", family, "random_tree | degree2 | pendant_chain | star_burst")
      ->required();
  gen->add_option("--n", n, "number of white vertices")->required();
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--out", out, "instance file to write")->required();

  auto* run = app.add_subcommand("run", "replay an instance and write per-turn CSV");
  run->add_option("--instance", instance, "instance file")->required();
  run->add_option("--csv", csv, "CSV output path")->required();
  run->add_option("--beta", beta, "growth factor for turn classes (> 1)");

  auto* verify = app.add_subcommand("verify", "run the property checks on an instance");
  verify->add_option("--instance", instance, "instance file")->required();
  verify->add_option("--oracle-budget", budget, "size limit for brute-force oracles");
  verify->add_option("--checks", checks, "comma-separated subset of checks");
  verify->add_flag("--alt-tiebreak", alt, "also rerun under the reversed tie-break order");

  auto* bench = app.add_subcommand("bench", "aggregate bounds over a family");
  bench->add_option("--family", family, "instance family")->required();
  bench->add_option("--n-list", n_list, "comma-separated sizes")->required();
  bench->add_option("--seeds", seeds, "comma-separated seeds")->required();
  bench->add_option("--beta", beta, "growth factor (> 1)")->required();
  bench->add_option("--report", report, "JSON report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen) return cmd_gen(family, n, seed, out);
    if (*run) return cmd_run(instance, csv, beta);
    if (*verify) return cmd_verify(instance, budget, checks, alt);
    if (*bench) return cmd_bench(family, n_list, seeds, beta, report);
  } catch (const saptree::Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", saptree::to_string(e.code()), e.what());
    return kError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  }
  return kError;
}
