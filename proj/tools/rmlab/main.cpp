// rmlab: command-line front end for the Reed-Muller experiments.
//
// Exit codes: 0 success (findings are reported in-band), 2 configuration
// error, 3 budget exceeded, 1 anything else.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "report.hpp"
#include "rmlab/common.hpp"

namespace {

using rmlab::cli::Options;
using rmlab::cli::Report;

constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

// Every option of the chosen subcommand, given or defaulted, in declaration order.
nlohmann::ordered_json collect_config(const CLI::App& sub) {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt == sub.get_help_ptr()) continue;
    std::string name = opt->get_name();
    if (name.empty()) continue;
    while (!name.empty() && name.front() == '-') name.erase(0, 1);
    const auto& given = opt->results();
    if (opt->get_expected_max() == 0) {
      config[name] = opt->count() > 0;
    } else if (!given.empty()) {
      config[name] = opt->get_items_expected_max() > 1 || given.size() > 1 ? nlohmann::ordered_json(given)
                                                                          : nlohmann::ordered_json(given.front());
    } else {
      config[name] = opt->get_default_str();
    }
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Muller code laboratory: evaluation matrices, erasure and error experiments, weight spectra"};
  app.set_version_flag("--version", std::string(rmlab::kVersion));
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  Options o;
  using Handler = std::function<Report(const Options&)>;
  std::map<CLI::App*, Handler> handlers;

  auto code_flags = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "number of variables (n = 2^m)");
    sub->add_option("--r", o.r, "degree");
  };
  auto seed_flag = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "base seed (default 0x524D2015)");
  };
  auto budget_flags = [&](CLI::App* sub) {
    sub->add_option("--budget-codewords", o.budget_codewords, "cap on 2^k codeword enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-patterns", o.budget_patterns, "cap on enumerated error/erasure patterns")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-cells", o.budget_cells, "cap on rows*cols of any constructed matrix")
        ->check(CLI::PositiveNumber);
  };
  auto output_flags = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "csv or json (matrix also accepts text)");
  };
  auto add = [&](const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(handler);
    return sub;
  };

  {
    auto* sub = add("matrix", "dump E(m,r), G(m,r) or the parity-check matrix", rmlab::cli::cmd_matrix);
    code_flags(sub);
    sub->add_option("--kind", o.kind, "eval, gen or parity")->check(CLI::IsMember({"eval", "gen", "parity"}));
    sub->add_option("--order", o.order, "row order: canonical (degree, then mask) or mask")
        ->check(CLI::IsMember({"canonical", "mask"}));
    budget_flags(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("erasure-sim", "Monte-Carlo erasure-correction probability", rmlab::cli::cmd_erasure_sim);
    code_flags(sub);
    sub->add_option("--model", o.models, "uniform:s=K or iid:p=P (repeatable)");
    sub->add_option("--trials", o.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    seed_flag(sub);
    sub->add_flag("--exact", o.exact, "add the exhaustive-enumeration value");
    budget_flags(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("span-sim", "probability that s random evaluation vectors span", rmlab::cli::cmd_span_sim);
    code_flags(sub);
    sub->add_option("--s", o.s_values, "number of points (repeatable; default ceil(1.3 k))");
    sub->add_option("--trials", o.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    seed_flag(sub);
    budget_flags(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("bsc-sim", "Monte-Carlo unique-decodability under random errors", rmlab::cli::cmd_bsc_sim);
    code_flags(sub);
    sub->add_option("--model", o.models, "uniform:s=K or iid:p=P (repeatable)");
    sub->add_option("--trials", o.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    sub->add_option("--method", o.method, "syndrome or ml")->check(CLI::IsMember({"syndrome", "ml"}));
    seed_flag(sub);
    sub->add_flag("--exact", o.exact, "add the exhaustive-enumeration value");
    budget_flags(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("reduction-check", "erasures-to-errors reduction over small patterns",
                    rmlab::cli::cmd_reduction_check);
    code_flags(sub);
    sub->add_option("--kind", o.kind, "rm (E(m,r) vs E(m,2r+1)) or general (H vs its third tensor power)")
        ->check(CLI::IsMember({"rm", "general"}));
    sub->add_option("--max-weight", o.max_weight, "largest pattern size (default m, or rows of H)");
    sub->add_option("--h-file", o.h_file, "parity-check matrix in text format (general)");
    sub->add_option("--rows", o.h_rows, "rows of a random H with distinct columns (general, no --h-file)");
    sub->add_option("--cols", o.h_cols, "columns of a random H (general, no --h-file)");
    seed_flag(sub);
    budget_flags(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("counterexample", "U, V = U*B with equal syndromes under E(m,2)", rmlab::cli::cmd_counterexample);
    sub->add_option("--m", o.m, "number of variables");
    sub->add_option("--s", o.s_values, "number of points (even, >= 4; default 6)")->expected(1);
    seed_flag(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("weights", "exact weight distribution", rmlab::cli::cmd_weights);
    code_flags(sub);
    budget_flags(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("ghw", "generalized Hamming weights", rmlab::cli::cmd_ghw);
    code_flags(sub);
    sub->add_flag("--bruteforce", o.bruteforce, "also compute each d_a by subspace enumeration");
    sub->add_option("--budget-subspaces", o.budget_subspaces, "cap on enumerated subspaces per a")
        ->check(CLI::PositiveNumber);
    output_flags(sub);
  }
  {
    auto* sub = add("bound", "weight-distribution bound (klp) or BSC union bound (union)", rmlab::cli::cmd_bound);
    code_flags(sub);
    sub->add_option("--kind", o.kind, "klp or union")->check(CLI::IsMember({"klp", "union"}));
    sub->add_option("--ell", o.ell, "klp: ell");
    sub->add_option("--eps", o.eps, "klp: eps");
    sub->add_option("--c", o.c, "klp: absolute constant");
    sub->add_option("--s", o.s_values, "union: pattern weights (repeatable; default 0..n/2)");
    sub->add_flag("--exact", o.exact, "union: compare with the exhaustive bad-pattern fraction");
    budget_flags(sub);
    output_flags(sub);
  }
  {
    auto* sub = add("identity-sweep", "binomial identities", rmlab::cli::cmd_identity_sweep);
    sub->add_option("--kind", o.kind, "binomial (sweep) or estimation (single point)")
        ->check(CLI::IsMember({"binomial", "estimation"}));
    sub->add_option("--max-m", o.max_m, "binomial: sweep m = 1..max-m");
    sub->add_option("--m", o.m, "estimation: m");
    sub->add_option("--r", o.r, "estimation: r");
    sub->add_option("--delta", o.delta, "estimation: delta");
    sub->add_option("--eps", o.eps, "estimation: eps");
    output_flags(sub);
  }
  {
    auto* sub = add("capacity", "corruption probability needed to be eps-close to capacity", rmlab::cli::cmd_capacity);
    sub->add_option("--regime", o.regimes, "low-bec, low-bsc, high-bec, high-bsc (repeatable; default all)")
        ->check(CLI::IsMember({"low-bec", "low-bsc", "high-bec", "high-bsc"}));
    sub->add_option("--R", o.rates, "rates (repeatable)");
    sub->add_option("--eps", o.capacity_eps, "gap to capacity");
    output_flags(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    const std::string format_text = o.format.empty() ? (chosen->get_name() == "matrix" ? "text" : "csv") : o.format;
    const auto format = rmlab::cli::parse_format(format_text);

    const std::string started = rmlab::cli::utc_now();
    const auto t0 = std::chrono::steady_clock::now();
    Report report = handlers.at(chosen)(o);
    report.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.started_utc = started;
    nlohmann::ordered_json config = collect_config(*chosen);
    for (auto& [key, value] : report.config.items()) config[key] = value;
    report.config = std::move(config);

    const std::string text = rmlab::cli::render(report, format);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(o.out, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot open --out " + o.out);
      out << text;
    }
    return 0;
  } catch (const rmlab::BudgetExceeded& e) {
    std::cerr << "rmlab: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rmlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "rmlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "rmlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "rmlab: error: " << e.what() << '\n';
    return 1;
  }
}
