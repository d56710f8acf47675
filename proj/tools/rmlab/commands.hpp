#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"
#include "rmlab/common.hpp"

namespace rmlab::cli {

/// Union of every subcommand's flags; each subcommand reads the ones it
/// registers.
struct Options {
  unsigned m = 4;
  unsigned r = 1;
  std::vector<std::string> models;
  std::uint64_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget_codewords = kDefaultBudget;
  std::uint64_t budget_patterns = kDefaultBudget;
  std::uint64_t budget_cells = std::uint64_t{1} << 30;
  std::uint64_t budget_subspaces = 1000000;
  std::string out;
  std::string format;

  std::string kind;
  std::string order = "canonical";
  std::string method = "syndrome";
  std::vector<std::size_t> s_values;
  std::size_t max_weight = 0;
  std::string h_file;
  unsigned h_rows = 4;
  unsigned h_cols = 12;
  bool exact = false;
  bool bruteforce = false;
  unsigned ell = 1;
  double eps = 0.5;
  double c = 1.0;
  double delta = 0.5;
  double capacity_eps = 0.0;
  unsigned max_m = 20;
  std::vector<std::string> regimes;
  std::vector<double> rates;
};

Report cmd_matrix(const Options& o);
Report cmd_erasure_sim(const Options& o);
Report cmd_span_sim(const Options& o);
Report cmd_bsc_sim(const Options& o);
Report cmd_reduction_check(const Options& o);
Report cmd_counterexample(const Options& o);
Report cmd_weights(const Options& o);
Report cmd_ghw(const Options& o);
Report cmd_bound(const Options& o);
Report cmd_identity_sweep(const Options& o);
Report cmd_capacity(const Options& o);

}  // namespace rmlab::cli
