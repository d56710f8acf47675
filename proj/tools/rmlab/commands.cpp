#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "rmlab/channel.hpp"
#include "rmlab/erasure.hpp"
#include "rmlab/error_patterns.hpp"
#include "rmlab/rm.hpp"
#include "rmlab/rng.hpp"
#include "rmlab/spectrum.hpp"

namespace rmlab::cli {

namespace {

void check_code_params(unsigned m, unsigned r) {
  if (m > kMaxVariables) throw std::invalid_argument("m must be at most 63");
  if (r > m) throw std::invalid_argument("r must not exceed m");
}

// Refuses before allocation when a rows x 2^m matrix would exceed the cell cap.
void check_cells(unsigned m, WideCount rows, std::uint64_t budget_cells) {
  if (m >= 64 || rows * (WideCount(1) << m) > budget_cells) {
    throw BudgetExceeded("matrix would exceed the cell budget (--budget-cells)");
  }
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

std::string support_string(const Pattern& p) {
  std::string out;
  for (std::size_t i : p.support()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

std::string model_kind(const CorruptionModel& model) {
  return model.kind == CorruptionModel::Kind::UniformWeight ? "uniform" : "iid";
}

std::vector<CorruptionModel> parse_models(const Options& o) {
  std::vector<CorruptionModel> out;
  for (const auto& text : o.models) out.push_back(CorruptionModel::parse(text));
  if (out.empty()) out.push_back(CorruptionModel::uniform(1));
  return out;
}

double binomial_pmf(std::size_t n, std::size_t s, double p) {
  const double count = static_cast<double>(binom(static_cast<unsigned>(n), static_cast<unsigned>(s)));
  return count * std::pow(p, static_cast<double>(s)) * std::pow(1.0 - p, static_cast<double>(n - s));
}

std::optional<double> exact_span(unsigned m, unsigned r, std::size_t s, std::uint64_t budget) {
  if (s < dimension(m, r)) return 0.0;
  if (r == 0) return 1.0;
  if (r == 1) return affine_span_probability(m, s);
  try {
    return exact_span_probability(m, r, s, budget);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::string rational_string(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace

Report cmd_matrix(const Options& o) {
  check_code_params(o.m, o.r);
  const std::string kind = o.kind.empty() ? "eval" : o.kind;
  if (kind != "eval" && kind != "gen" && kind != "parity") throw std::invalid_argument("--kind must be eval, gen or parity");
  if (o.order != "canonical" && o.order != "mask") throw std::invalid_argument("--order must be canonical or mask");

  Report rep;
  rep.command = "matrix";
  rep.columns = {"row", "label", "bits"};
  const std::size_t n = std::size_t{1} << o.m;

  BitMatrix mat(0, n);
  std::vector<std::string> labels;
  auto build_eval = [&](unsigned degree) {
    check_cells(o.m, binom_sum(o.m, degree), o.budget_cells);
    const auto monos = monomials(o.m, degree);
    if (o.order == "mask") {
      mat = eval_matrix_mask_order(o.m, degree);
      for (std::size_t idx : mask_order(o.m, degree)) labels.push_back(monos[idx].name());
    } else {
      mat = eval_matrix(o.m, degree, o.budget_cells);
      for (const auto& f : monos) labels.push_back(f.name());
    }
  };

  if (kind == "eval") {
    build_eval(o.r);
  } else if (kind == "parity") {
    if (o.r < o.m) build_eval(o.m - o.r - 1);
  } else {
    // Tensor order is intrinsic to G(m, r); rows are labelled by the monomial
    // whose truth table they are.
    check_cells(o.m, WideCount(2) * binom_sum(o.m, o.r), o.budget_cells);
    mat = generator_tensor(o.m, o.r);
    const BitMatrix e = eval_matrix(o.m, o.r);
    const auto monos = monomials(o.m, o.r);
    std::map<std::string, std::string> name_of;
    for (std::size_t i = 0; i < e.rows(); ++i) name_of[e.row(i).to_string()] = monos[i].name();
    for (const auto& row : mat.row_vectors()) labels.push_back(name_of.at(row.to_string()));
  }

  for (std::size_t i = 0; i < mat.rows(); ++i) rep.add_row({u64(i), labels[i], mat.row(i).to_string()});
  rep.text_body = mat.to_text();
  return rep;
}

Report cmd_erasure_sim(const Options& o) {
  check_code_params(o.m, o.r);
  const RmCode code(o.m, o.r);
  check_cells(o.m, binom_sum(o.m, o.m) - binom_sum(o.m, o.r), o.budget_cells);

  Report rep;
  rep.command = "erasure-sim";
  rep.seed = o.seed;
  rep.randomized = true;
  rep.columns = {"m", "r", "model", "s_or_p", "trials", "successes", "fraction", "halfwidth", "seed"};
  if (o.exact) rep.columns.push_back("exact");

  for (const auto& model : parse_models(o)) {
    const McEstimate est = mc_erasure_success(code, model, o.trials, o.seed, code.n());
    std::vector<std::string> row{u64(o.m),          u64(o.r),           model_kind(model),
                                 fmt_double(model.value), u64(est.trials),     u64(est.successes),
                                 fmt_double(est.fraction()), fmt_double(est.halfwidth()), u64(o.seed)};
    if (o.exact) {
      const double exact = model.kind == CorruptionModel::Kind::UniformWeight
                               ? exact_erasure_success(code, model.uniform_weight(), o.budget_patterns).value()
                               : exact_erasure_success_iid(code, model.value, o.budget_patterns);
      row.push_back(fmt_double(exact));
    }
    rep.add_row(std::move(row));
  }
  return rep;
}

Report cmd_span_sim(const Options& o) {
  check_code_params(o.m, o.r);
  const std::size_t k = dimension(o.m, o.r);
  check_cells(o.m, binom_sum(o.m, o.r), o.budget_cells);
  std::vector<std::size_t> sizes = o.s_values;
  if (sizes.empty()) sizes.push_back(static_cast<std::size_t>(std::ceil(1.3 * static_cast<double>(k))));

  Report rep;
  rep.command = "span-sim";
  rep.seed = o.seed;
  rep.randomized = true;
  rep.columns = {"m", "r", "s", "k", "trials", "successes", "fraction", "halfwidth", "exact", "seed"};
  for (std::size_t s : sizes) {
    const McEstimate est = mc_span_success(o.m, o.r, s, o.trials, o.seed);
    const auto exact = exact_span(o.m, o.r, s, o.budget_patterns);
    rep.add_row({u64(o.m), u64(o.r), u64(s), u64(k), u64(est.trials), u64(est.successes), fmt_double(est.fraction()),
                 fmt_double(est.halfwidth()), exact ? fmt_double(*exact) : "", u64(o.seed)});
  }
  return rep;
}

Report cmd_bsc_sim(const Options& o) {
  check_code_params(o.m, o.r);
  const RmCode code(o.m, o.r);
  check_cells(o.m, binom_sum(o.m, o.m) - binom_sum(o.m, o.r), o.budget_cells);
  const BscMethod method = parse_bsc_method(o.method);
  const std::uint64_t budget = method == BscMethod::FullMl ? o.budget_codewords : o.budget_patterns;

  Report rep;
  rep.command = "bsc-sim";
  rep.seed = o.seed;
  rep.randomized = true;
  rep.columns = {"m", "r", "model", "s_or_p", "method", "trials", "successes", "fraction", "halfwidth", "seed"};
  if (o.exact) rep.columns.push_back("exact");

  for (const auto& model : parse_models(o)) {
    const McEstimate est = mc_bsc_success(code, model, o.trials, o.seed, method, budget);
    std::vector<std::string> row{u64(o.m),          u64(o.r),         model_kind(model),       fmt_double(model.value),
                                 to_string(method), u64(est.trials),  u64(est.successes),      fmt_double(est.fraction()),
                                 fmt_double(est.halfwidth()),        u64(o.seed)};
    if (o.exact) {
      double exact = 0.0;
      if (model.kind == CorruptionModel::Kind::UniformWeight) {
        exact = exact_bsc_success(code, model.uniform_weight(), o.budget_patterns).value();
      } else {
        if (code.n() >= 64 || (std::uint64_t{1} << code.n()) > o.budget_patterns) {
          throw BudgetExceeded("too many patterns for the exact i.i.d. mixture");
        }
        for (std::size_t s = 0; s <= code.n(); ++s) {
          const double mass = binomial_pmf(code.n(), s, model.value);
          if (mass > 0.0) exact += mass * exact_bsc_success(code, s, o.budget_patterns).value();
        }
      }
      row.push_back(fmt_double(exact));
    }
    rep.add_row(std::move(row));
  }
  return rep;
}

Report cmd_reduction_check(const Options& o) {
  const std::string kind = o.kind.empty() ? "rm" : o.kind;
  Report rep;
  rep.command = "reduction-check";
  rep.seed = o.seed;
  rep.columns = {"kind",    "m",          "r",        "rows",       "cols",    "max_weight",
                 "examined", "skipped_dependent", "checked", "violations", "sampled", "first_violation"};

  ReductionReport result;
  std::string m_cell;
  std::string r_cell;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t max_weight = o.max_weight;
  if (kind == "rm") {
    check_code_params(o.m, o.r);
    check_cells(o.m, binom_sum(o.m, std::min(2 * o.r + 1, o.m)), o.budget_cells);
    if (max_weight == 0) max_weight = o.m;
    result = check_erasures_to_errors(o.m, o.r, max_weight, o.budget_patterns, o.seed);
    m_cell = u64(o.m);
    r_cell = u64(o.r);
    rows = dimension(o.m, std::min(2 * o.r + 1, o.m));
    cols = std::size_t{1} << o.m;
  } else if (kind == "general") {
    BitMatrix h;
    if (!o.h_file.empty()) {
      std::ifstream in(o.h_file);
      if (!in) throw std::invalid_argument("cannot open --h-file " + o.h_file);
      h = BitMatrix::parse(in);
    } else {
      if (o.h_rows == 0 || o.h_cols == 0) throw std::invalid_argument("--rows and --cols must be positive");
      // Distinct columns: a repeated column is independent on its own but
      // collides with its twin under every tensor power.
      if (o.h_rows < 64 && o.h_cols > (std::size_t{1} << o.h_rows)) {
        throw std::invalid_argument("--cols exceeds 2^rows; distinct columns are impossible");
      }
      Rng rng = substream(o.seed, 0);
      std::set<std::string> used;
      h = BitMatrix(o.h_rows, o.h_cols);
      for (std::size_t j = 0; j < o.h_cols; ++j) {
        BitVector col = BitVector::random(o.h_rows, rng);
        while (!used.insert(col.to_string()).second) col = BitVector::random(o.h_rows, rng);
        for (std::size_t i = 0; i < o.h_rows; ++i) h.set(i, j, col.get(i));
      }
      rep.randomized = true;
    }
    if (WideCount(binom_sum(static_cast<unsigned>(std::min<std::size_t>(h.rows(), 63)), 3)) * h.cols() >
        o.budget_cells) {
      throw BudgetExceeded("tensor power would exceed the cell budget (--budget-cells)");
    }
    rep.config["h"] = h.to_text();
    if (max_weight == 0) max_weight = h.rows();
    result = check_general_reduction(h, max_weight, o.budget_patterns, o.seed);
    rows = h.rows();
    cols = h.cols();
  } else {
    throw std::invalid_argument("--kind must be rm or general");
  }
  rep.randomized = rep.randomized || result.sampled;
  rep.add_row({kind, m_cell, r_cell, u64(rows), u64(cols), u64(max_weight), u64(result.examined),
               u64(result.skipped_dependent), u64(result.checked), u64(result.violations), fmt_bool(result.sampled),
               result.violation_examples.empty() ? "" : support_string(result.violation_examples.front())});
  return rep;
}

Report cmd_counterexample(const Options& o) {
  const std::size_t s = o.s_values.empty() ? 6 : o.s_values.front();
  if (o.m > kMaxVariables) throw std::invalid_argument("m must be at most 63");
  if (s > o.m) throw std::invalid_argument("--s must not exceed --m (U needs independent columns)");
  const BitMatrix b = companion_matrix(s);

  // U: s random points of F_2^m, redrawn until linearly independent.
  Rng rng = substream(o.seed, 0);
  const Point mask = o.m == 64 ? ~Point{0} : (Point{1} << o.m) - 1;
  PointMatrix u{o.m, {}};
  do {
    u.columns.clear();
    for (std::size_t i = 0; i < s; ++i) u.columns.push_back(rng() & mask);
  } while (rank(u.to_matrix()) != s);
  const PointMatrix v = companion_ub(u);

  const Syndrome su = eval_syndrome(u, 2);
  const Syndrome sv = eval_syndrome(v, 2);
  auto sorted = [](std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  const bool same_set = sorted(u.columns) == sorted(v.columns);
  const bool collide = su == sv;
  auto rows_of = [](const BitMatrix& mat) {
    std::string out;
    for (const auto& row : mat.row_vectors()) out += (out.empty() ? "" : " ") + row.to_string();
    return out;
  };
  auto points_of = [](const PointMatrix& pm) {
    std::string out;
    for (Point p : pm.columns) out += (out.empty() ? "" : " ") + std::to_string(p);
    return out;
  };

  Report rep;
  rep.command = "counterexample";
  rep.seed = o.seed;
  rep.randomized = true;
  rep.columns = {"field", "value"};
  rep.add_row({"m", u64(o.m)});
  rep.add_row({"s", u64(s)});
  rep.add_row({"substream_seed", u64(substream_seed(o.seed, 0))});
  rep.add_row({"U_points", points_of(u)});
  rep.add_row({"U_rows", rows_of(u.to_matrix())});
  rep.add_row({"B_rows", rows_of(b)});
  rep.add_row({"BBt_identity", fmt_bool(mat_mul(b, transpose(b)) == BitMatrix::identity(s))});
  rep.add_row({"V_points", points_of(v)});
  rep.add_row({"V_rows", rows_of(v.to_matrix())});
  rep.add_row({"syndrome_U", su.value.to_string()});
  rep.add_row({"syndrome_V", sv.value.to_string()});
  rep.add_row({"syndromes_equal", fmt_bool(collide)});
  rep.add_row({"V_equals_U", fmt_bool(same_set)});
  rep.add_row({"verdict", collide && !same_set ? "collision" : (same_set ? "degenerate" : "no-collision")});
  return rep;
}

Report cmd_weights(const Options& o) {
  check_code_params(o.m, o.r);
  const std::size_t k = dimension(o.m, o.r);
  if (k >= 63 || (std::uint64_t{1} << k) > o.budget_codewords) {
    throw BudgetExceeded("2^k codewords exceed --budget-codewords");
  }
  check_cells(o.m, binom_sum(o.m, o.r), o.budget_cells);
  const WeightDistribution dist = enumerate_weights(o.m, o.r, o.budget_codewords);
  Report rep;
  rep.command = "weights";
  rep.columns = {"w", "count"};
  for (std::size_t w = 0; w < dist.counts.size(); ++w) {
    if (dist.counts[w] != 0) rep.add_row({u64(w), u64(dist.counts[w])});
  }
  return rep;
}

Report cmd_ghw(const Options& o) {
  check_code_params(o.m, o.r);
  Report rep;
  rep.command = "ghw";
  rep.columns = {"a", "d_a", "d_a_bruteforce", "wei_rep"};
  const GhwTable table = ghw_table(o.m, o.r);
  for (std::size_t a = 1; a <= table.d.size(); ++a) {
    std::string brute;
    if (o.bruteforce) {
      try {
        brute = u64(ghw_bruteforce(o.m, o.r, static_cast<unsigned>(a), o.budget_subspaces));
      } catch (const BudgetExceeded&) {
        brute = "over-budget";
      }
    }
    std::string rep_text;
    for (const auto& [mi, ri] : wei_rep(a, o.m, o.r).terms) {
      rep_text += (rep_text.empty() ? "" : " ") + ("(" + std::to_string(mi) + ";" + std::to_string(ri) + ")");
    }
    rep.add_row({u64(a), u64(table.d[a - 1]), brute, rep_text});
  }
  return rep;
}

Report cmd_bound(const Options& o) {
  check_code_params(o.m, o.r);
  const std::string kind = o.kind.empty() ? "union" : o.kind;
  const std::size_t k = dimension(o.m, o.r);
  const bool enumerable = k < 63 && (std::uint64_t{1} << k) <= o.budget_codewords;
  Report rep;
  rep.command = "bound";

  if (kind == "klp") {
    rep.columns = {"m", "r", "ell", "eps", "c", "coefficient", "log2_bound", "log2_W", "holds", "minimal_c"};
    const KlpExponent bound = klp_bound(o.m, o.r, o.ell, o.eps, o.c);
    std::string log2_w;
    std::string holds;
    std::string minimal_c;
    if (enumerable) {
      const WeightDistribution dist = enumerate_weights(o.m, o.r, o.budget_codewords);
      const double alpha = (1.0 - o.eps) * std::ldexp(1.0, -static_cast<int>(o.ell));
      const double lw = std::log2(static_cast<double>(cumulative_weight(dist, alpha)));
      log2_w = fmt_double(lw);
      holds = fmt_bool(bound.log2_bound() >= lw);
      minimal_c = fmt_double(klp_minimal_constant(dist, o.ell, o.eps));
    }
    rep.add_row({u64(o.m), u64(o.r), u64(o.ell), fmt_double(o.eps), fmt_double(o.c), bound.coefficient.str(),
                 fmt_double(bound.log2_bound()), log2_w, holds, minimal_c});
    return rep;
  }
  if (kind != "union") throw std::invalid_argument("--kind must be klp or union");

  if (!enumerable) throw BudgetExceeded("the union bound needs the exact weight distribution; 2^k exceeds --budget-codewords");
  const WeightDistribution dist = enumerate_weights(o.m, o.r, o.budget_codewords);
  const std::size_t n = dist.n();
  std::vector<std::size_t> sizes = o.s_values;
  if (sizes.empty()) {
    for (std::size_t s = 0; s <= n / 2; ++s) sizes.push_back(s);
  }
  rep.columns = {"m", "r", "s", "union_bound", "union_bound_exact", "exact_bad_fraction", "dominates"};
  const RmCode code(o.m, o.r);
  for (std::size_t s : sizes) {
    const BigRational bound = bsc_union_bound(dist, s);
    std::string exact_cell;
    std::string dominates;
    if (o.exact) {
      const ExactFraction good = exact_bsc_success(code, s, o.budget_patterns);
      const BigRational bad(BigInt(good.total - good.good), BigInt(good.total));
      exact_cell = rational_string(bad);
      dominates = fmt_bool(bound >= bad);
    }
    rep.add_row({u64(o.m), u64(o.r), u64(s), fmt_double(bound.convert_to<double>()), rational_string(bound), exact_cell,
                 dominates});
  }
  return rep;
}

Report cmd_identity_sweep(const Options& o) {
  const std::string kind = o.kind.empty() ? "binomial" : o.kind;
  Report rep;
  rep.command = "identity-sweep";
  if (kind == "binomial") {
    rep.columns = {"m", "r", "t", "pass"};
    for (unsigned m = 1; m <= o.max_m; ++m) {
      for (unsigned r = 1; r <= m; ++r) {
        for (unsigned t = 0; t <= m; ++t) rep.add_row({u64(m), u64(r), u64(t), fmt_bool(binomial_identity_check(m, r, t))});
      }
    }
    return rep;
  }
  if (kind != "estimation") throw std::invalid_argument("--kind must be binomial or estimation");
  rep.columns = {"m", "r", "delta", "eps", "hypotheses_hold", "reduced_m", "lhs", "rhs", "inequality_holds", "verdict"};
  const EstimationCheck check = estimation_small_r_check(o.m, o.r, o.delta, o.eps);
  rep.add_row({u64(o.m), u64(o.r), fmt_double(o.delta), fmt_double(o.eps), fmt_bool(check.hypotheses_hold),
               std::to_string(check.reduced_m), fmt_double(check.lhs), fmt_double(check.rhs),
               fmt_bool(check.inequality_holds),
               check.hypotheses_hold ? fmt_bool(check.inequality_holds) : "hypotheses-violated"});
  return rep;
}

Report cmd_capacity(const Options& o) {
  std::vector<std::string> regimes = o.regimes;
  if (regimes.empty()) regimes = {"low-bec", "low-bsc", "high-bec", "high-bsc"};
  std::vector<double> rates = o.rates;
  if (rates.empty()) rates = {0.01, 0.1, 0.5, 0.9, 0.99};
  Report rep;
  rep.command = "capacity";
  rep.columns = {"regime", "R", "eps", "p"};
  for (const auto& name : regimes) {
    const Regime regime = parse_regime(name);
    for (double rate : rates) {
      rep.add_row({to_string(regime), fmt_double(rate), fmt_double(o.capacity_eps),
                   fmt_double(capacity_gap_threshold(regime, rate, o.capacity_eps))});
    }
  }
  return rep;
}

}  // namespace rmlab::cli
