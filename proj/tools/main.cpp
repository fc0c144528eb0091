#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutlab/disjunction.hpp"
#include "cutlab/errors.hpp"
#include "cutlab/experiment.hpp"
#include "cutlab/intersection.hpp"
#include "cutlab/json_io.hpp"
#include "cutlab/log.hpp"
#include "cutlab/mps.hpp"
#include "cutlab/rcv.hpp"
#include "cutlab/simplex.hpp"

namespace {

using namespace cutlab;

Model load_instance(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".json") return load_fixture_file(path);
  return parse_mps_file(path);
}

int cmd_analyze(const std::string& input, std::vector<int> ks, const std::string& epsilon,
                std::optional<int> loop_limit, std::optional<double> time_limit,
                const std::string& mip_optimum, std::optional<long> subset_cap, int jobs,
                const std::string& out, const std::string& format) {
  Model model = load_instance(input);
  if (model.name.empty()) model.name = std::filesystem::path(input).stem().string();
  RunConfig cfg;
  if (!ks.empty()) cfg.k_sizes = std::move(ks);
  cfg.epsilon = Rational::from_string(epsilon);
  cfg.loop_limit = loop_limit;
  if (time_limit) cfg.time_limit_per_cut_ms = static_cast<long>(*time_limit * 1000.0);
  if (!mip_optimum.empty()) cfg.mip_optimum = Rational::from_string(mip_optimum);
  cfg.subset_cap = subset_cap;
  cfg.jobs = jobs;

  const std::vector<ReportRow> rows = run_first_round(model, cfg);
  std::cout << "instance      k  frac  bases_reg  bases_irr  split  cuts_reg  cuts_irr  cuts_unk\n";
  for (const ReportRow& r : rows) {
    std::cout << r.instance << "  " << r.k_size << "  " << r.frac_var_count << "  "
              << r.bases_regular << "  " << r.bases_irregular << "  " << r.split_count << "  "
              << r.cuts_regular << "  " << r.cuts_irregular << "  " << r.cuts_unknown << "\n";
  }
  if (!out.empty()) {
    write_report(rows, format == "json" ? ReportFormat::Json : ReportFormat::Csv, out, cfg);
    std::cerr << "report written to " << out << "\n";
  }
  return 0;
}

CglpSolution solution_from_cut_json(const CutJson& cj, const StandardForm& sf,
                                    const Disjunction& d) {
  CglpSolution sol;
  sol.alpha = cj.cut.alpha;
  sol.beta = cj.cut.beta;
  if (cj.u && cj.v) {
    sol.u = *cj.u;
    sol.v = *cj.v;
    if (!cglp_solution_feasible(sol, sf, d))
      throw SchemaError("cut JSON multipliers do not satisfy the CGLP system");
  } else {
    // no generating solution supplied: an all-zero placeholder (never regular)
    sol.u.assign(d.term_count(), RatVec(sf.q()));
    sol.v.assign(d.term_count(), RatVec(d.r));
  }
  sol.term_v_sums.assign(d.term_count(), Rational(0));
  for (int t = 0; t < d.term_count(); ++t) {
    Rational s;
    for (const auto& x : sol.v[t]) s += x;
    sol.term_v_sums[t] = s;
  }
  return sol;
}

int cmd_verify_cut(const std::string& instance, const std::string& cut_path,
                   const std::string& disj_path, const std::string& epsilon) {
  const Model model = load_instance(instance);
  const StandardForm sf = to_standard_form(model, StandardFormMode::Full);
  const Disjunction d = disjunction_from_json(read_text_file(disj_path));
  const CutJson cj = cut_from_json(read_text_file(cut_path));
  const CglpSolution sol = solution_from_cut_json(cj, sf, d);
  RcvLimits limits;
  const RegularityVerdict verdict =
      is_cut_regular(cj.cut, sol, sf, d, Rational::from_string(epsilon), limits);
  std::cout << verdict_to_json(verdict, std::filesystem::path(cut_path).stem().string()) << "\n";
  return 0;
}

int cmd_show_lp(const std::string& input) {
  const Model model = load_instance(input);
  const StandardForm sf = to_standard_form(model, StandardFormMode::Full);
  std::cout << "n=" << sf.n << " m=" << sf.m << " p=" << sf.p << " q=" << sf.q() << "\n";
  for (int i = 0; i < sf.q(); ++i) {
    const auto& prov = sf.provenance[i];
    const char* kind = prov.kind == RowProvenance::Kind::Structural   ? "row"
                       : prov.kind == RowProvenance::Kind::LowerBound ? "lb "
                                                                      : "ub ";
    std::cout << "  [" << i << "] " << kind << " ";
    bool first = true;
    for (int j = 0; j < sf.n; ++j) {
      const Rational& a = sf.a_tilde.at(i, j);
      if (a.is_zero()) continue;
      if (!first) std::cout << " + ";
      std::cout << a.str() << "*x" << j;
      first = false;
    }
    std::cout << " >= " << sf.b_tilde[i].str() << "\n";
  }
  const LpSolution sol = solve_relaxation(sf, model.objective.c, model.objective.sense);
  if (sol.status != LpStatus::Optimal) {
    std::cout << "LP relaxation: "
              << (sol.status == LpStatus::Infeasible ? "infeasible" : "unbounded") << "\n";
    return 0;
  }
  std::cout << "LP optimum " << sol.objective.str() << " (" << sol.objective.decimal_str(6)
            << ") at x = [";
  for (int j = 0; j < sf.n; ++j) std::cout << (j ? ", " : "") << sol.x[j].str();
  std::cout << "]\n";
  const auto frac = fractional_binaries(sol, model);
  std::cout << "fractional binaries (" << frac.size() << "):";
  for (int j : frac) std::cout << " " << model.variables[j].name;
  std::cout << "\n";
  return 0;
}

int cmd_oracle(const std::string& instance, const std::string& cut_path,
               const std::string& disj_path) {
  const Model model = load_instance(instance);
  const StandardForm sf = to_standard_form(model, StandardFormMode::Full);
  const Disjunction d = disjunction_from_json(read_text_file(disj_path));
  const CutJson cj = cut_from_json(read_text_file(cut_path));
  const bool reg = oracle_extended_regular(cj.cut, sf, d);
  std::cout << "{\"extended_regular\": " << (reg ? "true" : "false") << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutlab: lift-and-project cut generation and regularity verification"};
  app.require_subcommand(1);

  std::string input, epsilon = "1e-4", mip_optimum, out, format = "csv";
  std::vector<int> ks;
  std::optional<int> loop_limit;
  std::optional<double> time_limit;
  std::optional<long> subset_cap;
  int jobs = 1;

  auto* analyze = app.add_subcommand("analyze", "first-round cut study on an instance");
  analyze->add_option("--input", input, "instance file (.mps or fixture .json)")->required();
  analyze->add_option("--k", ks, "disjunction sizes |K| (repeatable; default 2)");
  analyze->add_option("--epsilon", epsilon, "verifier tolerance (exact rational, e.g. 1e-4)");
  analyze->add_option("--loop-limit", loop_limit, "verifier loop limit per cut");
  analyze->add_option("--time-limit", time_limit, "verifier time limit per cut, seconds");
  analyze->add_option("--mip-optimum", mip_optimum, "known MIP optimum (enables gap metrics)");
  analyze->add_option("--subset-cap", subset_cap, "cap on enumerated K-subsets per k");
  analyze->add_option("--jobs", jobs, "parallel cut workers (default 1, deterministic)");
  analyze->add_option("--out", out, "report output path");
  analyze->add_option("--format", format, "report format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string cut_path, disj_path;
  auto* verify = app.add_subcommand("verify-cut", "regularity verdict for a given cut");
  verify->add_option("--instance", input, "instance file")->required();
  verify->add_option("--cut", cut_path, "cut JSON")->required();
  verify->add_option("--disjunction", disj_path, "disjunction JSON")->required();
  verify->add_option("--epsilon", epsilon, "verifier tolerance");

  auto* show = app.add_subcommand("show-lp", "print the standard form and LP optimum");
  show->add_option("--input", input, "instance file")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive extended-regularity oracle (small q)");
  oracle->add_option("--instance", input, "instance file")->required();
  oracle->add_option("--cut", cut_path, "cut JSON")->required();
  oracle->add_option("--disjunction", disj_path, "disjunction JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("analyze"))
      return cmd_analyze(input, ks, epsilon, loop_limit, time_limit, mip_optimum, subset_cap, jobs,
                         out, format);
    if (app.got_subcommand("verify-cut")) return cmd_verify_cut(input, cut_path, disj_path, epsilon);
    if (app.got_subcommand("show-lp")) return cmd_show_lp(input);
    if (app.got_subcommand("oracle")) return cmd_oracle(input, cut_path, disj_path);
  } catch (const cutlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
