#include "cutlab/experiment.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "cutlab/disjunction.hpp"
#include "cutlab/errors.hpp"
#include "cutlab/intersection.hpp"
#include "cutlab/json_io.hpp"
#include "cutlab/log.hpp"
#include "cutlab/simplex.hpp"

namespace cutlab {

Rational gap_closed(const Rational& z_lp, const Rational& z_with_cuts, const Rational& z_mip) {
  if (z_mip == z_lp) return Rational(0);
  // clamp toward the MIP value regardless of objective orientation
  const bool increasing = z_mip > z_lp;
  Rational z = z_with_cuts;
  if (increasing) {
    if (z < z_lp) z = z_lp;
    if (z > z_mip) z = z_mip;
  } else {
    if (z > z_lp) z = z_lp;
    if (z < z_mip) z = z_mip;
  }
  return (z - z_lp) / (z_mip - z_lp);
}

Rational gap_closed(const Rational& z_lp, const Rational& z_with_cuts,
                    const std::optional<Rational>& z_mip) {
  if (!z_mip) throw MissingMipOptimum();
  return gap_closed(z_lp, z_with_cuts, *z_mip);
}

double cut_distance(const Cut& cut, const RatVec& xbar) {
  Rational norm2;
  for (const auto& a : cut.alpha) norm2 += a * a;
  if (norm2.is_zero()) throw ZeroAlpha();
  const Rational violation = cut.beta - dot(cut.alpha, xbar);
  return std::abs(violation.to_double()) / std::sqrt(norm2.to_double());
}

namespace {

/// LP value after appending the given cuts to the relaxation.
Rational objective_with_cuts(const StandardForm& sf, const Model& model,
                             const std::vector<const Cut*>& cuts) {
  StandardForm tightened = sf;
  for (const Cut* c : cuts) tightened.append_structural(c->alpha, c->beta);
  const LpSolution sol = solve_relaxation(tightened, model.objective.c, model.objective.sense);
  if (sol.status != LpStatus::Optimal) throw Error("relaxation with cuts did not solve");
  return sol.objective;
}

}  // namespace

std::vector<ReportRow> run_first_round(const Model& model, const RunConfig& cfg,
                                       std::vector<CutRecord>* details_out) {
  const StandardForm sf = to_standard_form(model, StandardFormMode::Full);
  const LpSolution relax = solve_relaxation(sf, model.objective.c, model.objective.sense);
  if (relax.status != LpStatus::Optimal)
    throw Error("LP relaxation is " +
                std::string(relax.status == LpStatus::Infeasible ? "infeasible" : "unbounded"));
  const std::vector<int> frac = fractional_binaries(relax, model);
  if (frac.empty()) throw NoFractionalVariables();
  const RatVec& xbar = relax.x;
  const Rational z_lp = relax.objective;

  std::vector<ReportRow> rows;
  for (int k : cfg.k_sizes) {
    const auto subsets = enumerate_subsets(frac, k, cfg.subset_cap);
    std::vector<std::optional<CutRecord>> records(subsets.size());

    auto process = [&](size_t idx) {
      const std::vector<int>& K = subsets[idx];
      const Disjunction d = simple_tbranch(K, sf.n);
      auto sol = generate_cut(sf, d, xbar);
      if (!sol) return;
      CutRecord rec;
      rec.K = K;
      rec.sol = *sol;
      rec.basis = classify_basis(*sol, sf);
      rec.all_terms_cut = sol->zero_v_terms().empty();
      if (rec.basis.regular) {
        rec.split_var = detect_split(*sol, d);
        if (rec.split_var && !verify_theorem1(*sol, sf, d))
          throw Error("split cut failed its basis reconstruction");
      }
      if (rec.all_terms_cut) {
        RcvLimits limits;
        limits.loop_limit = cfg.loop_limit;
        limits.time_cap_ms = cfg.time_limit_per_cut_ms;
        rec.verdict = is_cut_regular(sol->cut(), *sol, sf, d, cfg.epsilon, limits);
      }
      rec.distance = cut_distance(sol->cut(), xbar);
      if (cfg.mip_optimum) {
        const Cut cut = sol->cut();
        const Rational z_single = objective_with_cuts(sf, model, {&cut});
        rec.gap_closed_single = gap_closed(z_lp, z_single, *cfg.mip_optimum);
      }
      records[idx] = std::move(rec);
    };

    if (cfg.jobs <= 1) {
      for (size_t i = 0; i < subsets.size(); ++i) process(i);
    } else {
      std::atomic<size_t> next{0};
      std::vector<std::thread> pool;
      const int width = std::min<int>(cfg.jobs, static_cast<int>(subsets.size()));
      pool.reserve(width);
      for (int w = 0; w < width; ++w)
        pool.emplace_back([&] {
          for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= subsets.size()) break;
            process(i);
          }
        });
      for (auto& t : pool) t.join();
    }

    ReportRow row;
    row.instance = model.name.empty() ? "instance" : model.name;
    row.k_size = k;
    row.frac_var_count = static_cast<int>(frac.size());
    Rational gap_sum;
    long gap_count = 0;
    double dist_sum = 0.0;
    long dist_count = 0;
    std::vector<Cut> kept_cuts;           // regular + strictly irregular
    std::vector<Cut> kept_regular_cuts;   // regular only
    for (auto& maybe : records) {
      if (!maybe) continue;
      CutRecord& rec = *maybe;
      if (rec.basis.regular)
        ++row.bases_regular;
      else
        ++row.bases_irregular;
      if (rec.split_var) ++row.split_count;
      if (rec.verdict) {
        switch (rec.verdict->kind) {
          case RegularityVerdict::Kind::Regular:
            ++row.cuts_regular;
            kept_cuts.push_back(rec.sol.cut());
            kept_regular_cuts.push_back(rec.sol.cut());
            break;
          case RegularityVerdict::Kind::StrictlyIrregular:
            ++row.cuts_irregular;
            kept_cuts.push_back(rec.sol.cut());
            break;
          case RegularityVerdict::Kind::Unknown:
            ++row.cuts_unknown;
            break;
        }
      }
      dist_sum += rec.distance;
      ++dist_count;
      if (rec.gap_closed_single) {
        gap_sum += *rec.gap_closed_single;
        ++gap_count;
      }
      if (details_out) details_out->push_back(std::move(rec));
    }
    if (gap_count > 0) row.avg_gap_closed = gap_sum / Rational(gap_count);
    if (dist_count > 0) row.avg_distance = dist_sum / static_cast<double>(dist_count);
    if (cfg.mip_optimum && !kept_cuts.empty()) {
      std::vector<const Cut*> all, reg;
      for (const Cut& c : kept_cuts) all.push_back(&c);
      for (const Cut& c : kept_regular_cuts) reg.push_back(&c);
      row.total_gap_with = gap_closed(z_lp, objective_with_cuts(sf, model, all), *cfg.mip_optimum);
      row.total_gap_without =
          gap_closed(z_lp, objective_with_cuts(sf, model, reg), *cfg.mip_optimum);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string fmt6(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string csv_cell_rat(const std::optional<Rational>& v) {
  return v ? v->decimal_str(6) : std::string();
}

std::string csv_cell_dbl(const std::optional<double>& v) {
  return v ? fmt6(*v) : std::string();
}

}  // namespace

std::string report_to_string(const std::vector<ReportRow>& rows, ReportFormat format,
                             const RunConfig& cfg) {
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "instance,k,frac,bases_reg,bases_irr,split,cuts_reg,cuts_irr,cuts_unk,"
           "avg_gap,avg_dist,gap_with,gap_without\n";
    for (const ReportRow& r : rows) {
      out << r.instance << ',' << r.k_size << ',' << r.frac_var_count << ',' << r.bases_regular
          << ',' << r.bases_irregular << ',' << r.split_count << ',' << r.cuts_regular << ','
          << r.cuts_irregular << ',' << r.cuts_unknown << ',' << csv_cell_rat(r.avg_gap_closed)
          << ',' << csv_cell_dbl(r.avg_distance) << ',' << csv_cell_rat(r.total_gap_with) << ','
          << csv_cell_rat(r.total_gap_without) << '\n';
    }
    return out.str();
  }
  return report_json_string(rows, cfg);
}

void write_report(const std::vector<ReportRow>& rows, ReportFormat format, const std::string& path,
                  const RunConfig& cfg) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << report_to_string(rows, format, cfg);
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace cutlab
