#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutlab/cglp.hpp"
#include "cutlab/model.hpp"
#include "cutlab/rcv.hpp"

namespace cutlab {

struct RunConfig {
  std::vector<int> k_sizes{2};
  Rational epsilon{1, 10000};
  std::optional<int> loop_limit;
  std::optional<long> time_limit_per_cut_ms;
  std::optional<Rational> mip_optimum;
  std::optional<long> subset_cap;
  int jobs = 1;
};

/// One aggregated line per (instance, k).
struct ReportRow {
  std::string instance;
  int k_size = 0;
  int frac_var_count = 0;
  long bases_regular = 0;
  long bases_irregular = 0;
  long split_count = 0;
  long cuts_regular = 0;
  long cuts_irregular = 0;
  long cuts_unknown = 0;
  std::optional<Rational> avg_gap_closed;
  std::optional<double> avg_distance;
  std::optional<Rational> total_gap_with;
  std::optional<Rational> total_gap_without;
};

/// Per-disjunction detail kept for tests and verbose output.
struct CutRecord {
  std::vector<int> K;
  CglpSolution sol;
  BasisVerdict basis;
  std::optional<int> split_var;
  bool all_terms_cut = false;  // every term has sum(v) > 0
  std::optional<RegularityVerdict> verdict;
  double distance = 0.0;
  std::optional<Rational> gap_closed_single;
};

/// First-round experiment: one CGLP cut per |K|-subset of the fractional
/// binaries, Theorem-criterion basis classification, split detection, and the
/// iterative regularity verdict, aggregated per k.
std::vector<ReportRow> run_first_round(const Model& model, const RunConfig& cfg,
                                       std::vector<CutRecord>* details = nullptr);

/// (z_with_cuts - z_lp) / (z_mip - z_lp) with z_with_cuts clamped into
/// [z_lp, z_mip]; 0 when the gap is empty. Orientation-independent: pass
/// values in the instance's own objective sense.
Rational gap_closed(const Rational& z_lp, const Rational& z_with_cuts, const Rational& z_mip);

/// Throws MissingMipOptimum when no MIP value is configured.
Rational gap_closed(const Rational& z_lp, const Rational& z_with_cuts,
                    const std::optional<Rational>& z_mip);

/// Euclidean distance from xbar to the cut hyperplane, (beta - alpha.xbar)/|alpha|_2.
double cut_distance(const Cut& cut, const RatVec& xbar);

enum class ReportFormat { Csv, Json };

void write_report(const std::vector<ReportRow>& rows, ReportFormat format,
                  const std::string& path, const RunConfig& cfg);
std::string report_to_string(const std::vector<ReportRow>& rows, ReportFormat format,
                             const RunConfig& cfg);
std::vector<ReportRow> read_report_json(const std::string& text);

}  // namespace cutlab
