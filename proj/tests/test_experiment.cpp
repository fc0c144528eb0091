#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cutlab/errors.hpp"
#include "cutlab/experiment.hpp"
#include "cutlab/json_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cutlab;

TEST_CASE("gap closed") {
  const Rational z_lp(0), z_mip(4);
  CHECK(gap_closed(z_lp, Rational(0), z_mip) == Rational(0));
  CHECK(gap_closed(z_lp, Rational(4), z_mip) == Rational(1));
  CHECK(gap_closed(z_lp, Rational(1), z_mip) == Rational(1, 4));
  SUBCASE("degenerate gap") { CHECK(gap_closed(Rational(2), Rational(2), Rational(2)) == Rational(0)); }
  SUBCASE("clamping") {
    CHECK(gap_closed(z_lp, Rational(5), z_mip) == Rational(1));
    CHECK(gap_closed(z_lp, Rational(-1), z_mip) == Rational(0));
    // maximization-style orientation (z_mip below z_lp)
    CHECK(gap_closed(Rational(4), Rational(3), Rational(0)) == Rational(1, 4));
  }
  SUBCASE("missing MIP optimum") {
    CHECK_THROWS_AS(gap_closed(z_lp, Rational(1), std::optional<Rational>{}), MissingMipOptimum);
  }
}

TEST_CASE("cut distance") {
  SUBCASE("axis-aligned unit case") {
    CHECK(cut_distance(Cut{{Rational(1), Rational(0)}, Rational(1)},
                       {Rational(0), Rational(0)}) == doctest::Approx(1.0));
  }
  SUBCASE("scaling the cut leaves the distance unchanged") {
    const Cut c{{Rational(2), Rational(-2)}, Rational(1)};
    Cut scaled = c;
    for (auto& a : scaled.alpha) a *= Rational(3);
    scaled.beta *= Rational(3);
    const RatVec x{Rational(1, 7), Rational(2, 7)};
    CHECK(cut_distance(c, x) == doctest::Approx(cut_distance(scaled, x)));
  }
  SUBCASE("distance from B to the printed inequality 2x1 - 2x2 = 1") {
    const double d = cut_distance(Cut{{Rational(2), Rational(-2)}, Rational(1)},
                                  fixtures::fig1_vertex_B());
    CHECK(d == doctest::Approx(0.25 / (2.0 * std::sqrt(2.0))));
  }
  SUBCASE("zero alpha is rejected") {
    CHECK_THROWS_AS(cut_distance(Cut{{Rational(0)}, Rational(1)}, {Rational(0)}), ZeroAlpha);
  }
}

namespace {

/// Two fractional binaries at the unique LP optimum (1/2, 1/2).
Model two_frac_model() {
  Model m;
  m.name = "twofrac";
  for (int j = 0; j < 2; ++j) {
    Variable v;
    v.name = "b" + std::to_string(j);
    v.lower = Rational(0);
    v.upper = Rational(1);
    v.kind = VarKind::Binary;
    m.variables.push_back(v);
  }
  Constraint c1;
  c1.coeffs = {{0, Rational(1)}, {1, Rational(2)}};
  c1.sense = RowSense::Le;
  c1.rhs = Rational(3, 2);
  Constraint c2;
  c2.coeffs = {{0, Rational(2)}, {1, Rational(1)}};
  c2.sense = RowSense::Le;
  c2.rhs = Rational(3, 2);
  m.constraints = {c1, c2};
  m.objective.sense = ObjSense::Min;
  m.objective.c = {Rational(-1), Rational(-1)};
  return m;
}

}  // namespace

TEST_CASE("first-round run on a two-binary instance") {
  const Model m = two_frac_model();
  RunConfig cfg;
  cfg.epsilon = Rational(0);
  cfg.mip_optimum = Rational(-1);  // both 0/1 points (1,0) and (0,1) attain -1
  std::vector<CutRecord> details;
  const auto rows = run_first_round(m, cfg, &details);
  REQUIRE(rows.size() == 1);
  const ReportRow& row = rows[0];
  CHECK(row.k_size == 2);
  CHECK(row.frac_var_count == 2);
  CHECK(row.bases_regular + row.bases_irregular == static_cast<long>(details.size()));
  long with_v = 0;
  for (const auto& rec : details)
    if (rec.all_terms_cut) ++with_v;
  CHECK(row.cuts_regular + row.cuts_irregular + row.cuts_unknown == with_v);
  CHECK(row.cuts_irregular <= row.bases_irregular);
  for (const auto& rec : details)
    if (rec.split_var) CHECK(rec.basis.regular);
  CHECK(row.avg_gap_closed.has_value());
  CHECK(row.total_gap_with.has_value());
  // cuts can close at most the whole gap
  CHECK(*row.total_gap_with <= Rational(1));
  CHECK(*row.total_gap_without <= *row.total_gap_with);
}

TEST_CASE("integral LP optimum raises NoFractionalVariables") {
  Model m = two_frac_model();
  m.objective.c = {Rational(1), Rational(1)};  // minimum at the origin, integral
  CHECK_THROWS_AS(run_first_round(m, RunConfig{}), NoFractionalVariables);
}

TEST_CASE("reports") {
  RunConfig cfg;
  SUBCASE("empty rows give a header-only CSV") {
    const std::string csv = report_to_string({}, ReportFormat::Csv, cfg);
    CHECK(csv ==
          "instance,k,frac,bases_reg,bases_irr,split,cuts_reg,cuts_irr,cuts_unk,"
          "avg_gap,avg_dist,gap_with,gap_without\n");
  }
  SUBCASE("one row has 13 columns") {
    ReportRow row;
    row.instance = "toy";
    row.k_size = 2;
    row.frac_var_count = 5;
    row.avg_gap_closed = Rational(1, 4);
    row.avg_distance = 0.125;
    const std::string csv = report_to_string({row}, ReportFormat::Csv, cfg);
    std::istringstream in(csv);
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    CHECK(std::count(line.begin(), line.end(), ',') == 12);
    CHECK(line.substr(0, 4) == "toy,");
  }
  SUBCASE("JSON round-trips through the reader") {
    ReportRow row;
    row.instance = "toy";
    row.k_size = 3;
    row.frac_var_count = 7;
    row.bases_regular = 4;
    row.bases_irregular = 2;
    row.split_count = 1;
    row.cuts_regular = 4;
    row.cuts_irregular = 1;
    row.cuts_unknown = 1;
    row.avg_gap_closed = Rational(2, 7);
    row.avg_distance = 0.375;
    row.total_gap_with = Rational(1, 3);
    row.total_gap_without = Rational(1, 4);
    const auto back = read_report_json(report_to_string({row}, ReportFormat::Json, cfg));
    REQUIRE(back.size() == 1);
    CHECK(back[0].instance == row.instance);
    CHECK(back[0].k_size == row.k_size);
    CHECK(back[0].frac_var_count == row.frac_var_count);
    CHECK(back[0].bases_regular == row.bases_regular);
    CHECK(back[0].bases_irregular == row.bases_irregular);
    CHECK(back[0].split_count == row.split_count);
    CHECK(back[0].cuts_regular == row.cuts_regular);
    CHECK(back[0].cuts_irregular == row.cuts_irregular);
    CHECK(back[0].cuts_unknown == row.cuts_unknown);
    CHECK(*back[0].avg_gap_closed == *row.avg_gap_closed);
    CHECK(*back[0].avg_distance == doctest::Approx(*row.avg_distance));
    CHECK(*back[0].total_gap_with == *row.total_gap_with);
    CHECK(*back[0].total_gap_without == *row.total_gap_without);
  }
}

TEST_CASE("identical runs produce byte-identical reports") {
  const Model m = two_frac_model();
  RunConfig cfg;
  cfg.mip_optimum = Rational(-1);
  const auto rows1 = run_first_round(m, cfg);
  const auto rows2 = run_first_round(m, cfg);
  CHECK(report_to_string(rows1, ReportFormat::Csv, cfg) ==
        report_to_string(rows2, ReportFormat::Csv, cfg));
  CHECK(report_to_string(rows1, ReportFormat::Json, cfg) ==
        report_to_string(rows2, ReportFormat::Json, cfg));
}

TEST_CASE("worker pool does not change results") {
  const Model m = two_frac_model();
  RunConfig seq;
  seq.mip_optimum = Rational(-1);
  RunConfig par = seq;
  par.jobs = 4;
  CHECK(report_to_string(run_first_round(m, seq), ReportFormat::Csv, seq) ==
        report_to_string(run_first_round(m, par), ReportFormat::Csv, par));
}
