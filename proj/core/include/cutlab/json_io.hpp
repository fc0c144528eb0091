#pragma once

#include <optional>
#include <string>

#include "cutlab/cglp.hpp"
#include "cutlab/disjunction.hpp"
#include "cutlab/experiment.hpp"
#include "cutlab/model.hpp"
#include "cutlab/rcv.hpp"

namespace cutlab {

/// Native fixture schema:
/// {"variables":[{"name","lower","upper","kind"}],
///  "constraints":[{"coeffs":{"j":"p/q"},"sense","rhs"}],
///  "objective":{"sense","c":[...]}}
Model load_fixture(const std::string& text);
Model load_fixture_file(const std::string& path);
std::string serialize_fixture(const Model& model);

Disjunction disjunction_from_json(const std::string& text);
std::string disjunction_to_json(const Disjunction& d);

/// Cut JSON {"alpha":[...], "beta":"p/q", "u":[[...]], "v":[[...]]}; the
/// multiplier blocks are optional on input.
struct CutJson {
  Cut cut;
  std::optional<std::vector<RatVec>> u, v;
};
CutJson cut_from_json(const std::string& text);
std::string cut_to_json(const CglpSolution& sol);

std::string verdict_to_json(const RegularityVerdict& verdict, const std::string& cut_id);

std::string report_json_string(const std::vector<ReportRow>& rows, const RunConfig& cfg);

std::string read_text_file(const std::string& path);

}  // namespace cutlab
