#include "cutlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cutlab/errors.hpp"

namespace cutlab {

using nlohmann::json;

namespace {

Rational rat_from_json(const json& v) {
  try {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) {
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      return Rational::from_string(os.str());
    }
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("expected a rational (string \"p/q\" or number)");
}

RatVec rat_vec_from_json(const json& arr) {
  if (!arr.is_array()) throw SchemaError("expected an array of rationals");
  RatVec out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(rat_from_json(v));
  return out;
}

json rat_vec_to_json(const RatVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

json parse_or_schema_error(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Model load_fixture(const std::string& text) {
  const json j = parse_or_schema_error(text);
  try {
    Model model;
    if (j.contains("name")) model.name = j.at("name").get<std::string>();
    int idx = 0;
    for (const auto& vj : j.at("variables")) {
      Variable v;
      v.name = vj.contains("name") ? vj.at("name").get<std::string>() : "x" + std::to_string(idx);
      v.lower = vj.contains("lower") ? rat_from_json(vj.at("lower")) : Rational(0);
      if (vj.contains("upper") && !vj.at("upper").is_null()) {
        const auto& uj = vj.at("upper");
        if (!(uj.is_string() && (uj.get<std::string>() == "inf" || uj.get<std::string>() == "infinite")))
          v.upper = rat_from_json(uj);
      }
      const std::string kind = vj.contains("kind") ? vj.at("kind").get<std::string>() : "continuous";
      if (kind == "binary")
        v.kind = VarKind::Binary;
      else if (kind == "integer")
        v.kind = VarKind::Integer;
      else if (kind == "continuous")
        v.kind = VarKind::Continuous;
      else
        throw SchemaError("unknown variable kind '" + kind + "'");
      model.variables.push_back(std::move(v));
      ++idx;
    }
    for (const auto& cj : j.at("constraints")) {
      Constraint c;
      c.name = cj.contains("name") ? cj.at("name").get<std::string>()
                                   : "r" + std::to_string(model.constraints.size());
      for (const auto& [key, val] : cj.at("coeffs").items())
        c.coeffs.emplace_back(std::stoi(key), rat_from_json(val));
      std::sort(c.coeffs.begin(), c.coeffs.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      const std::string sense = cj.at("sense").get<std::string>();
      if (sense == ">=")
        c.sense = RowSense::Ge;
      else if (sense == "<=")
        c.sense = RowSense::Le;
      else if (sense == "=" || sense == "==")
        c.sense = RowSense::Eq;
      else
        throw SchemaError("unknown sense '" + sense + "'");
      c.rhs = rat_from_json(cj.at("rhs"));
      model.constraints.push_back(std::move(c));
    }
    const auto& oj = j.at("objective");
    const std::string osense = oj.at("sense").get<std::string>();
    if (osense == "min")
      model.objective.sense = ObjSense::Min;
    else if (osense == "max")
      model.objective.sense = ObjSense::Max;
    else
      throw SchemaError("unknown objective sense '" + osense + "'");
    model.objective.c = rat_vec_from_json(oj.at("c"));
    model.validate();
    return model;
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
}

Model load_fixture_file(const std::string& path) { return load_fixture(read_text_file(path)); }

std::string serialize_fixture(const Model& model) {
  json j;
  if (!model.name.empty()) j["name"] = model.name;
  j["variables"] = json::array();
  for (const auto& v : model.variables) {
    json vj;
    vj["name"] = v.name;
    vj["lower"] = v.lower.str();
    if (v.upper)
      vj["upper"] = v.upper->str();
    else
      vj["upper"] = nullptr;
    vj["kind"] = v.kind == VarKind::Binary   ? "binary"
                 : v.kind == VarKind::Integer ? "integer"
                                              : "continuous";
    j["variables"].push_back(std::move(vj));
  }
  j["constraints"] = json::array();
  for (const auto& c : model.constraints) {
    json cj;
    cj["name"] = c.name;
    json coeffs = json::object();
    for (const auto& [idx, val] : c.coeffs) coeffs[std::to_string(idx)] = val.str();
    cj["coeffs"] = std::move(coeffs);
    cj["sense"] = c.sense == RowSense::Ge ? ">=" : c.sense == RowSense::Le ? "<=" : "=";
    cj["rhs"] = c.rhs.str();
    j["constraints"].push_back(std::move(cj));
  }
  j["objective"]["sense"] = model.objective.sense == ObjSense::Min ? "min" : "max";
  j["objective"]["c"] = rat_vec_to_json(model.objective.c);
  return j.dump(2);
}

Disjunction disjunction_from_json(const std::string& text) {
  const json j = parse_or_schema_error(text);
  try {
    Disjunction d;
    d.n = j.at("n").get<int>();
    for (const auto& tj : j.at("terms")) {
      DisjunctionTerm term;
      std::vector<RatVec> rows;
      RatVec rhs;
      std::vector<RowLabel> labels;
      bool any_label = false;
      for (const auto& rj : tj.at("rows")) {
        RatVec row(d.n);
        for (const auto& [key, val] : rj.at("coeffs").items()) {
          const int idx = std::stoi(key);
          if (idx < 0 || idx >= d.n) throw SchemaError("term coefficient index out of range");
          row[idx] = rat_from_json(val);
        }
        rows.push_back(std::move(row));
        rhs.push_back(rat_from_json(rj.at("rhs")));
        if (rj.contains("label")) {
          const auto& lj = rj.at("label");
          const std::string side = lj.at("side").get<std::string>();
          if (side != ">=1" && side != "<=0") throw SchemaError("unknown label side " + side);
          labels.push_back({lj.at("var").get<int>(),
                            side == ">=1" ? BranchSide::AtLeastOne : BranchSide::AtMostZero});
          any_label = true;
        } else {
          labels.push_back({-1, BranchSide::AtMostZero});
        }
      }
      term.d = RatMatrix::from_rows(rows);
      term.d0 = std::move(rhs);
      if (any_label) {
        for (const auto& l : labels)
          if (l.variable < 0) throw SchemaError("partially labeled term");
        term.labels = std::move(labels);
      }
      d.terms.push_back(std::move(term));
    }
    if (d.terms.empty()) throw SchemaError("disjunction needs at least one term");
    d.r = d.terms[0].d.rows();
    for (const auto& t : d.terms)
      if (t.d.rows() != d.r) throw SchemaError("terms disagree on row count");
    return d;
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
}

std::string disjunction_to_json(const Disjunction& d) {
  json j;
  j["n"] = d.n;
  j["terms"] = json::array();
  for (const auto& term : d.terms) {
    json tj;
    tj["rows"] = json::array();
    for (int l = 0; l < term.d.rows(); ++l) {
      json rj;
      json coeffs = json::object();
      for (int jcol = 0; jcol < term.d.cols(); ++jcol)
        if (!term.d.at(l, jcol).is_zero()) coeffs[std::to_string(jcol)] = term.d.at(l, jcol).str();
      rj["coeffs"] = std::move(coeffs);
      rj["rhs"] = term.d0[l].str();
      if (term.labels) {
        rj["label"]["var"] = (*term.labels)[l].variable;
        rj["label"]["side"] = (*term.labels)[l].side == BranchSide::AtLeastOne ? ">=1" : "<=0";
      }
      tj["rows"].push_back(std::move(rj));
    }
    j["terms"].push_back(std::move(tj));
  }
  return j.dump(2);
}

CutJson cut_from_json(const std::string& text) {
  const json j = parse_or_schema_error(text);
  try {
    CutJson out;
    out.cut.alpha = rat_vec_from_json(j.at("alpha"));
    out.cut.beta = rat_from_json(j.at("beta"));
    if (j.contains("u")) {
      std::vector<RatVec> u;
      for (const auto& row : j.at("u")) u.push_back(rat_vec_from_json(row));
      out.u = std::move(u);
    }
    if (j.contains("v")) {
      std::vector<RatVec> v;
      for (const auto& row : j.at("v")) v.push_back(rat_vec_from_json(row));
      out.v = std::move(v);
    }
    return out;
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
}

std::string cut_to_json(const CglpSolution& sol) {
  json j;
  j["alpha"] = rat_vec_to_json(sol.alpha);
  j["beta"] = sol.beta.str();
  j["u"] = json::array();
  for (const auto& ut : sol.u) j["u"].push_back(rat_vec_to_json(ut));
  j["v"] = json::array();
  for (const auto& vt : sol.v) j["v"].push_back(rat_vec_to_json(vt));
  return j.dump(2);
}

std::string verdict_to_json(const RegularityVerdict& verdict, const std::string& cut_id) {
  json j;
  j["cut_id"] = cut_id;
  switch (verdict.kind) {
    case RegularityVerdict::Kind::Regular:
      j["kind"] = "Regular";
      j["theta"] = verdict.theta.str();
      j["witness_N"] = verdict.witness_N;
      break;
    case RegularityVerdict::Kind::StrictlyIrregular:
      j["kind"] = "StrictlyIrregular";
      j["theta"] = "0";
      j["witness_N"] = nullptr;
      break;
    case RegularityVerdict::Kind::Unknown:
      j["kind"] = "Unknown";
      j["theta"] = nullptr;
      j["witness_N"] = nullptr;
      j["reason"] =
          verdict.reason == RegularityVerdict::UnknownReason::LoopLimit ? "LoopLimit" : "TimeLimit";
      break;
  }
  j["loop_count"] = verdict.loop_count;
  j["wall_ms"] = verdict.wall_ms;
  return j.dump(2);
}

namespace {

json row_to_json(const ReportRow& r) {
  json j;
  j["instance"] = r.instance;
  j["k"] = r.k_size;
  j["frac"] = r.frac_var_count;
  j["bases_reg"] = r.bases_regular;
  j["bases_irr"] = r.bases_irregular;
  j["split"] = r.split_count;
  j["cuts_reg"] = r.cuts_regular;
  j["cuts_irr"] = r.cuts_irregular;
  j["cuts_unk"] = r.cuts_unknown;
  auto put_rat = [&j](const char* key, const std::optional<Rational>& v) {
    if (v) {
      j[key] = v->decimal_str(6);
      j[std::string(key) + "_exact"] = v->str();
    } else {
      j[key] = nullptr;
    }
  };
  put_rat("avg_gap", r.avg_gap_closed);
  if (r.avg_distance) {
    std::ostringstream os;
    os.precision(6);
    os << *r.avg_distance;
    j["avg_dist"] = os.str();
  } else {
    j["avg_dist"] = nullptr;
  }
  put_rat("gap_with", r.total_gap_with);
  put_rat("gap_without", r.total_gap_without);
  return j;
}

}  // namespace

std::string report_json_string(const std::vector<ReportRow>& rows, const RunConfig& cfg) {
  json j;
  j["metadata"]["epsilon"] = cfg.epsilon.str();
  j["metadata"]["k_sizes"] = cfg.k_sizes;
  j["metadata"]["gap_closed_formula"] =
      "(z_with_cuts - z_lp) / (z_mip - z_lp), z_with_cuts clamped into [z_lp, z_mip]";
  j["metadata"]["averaging"] =
      "averages over completed verdicts; Unknown-verdict cuts are excluded from the "
      "total-gap resolves";
  j["metadata"]["mip_optimum"] = cfg.mip_optimum ? json(cfg.mip_optimum->str()) : json(nullptr);
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back(row_to_json(r));
  return j.dump(2);
}

std::vector<ReportRow> read_report_json(const std::string& text) {
  const json j = parse_or_schema_error(text);
  try {
    std::vector<ReportRow> rows;
    for (const auto& rj : j.at("rows")) {
      ReportRow r;
      r.instance = rj.at("instance").get<std::string>();
      r.k_size = rj.at("k").get<int>();
      r.frac_var_count = rj.at("frac").get<int>();
      r.bases_regular = rj.at("bases_reg").get<long>();
      r.bases_irregular = rj.at("bases_irr").get<long>();
      r.split_count = rj.at("split").get<long>();
      r.cuts_regular = rj.at("cuts_reg").get<long>();
      r.cuts_irregular = rj.at("cuts_irr").get<long>();
      r.cuts_unknown = rj.at("cuts_unk").get<long>();
      if (rj.contains("avg_gap_exact"))
        r.avg_gap_closed = Rational::from_string(rj.at("avg_gap_exact").get<std::string>());
      if (rj.contains("avg_dist") && !rj.at("avg_dist").is_null())
        r.avg_distance = std::stod(rj.at("avg_dist").get<std::string>());
      if (rj.contains("gap_with_exact"))
        r.total_gap_with = Rational::from_string(rj.at("gap_with_exact").get<std::string>());
      if (rj.contains("gap_without_exact"))
        r.total_gap_without = Rational::from_string(rj.at("gap_without_exact").get<std::string>());
      rows.push_back(std::move(r));
    }
    return rows;
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace cutlab
