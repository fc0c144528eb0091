#include "cutlab/mps.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "cutlab/errors.hpp"

namespace cutlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_marker_line(const std::vector<std::string>& t) {
  for (const auto& s : t)
    if (s == "'MARKER'") return true;
  return false;
}

Rational parse_num(const std::string& s, int line_no) {
  try {
    return Rational::from_string(s);
  } catch (const Error& e) {
    throw ParseError(line_no, std::string("bad number '") + s + "'");
  }
}

struct ColumnInfo {
  int index;
  bool integral = false;
  bool has_explicit_bound = false;
  std::optional<Rational> lower;  // only set by BOUNDS
  std::optional<Rational> upper;
  bool upper_infinite = false;
};

}  // namespace

Model parse_mps(std::istream& in) {
  enum class Section { None, Rows, Columns, Rhs, Bounds, Done };
  Section section = Section::None;

  Model model;
  std::map<std::string, int> row_index;        // constraint rows only
  std::vector<RowSense> row_sense;
  std::string obj_row;
  std::map<std::string, ColumnInfo> columns;
  std::vector<std::string> col_order;
  std::map<std::string, std::map<int, Rational>> col_entries;  // col -> row -> coeff
  std::map<std::string, Rational> col_obj;
  std::map<int, Rational> rhs_entries;
  std::optional<Rational> obj_rhs;
  bool in_integer_block = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;

    const bool header = !std::isspace(static_cast<unsigned char>(line[0]));
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (header) {
      const std::string& kw = tokens[0];
      if (kw == "NAME") {
        if (tokens.size() > 1) model.name = tokens[1];
      } else if (kw == "ROWS") {
        section = Section::Rows;
      } else if (kw == "COLUMNS") {
        section = Section::Columns;
      } else if (kw == "RHS") {
        section = Section::Rhs;
      } else if (kw == "BOUNDS") {
        section = Section::Bounds;
      } else if (kw == "RANGES" || kw == "SOS") {
        throw UnsupportedFeature(kw + " section");
      } else if (kw == "OBJSENSE") {
        // free-format extension; sense on the same or the following line
        if (tokens.size() > 1) {
          model.objective.sense = (tokens[1] == "MAX" || tokens[1] == "MAXIMIZE") ? ObjSense::Max : ObjSense::Min;
        } else {
          if (!std::getline(in, line)) throw ParseError(line_no, "OBJSENSE without value");
          ++line_no;
          auto t2 = tokenize(line);
          if (t2.empty()) throw ParseError(line_no, "OBJSENSE without value");
          model.objective.sense = (t2[0] == "MAX" || t2[0] == "MAXIMIZE") ? ObjSense::Max : ObjSense::Min;
        }
      } else if (kw == "ENDATA") {
        section = Section::Done;
        break;
      } else {
        throw ParseError(line_no, "unknown section header '" + kw + "'");
      }
      continue;
    }

    switch (section) {
      case Section::Rows: {
        if (tokens.size() < 2) throw ParseError(line_no, "ROWS line needs a type and a name");
        const std::string& type = tokens[0];
        const std::string& name = tokens[1];
        if (type == "N" || type == "n") {
          if (obj_row.empty()) obj_row = name;  // extra N rows are ignored
        } else if (type == "G" || type == "g" || type == "L" || type == "l" || type == "E" || type == "e") {
          if (row_index.count(name)) throw ParseError(line_no, "duplicate row '" + name + "'");
          row_index[name] = static_cast<int>(row_sense.size());
          row_sense.push_back((type == "G" || type == "g") ? RowSense::Ge
                              : (type == "L" || type == "l") ? RowSense::Le
                                                             : RowSense::Eq);
        } else {
          throw ParseError(line_no, "unknown row type '" + type + "'");
        }
        break;
      }
      case Section::Columns: {
        if (is_marker_line(tokens)) {
          if (std::find(tokens.begin(), tokens.end(), "'INTORG'") != tokens.end())
            in_integer_block = true;
          else if (std::find(tokens.begin(), tokens.end(), "'INTEND'") != tokens.end())
            in_integer_block = false;
          else
            throw ParseError(line_no, "unknown marker");
          break;
        }
        if (tokens.size() < 3 || tokens.size() % 2 == 0)
          throw ParseError(line_no, "COLUMNS line needs col followed by row/value pairs");
        const std::string& col = tokens[0];
        if (!columns.count(col)) {
          columns[col] = ColumnInfo{static_cast<int>(col_order.size())};
          columns[col].integral = in_integer_block;
          col_order.push_back(col);
        }
        for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
          const std::string& rname = tokens[k];
          Rational val = parse_num(tokens[k + 1], line_no);
          if (rname == obj_row) {
            col_obj[col] += val;
          } else {
            auto it = row_index.find(rname);
            if (it == row_index.end()) throw ParseError(line_no, "unknown row '" + rname + "'");
            col_entries[col][it->second] += val;
          }
        }
        break;
      }
      case Section::Rhs: {
        if (tokens.size() < 3 || tokens.size() % 2 == 0)
          throw ParseError(line_no, "RHS line needs set name and row/value pairs");
        for (size_t k = 1; k + 1 < tokens.size(); k += 2) {
          const std::string& rname = tokens[k];
          Rational val = parse_num(tokens[k + 1], line_no);
          if (rname == obj_row) {
            obj_rhs = val;
          } else {
            auto it = row_index.find(rname);
            if (it == row_index.end()) throw ParseError(line_no, "unknown row '" + rname + "'");
            rhs_entries[it->second] = val;
          }
        }
        break;
      }
      case Section::Bounds: {
        if (tokens.size() < 3) throw ParseError(line_no, "BOUNDS line needs type, set and column");
        const std::string& type = tokens[0];
        const std::string& col = tokens[2];
        auto it = columns.find(col);
        if (it == columns.end()) throw ParseError(line_no, "bound on unknown column '" + col + "'");
        ColumnInfo& ci = it->second;
        auto need_value = [&]() {
          if (tokens.size() < 4) throw ParseError(line_no, "bound type " + type + " needs a value");
          return parse_num(tokens[3], line_no);
        };
        if (type == "UP") {
          ci.upper = need_value();
          ci.has_explicit_bound = true;
        } else if (type == "LO") {
          ci.lower = need_value();
          ci.has_explicit_bound = true;
        } else if (type == "FX") {
          Rational v = need_value();
          ci.lower = v;
          ci.upper = v;
          ci.has_explicit_bound = true;
        } else if (type == "BV") {
          ci.lower = Rational(0);
          ci.upper = Rational(1);
          ci.integral = true;
          ci.has_explicit_bound = true;
        } else if (type == "PL") {
          ci.upper_infinite = true;
          ci.has_explicit_bound = true;
        } else {
          throw UnsupportedFeature("bound type " + type);
        }
        break;
      }
      case Section::None:
        throw ParseError(line_no, "data before any section header");
      case Section::Done:
        break;
    }
  }

  if (obj_row.empty()) throw ParseError(line_no, "missing objective (N) row");

  const int n = static_cast<int>(col_order.size());
  model.objective.c.assign(n, Rational(0));
  if (obj_rhs) model.objective.offset = -*obj_rhs;

  for (int j = 0; j < n; ++j) {
    const std::string& name = col_order[j];
    const ColumnInfo& ci = columns[name];
    Variable v;
    v.name = name;
    v.lower = ci.lower.value_or(Rational(0));
    if (ci.upper) {
      v.upper = ci.upper;
    } else if (ci.integral && !ci.upper_infinite && !ci.has_explicit_bound) {
      // classic MPS convention: marker integers default to [0, 1]
      v.upper = Rational(1);
    }
    if (ci.integral) {
      const bool unit_box = v.lower >= Rational(0) && v.upper && *v.upper <= Rational(1);
      v.kind = unit_box ? VarKind::Binary : VarKind::Integer;
    }
    model.variables.push_back(v);
    auto io = col_obj.find(name);
    if (io != col_obj.end()) model.objective.c[j] = io->second;
  }

  const int mrows = static_cast<int>(row_sense.size());
  std::vector<Constraint> cons(mrows);
  for (const auto& [rname, ridx] : row_index) cons[ridx].name = rname;
  for (int i = 0; i < mrows; ++i) {
    cons[i].sense = row_sense[i];
    auto it = rhs_entries.find(i);
    cons[i].rhs = it == rhs_entries.end() ? Rational(0) : it->second;
  }
  for (int j = 0; j < n; ++j) {
    const std::string& name = col_order[j];
    auto it = col_entries.find(name);
    if (it == col_entries.end()) continue;
    for (const auto& [ridx, val] : it->second) cons[ridx].coeffs.emplace_back(j, val);
  }
  // keep each row's coefficients in column order
  for (auto& c : cons)
    std::sort(c.coeffs.begin(), c.coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  model.constraints = std::move(cons);
  model.validate();
  return model;
}

Model parse_mps_string(const std::string& text) {
  std::istringstream in(text);
  return parse_mps(in);
}

Model parse_mps_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_mps(in);
}

}  // namespace cutlab
