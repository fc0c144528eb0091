#include "cutlab/model.hpp"

#include "cutlab/errors.hpp"

namespace cutlab {

int Model::binary_count() const {
  int p = 0;
  for (const auto& v : variables)
    if (v.kind == VarKind::Binary) ++p;
  return p;
}

void Model::validate() const {
  const int nv = n();
  if (static_cast<int>(objective.c.size()) != nv)
    throw SchemaError("objective length does not match variable count");
  for (const auto& v : variables) {
    if (v.kind == VarKind::Binary) {
      if (v.lower < Rational(0) || !v.upper || *v.upper > Rational(1))
        throw SchemaError("binary variable " + v.name + " has bounds outside [0,1]");
    }
    if (v.upper && *v.upper < v.lower)
      throw SchemaError("variable " + v.name + " has upper < lower");
  }
  for (const auto& c : constraints)
    for (const auto& [idx, coeff] : c.coeffs) {
      (void)coeff;
      if (idx < 0 || idx >= nv) throw SchemaError("coefficient index out of range in row " + c.name);
    }
}

Rational StandardForm::row_activity(const RatVec& x, int i) const {
  Rational acc;
  for (int j = 0; j < n; ++j) acc += a_tilde.at(i, j) * x[j];
  return acc - b_tilde[i];
}

void StandardForm::append_structural(const RatVec& a, const Rational& rhs) {
  a_tilde.append_row(a);
  b_tilde.push_back(rhs);
  provenance.push_back({RowProvenance::Kind::Structural, m});
  ++m;
}

namespace {

RatVec dense_row(const Constraint& c, int n) {
  RatVec r(n);
  for (const auto& [idx, coeff] : c.coeffs) r[idx] += coeff;
  return r;
}

}  // namespace

StandardForm to_standard_form(const Model& model, StandardFormMode mode) {
  model.validate();
  const int n = model.n();
  StandardForm sf;
  sf.n = n;
  sf.p = model.binary_count();
  sf.a_tilde = RatMatrix(0, n);

  auto push_structural = [&](const RatVec& a, const Rational& b, int src) {
    sf.a_tilde.append_row(a);
    sf.b_tilde.push_back(b);
    sf.provenance.push_back({RowProvenance::Kind::Structural, src});
  };

  for (int i = 0; i < model.m(); ++i) {
    const Constraint& c = model.constraints[i];
    RatVec a = dense_row(c, n);
    switch (c.sense) {
      case RowSense::Ge:
        push_structural(a, c.rhs, i);
        break;
      case RowSense::Le: {
        RatVec neg(n);
        for (int j = 0; j < n; ++j) neg[j] = -a[j];
        push_structural(neg, -c.rhs, i);
        break;
      }
      case RowSense::Eq: {
        push_structural(a, c.rhs, i);
        RatVec neg(n);
        for (int j = 0; j < n; ++j) neg[j] = -a[j];
        push_structural(neg, -c.rhs, i);
        break;
      }
    }
  }

  // Finite upper bounds on non-binary variables are structural content.
  for (int j = 0; j < n; ++j) {
    const Variable& v = model.variables[j];
    if (v.kind != VarKind::Binary && v.upper) {
      RatVec a(n);
      a[j] = Rational(-1);
      push_structural(a, -(*v.upper), -1);
    }
  }
  sf.m = sf.q();

  for (int j = 0; j < n; ++j) {
    if (!model.variables[j].lower.is_zero()) throw NonzeroLowerBound(model.variables[j].name);
    RatVec a(n);
    a[j] = Rational(1);
    sf.a_tilde.append_row(a);
    sf.b_tilde.push_back(Rational(0));
    sf.provenance.push_back({RowProvenance::Kind::LowerBound, j});
  }

  if (mode == StandardFormMode::Full) {
    for (int j = 0; j < n; ++j) {
      const Variable& v = model.variables[j];
      if (v.kind != VarKind::Binary) continue;
      RatVec a(n);
      a[j] = Rational(-1);
      sf.a_tilde.append_row(a);
      sf.b_tilde.push_back(-(*v.upper));
      sf.provenance.push_back({RowProvenance::Kind::UpperBound, j});
    }
  }
  return sf;
}

}  // namespace cutlab
