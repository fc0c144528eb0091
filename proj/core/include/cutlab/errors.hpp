#pragma once

#include <stdexcept>
#include <string>

namespace cutlab {

/// Base class for all cutlab errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class CompletionImpossible : public Error {
 public:
  explicit CompletionImpossible(const std::string& what) : Error(what) {}
};

/// MPS parse failure; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason), line(line) {}
  int line;
};

class UnsupportedFeature : public Error {
 public:
  explicit UnsupportedFeature(const std::string& what) : Error("unsupported feature: " + what) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error("fixture schema error: " + what) {}
};

class NonzeroLowerBound : public Error {
 public:
  explicit NonzeroLowerBound(const std::string& var)
      : Error("variable " + var + " has a nonzero lower bound (shift preprocessing not performed)") {}
};

class SingularBasis : public Error {
 public:
  SingularBasis() : Error("proposed basis rows are linearly dependent") {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class EmptyK : public Error {
 public:
  EmptyK() : Error("branching set K is empty") {}
};

class MissingLabels : public Error {
 public:
  MissingLabels() : Error("disjunction has no simple-branch labels") {}
};

class ZeroTermMultipliers : public Error {
 public:
  explicit ZeroTermMultipliers(int term)
      : Error("term " + std::to_string(term) + " has all-zero v multipliers"), term(term) {}
  int term;
};

class ApexNotInterior : public Error {
 public:
  ApexNotInterior() : Error("cone apex is not strictly interior to the P_I-free set") {}
};

class NoFractionalVariables : public Error {
 public:
  NoFractionalVariables() : Error("LP optimum has no fractional binary variables") {}
};

class MissingMipOptimum : public Error {
 public:
  MissingMipOptimum() : Error("gap-closed metric requires a MIP optimum value") {}
};

class ZeroAlpha : public Error {
 public:
  ZeroAlpha() : Error("cut has a zero coefficient vector") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace cutlab
