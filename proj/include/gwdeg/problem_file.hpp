// Problem files: a small line-based format with nested records describing a
// coefficient field, variables, a polynomial system, and one or more points
// with their residue fields. See README.md for the grammar.
#ifndef GWDEG_PROBLEM_FILE_HPP
#define GWDEG_PROBLEM_FILE_HPP

#include <cstdint>
#include <optional>

#include "gwdeg/multipoly.hpp"
#include "gwdeg/point.hpp"

namespace gwdeg {

// A value string with its source position for error reporting.
struct SourceString {
  std::string text;
  int line = -1;
  int col = -1;
};

struct ExtensionSpec {
  std::string generator;
  std::vector<Rational> min_poly;  // constant-first, monic
  int line = -1;
};

struct PointRecord {
  std::optional<ExtensionSpec> ext;  // absent: coordinates over the ambient field
  std::vector<SourceString> coord_exprs;
  int line = -1;
};

struct ProblemFile {
  BaseField base = BaseField::rationals();
  std::optional<ExtensionSpec> ext;
  std::vector<std::string> variables;
  std::vector<SourceString> poly_exprs;
  std::vector<PointRecord> points;
  std::optional<uint64_t> seed;
};

ProblemFile parse_problem_text(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);

// Base-field names as they appear in problem files: "Q" or "F<p>".
BaseField parse_base_field(const std::string& name);

struct LoadedProblem {
  FieldDescriptor field;
  VarList vars;
  std::vector<MultiPoly> polys;
  std::vector<PointSpec> points;
  uint64_t seed = 0;
};

// Builds field descriptors, parses every expression, and attaches source
// positions to any error raised along the way.
LoadedProblem load_problem(const ProblemFile& pf);

}  // namespace gwdeg

#endif
