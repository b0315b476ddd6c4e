// Recursive-descent parser for polynomial expressions. Grammar: integer
// literals, declared variable names, the field generator name, binary + - *,
// unary -, ^ with a nonnegative integer exponent, and parentheses. There is
// no implicit multiplication and no division.
#ifndef GWDEG_PARSER_HPP
#define GWDEG_PARSER_HPP

#include <string>

#include "gwdeg/multipoly.hpp"

namespace gwdeg {

// Parses over field f in the given variables; the generator name of f (when f
// is an extension) is accepted as a constant symbol. Errors carry the
// 1-based column within `text`.
MultiPoly parse_poly(const std::string& text, const FieldDescriptor& f, const VarList& vars);

// Parses a variable-free expression and returns its value in f.
FieldElement parse_field_element(const std::string& text, const FieldDescriptor& f);

}  // namespace gwdeg

#endif
