// Error taxonomy shared by every module. Each error carries a code so the
// CLI can map failures onto its exit-code contract.
#ifndef GWDEG_ERRORS_HPP
#define GWDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gwdeg {

enum class Errc {
  // parse-class failures (CLI exit 2)
  syntax_error,
  unknown_symbol,
  file_error,
  // mathematical precondition violations (CLI exit 3)
  division_by_zero,
  descriptor_mismatch,
  incompatible_fields,
  inexact_division,
  ideal_is_unit,
  not_zero_dimensional,
  separating_form_not_found,
  singular_bezoutian,
  degenerate_restriction,
  degenerate_form,
  not_a_zero,
  residue_field_mismatch,
  zero_jacobian,
  min_poly_reducible,
  cannot_certify,
  invalid_input,
  // broken internal invariants; should never surface
  internal
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int line = -1, int col = -1)
      : std::runtime_error(msg), code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

  bool is_parse() const {
    return code_ == Errc::syntax_error || code_ == Errc::unknown_symbol ||
           code_ == Errc::file_error;
  }

 private:
  Errc code_;
  int line_;
  int col_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, int line = -1,
                              int col = -1) {
  throw Error(code, msg, line, col);
}

// Always-on internal invariant check (never compiled out).
inline void hard_check(bool ok, const char* what) {
  if (!ok) fail(Errc::internal, std::string("internal invariant violated: ") + what);
}

}  // namespace gwdeg

#endif
