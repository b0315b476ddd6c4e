#include "gwdeg/base_field.hpp"

#include "gwdeg/errors.hpp"

namespace gwdeg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "syntax_error";
    case Errc::unknown_symbol: return "unknown_symbol";
    case Errc::file_error: return "file_error";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::descriptor_mismatch: return "descriptor_mismatch";
    case Errc::incompatible_fields: return "incompatible_fields";
    case Errc::inexact_division: return "inexact_division";
    case Errc::ideal_is_unit: return "ideal_is_unit";
    case Errc::not_zero_dimensional: return "not_zero_dimensional";
    case Errc::separating_form_not_found: return "separating_form_not_found";
    case Errc::singular_bezoutian: return "singular_bezoutian";
    case Errc::degenerate_restriction: return "degenerate_restriction";
    case Errc::degenerate_form: return "degenerate_form";
    case Errc::not_a_zero: return "not_a_zero";
    case Errc::residue_field_mismatch: return "residue_field_mismatch";
    case Errc::zero_jacobian: return "zero_jacobian";
    case Errc::min_poly_reducible: return "min_poly_reducible";
    case Errc::cannot_certify: return "cannot_certify";
    case Errc::invalid_input: return "invalid_input";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

Rational rat_from_string(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0)
    fail(Errc::syntax_error, "malformed rational literal '" + text + "'");
  q.canonicalize();
  return q;
}

BaseField BaseField::prime_field(long p) {
  if (p < 3) fail(Errc::invalid_input, "prime field characteristic must be an odd prime >= 3");
  if (p % 2 == 0) fail(Errc::invalid_input, "characteristic 2 is not supported");
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      fail(Errc::invalid_input, "characteristic " + std::to_string(p) + " is not prime");
  return BaseField(Kind::prime_field, p);
}

Rational BaseField::canon(const Rational& x) const {
  if (kind_ == Kind::rationals) return x;
  // Residue num * den^-1 mod p, as an integer in [0, p).
  mpz_class den = x.get_den();
  mpz_class pz(p_);
  mpz_class dmod = den % pz;
  if (dmod < 0) dmod += pz;
  if (dmod == 0) fail(Errc::division_by_zero, "denominator vanishes mod " + std::to_string(p_));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), pz.get_mpz_t()) == 0)
    fail(Errc::division_by_zero, "denominator not invertible mod " + std::to_string(p_));
  mpz_class r = (x.get_num() % pz) * dinv % pz;
  if (r < 0) r += pz;
  return Rational(r);
}

Rational BaseField::add(const Rational& a, const Rational& b) const {
  return canon(Rational(a + b));
}

Rational BaseField::sub(const Rational& a, const Rational& b) const {
  return canon(Rational(a - b));
}

Rational BaseField::mul(const Rational& a, const Rational& b) const {
  return canon(Rational(a * b));
}

Rational BaseField::neg(const Rational& a) const { return canon(Rational(-a)); }

Rational BaseField::div(const Rational& a, const Rational& b) const {
  return mul(a, inv(b));
}

Rational BaseField::inv(const Rational& a) const {
  Rational c = canon(a);
  if (rat_is_zero(c)) fail(Errc::division_by_zero, "inverse of zero");
  if (kind_ == Kind::rationals) return Rational(1) / c;
  mpz_class pz(p_), ainv;
  mpz_class num = c.get_num();
  hard_check(mpz_invert(ainv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) != 0,
             "unit inversion mod p failed");
  return Rational(ainv);
}

std::string BaseField::to_string() const {
  if (kind_ == Kind::rationals) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace gwdeg
