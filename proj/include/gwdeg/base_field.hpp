// Base coefficient fields: the rationals, or a prime field F_p with p an odd
// prime. Scalars of both are carried as Rational; F_p values are the least
// nonnegative residues with denominator 1.
#ifndef GWDEG_BASE_FIELD_HPP
#define GWDEG_BASE_FIELD_HPP

#include <string>

#include "gwdeg/rational.hpp"

namespace gwdeg {

class BaseField {
 public:
  enum class Kind { rationals, prime_field };

  static BaseField rationals() { return BaseField(Kind::rationals, 0); }
  // Rejects p < 3, even p, and composite p.
  static BaseField prime_field(long p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }
  // 0 for the rationals.
  long characteristic() const { return p_; }

  bool operator==(const BaseField& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const BaseField& o) const { return !(*this == o); }

  // Canonical form: identity over Q, reduction mod p over F_p. The input
  // denominator must be invertible mod p.
  Rational canon(const Rational& x) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational inv(const Rational& a) const;

  bool is_zero(const Rational& a) const { return rat_is_zero(a); }
  bool is_one(const Rational& a) const { return a == 1; }

  std::string to_string() const;
  std::string scalar_to_string(const Rational& a) const { return rat_to_string(a); }

 private:
  BaseField(Kind k, long p) : kind_(k), p_(p) {}

  Kind kind_;
  long p_;
};

}  // namespace gwdeg

#endif
