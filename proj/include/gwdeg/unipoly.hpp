// Dense univariate polynomials over one field, constant-first. The zero
// polynomial has an empty coefficient vector and degree -1.
#ifndef GWDEG_UNIPOLY_HPP
#define GWDEG_UNIPOLY_HPP

#include <string>
#include <vector>

#include "gwdeg/field.hpp"

namespace gwdeg {

class UniPoly {
 public:
  explicit UniPoly(const FieldDescriptor& f) : field_(f) {}
  UniPoly(const FieldDescriptor& f, std::vector<FieldElement> coeffs);

  static UniPoly zero(const FieldDescriptor& f) { return UniPoly(f); }
  static UniPoly constant(const FieldDescriptor& f, const FieldElement& c);
  static UniPoly variable(const FieldDescriptor& f);  // t
  // Lift of a constant-first base-coefficient vector.
  static UniPoly from_base(const FieldDescriptor& f, const std::vector<Rational>& coeffs);

  const FieldDescriptor& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement leading() const;
  FieldElement coeff(size_t i) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly scaled(const FieldElement& c) const;
  UniPoly monic() const;
  UniPoly pow(unsigned long e) const;

  bool operator==(const UniPoly& o) const;

  FieldElement eval(const FieldElement& x) const;
  UniPoly derivative() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  FieldDescriptor field_;
  std::vector<FieldElement> c_;
  void normalize();
};

// Quotient and remainder; divisor must be nonzero.
void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly mod(const UniPoly& a, const UniPoly& b);
UniPoly poly_gcd(UniPoly a, UniPoly b);  // monic unless both zero
// g monic with u*a + v*b = g.
void poly_ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& u, UniPoly& v);

}  // namespace gwdeg

#endif
