// Field tower: a base field optionally extended by one monic irreducible
// polynomial. Elements are coordinate vectors in the power basis of the
// generator. Only single-step extensions are supported and characteristic 2
// is rejected, so every extension is separable.
#ifndef GWDEG_FIELD_HPP
#define GWDEG_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwdeg/base_field.hpp"

namespace gwdeg {

// Three-valued answer for procedures that may refuse to decide.
enum class Cert { yes, no, cannot_certify };

// Irreducibility over the base field. Coefficients are constant-first and the
// polynomial must be monic of degree >= 1. Over F_p the answer is always
// definitive; over Q degrees 4..8 use reduction certificates and may return
// cannot_certify.
Cert is_irreducible(const std::vector<Rational>& monic_poly, const BaseField& base);

class FieldDescriptor {
 public:
  // The trivial tower: the base field itself.
  static FieldDescriptor base_only(BaseField base);
  // Extension by a monic polynomial, validated irreducible (throws
  // Errc::min_poly_reducible or Errc::cannot_certify otherwise).
  static FieldDescriptor extension(BaseField base, std::string generator,
                                   std::vector<Rational> min_poly);

  const BaseField& base() const { return data_->base; }
  bool is_base_only() const { return !data_->ext.has_value(); }
  // Degree over the base field; 1 for the trivial tower.
  size_t degree() const;
  const std::string& generator() const;
  // Monic, constant-first, length degree()+1.
  const std::vector<Rational>& min_poly() const;

  // Structural value equality: same base, same generator name, same min poly.
  bool operator==(const FieldDescriptor& o) const;
  bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  struct Data {
    BaseField base;
    std::optional<std::pair<std::string, std::vector<Rational>>> ext;
  };
  explicit FieldDescriptor(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

class FieldElement {
 public:
  // Default element: 0 in Q, so containers stay usable; reassign before use.
  FieldElement();

  static FieldElement zero(const FieldDescriptor& f);
  static FieldElement one(const FieldDescriptor& f);
  static FieldElement from_base(const FieldDescriptor& f, const Rational& value);
  static FieldElement from_integer(const FieldDescriptor& f, long value);
  static FieldElement generator(const FieldDescriptor& f);
  // coords.size() must equal f.degree().
  static FieldElement make(const FieldDescriptor& f, std::vector<Rational> coords);

  const FieldDescriptor& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in the base field.
  bool is_base() const;
  // Requires is_base().
  Rational base_value() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(const Integer& e) const;  // e >= 0

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldElement(FieldDescriptor f, std::vector<Rational> c);

  FieldDescriptor field_;
  std::vector<Rational> coords_;
};

// Total order on elements of one field (coordinate-wise); used only to make
// container contents and printed output deterministic.
int compare(const FieldElement& a, const FieldElement& b);

// Trace of multiplication by x, from the tower down to its base field.
Rational trace_to_base(const FieldElement& x);

// Monic minimal polynomial of x over the base field, constant-first.
std::vector<Rational> min_poly_of(const FieldElement& x);

// Constant embedding into target, which must equal x's field or be an
// extension of the same base while x is a base-only value.
FieldElement embed(const FieldElement& x, const FieldDescriptor& target);

}  // namespace gwdeg

#endif
