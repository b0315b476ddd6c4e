// Finite quotient algebras Q = k[x]/I for zero-dimensional ideals: Buchberger
// Groebner bases, standard-monomial coordinates, multiplication operators, and
// localization at one closed point by an exact idempotent.
#ifndef GWDEG_QUOTIENT_ALGEBRA_HPP
#define GWDEG_QUOTIENT_ALGEBRA_HPP

#include <cstdint>
#include <memory>

#include "gwdeg/matrix.hpp"
#include "gwdeg/multipoly.hpp"
#include "gwdeg/point.hpp"
#include "gwdeg/unipoly.hpp"

namespace gwdeg {

// Buchberger with normal selection; result is the reduced basis, monic,
// sorted by ascending leading monomial.
std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const MonomialOrder& order);

// Standard monomials (those outside the leading-term ideal), ascending under
// the order; throws Errc::not_zero_dimensional unless every variable has a
// pure power among the leading monomials.
std::vector<Monomial> standard_monomials(const std::vector<MultiPoly>& basis,
                                         const MonomialOrder& order);

class QuotientAlgebra {
 public:
  // Computes the Groebner basis and the standard-monomial frame; throws
  // Errc::ideal_is_unit when 1 lies in the ideal.
  static std::shared_ptr<const QuotientAlgebra> make(std::vector<MultiPoly> generators,
                                                     const MonomialOrder& order);

  const FieldDescriptor& field() const { return field_; }
  const VarList& vars() const { return vars_; }
  size_t nvars() const { return vars_->size(); }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Monomial>& std_monomials() const { return std_monomials_; }
  // Vector-space dimension over the coefficient field.
  size_t dim() const { return std_monomials_.size(); }

  // Index of a standard monomial within the frame.
  size_t monomial_index(const Monomial& m) const;

  MultiPoly normal_form(const MultiPoly& p) const;
  // Coordinates of the normal form in the standard-monomial frame.
  std::vector<FieldElement> coords_of(const MultiPoly& p) const;
  MultiPoly from_coords(const std::vector<FieldElement>& c) const;

  // Product of two residue classes given by coordinates.
  std::vector<FieldElement> multiply(const std::vector<FieldElement>& u,
                                     const std::vector<FieldElement>& v) const;
  // Matrix of multiplication by p on the standard-monomial frame.
  Matrix mult_matrix(const MultiPoly& p) const;
  Matrix mult_matrix_coords(const std::vector<FieldElement>& u) const;

  // Minimal polynomial of the residue class of p, over the coefficient field.
  UniPoly element_min_poly(const MultiPoly& p) const;

 private:
  QuotientAlgebra() = default;

  FieldDescriptor field_ = FieldDescriptor::base_only(BaseField::rationals());
  VarList vars_;
  std::vector<MultiPoly> generators_;
  std::vector<MultiPoly> basis_;
  MonomialOrder order_{MonomialOrder::Kind::grevlex};
  std::vector<Monomial> std_monomials_;
  std::map<Monomial, size_t> index_;
  // coords of e_i * e_j, stored for i <= j.
  std::vector<std::vector<std::vector<FieldElement>>> table_;

  void build_table();
  const std::vector<FieldElement>& table_at(size_t i, size_t j) const;
};

using AlgebraPtr = std::shared_ptr<const QuotientAlgebra>;

// A linear form in the ambient variables certified to separate one closed
// point from the rest of the spectrum.
struct SeparatingForm {
  std::vector<long> coeffs;  // one per variable
  MultiPoly form;
  size_t attempts;  // candidates consumed before certification
};

// The direct summand of Q supported at one point: the idempotent that
// projects onto it and a column basis of its image.
struct LocalFactor {
  AlgebraPtr algebra;
  SeparatingForm form;
  UniPoly point_min_poly;                         // of the form's value at the point
  size_t multiplicity;                            // exponent e of that factor
  std::vector<FieldElement> idempotent;           // coordinates in Q
  std::vector<std::vector<FieldElement>> local_basis;
  size_t local_dim;
};

// Searches coordinate forms first, then seeded random small-integer
// combinations; at most 32 candidates. A candidate is accepted only if the
// whole localization it induces passes the certificate, including the check
// that every x_i - phi_i(l) acts nilpotently on the factor.
SeparatingForm separating_form(const AlgebraPtr& A, const PointSpec& p, uint64_t seed);

// Localization at p along a certified form; throws
// Errc::separating_form_not_found when the certificate fails.
LocalFactor localize(const AlgebraPtr& A, const PointSpec& p, const SeparatingForm& form);

}  // namespace gwdeg

#endif
