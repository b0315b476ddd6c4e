// Sparse multivariate polynomials over one field, with pluggable monomial
// orders. Terms live in a map under a fixed container order, so iteration and
// printing are deterministic regardless of the order used for leading terms.
#ifndef GWDEG_MULTIPOLY_HPP
#define GWDEG_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gwdeg/field.hpp"

namespace gwdeg {

class Monomial {
 public:
  explicit Monomial(size_t nvars) : e_(nvars, 0), total_(0) {}
  explicit Monomial(std::vector<unsigned> exps);

  size_t nvars() const { return e_.size(); }
  unsigned operator[](size_t i) const { return e_[i]; }
  unsigned total_degree() const { return total_; }
  bool is_one() const { return total_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide_by(const Monomial& o) const;  // exact, o | *this
  Monomial lcm_with(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  // Container order only; term order is MonomialOrder's job.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  std::vector<unsigned> e_;
  unsigned total_;
};

class MonomialOrder {
 public:
  enum class Kind { grevlex, lex };

  // perm lists variable indices from most to least significant; empty means
  // the identity.
  explicit MonomialOrder(Kind kind = Kind::grevlex, std::vector<size_t> perm = {});

  Kind kind() const { return kind_; }
  const std::vector<size_t>& perm() const { return perm_; }

  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

  std::string to_string() const;

 private:
  Kind kind_;
  std::vector<size_t> perm_;
};

// Shared, immutable variable list.
using VarList = std::shared_ptr<const std::vector<std::string>>;
VarList make_vars(std::vector<std::string> names);

class MultiPoly {
 public:
  static MultiPoly zero(const FieldDescriptor& f, VarList vars);
  static MultiPoly constant(const FieldDescriptor& f, VarList vars, const FieldElement& c);
  static MultiPoly variable(const FieldDescriptor& f, VarList vars, size_t index);
  static MultiPoly term(const FieldDescriptor& f, VarList vars, const Monomial& m,
                        const FieldElement& c);

  const FieldDescriptor& field() const { return field_; }
  const VarList& vars() const { return vars_; }
  size_t nvars() const { return vars_->size(); }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term; equals the whole polynomial when is_constant().
  FieldElement constant_value() const;
  unsigned total_degree() const;  // 0 for the zero polynomial

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const FieldElement& c) const;
  MultiPoly pow(unsigned long e) const;

  bool operator==(const MultiPoly& o) const;

  std::pair<Monomial, FieldElement> leading_term(const MonomialOrder& order) const;
  MultiPoly derivative(size_t var) const;

  // Point coordinates live in `target`, which must admit embedding of the
  // coefficients (same field, or extension of the same base).
  FieldElement evaluate(std::span<const FieldElement> point,
                        const FieldDescriptor& target) const;

  std::string to_string(const MonomialOrder& order = MonomialOrder()) const;

 private:
  MultiPoly(FieldDescriptor f, VarList v) : field_(std::move(f)), vars_(std::move(v)) {}
  void add_term(const Monomial& m, const FieldElement& c);

  FieldDescriptor field_;
  VarList vars_;
  std::map<Monomial, FieldElement> terms_;

  friend MultiPoly map_terms(const MultiPoly&, const FieldDescriptor&, VarList,
                             const std::vector<size_t>&);
};

// Coefficient-wise embedding into an extension of the same base field.
MultiPoly base_change(const MultiPoly& p, const FieldDescriptor& target);

// Renames p's variables into a (super)set: variable i becomes index_map[i].
MultiPoly embed_vars(const MultiPoly& p, VarList new_vars, const std::vector<size_t>& index_map);

// Exact quotient num/den; throws Errc::inexact_division when den does not
// divide num.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

// Substitutes values[i] (a polynomial in the target ring) for variable i.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& values);

}  // namespace gwdeg

#endif
