// Classes of nondegenerate symmetric bilinear forms presented by diagonal
// entries, with the classical invariants (rank, determinant square class,
// signature, Hasse-Witt local symbols) and an equality decision that is
// complete over the rationals and over finite fields.
#ifndef GWDEG_GW_RING_HPP
#define GWDEG_GW_RING_HPP

#include <map>
#include <optional>

#include "gwdeg/matrix.hpp"
#include "gwdeg/scheja_storch.hpp"

namespace gwdeg {

enum class Ternary { yes, no, undecided };

// Whether u is a square in its field. Definitive over finite fields and over
// Q; over an extension of Q the answer may be undecided (the norm test and
// low-degree special cases are applied first).
Ternary is_square(const FieldElement& u);

// Canonical representative of u's square class where one is defined: the
// squarefree integer for Q, 1 or a fixed nonresidue for finite fields, u
// itself over extensions of Q.
FieldElement square_class_reduce(const FieldElement& u);

class GWClass {
 public:
  // Entries must be nonzero; each is reduced to its square-class
  // representative.
  static GWClass from_diagonal(const FieldDescriptor& f, std::vector<FieldElement> diag);

  const FieldDescriptor& field() const { return field_; }
  const std::vector<FieldElement>& diagonal() const { return diag_; }
  size_t rank() const { return diag_.size(); }

  // Orthogonal direct sum.
  GWClass operator+(const GWClass& o) const;

  std::string to_string() const;

 private:
  GWClass(FieldDescriptor f, std::vector<FieldElement> d)
      : field_(std::move(f)), diag_(std::move(d)) {}
  FieldDescriptor field_;
  std::vector<FieldElement> diag_;
};

struct Diagonalization {
  GWClass cls;                        // reduced entries
  std::vector<FieldElement> raw_diagonal;
  Matrix transform;                   // P with P^T G P diagonal
};

// Symmetric congruence diagonalization; the congruence P is reverified
// exactly against the input. Throws Errc::degenerate_form on singular input.
Diagonalization diagonalize(const GramMatrix& G);
Diagonalization diagonalize(const Matrix& G);

// A place of Q: p == 0 encodes the real place, p == 2 and odd primes the
// p-adic ones.
struct Place {
  long p;
  bool operator<(const Place& o) const { return p < o.p; }
  bool operator==(const Place& o) const { return p == o.p; }
  std::string to_string() const { return p == 0 ? "inf" : std::to_string(p); }
};

// Classical Hilbert symbol (a, b)_v in {+1, -1} for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

struct GWInvariants {
  size_t rank = 0;
  FieldElement det_square_class;
  std::optional<int> signature;                 // rationals only
  std::optional<std::map<Place, int>> hasse_witt;  // rationals only
};

GWInvariants invariants(const GWClass& c);

// Signed variant (-1)^(r(r-1)/2) det, derived from the unsigned class.
FieldElement signed_discriminant(const GWInvariants& inv);

enum class Verdict { equal, not_equal, undecided };
const char* verdict_name(Verdict v);

// Equality in the Grothendieck-Witt ring. Complete over finite fields
// (rank + determinant) and over Q (rank, signature, determinant, Hasse-Witt
// everywhere); over extensions of Q a mismatch in any computable invariant
// gives not_equal, syntactic equality of diagonals gives equal, and the
// remaining cases are undecided.
Verdict gw_equal(const GWClass& a, const GWClass& b);

}  // namespace gwdeg

#endif
