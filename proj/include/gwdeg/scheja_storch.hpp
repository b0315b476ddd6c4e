// The symmetric bilinear form attached to a finite complete intersection
// k[x_1..x_n]/(f_1..f_n): difference quotients in doubled variables, the
// coefficient matrix of their determinant, the induced duality functional,
// and Gram matrices of the pairing on the whole algebra or a local factor.
#ifndef GWDEG_SCHEJA_STORCH_HPP
#define GWDEG_SCHEJA_STORCH_HPP

#include "gwdeg/quotient_algebra.hpp"

namespace gwdeg {

// Determinant of the difference-quotient matrix in 2n variables; the first n
// are the originals, the last n their primed copies.
struct Bezoutian {
  VarList xy_vars;
  MultiPoly delta;
};

// Requires square shape: as many polynomials as variables.
Bezoutian bezoutian(const std::vector<MultiPoly>& f);

// B with delta = sum B[i][j] e_i(x) e_j(y) modulo the ideal in each group of
// variables, over the standard-monomial frame of A.
Matrix coefficient_matrix(const Bezoutian& bz, const QuotientAlgebra& A);

// Linear functional lambda with lambda(column j of B) = [1]_j; its Gram
// matrix below presents the algebra's residue pairing.
std::vector<FieldElement> duality_functional(const Matrix& B, const QuotientAlgebra& A);

struct GramMatrix {
  Matrix mat;
  std::vector<std::string> basis_labels;
};

// Gram matrix of (a, b) -> lambda(ab) on the standard-monomial frame.
GramMatrix gram_global(const std::vector<MultiPoly>& f, const QuotientAlgebra& A);

// The same pairing restricted to a local factor's basis.
GramMatrix gram_local(const std::vector<MultiPoly>& f, const QuotientAlgebra& A,
                      const LocalFactor& lf);

}  // namespace gwdeg

#endif
