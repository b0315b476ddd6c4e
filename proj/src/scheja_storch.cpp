#include "gwdeg/scheja_storch.hpp"

namespace gwdeg {

namespace {

// Determinant by cofactor expansion along the first remaining row; the
// entries are polynomials, so elimination is not available.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m,
                   std::vector<size_t> cols, size_t row) {
  const size_t n = m.size();
  if (row == n) {
    hard_check(cols.empty(), "cofactor bookkeeping broke");
    fail(Errc::internal, "cofactor expansion of an empty matrix");
  }
  if (cols.size() == 1) return m[row][cols[0]];
  MultiPoly acc = MultiPoly::zero(m[0][0].field(), m[0][0].vars());
  for (size_t k = 0; k < cols.size(); ++k) {
    const MultiPoly& entry = m[row][cols[k]];
    if (entry.is_zero()) continue;
    std::vector<size_t> rest;
    rest.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    MultiPoly minor = poly_det(m, std::move(rest), row + 1);
    MultiPoly term = entry * minor;
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
  if (m.empty()) fail(Errc::internal, "determinant of an empty polynomial matrix");
  std::vector<size_t> cols(m.size());
  for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return poly_det(m, std::move(cols), 0);
}

// Splits a monomial in the doubled ring into its x-part and y-part.
void split_monomial(const Monomial& m, size_t n, std::vector<unsigned>& ex,
                    std::vector<unsigned>& ey) {
  ex.assign(n, 0);
  ey.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    ex[i] = m[i];
    ey[i] = m[n + i];
  }
}

}  // namespace

Bezoutian bezoutian(const std::vector<MultiPoly>& f) {
  if (f.empty()) fail(Errc::invalid_input, "no polynomials");
  const size_t n = f[0].nvars();
  if (f.size() != n)
    fail(Errc::invalid_input, "need exactly as many polynomials as variables");
  const FieldDescriptor& K = f[0].field();
  for (const auto& fi : f) {
    if (fi.field() != K) fail(Errc::descriptor_mismatch, "mixed coefficient fields");
    if (*fi.vars() != *f[0].vars())
      fail(Errc::descriptor_mismatch, "mixed variable lists");
  }

  std::vector<std::string> names = *f[0].vars();
  for (size_t i = 0; i < n; ++i) names.push_back(names[i] + "'");
  VarList xy = make_vars(std::move(names));

  // Substitution x_t -> y_t for t < j, x_t -> x_t for t >= j.
  auto mixed = [&](const MultiPoly& p, size_t j) {
    std::vector<size_t> map(n);
    for (size_t t = 0; t < n; ++t) map[t] = t < j ? n + t : t;
    return embed_vars(p, xy, map);
  };

  std::vector<std::vector<MultiPoly>> dq;
  dq.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<MultiPoly> row;
    row.reserve(n);
    for (size_t j = 0; j < n; ++j) {
      MultiPoly num = mixed(f[i], j) - mixed(f[i], j + 1);
      MultiPoly den = MultiPoly::variable(K, xy, j) - MultiPoly::variable(K, xy, n + j);
      row.push_back(num.is_zero() ? num : exact_divide(num, den));
    }
    dq.push_back(std::move(row));
  }
  return Bezoutian{xy, poly_det(dq)};
}

Matrix coefficient_matrix(const Bezoutian& bz, const QuotientAlgebra& A) {
  const size_t n = A.nvars();
  hard_check(bz.xy_vars->size() == 2 * n, "doubled ring arity mismatch");
  const size_t m = A.dim();
  Matrix B(A.field(), m, m);
  // Normal-form coordinates per distinct x-part and y-part monomial, cached.
  std::map<Monomial, std::vector<FieldElement>> cache;
  auto nf_coords = [&](const Monomial& mono) -> const std::vector<FieldElement>& {
    auto it = cache.find(mono);
    if (it != cache.end()) return it->second;
    MultiPoly p = MultiPoly::term(A.field(), A.vars(), mono, FieldElement::one(A.field()));
    return cache.emplace(mono, A.coords_of(p)).first->second;
  };
  std::vector<unsigned> ex, ey;
  for (const auto& [mono, c] : bz.delta.terms()) {
    split_monomial(mono, n, ex, ey);
    const auto& vx = nf_coords(Monomial(ex));
    const auto& vy = nf_coords(Monomial(ey));
    for (size_t i = 0; i < m; ++i) {
      if (vx[i].is_zero()) continue;
      FieldElement cvi = c * vx[i];
      for (size_t j = 0; j < m; ++j)
        if (!vy[j].is_zero()) B.at(i, j) = B.at(i, j) + cvi * vy[j];
    }
  }
  return B;
}

std::vector<FieldElement> duality_functional(const Matrix& B, const QuotientAlgebra& A) {
  hard_check(B.rows() == A.dim() && B.cols() == A.dim(), "coefficient matrix shape");
  // lambda^T B = coords(1)^T, i.e. B^T lambda = coords(1).
  std::vector<FieldElement> unit(A.dim(), FieldElement::zero(A.field()));
  unit[0] = FieldElement::one(A.field());
  hard_check(A.std_monomials()[0].is_one(), "frame must start at the monomial 1");
  auto lam = B.transpose().solve(unit);
  if (!lam || B.rank() != A.dim())
    fail(Errc::singular_bezoutian, "coefficient matrix of the difference-quotient "
                                   "determinant is singular");
  return *lam;
}

GramMatrix gram_global(const std::vector<MultiPoly>& f, const QuotientAlgebra& A) {
  Bezoutian bz = bezoutian(f);
  Matrix B = coefficient_matrix(bz, A);
  std::vector<FieldElement> lam = duality_functional(B, A);

  const size_t m = A.dim();
  Matrix G(A.field(), m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      std::vector<FieldElement> ei(m, FieldElement::zero(A.field()));
      ei[i] = FieldElement::one(A.field());
      std::vector<FieldElement> ej(m, FieldElement::zero(A.field()));
      ej[j] = FieldElement::one(A.field());
      std::vector<FieldElement> prod = A.multiply(ei, ej);
      FieldElement v = FieldElement::zero(A.field());
      for (size_t k = 0; k < m; ++k)
        if (!prod[k].is_zero()) v = v + lam[k] * prod[k];
      G.at(i, j) = v;
      G.at(j, i) = v;
    }
  hard_check(G.is_symmetric(), "residue pairing must be symmetric");
  if (G.rank() != m)
    fail(Errc::degenerate_form, "residue pairing on the whole algebra is degenerate");

  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& mono : A.std_monomials()) {
    MultiPoly p = MultiPoly::term(A.field(), A.vars(), mono, FieldElement::one(A.field()));
    labels.push_back(p.to_string(A.order()));
  }
  return GramMatrix{std::move(G), std::move(labels)};
}

GramMatrix gram_local(const std::vector<MultiPoly>& f, const QuotientAlgebra& A,
                      const LocalFactor& lf) {
  GramMatrix global = gram_global(f, A);
  const size_t r = lf.local_dim;
  Matrix L(A.field(), A.dim(), r);
  for (size_t j = 0; j < r; ++j)
    for (size_t i = 0; i < A.dim(); ++i) L.at(i, j) = lf.local_basis[j][i];
  Matrix G = L.transpose() * global.mat * L;
  hard_check(G.is_symmetric(), "restricted pairing must be symmetric");
  if (G.rank() != r)
    fail(Errc::degenerate_restriction,
         "residue pairing restricted to the local factor is degenerate");
  std::vector<std::string> labels;
  labels.reserve(r);
  for (size_t j = 0; j < r; ++j) labels.push_back("b" + std::to_string(j + 1));
  return GramMatrix{std::move(G), std::move(labels)};
}

}  // namespace gwdeg
