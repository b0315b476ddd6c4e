#include "gwdeg/quotient_algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gwdeg {

namespace {

// Full division remainder of p against basis (each monic); deterministic:
// divisors are tried in basis order.
MultiPoly reduce_full(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& order,
                      const std::vector<Monomial>& lms) {
  MultiPoly rem = p;
  MultiPoly out = MultiPoly::zero(p.field(), p.vars());
  while (!rem.is_zero()) {
    auto [m, c] = rem.leading_term(order);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!lms[i].divides(m)) continue;
      MultiPoly t = MultiPoly::term(p.field(), p.vars(), m.divide_by(lms[i]), c);
      rem = rem - t * basis[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      MultiPoly t = MultiPoly::term(p.field(), p.vars(), m, c);
      out = out + t;
      rem = rem - t;
    }
  }
  return out;
}

void check_uniform(const std::vector<MultiPoly>& gens) {
  for (size_t i = 1; i < gens.size(); ++i) {
    if (gens[i].field() != gens[0].field())
      fail(Errc::descriptor_mismatch, "generators over different fields");
    if (*gens[i].vars() != *gens[0].vars())
      fail(Errc::descriptor_mismatch, "generators over different variable lists");
  }
}

}  // namespace

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens, const MonomialOrder& order) {
  if (gens.empty()) fail(Errc::invalid_input, "no generators");
  check_uniform(gens);
  const FieldDescriptor& f = gens[0].field();
  const VarList& vars = gens[0].vars();

  std::vector<MultiPoly> G;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    MultiPoly m = g.scaled(g.leading_term(order).second.inverse());
    if (std::find(G.begin(), G.end(), m) == G.end()) G.push_back(std::move(m));
  }
  if (G.empty()) return {};
  auto unit_basis = [&]() {
    return std::vector<MultiPoly>{
        MultiPoly::constant(f, vars, FieldElement::one(f))};
  };
  for (const auto& g : G)
    if (g.is_constant()) return unit_basis();

  std::vector<Monomial> lms;
  for (const auto& g : G) lms.push_back(g.leading_term(order).first);

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      pairs.push_back({i, upto, lms[i].lcm_with(lms[upto])});
  };
  for (size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    // Normal selection: smallest lcm first.
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (order.less(pairs[k].lcm, pairs[best].lcm)) best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    // Coprime leading monomials reduce to zero; skip.
    if (pr.lcm == lms[pr.i] * lms[pr.j]) continue;

    MultiPoly si = MultiPoly::term(f, vars, pr.lcm.divide_by(lms[pr.i]),
                                   FieldElement::one(f)) * G[pr.i];
    MultiPoly sj = MultiPoly::term(f, vars, pr.lcm.divide_by(lms[pr.j]),
                                   FieldElement::one(f)) * G[pr.j];
    MultiPoly r = reduce_full(si - sj, G, order, lms);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit_basis();
    G.push_back(r.scaled(r.leading_term(order).second.inverse()));
    lms.push_back(G.back().leading_term(order).first);
    push_pairs(G.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<size_t> idx(G.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return order.less(lms[a], lms[b]); });
  std::vector<MultiPoly> kept;
  std::vector<Monomial> kept_lms;
  for (size_t i : idx) {
    bool dominated = false;
    for (const auto& lm : kept_lms)
      if (lm.divides(lms[i])) { dominated = true; break; }
    if (!dominated) {
      kept.push_back(G[i]);
      kept_lms.push_back(lms[i]);
    }
  }
  // Tail-reduce each element against the others.
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<MultiPoly> others;
    std::vector<Monomial> other_lms;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (j == i) continue;
      others.push_back(kept[j]);
      other_lms.push_back(kept_lms[j]);
    }
    MultiPoly r = others.empty()
                      ? kept[i]
                      : reduce_full(kept[i], others, order, other_lms);
    hard_check(!r.is_zero(), "minimal basis element reduced to zero");
    reduced.push_back(r.scaled(r.leading_term(order).second.inverse()));
  }
  return reduced;
}

std::vector<Monomial> standard_monomials(const std::vector<MultiPoly>& basis,
                                         const MonomialOrder& order) {
  if (basis.empty())
    fail(Errc::not_zero_dimensional, "the zero ideal is not zero-dimensional");
  for (const auto& g : basis)
    if (g.is_constant()) fail(Errc::ideal_is_unit, "the ideal is the unit ideal");
  const size_t n = basis[0].nvars();
  std::vector<Monomial> lms;
  for (const auto& g : basis) lms.push_back(g.leading_term(order).first);

  // Zero-dimensionality: each variable needs a pure power among the leading
  // monomials; the minimal exponents bound the standard monomials.
  std::vector<unsigned> bound(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (const auto& m : lms) {
      if (m[i] == 0) continue;
      bool pure = true;
      for (size_t j = 0; j < n; ++j)
        if (j != i && m[j] != 0) { pure = false; break; }
      if (pure && (bound[i] == 0 || m[i] < bound[i])) bound[i] = m[i];
    }
    if (bound[i] == 0)
      fail(Errc::not_zero_dimensional,
           "no pure power of variable " + (*basis[0].vars())[i] +
               " among the leading monomials");
  }

  std::vector<Monomial> result;
  std::vector<unsigned> e(n, 0);
  while (true) {
    Monomial m(e);
    bool standard = true;
    for (const auto& lm : lms)
      if (lm.divides(m)) { standard = false; break; }
    if (standard) result.push_back(m);
    size_t pos = 0;
    while (pos < n && ++e[pos] == bound[pos]) e[pos++] = 0;
    if (pos == n) break;
  }
  std::sort(result.begin(), result.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  hard_check(!result.empty() && result[0].is_one(), "standard monomials must start at 1");
  return result;
}

std::shared_ptr<const QuotientAlgebra> QuotientAlgebra::make(
    std::vector<MultiPoly> generators, const MonomialOrder& order) {
  if (generators.empty()) fail(Errc::invalid_input, "no generators");
  check_uniform(generators);
  if (generators[0].nvars() == 0) fail(Errc::invalid_input, "no variables");

  auto A = std::shared_ptr<QuotientAlgebra>(new QuotientAlgebra());
  A->field_ = generators[0].field();
  A->vars_ = generators[0].vars();
  A->order_ = order;
  A->generators_ = generators;
  A->basis_ = groebner_basis(std::move(generators), order);
  if (!A->basis_.empty() && A->basis_[0].is_constant())
    fail(Errc::ideal_is_unit, "the ideal is the unit ideal");
  A->std_monomials_ = standard_monomials(A->basis_, order);
  for (size_t i = 0; i < A->std_monomials_.size(); ++i)
    A->index_.emplace(A->std_monomials_[i], i);
  A->build_table();
  return A;
}

size_t QuotientAlgebra::monomial_index(const Monomial& m) const {
  auto it = index_.find(m);
  hard_check(it != index_.end(), "monomial outside the standard frame");
  return it->second;
}

MultiPoly QuotientAlgebra::normal_form(const MultiPoly& p) const {
  if (p.field() != field_) fail(Errc::descriptor_mismatch, "normal form over a different field");
  if (*p.vars() != *vars_) fail(Errc::descriptor_mismatch, "normal form over different variables");
  std::vector<Monomial> lms;
  for (const auto& g : basis_) lms.push_back(g.leading_term(order_).first);
  return reduce_full(p, basis_, order_, lms);
}

std::vector<FieldElement> QuotientAlgebra::coords_of(const MultiPoly& p) const {
  MultiPoly nf = normal_form(p);
  std::vector<FieldElement> c(dim(), FieldElement::zero(field_));
  for (const auto& [m, x] : nf.terms()) c[monomial_index(m)] = x;
  return c;
}

MultiPoly QuotientAlgebra::from_coords(const std::vector<FieldElement>& c) const {
  hard_check(c.size() == dim(), "coordinate length mismatch");
  MultiPoly p = MultiPoly::zero(field_, vars_);
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero())
      p = p + MultiPoly::term(field_, vars_, std_monomials_[i], c[i]);
  return p;
}

void QuotientAlgebra::build_table() {
  const size_t m = dim();
  table_.assign(m, {});
  for (size_t i = 0; i < m; ++i) {
    table_[i].resize(m - i);
    for (size_t j = i; j < m; ++j) {
      MultiPoly prod = MultiPoly::term(field_, vars_,
                                       std_monomials_[i] * std_monomials_[j],
                                       FieldElement::one(field_));
      table_[i][j - i] = coords_of(prod);
    }
  }
}

const std::vector<FieldElement>& QuotientAlgebra::table_at(size_t i, size_t j) const {
  return i <= j ? table_[i][j - i] : table_[j][i - j];
}

std::vector<FieldElement> QuotientAlgebra::multiply(
    const std::vector<FieldElement>& u, const std::vector<FieldElement>& v) const {
  hard_check(u.size() == dim() && v.size() == dim(), "coordinate length mismatch");
  std::vector<FieldElement> r(dim(), FieldElement::zero(field_));
  for (size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      FieldElement c = u[i] * v[j];
      const auto& row = table_at(i, j);
      for (size_t k = 0; k < dim(); ++k)
        if (!row[k].is_zero()) r[k] = r[k] + c * row[k];
    }
  }
  return r;
}

Matrix QuotientAlgebra::mult_matrix_coords(const std::vector<FieldElement>& u) const {
  hard_check(u.size() == dim(), "coordinate length mismatch");
  Matrix M(field_, dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    std::vector<FieldElement> col(dim(), FieldElement::zero(field_));
    for (size_t i = 0; i < dim(); ++i) {
      if (u[i].is_zero()) continue;
      const auto& row = table_at(i, j);
      for (size_t k = 0; k < dim(); ++k)
        if (!row[k].is_zero()) col[k] = col[k] + u[i] * row[k];
    }
    for (size_t k = 0; k < dim(); ++k) M.at(k, j) = col[k];
  }
  return M;
}

Matrix QuotientAlgebra::mult_matrix(const MultiPoly& p) const {
  return mult_matrix_coords(coords_of(p));
}

UniPoly QuotientAlgebra::element_min_poly(const MultiPoly& p) const {
  std::vector<FieldElement> w = coords_of(p);
  // Krylov sequence from the class of 1; the first linear dependence is the
  // annihilator of p's residue class, which kills the whole algebra.
  std::vector<std::vector<FieldElement>> krylov;
  std::vector<FieldElement> cur(dim(), FieldElement::zero(field_));
  cur[0] = FieldElement::one(field_);
  for (size_t D = 1; D <= dim() + 1; ++D) {
    krylov.push_back(cur);
    cur = multiply(cur, w);
    Matrix V(field_, dim(), D);
    for (size_t j = 0; j < D; ++j)
      for (size_t i = 0; i < dim(); ++i) V.at(i, j) = krylov[j][i];
    auto sol = V.solve(cur);
    if (!sol) continue;
    std::vector<FieldElement> mp(D + 1, FieldElement::zero(field_));
    for (size_t j = 0; j < D; ++j) mp[j] = -(*sol)[j];
    mp[D] = FieldElement::one(field_);
    return UniPoly(field_, std::move(mp));
  }
  fail(Errc::internal, "element minimal polynomial not found");
}

// ---------------------------------------------------------------------------
// Localization

namespace {

// Minimal polynomial over the ambient field K of a value in the residue
// field R, where R is K itself or an extension of K's (trivial) base.
UniPoly ambient_value_min_poly(const FieldDescriptor& K, const FieldElement& value) {
  if (value.field() == K)
    return UniPoly(K, {-value, FieldElement::one(K)});
  hard_check(K.is_base_only() && K.base() == value.field().base(),
             "unsupported residue field shape");
  return UniPoly::from_base(K, min_poly_of(value));
}

// phi with deg phi < [R:K] and phi(lambda) = target, both in R.
UniPoly power_basis_expression(const FieldDescriptor& K, const FieldElement& lambda,
                               const FieldElement& target, size_t dR) {
  if (dR == 1) {
    hard_check(target.field() == K, "rational point coordinate field mismatch");
    return UniPoly::constant(K, target);
  }
  // Solve sum_a c_a lambda^a = target over the base field.
  const size_t d = target.field().degree();
  Matrix M(K, d, dR);
  FieldElement cur = FieldElement::one(lambda.field());
  for (size_t a = 0; a < dR; ++a) {
    for (size_t i = 0; i < d; ++i)
      M.at(i, a) = FieldElement::from_base(K, cur.coords()[i]);
    cur = cur * lambda;
  }
  std::vector<FieldElement> rhs;
  rhs.reserve(d);
  for (size_t i = 0; i < d; ++i)
    rhs.push_back(FieldElement::from_base(K, target.coords()[i]));
  auto sol = M.solve(rhs);
  hard_check(sol.has_value(), "power basis expression must exist");
  return UniPoly(K, *sol);
}

// Value of a univariate polynomial at a multivariate argument.
MultiPoly compose(const UniPoly& phi, const MultiPoly& arg) {
  MultiPoly acc = MultiPoly::zero(arg.field(), arg.vars());
  for (size_t i = phi.coeffs().size(); i-- > 0;) {
    acc = acc * arg;
    acc = acc + MultiPoly::constant(arg.field(), arg.vars(), phi.coeffs()[i]);
  }
  return acc;
}

struct Attempt {
  std::string why;  // empty on success
  std::optional<LocalFactor> factor;
};

Attempt try_localize(const AlgebraPtr& A, const PointSpec& p, const SeparatingForm& form) {
  Attempt out;
  const FieldDescriptor& K = A->field();
  const FieldDescriptor& R = p.residue_field;
  const size_t dR = (R == K) ? 1 : R.degree();

  // Residue degree certificate: the form's value must generate R over K.
  std::vector<FieldElement> coords(p.coords.begin(), p.coords.end());
  FieldElement lambda = form.form.evaluate(coords, R);
  UniPoly mp = ambient_value_min_poly(K, lambda);
  if (static_cast<size_t>(mp.degree()) != dR) {
    out.why = "form value does not generate the residue field";
    return out;
  }

  // Split the element's minimal polynomial as mp^e * g with gcd(mp, g) = 1.
  UniPoly m = A->element_min_poly(form.form);
  UniPoly g = m;
  size_t e = 0;
  while (true) {
    UniPoly q(K), r(K);
    divmod(g, mp, q, r);
    if (!r.is_zero()) break;
    g = q;
    ++e;
  }
  if (e == 0) {
    out.why = "form's minimal polynomial does not vanish at the point";
    return out;
  }
  hard_check(poly_gcd(mp, g).degree() == 0, "imprimary factor split");

  // Idempotent e_p = (g * h)(form) with h inverse to g modulo mp^e.
  UniPoly mpe = mp.pow(static_cast<unsigned long>(e));
  UniPoly gg(K), h(K), v(K);
  poly_ext_gcd(g, mpe, gg, h, v);
  hard_check(gg.degree() == 0, "factor split must be coprime");
  UniPoly gh = mod(g * h, m);

  std::vector<FieldElement> w = A->coords_of(form.form);
  std::vector<FieldElement> cur(A->dim(), FieldElement::zero(K));
  cur[0] = FieldElement::one(K);
  std::vector<FieldElement> ep(A->dim(), FieldElement::zero(K));
  for (int j = 0; j <= gh.degree(); ++j) {
    const FieldElement& c = gh.coeff(static_cast<size_t>(j));
    if (!c.is_zero())
      for (size_t i = 0; i < A->dim(); ++i) ep[i] = ep[i] + c * cur[i];
    if (j < gh.degree()) cur = A->multiply(cur, w);
  }
  hard_check(A->multiply(ep, ep) == ep, "projector is not idempotent");

  Matrix Mep = A->mult_matrix_coords(ep);
  std::vector<std::vector<FieldElement>> local_basis = Mep.column_space_basis();
  const size_t local_dim = local_basis.size();
  hard_check(local_dim >= dR, "local factor smaller than its residue field");

  Matrix L(K, A->dim(), local_dim);
  for (size_t j = 0; j < local_dim; ++j)
    for (size_t i = 0; i < A->dim(); ++i) L.at(i, j) = local_basis[j][i];

  // Nilpotency certificate: each x_i - phi_i(form) must be nilpotent on the
  // factor, which pins the factor to this closed point and no other.
  for (size_t i = 0; i < A->nvars(); ++i) {
    UniPoly phi = power_basis_expression(K, lambda, p.coords[i], dR);
    MultiPoly Ni = MultiPoly::variable(K, A->vars(), i) - compose(phi, form.form);
    Matrix T = A->mult_matrix(Ni);
    auto S = L.solve_matrix(T * L);
    hard_check(S.has_value() && (L * *S) == (T * L), "factor is not invariant");
    Matrix Spow = Matrix::identity(K, local_dim);
    for (size_t k = 0; k < local_dim; ++k) Spow = Spow * *S;
    if (!Spow.is_zero()) {
      out.why = "form does not separate the point from the rest of the fiber";
      return out;
    }
  }

  out.factor.emplace(LocalFactor{A, form, mp, e, std::move(ep),
                                 std::move(local_basis), local_dim});
  return out;
}

MultiPoly linear_form(const AlgebraPtr& A, const std::vector<long>& coeffs) {
  MultiPoly l = MultiPoly::zero(A->field(), A->vars());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    l = l + MultiPoly::variable(A->field(), A->vars(), i)
                .scaled(FieldElement::from_integer(A->field(), coeffs[i]));
  }
  return l;
}

void check_point_shape(const AlgebraPtr& A, const PointSpec& p) {
  if (p.coords.size() != A->nvars())
    fail(Errc::invalid_input, "point arity does not match the variable count");
  for (const auto& c : p.coords)
    if (c.field() != p.residue_field)
      fail(Errc::descriptor_mismatch, "point coordinate outside the residue field");
  const FieldDescriptor& K = A->field();
  const FieldDescriptor& R = p.residue_field;
  if (R == K) return;
  if (!(K.is_base_only() && K.base() == R.base()))
    fail(Errc::incompatible_fields,
         "residue field " + R.to_string() + " does not extend " + K.to_string());
}

}  // namespace

SeparatingForm separating_form(const AlgebraPtr& A, const PointSpec& p, uint64_t seed) {
  check_point_shape(A, p);
  const size_t n = A->nvars();
  std::mt19937_64 rng(seed);
  std::string last_why = "no candidates";
  size_t attempts = 0;
  const size_t budget = 32;
  for (size_t k = 0; k < budget; ++k) {
    std::vector<long> coeffs(n, 0);
    if (k < n) {
      coeffs[k] = 1;
    } else {
      bool all_zero = true;
      for (auto& c : coeffs) {
        c = static_cast<long>(rng() % 7) - 3;
        if (c != 0) all_zero = false;
      }
      if (all_zero) coeffs[0] = 1;
    }
    ++attempts;
    SeparatingForm cand{coeffs, linear_form(A, coeffs), attempts};
    Attempt a = try_localize(A, p, cand);
    if (a.factor) return cand;
    last_why = a.why;
  }
  fail(Errc::separating_form_not_found,
       "no separating linear form found in " + std::to_string(budget) +
           " attempts; last failure: " + last_why);
}

LocalFactor localize(const AlgebraPtr& A, const PointSpec& p, const SeparatingForm& form) {
  check_point_shape(A, p);
  Attempt a = try_localize(A, p, form);
  if (!a.factor)
    fail(Errc::separating_form_not_found, "separating form certificate failed: " + a.why);
  return *std::move(a.factor);
}

}  // namespace gwdeg
