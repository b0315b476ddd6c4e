#include "gwdeg/gw_ring.hpp"

#include <algorithm>
#include <sstream>

namespace gwdeg {

namespace {

// ---------------------------------------------------------------------------
// Integer factorization (desk scale): trial division, then GMP primality and
// perfect-power fallbacks.

std::vector<std::pair<Integer, unsigned>> factor_positive(Integer n) {
  hard_check(n >= 1, "factorization of a nonpositive integer");
  std::vector<std::pair<Integer, unsigned>> out;
  auto push = [&](const Integer& p, unsigned e) {
    for (auto& [q, k] : out)
      if (q == p) { k += e; return; }
    out.emplace_back(p, e);
  };
  for (Integer d(2); d <= 1'000'000 && d * d <= n; d == 2 ? d = 3 : d += 2) {
    unsigned e = 0;
    while (n % d == 0) { n /= d; ++e; }
    if (e) push(d, e);
  }
  std::vector<std::pair<Integer, unsigned>> stack;
  if (n > 1) stack.emplace_back(n, 1);
  while (!stack.empty()) {
    auto [m, mult] = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
      push(m, mult);
      continue;
    }
    bool split = false;
    for (unsigned k = 2; k <= 64 && !split; ++k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        stack.emplace_back(root, mult * k);
        split = true;
      }
    }
    if (!split)
      fail(Errc::cannot_certify, "integer " + m.get_str() + " is out of factoring range");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer squarefree_part(const Rational& q) {
  hard_check(!rat_is_zero(q), "square class of zero");
  Integer n = q.get_num() * q.get_den();
  Integer sign = sgn(n) < 0 ? -1 : 1;
  Integer core = 1;
  for (const auto& [p, e] : factor_positive(abs(n)))
    if (e % 2 == 1) core *= p;
  return sign * core;
}

bool is_square_rational(const Rational& r) {
  if (sgn(r) < 0) return false;
  if (sgn(r) == 0) return true;
  Integer num = r.get_num(), den = r.get_den();
  return mpz_perfect_square_p(num.get_mpz_t()) != 0 &&
         mpz_perfect_square_p(den.get_mpz_t()) != 0;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (!is_square_rational(r)) return std::nullopt;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), Integer(r.get_num()).get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), Integer(r.get_den()).get_mpz_t());
  return Rational(num, den);
}

Integer field_cardinality(const FieldDescriptor& f) {
  Integer q = 1;
  for (size_t i = 0; i < f.degree(); ++i) q *= f.base().characteristic();
  return q;
}

// Norm of u down to the base: determinant of multiplication by u.
Rational norm_to_base(const FieldElement& u) {
  const FieldDescriptor& f = u.field();
  const size_t d = f.degree();
  if (d == 1 || f.is_base_only()) return u.coords()[0];
  FieldDescriptor base = FieldDescriptor::base_only(f.base());
  Matrix M(base, d, d);
  FieldElement gen = FieldElement::generator(f);
  FieldElement cur = u;
  for (size_t j = 0; j < d; ++j) {
    for (size_t i = 0; i < d; ++i)
      M.at(i, j) = FieldElement::from_base(base, cur.coords()[i]);
    if (j + 1 < d) cur = cur * gen;
  }
  FieldElement det = M.det();
  return det.coords()[0];
}

// Squares in a quadratic extension of Q are fully decidable: u = a + b*sqrt(D)
// is a square iff N(u) = a^2 - D b^2 is a rational square s^2 with (a+s)/2 or
// (a-s)/2 a rational square.
Ternary is_square_quadratic(const FieldElement& u) {
  const FieldDescriptor& f = u.field();
  const std::vector<Rational>& mp = f.min_poly();  // t^2 + b1 t + c1
  Rational b1 = mp[1], c1 = mp[0];
  Rational D = b1 * b1 - 4 * c1;
  Rational a = u.coords()[0] - u.coords()[1] * b1 / 2;
  Rational b = u.coords()[1] / 2;
  if (rat_is_zero(b)) {
    // Base value: square iff a or a*D is a rational square.
    return (is_square_rational(a) || is_square_rational(Rational(a * D)))
               ? Ternary::yes
               : Ternary::no;
  }
  auto s = rational_sqrt(Rational(a * a - D * b * b));
  if (!s) return Ternary::no;
  Rational r1 = (a + *s) / 2, r2 = (a - *s) / 2;
  return (is_square_rational(r1) || is_square_rational(r2)) ? Ternary::yes
                                                            : Ternary::no;
}

}  // namespace

Ternary is_square(const FieldElement& u) {
  if (u.is_zero()) fail(Errc::invalid_input, "square-class test of zero");
  const FieldDescriptor& f = u.field();
  if (f.base().is_prime_field()) {
    // Euler criterion in F_q.
    Integer e = (field_cardinality(f) - 1) / 2;
    FieldElement t = u.pow(e);
    if (t.is_one()) return Ternary::yes;
    hard_check((t + FieldElement::one(f)).is_zero(), "Euler criterion off the unit circle");
    return Ternary::no;
  }
  if (f.is_base_only()) {
    return is_square_rational(u.coords()[0]) ? Ternary::yes : Ternary::no;
  }
  const size_t d = f.degree();
  if (d == 1) {
    // Degree-one relabeling of Q.
    return is_square_rational(u.coords()[0]) ? Ternary::yes : Ternary::no;
  }
  if (d == 2) return is_square_quadratic(u);
  if (u.is_base()) {
    Rational r = u.base_value();
    if (is_square_rational(r)) return Ternary::yes;
    // For odd degree, Q(sqrt(r)) cannot embed, so the rational answer stands.
    if (d % 2 == 1) return Ternary::no;
    return Ternary::undecided;
  }
  // A square has square norm; a nonsquare norm is therefore conclusive.
  if (!is_square_rational(norm_to_base(u))) return Ternary::no;
  return Ternary::undecided;
}

FieldElement square_class_reduce(const FieldElement& u) {
  if (u.is_zero()) fail(Errc::invalid_input, "square class of zero");
  const FieldDescriptor& f = u.field();
  if (f.base().is_prime_field()) {
    if (is_square(u) == Ternary::yes) return FieldElement::one(f);
    // Fixed nonresidue: first element in coordinate-lexicographic order that
    // fails the Euler criterion.
    const long p = f.base().characteristic();
    const size_t d = f.degree();
    std::vector<long> digits(d, 0);
    while (true) {
      size_t pos = 0;
      while (pos < d && ++digits[pos] == p) digits[pos++] = 0;
      hard_check(pos < d, "no nonresidue found");
      std::vector<Rational> coords(d);
      for (size_t i = 0; i < d; ++i) coords[i] = Rational(digits[i]);
      FieldElement cand = FieldElement::make(f, std::move(coords));
      if (cand.is_zero()) continue;
      if (is_square(cand) == Ternary::no) return cand;
    }
  }
  if (f.is_base_only())
    return FieldElement::from_base(f, Rational(squarefree_part(u.coords()[0])));
  return u;
}

GWClass GWClass::from_diagonal(const FieldDescriptor& f, std::vector<FieldElement> diag) {
  for (auto& d : diag) {
    if (d.field() != f) fail(Errc::descriptor_mismatch, "diagonal entry field mismatch");
    if (d.is_zero()) fail(Errc::degenerate_form, "zero diagonal entry");
    d = square_class_reduce(d);
  }
  return GWClass(f, std::move(diag));
}

GWClass GWClass::operator+(const GWClass& o) const {
  if (field_ != o.field_) fail(Errc::descriptor_mismatch, "direct sum across fields");
  std::vector<FieldElement> d = diag_;
  d.insert(d.end(), o.diag_.begin(), o.diag_.end());
  return GWClass(field_, std::move(d));
}

std::string GWClass::to_string() const {
  std::string s = "<";
  for (size_t i = 0; i < diag_.size(); ++i) {
    if (i) s += ", ";
    s += diag_[i].to_string();
  }
  return s + ">";
}

Diagonalization diagonalize(const Matrix& G) {
  if (G.rows() != G.cols()) fail(Errc::invalid_input, "diagonalization needs a square matrix");
  if (!G.is_symmetric()) fail(Errc::invalid_input, "diagonalization needs a symmetric matrix");
  const FieldDescriptor& f = G.field();
  const size_t n = G.rows();
  Matrix D = G;
  Matrix P = Matrix::identity(f, n);

  auto swap_cols = [&](Matrix& M, size_t a, size_t b) {
    for (size_t i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
  };
  auto swap_rows = [&](Matrix& M, size_t a, size_t b) {
    for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
  };
  // col a += t * col b, paired with the same row operation to keep symmetry.
  auto add_cols = [&](Matrix& M, size_t a, size_t b, const FieldElement& t) {
    for (size_t i = 0; i < M.rows(); ++i) M.at(i, a) = M.at(i, a) + t * M.at(i, b);
  };
  auto add_rows = [&](Matrix& M, size_t a, size_t b, const FieldElement& t) {
    for (size_t j = 0; j < M.cols(); ++j) M.at(a, j) = M.at(a, j) + t * M.at(b, j);
  };

  for (size_t r = 0; r < n; ++r) {
    if (D.at(r, r).is_zero()) {
      size_t s = r + 1;
      while (s < n && D.at(s, s).is_zero()) ++s;
      if (s < n) {
        swap_rows(D, r, s);
        swap_cols(D, r, s);
        swap_cols(P, r, s);
      } else {
        size_t t = r + 1;
        while (t < n && D.at(r, t).is_zero()) ++t;
        if (t == n)
          fail(Errc::degenerate_form, "symmetric matrix is singular");
        // Characteristic != 2: moving a hyperbolic off-diagonal entry onto
        // the diagonal via col r += col t doubles it.
        FieldElement one = FieldElement::one(f);
        add_rows(D, r, t, one);
        add_cols(D, r, t, one);
        add_cols(P, r, t, one);
      }
    }
    FieldElement pivot = D.at(r, r);
    for (size_t i = r + 1; i < n; ++i) {
      if (D.at(i, r).is_zero()) continue;
      FieldElement t = -(D.at(i, r) / pivot);
      add_rows(D, i, r, t);
      add_cols(D, i, r, t);
      add_cols(P, i, r, t);
    }
  }

  std::vector<FieldElement> raw;
  raw.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (D.at(i, i).is_zero())
      fail(Errc::degenerate_form, "symmetric matrix is singular");
    raw.push_back(D.at(i, i));
  }
  // The congruence certificate is reverified unconditionally.
  hard_check(P.transpose() * G * P == D, "congruence transform does not reproduce the diagonal");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      hard_check(i == j || D.at(i, j).is_zero(), "diagonalization left an off-diagonal entry");
  GWClass cls = GWClass::from_diagonal(f, raw);
  return Diagonalization{std::move(cls), std::move(raw), std::move(P)};
}

Diagonalization diagonalize(const GramMatrix& G) { return diagonalize(G.mat); }

// ---------------------------------------------------------------------------
// Hilbert symbols over Q

namespace {

// Valuation and unit part of a nonzero rational at p.
long valuation(const Rational& x, long p, Integer& unit_num, Integer& unit_den) {
  long v = 0;
  unit_num = x.get_num();
  unit_den = x.get_den();
  while (unit_num % p == 0) { unit_num /= p; ++v; }
  while (unit_den % p == 0) { unit_den /= p; --v; }
  return v;
}

int legendre_unit(const Integer& num, const Integer& den, long p) {
  Integer pz(p);
  int a = mpz_legendre(num.get_mpz_t(), pz.get_mpz_t());
  int b = mpz_legendre(den.get_mpz_t(), pz.get_mpz_t());
  hard_check(a != 0 && b != 0, "Legendre symbol of a non-unit");
  return a * b;
}

long mod8(const Integer& num, const Integer& den) {
  // num/den with both odd; den^-1 = den mod 8 since odd squares are 1 mod 8.
  Integer r = (num % 8) * (den % 8) % 8;
  long v = r.get_si();
  return v < 0 ? v + 8 : v;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (rat_is_zero(a) || rat_is_zero(b))
    fail(Errc::invalid_input, "Hilbert symbol of zero");
  if (v.p == 0) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  if (v.p != 2) (void)BaseField::prime_field(v.p);  // validates primality

  Integer an, ad, bn, bd;
  long alpha = valuation(a, v.p, an, ad);
  long beta = valuation(b, v.p, bn, bd);

  if (v.p != 2) {
    int eps = (v.p - 1) / 2 % 2;
    int sign = 1;
    if ((alpha % 2) && (beta % 2) && eps) sign = -sign;
    if (beta % 2) sign *= legendre_unit(an, ad, v.p);
    if (alpha % 2) sign *= legendre_unit(bn, bd, v.p);
    return sign;
  }
  long ua = mod8(an, ad), ub = mod8(bn, bd);
  int eps_a = (ua % 4 == 3), eps_b = (ub % 4 == 3);
  int om_a = (ua == 3 || ua == 5), om_b = (ub == 3 || ub == 5);
  long expo = eps_a * eps_b + (alpha % 2) * om_b + (beta % 2) * om_a;
  return expo % 2 ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Invariants and equality

GWInvariants invariants(const GWClass& c) {
  GWInvariants inv;
  inv.rank = c.rank();
  FieldElement det = FieldElement::one(c.field());
  for (const auto& d : c.diagonal()) det = det * d;
  inv.det_square_class = square_class_reduce(det);

  if (c.field().base().is_rationals() && c.field().is_base_only()) {
    int sig = 0;
    std::vector<Place> places = {{0}, {2}};
    for (const auto& d : c.diagonal()) {
      Rational r = d.base_value();
      sig += sgn(r) > 0 ? 1 : -1;
      for (const auto& [p, e] : factor_positive(abs(Integer(r.get_num() * r.get_den()))))
        if (p != 2) places.push_back({p.get_si()});
    }
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    inv.signature = sig;
    std::map<Place, int> hw;
    for (const Place& v : places) {
      int s = 1;
      for (size_t i = 0; i < c.rank(); ++i)
        for (size_t j = i + 1; j < c.rank(); ++j)
          s *= hilbert_symbol(c.diagonal()[i].base_value(),
                              c.diagonal()[j].base_value(), v);
      hw[v] = s;
    }
    inv.hasse_witt = std::move(hw);
  }
  return inv;
}

FieldElement signed_discriminant(const GWInvariants& inv) {
  const size_t r = inv.rank;
  bool flip = ((r * (r - 1) / 2) % 2) == 1;
  FieldElement d = inv.det_square_class;
  return flip ? square_class_reduce(-d) : d;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equal: return "Equal";
    case Verdict::not_equal: return "NotEqual";
    case Verdict::undecided: return "Undecided";
  }
  return "Undecided";
}

Verdict gw_equal(const GWClass& a, const GWClass& b) {
  if (a.field() != b.field())
    fail(Errc::descriptor_mismatch, "Grothendieck-Witt comparison across fields");
  if (a.rank() != b.rank()) return Verdict::not_equal;
  const FieldDescriptor& f = a.field();

  FieldElement det_ab = FieldElement::one(f);
  for (const auto& d : a.diagonal()) det_ab = det_ab * d;
  for (const auto& d : b.diagonal()) det_ab = det_ab * d;

  if (f.base().is_prime_field()) {
    // Rank and determinant classify over a finite field.
    return is_square(det_ab) == Ternary::yes ? Verdict::equal : Verdict::not_equal;
  }
  if (f.is_base_only()) {
    GWInvariants ia = invariants(a), ib = invariants(b);
    if (ia.signature != ib.signature) return Verdict::not_equal;
    if (!(ia.det_square_class == ib.det_square_class)) return Verdict::not_equal;
    std::map<Place, int> ha = *ia.hasse_witt, hb = *ib.hasse_witt;
    std::vector<Place> places;
    for (const auto& [v, s] : ha) places.push_back(v);
    for (const auto& [v, s] : hb) places.push_back(v);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    for (const Place& v : places) {
      int sa = ha.count(v) ? ha[v] : 1;
      int sb = hb.count(v) ? hb[v] : 1;
      if (sa != sb) return Verdict::not_equal;
    }
    // Rank, signature, determinant and all local symbols agree; over Q these
    // classify symmetric bilinear forms.
    return Verdict::equal;
  }

  // Extension of Q: decide what the computable invariants settle.
  Ternary dt = is_square(det_ab);
  if (dt == Ternary::no) return Verdict::not_equal;

  // Greedy cancellation of matching square classes (Witt cancellation).
  std::vector<FieldElement> rest(b.diagonal());
  bool all_cancelled = true;
  for (const auto& da : a.diagonal()) {
    bool found = false;
    for (size_t j = 0; j < rest.size(); ++j) {
      if (is_square(da * rest[j]) == Ternary::yes) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        found = true;
        break;
      }
    }
    if (!found) { all_cancelled = false; break; }
  }
  if (all_cancelled) return Verdict::equal;
  return Verdict::undecided;
}

}  // namespace gwdeg
