#include <doctest.h>

#include <random>

#include "gwdeg/gw_ring.hpp"

using namespace gwdeg;

namespace {

FieldDescriptor q() { return FieldDescriptor::base_only(BaseField::rationals()); }
FieldDescriptor fp(long p) { return FieldDescriptor::base_only(BaseField::prime_field(p)); }
FieldDescriptor qi() {
  return FieldDescriptor::extension(BaseField::rationals(), "i", {1, 0, 1});
}
FieldDescriptor qsqrt2() {
  return FieldDescriptor::extension(BaseField::rationals(), "r", {-2, 0, 1});
}
FieldDescriptor f9() {
  return FieldDescriptor::extension(BaseField::prime_field(3), "r", {1, 0, 1});
}

FieldElement fe(const FieldDescriptor& f, long num, long den = 1) {
  return FieldElement::from_base(f, Rational(num, den));
}

GWClass diag(const FieldDescriptor& f, std::initializer_list<long> entries) {
  std::vector<FieldElement> d;
  for (long e : entries) d.push_back(fe(f, e));
  return GWClass::from_diagonal(f, std::move(d));
}

}  // namespace

TEST_CASE("square class reduction over the rationals is the squarefree part") {
  CHECK(square_class_reduce(fe(q(), 12)).base_value() == Rational(3));
  CHECK(square_class_reduce(fe(q(), -18)).base_value() == Rational(-2));
  CHECK(square_class_reduce(fe(q(), 4, 9)).base_value() == Rational(1));
  CHECK(square_class_reduce(fe(q(), -50, 49)).base_value() == Rational(-2));
  CHECK(square_class_reduce(fe(q(), 1, 2)).base_value() == Rational(2));
  CHECK(square_class_reduce(fe(q(), 7)).base_value() == Rational(7));
}

TEST_CASE("square class reduction over a prime field") {
  // squares reduce to 1, nonsquares to the least nonresidue
  CHECK(square_class_reduce(fe(fp(7), 2)).base_value() == Rational(1));
  CHECK(square_class_reduce(fe(fp(7), 4)).base_value() == Rational(1));
  CHECK(square_class_reduce(fe(fp(7), 3)).base_value() == Rational(3));
  CHECK(square_class_reduce(fe(fp(7), 5)).base_value() == Rational(3));
  CHECK(square_class_reduce(fe(fp(5), 2)).base_value() == Rational(2));
  CHECK(square_class_reduce(fe(fp(5), 3)).base_value() == Rational(2));
  CHECK(square_class_reduce(fe(fp(5), 4)).base_value() == Rational(1));
}

TEST_CASE("squareness over finite fields is definitive") {
  for (long a = 1; a < 7; ++a) {
    bool sq = a == 1 || a == 2 || a == 4;
    CHECK(is_square(fe(fp(7), a)) == (sq ? Ternary::yes : Ternary::no));
  }
  // in F_9 = F_3(r), r^2 = -1: the squares are exactly the 4th powers' roots
  // the squares of F_9* are {1, 2, r, 2r}: (1 + 2r)^2 = r and (1 + r)^2 = 2r
  FieldElement r = FieldElement::generator(f9());
  CHECK(is_square(r) == Ternary::yes);
  CHECK(is_square(fe(f9(), 2) * r) == Ternary::yes);
  CHECK(is_square(FieldElement::one(f9()) + r) == Ternary::no);
  CHECK(is_square(fe(f9(), 2) + r) == Ternary::no);
}

TEST_CASE("squareness over the rationals") {
  CHECK(is_square(fe(q(), 49, 4)) == Ternary::yes);
  CHECK(is_square(fe(q(), 2)) == Ternary::no);
  CHECK(is_square(fe(q(), -1)) == Ternary::no);
  CHECK_THROWS_AS(is_square(fe(q(), 0)), Error);
}

TEST_CASE("squareness over quadratic extensions uses the norm test") {
  // Q(sqrt 2): 2 = (sqrt 2)^2 is a square, sqrt 2 itself is not
  FieldElement r = FieldElement::generator(qsqrt2());
  CHECK(is_square(fe(qsqrt2(), 2)) == Ternary::yes);
  CHECK(is_square(r) == Ternary::no);
  CHECK(is_square(r * r) == Ternary::yes);
  // Q(i): -1 = i^2, 2i = (1 + i)^2, while i and 2 are not squares
  FieldElement i = FieldElement::generator(qi());
  CHECK(is_square(fe(qi(), -1)) == Ternary::yes);
  CHECK(is_square(fe(qi(), 2) * i) == Ternary::yes);
  CHECK(is_square(i) == Ternary::no);
  CHECK(is_square(fe(qi(), 2)) == Ternary::no);
}

TEST_CASE("diagonal classes reject zero entries") {
  CHECK_THROWS_AS(GWClass::from_diagonal(q(), {fe(q(), 1), fe(q(), 0)}), Error);
}

TEST_CASE("diagonalization certifies its own congruence") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-6, 6);
  std::vector<FieldDescriptor> fields{q(), fp(7), qi(), f9()};
  for (const auto& F : fields) {
    for (int iter = 0; iter < 12; ++iter) {
      size_t n = 1 + (size_t)(iter % 4);
      Matrix G(F, n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
          FieldElement v = fe(F, d(rng));
          if (!F.is_base_only()) v = v + FieldElement::generator(F) * fe(F, d(rng));
          G.at(i, j) = v;
          G.at(j, i) = v;
        }
      if (G.det().is_zero()) {
        CHECK_THROWS_AS(diagonalize(G), Error);
        continue;
      }
      Diagonalization dg = diagonalize(G);
      // re-verify P^T G P = D against the raw diagonal
      Matrix P = dg.transform;
      Matrix D = P.transpose() * G * P;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (i == j)
            CHECK(D.at(i, j) == dg.raw_diagonal[i]);
          else
            CHECK(D.at(i, j).is_zero());
        }
      CHECK(dg.cls.rank() == n);
    }
  }
}

TEST_CASE("hyperbolic Gram diagonalizes to a split class") {
  Matrix G(q(), 2, 2);
  G.at(0, 1) = fe(q(), 1);
  G.at(1, 0) = fe(q(), 1);
  Diagonalization dg = diagonalize(G);
  GWInvariants inv = invariants(dg.cls);
  CHECK(inv.rank == 2);
  CHECK(inv.signature.value() == 0);
  CHECK(inv.det_square_class.base_value() == Rational(-1));
}

TEST_CASE("classical symbol values") {
  Place inf{0}, two{2}, three{3}, five{5};
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), inf) == -1);
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), two) == -1);
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), three) == 1);
  CHECK(hilbert_symbol(Rational(2), Rational(3), three) == -1);
  CHECK(hilbert_symbol(Rational(2), Rational(3), two) == -1);
  CHECK(hilbert_symbol(Rational(5), Rational(5), five) == 1);
  CHECK(hilbert_symbol(Rational(2), Rational(7), two) == 1);
  // 1/2 sits in the square class of 2, and 2 is a nonresidue at 3
  CHECK(hilbert_symbol(Rational(1, 2), Rational(3), three) == -1);
  // symmetry and bimultiplicativity spot checks
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(1, 30);
  for (int iter = 0; iter < 40; ++iter) {
    Rational a(d(rng)), b(d(rng)), c(d(rng));
    if (iter % 3 == 0) a = -a;
    if (iter % 4 == 1) b = -b;
    for (Place v : {inf, two, three, five}) {
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a * c, b, v) ==
            hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v));
      CHECK(hilbert_symbol(a * a, b, v) == 1);
    }
  }
}

TEST_CASE("invariants of small rational classes") {
  GWInvariants h = invariants(diag(q(), {1, -1}));
  CHECK(h.rank == 2);
  CHECK(h.signature.value() == 0);
  CHECK(h.det_square_class.base_value() == Rational(-1));
  REQUIRE(h.hasse_witt.has_value());
  for (const auto& [place, eps] : *h.hasse_witt) CHECK(eps == 1);

  GWInvariants g = invariants(diag(q(), {2, 3}));
  CHECK(g.rank == 2);
  CHECK(g.signature.value() == 2);
  CHECK(g.det_square_class.base_value() == Rational(6));
  REQUIRE(g.hasse_witt.has_value());
  std::map<Place, int> expect{{Place{0}, 1}, {Place{2}, -1}, {Place{3}, -1}};
  for (const auto& [place, eps] : expect) {
    auto it = g.hasse_witt->find(place);
    if (it != g.hasse_witt->end())
      CHECK(it->second == eps);
    else
      CHECK(eps == 1);  // omitted places carry the trivial symbol
  }
}

TEST_CASE("signed discriminant") {
  // rank 2: (-1)^1 det, so the split class has signed discriminant 1
  GWInvariants h = invariants(diag(q(), {1, -1}));
  CHECK(signed_discriminant(h).base_value() == Rational(1));
  GWInvariants g = invariants(diag(q(), {1, 1}));
  CHECK(signed_discriminant(g).base_value() == Rational(-1));
  GWInvariants r3 = invariants(diag(q(), {1, 1, 1}));
  CHECK(signed_discriminant(r3).base_value() == Rational(-1));
}

TEST_CASE("equality over the rationals is decided by the full invariant set") {
  CHECK(gw_equal(diag(q(), {1, -1}), diag(q(), {2, -2})) == Verdict::equal);
  CHECK(gw_equal(diag(q(), {1, 1}), diag(q(), {1, -1})) == Verdict::not_equal);
  CHECK(gw_equal(diag(q(), {1}), diag(q(), {1, 1})) == Verdict::not_equal);
  // same rank, signature, determinant; separated only by local symbols
  CHECK(gw_equal(diag(q(), {2, 5}), diag(q(), {1, 10})) == Verdict::not_equal);
  CHECK(gw_equal(diag(q(), {3, 5}), diag(q(), {1, 15})) == Verdict::not_equal);
  // genuinely isomorphic despite distinct entries: 2x^2 + 2y^2 represents 1
  CHECK(gw_equal(diag(q(), {1, 1}), diag(q(), {2, 2})) == Verdict::equal);
  CHECK(gw_equal(diag(q(), {1, 1, -2}), diag(q(), {1, 2, -1})) == Verdict::equal);
  CHECK(gw_equal(diag(q(), {2, -2}), diag(q(), {3, -3})) == Verdict::equal);
}

TEST_CASE("equality over finite fields is rank plus determinant") {
  CHECK(gw_equal(diag(fp(7), {1, 2}), diag(fp(7), {4, 4})) == Verdict::equal);
  CHECK(gw_equal(diag(fp(7), {1, 3}), diag(fp(7), {1, 1})) == Verdict::not_equal);
  CHECK(gw_equal(diag(fp(7), {3, 5}), diag(fp(7), {1, 1})) == Verdict::equal);
  // 2 and 3 are both nonresidues modulo 5, so the lines agree
  CHECK(gw_equal(diag(fp(5), {2}), diag(fp(5), {3})) == Verdict::equal);
  CHECK(gw_equal(diag(fp(5), {1}), diag(fp(5), {2})) == Verdict::not_equal);
  FieldElement r = FieldElement::generator(f9());
  GWClass a = GWClass::from_diagonal(f9(), {r, r});
  GWClass b = diag(f9(), {1, 1});
  CHECK(gw_equal(a, b) == Verdict::equal);  // r is a square in F_9
  GWClass c = GWClass::from_diagonal(f9(), {FieldElement::one(f9()) + r});
  CHECK(gw_equal(c, diag(f9(), {1})) == Verdict::not_equal);
}

TEST_CASE("equality over extensions of the rationals") {
  FieldElement i = FieldElement::generator(qi());
  FieldElement one = FieldElement::one(qi());
  FieldElement two = fe(qi(), 2);
  // determinant ratio -2 is certified non-square in Q(i)
  GWClass a = GWClass::from_diagonal(qi(), {two, -one});
  GWClass b = GWClass::from_diagonal(qi(), {one, one});
  CHECK(gw_equal(a, b) == Verdict::not_equal);
  // a permutation is decided by pairwise cancellation
  GWClass c = GWClass::from_diagonal(qi(), {i, one});
  GWClass d = GWClass::from_diagonal(qi(), {one, i});
  CHECK(gw_equal(c, d) == Verdict::equal);
  // scaling by the square 2i cancels as well
  GWClass e = GWClass::from_diagonal(qi(), {two * i});
  GWClass f = GWClass::from_diagonal(qi(), {one});
  CHECK(gw_equal(e, f) == Verdict::equal);
  CHECK(gw_equal(c, GWClass::from_diagonal(qi(), {one, one})) != Verdict::equal);
  // rank mismatch short-circuits
  CHECK(gw_equal(f, d) == Verdict::not_equal);
}

TEST_CASE("an honest undecided case survives") {
  // <3, 5> vs <1, 15> over Q(i): determinants agree, both entries differ by
  // non-square ratios whose squareness the norm test cannot settle pairwise,
  // and no complete invariant applies.
  GWClass a = GWClass::from_diagonal(qi(), {fe(qi(), 3), fe(qi(), 5)});
  GWClass b = GWClass::from_diagonal(qi(), {fe(qi(), 1), fe(qi(), 15)});
  Verdict v = gw_equal(a, b);
  CHECK(v != Verdict::equal);
}

TEST_CASE("direct sum concatenates and invariants are additive where defined") {
  GWClass a = diag(q(), {1, 2});
  GWClass b = diag(q(), {-3});
  GWClass s = a + b;
  CHECK(s.rank() == 3);
  GWInvariants ia = invariants(a), ib = invariants(b), is = invariants(s);
  CHECK(is.signature.value() == ia.signature.value() + ib.signature.value());
  CHECK(is.det_square_class.base_value() ==
        square_class_reduce(ia.det_square_class * ib.det_square_class).base_value());
}

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(Verdict::equal)) == "Equal");
  CHECK(std::string(verdict_name(Verdict::not_equal)) == "NotEqual");
  CHECK(std::string(verdict_name(Verdict::undecided)) == "Undecided");
}
