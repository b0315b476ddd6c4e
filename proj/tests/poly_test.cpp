#include <doctest.h>

#include <random>

#include "gwdeg/parser.hpp"
#include "gwdeg/unipoly.hpp"

using namespace gwdeg;

namespace {

FieldDescriptor q() { return FieldDescriptor::base_only(BaseField::rationals()); }
FieldDescriptor f7() { return FieldDescriptor::base_only(BaseField::prime_field(7)); }
FieldDescriptor qi() {
  return FieldDescriptor::extension(BaseField::rationals(), "i", {1, 0, 1});
}

UniPoly random_upoly(const FieldDescriptor& f, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<FieldElement> c;
  for (int k = 0; k <= deg; ++k) c.push_back(FieldElement::from_integer(f, d(rng)));
  return UniPoly(f, std::move(c));
}

MultiPoly parse2(const std::string& s, const FieldDescriptor& f, const VarList& vars) {
  return parse_poly(s, f, vars);
}

}  // namespace

TEST_CASE("univariate division and gcd") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    FieldDescriptor f = iter % 2 ? f7() : q();
    UniPoly a = random_upoly(f, 6, rng);
    UniPoly b = random_upoly(f, 3, rng);
    if (b.is_zero()) continue;
    UniPoly quo(f), rem(f);
    divmod(a, b, quo, rem);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());

    UniPoly c = random_upoly(f, 2, rng);
    if (c.is_zero()) continue;
    UniPoly g = poly_gcd(a * c, b * c);
    // c divides every common divisor's product; check c | g
    CHECK(mod(g, c).is_zero());

    UniPoly gg(f), u(f), v(f);
    poly_ext_gcd(a, b, gg, u, v);
    CHECK(u * a + v * b == gg);
    if (!gg.is_zero()) CHECK(gg.leading() == FieldElement::one(f));
  }
}

TEST_CASE("univariate evaluation and derivative") {
  FieldDescriptor f = q();
  // t^3 - 2t + 1
  UniPoly p(f, {FieldElement::from_integer(f, 1), FieldElement::from_integer(f, -2),
                FieldElement::zero(f), FieldElement::one(f)});
  CHECK(p.eval(FieldElement::from_integer(f, 2)) == FieldElement::from_integer(f, 5));
  UniPoly dp = p.derivative();  // 3t^2 - 2
  CHECK(dp.eval(FieldElement::from_integer(f, 1)) == FieldElement::from_integer(f, 1));
  CHECK(p.to_string() == "t^3 - 2*t + 1");
}

TEST_CASE("grevlex order on hand cases") {
  MonomialOrder o(MonomialOrder::Kind::grevlex);
  Monomial x2({2, 0}), xy({1, 1}), y2({0, 2}), x({1, 0}), y({0, 1});
  CHECK(o.greater(x2, xy));
  CHECK(o.greater(xy, y2));
  CHECK(o.greater(x2, y2));
  CHECK(o.greater(x, y));
  CHECK(o.greater(y2, x));  // higher total degree wins
  // lex: x beats any power of y
  MonomialOrder lex(MonomialOrder::Kind::lex);
  CHECK(lex.greater(x, y2));
  // permuted grevlex: make y the most significant variable
  MonomialOrder oy(MonomialOrder::Kind::grevlex, {1, 0});
  CHECK(oy.greater(y, x));
  CHECK(oy.greater(y2, xy));
}

TEST_CASE("multivariate arithmetic") {
  VarList vars = make_vars({"x", "y"});
  FieldDescriptor f = q();
  MultiPoly x = MultiPoly::variable(f, vars, 0);
  MultiPoly y = MultiPoly::variable(f, vars, 1);
  MultiPoly one = MultiPoly::constant(f, vars, FieldElement::one(f));
  CHECK((x + y) * (x + y) == x * x + x * y + x * y + y * y);
  CHECK((x + y).pow(2) == x.pow(2) + (x * y).scaled(FieldElement::from_integer(f, 2)) +
                              y.pow(2));
  CHECK((x - x).is_zero());
  CHECK((x * y - y * x).is_zero());
  MultiPoly p = x.pow(3) - y + one;
  CHECK(p.derivative(0) == x.pow(2).scaled(FieldElement::from_integer(f, 3)));
  CHECK(p.derivative(1) == -one);
  CHECK(p.total_degree() == 3);

  std::vector<FieldElement> pt{FieldElement::from_integer(f, 2),
                               FieldElement::from_integer(f, 3)};
  CHECK(p.evaluate(pt, f) == FieldElement::from_integer(f, 6));
}

TEST_CASE("leading terms under an order") {
  VarList vars = make_vars({"x", "y"});
  FieldDescriptor f = q();
  MultiPoly p = parse2("x^2 + x*y + y^2 + 1", f, vars);
  auto [m, c] = p.leading_term(MonomialOrder());
  CHECK(m == Monomial({2, 0}));
  CHECK(c == FieldElement::one(f));
}

TEST_CASE("exact division") {
  VarList vars = make_vars({"x", "y"});
  FieldDescriptor f = q();
  MultiPoly num = parse2("x^2 - y^2", f, vars);
  MultiPoly den = parse2("x - y", f, vars);
  CHECK(exact_divide(num, den) == parse2("x + y", f, vars));
  CHECK_THROWS_AS(exact_divide(parse2("x^2 + 1", f, vars), parse2("x", f, vars)), Error);
  // randomized: (a*b)/b == a
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int iter = 0; iter < 20; ++iter) {
    MultiPoly a = MultiPoly::zero(f, vars);
    MultiPoly b = MultiPoly::zero(f, vars);
    for (unsigned e1 = 0; e1 < 3; ++e1)
      for (unsigned e2 = 0; e2 < 2; ++e2) {
        a = a + MultiPoly::term(f, vars, Monomial({e1, e2}),
                                FieldElement::from_integer(f, d(rng)));
        b = b + MultiPoly::term(f, vars, Monomial({e1, e2}),
                                FieldElement::from_integer(f, d(rng)));
      }
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("substitution") {
  VarList vars = make_vars({"x"});
  FieldDescriptor f = q();
  MultiPoly p = parse2("x^2 + 3*x + 1", f, vars);
  MultiPoly shifted = substitute(p, {parse2("x - 1", f, vars)});
  CHECK(shifted == parse2("x^2 + x - 1", f, vars));
}

TEST_CASE("base change and variable embedding") {
  VarList vars = make_vars({"x"});
  MultiPoly p = parse2("x^2 + 1", q(), vars);
  MultiPoly pl = base_change(p, qi());
  CHECK(pl.field() == qi());
  FieldElement i = FieldElement::generator(qi());
  std::vector<FieldElement> pt{i};
  CHECK(pl.evaluate(pt, qi()).is_zero());

  VarList big = make_vars({"x", "x'"});
  MultiPoly moved = embed_vars(p, big, {1});
  CHECK(moved.vars() == big);
  CHECK(moved == MultiPoly::term(q(), big, Monomial({0, 2}), FieldElement::one(q())) +
                     MultiPoly::constant(q(), big, FieldElement::one(q())));
}

TEST_CASE("parser grammar and errors") {
  VarList vars = make_vars({"x", "y"});
  FieldDescriptor f = q();
  CHECK(parse2("x^2 - y", f, vars) ==
        MultiPoly::variable(f, vars, 0).pow(2) - MultiPoly::variable(f, vars, 1));
  CHECK(parse2("-x * -y", f, vars) == MultiPoly::variable(f, vars, 0) *
                                          MultiPoly::variable(f, vars, 1));
  CHECK(parse2("2^3", f, vars) ==
        MultiPoly::constant(f, vars, FieldElement::from_integer(f, 8)));
  CHECK(parse2("(x + y)^2 - (x - y)^2", f, vars) ==
        (MultiPoly::variable(f, vars, 0) * MultiPoly::variable(f, vars, 1))
            .scaled(FieldElement::from_integer(f, 4)));

  auto col_of = [&](const std::string& s) {
    try {
      parse2(s, f, vars);
    } catch (const Error& e) {
      return e.col();
    }
    return -1;
  };
  CHECK(col_of("x^^2") == 3);
  CHECK(col_of("z + 1") == 1);    // unknown symbol
  CHECK(col_of("x + ") == 5);     // dangling operator
  CHECK(col_of("2x") == 2);       // no implicit multiplication
  CHECK(col_of("x^-1") == 3);     // exponent must be a nonnegative literal
  CHECK(col_of("(x + 1") == 7);   // unclosed parenthesis
  CHECK(col_of("x $ y") == 3);    // stray character

  // generator symbol usable as a constant
  VarList xv = make_vars({"x"});
  MultiPoly withgen = parse_poly("i * x + 1", qi(), xv);
  FieldElement i = FieldElement::generator(qi());
  CHECK(withgen == MultiPoly::variable(qi(), xv, 0).scaled(i) +
                       MultiPoly::constant(qi(), xv, FieldElement::one(qi())));
}

TEST_CASE("printing round trip") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-4, 4);
  VarList vars = make_vars({"x", "y"});
  for (int iter = 0; iter < 30; ++iter) {
    FieldDescriptor f = iter % 2 ? f7() : q();
    MultiPoly p = MultiPoly::zero(f, vars);
    for (unsigned e1 = 0; e1 < 3; ++e1)
      for (unsigned e2 = 0; e2 < 3; ++e2)
        p = p + MultiPoly::term(f, vars, Monomial({e1, e2}),
                                FieldElement::from_integer(f, d(rng)));
    CHECK(parse_poly(p.to_string(), f, vars) == p);
  }
  // extension coefficients print with parentheses and reparse
  VarList xv = make_vars({"x"});
  FieldElement i = FieldElement::generator(qi());
  MultiPoly p = MultiPoly::variable(qi(), xv, 0).scaled(i + FieldElement::one(qi())) +
                MultiPoly::constant(qi(), xv, i);
  CHECK(parse_poly(p.to_string(), qi(), xv) == p);
}

TEST_CASE("field element parsing") {
  FieldDescriptor F = qi();
  FieldElement i = FieldElement::generator(F);
  CHECK(parse_field_element("i^2 + 1", F).is_zero());
  CHECK(parse_field_element("-(1 - i)", F) == i - FieldElement::one(F));
  CHECK_THROWS_AS(parse_field_element("x", F), Error);
}
