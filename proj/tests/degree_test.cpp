#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "gwdeg/degree.hpp"
#include "gwdeg/parser.hpp"
#include "gwdeg/problem_file.hpp"

using namespace gwdeg;

namespace {

FieldDescriptor q() { return FieldDescriptor::base_only(BaseField::rationals()); }
FieldDescriptor qi() {
  return FieldDescriptor::extension(BaseField::rationals(), "i", {1, 0, 1});
}

LoadedProblem fixture(const std::string& name) {
  return load_problem(parse_problem_file(std::string(GWDEG_FIXTURE_DIR) + "/" + name));
}

std::vector<MultiPoly> sys(const FieldDescriptor& f, const VarList& vars,
                           std::initializer_list<const char*> exprs) {
  std::vector<MultiPoly> out;
  for (const char* e : exprs) out.push_back(parse_poly(e, f, vars));
  return out;
}

Errc code_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("point validation") {
  VarList vars = make_vars({"x"});
  auto f = sys(q(), vars, {"x^2 + 1"});
  // wrong arity
  PointSpec wide{q(), {FieldElement::one(q()), FieldElement::one(q())}};
  CHECK(code_of([&] { validate_point(f, wide); }) == Errc::invalid_input);
  // not a zero
  PointSpec off{q(), {FieldElement::one(q())}};
  CHECK(code_of([&] { validate_point(f, off); }) == Errc::not_a_zero);
  // declared residue field strictly larger than what the coordinates generate
  PointSpec padded{qi(), {FieldElement::zero(qi())}};
  auto g = sys(q(), vars, {"x^2"});
  CHECK(code_of([&] { validate_point(g, padded); }) == Errc::residue_field_mismatch);
  // the good case passes
  PointSpec at_i{qi(), {FieldElement::generator(qi())}};
  validate_point(f, at_i);
}

TEST_CASE("canonical point reads the same coordinates over the residue field") {
  PointSpec at_i{qi(), {FieldElement::generator(qi())}};
  PointSpec up = canonical_point(at_i);
  CHECK(up.residue_field == qi());
  CHECK(up.coords.size() == 1);
  CHECK(up.coords[0] == FieldElement::generator(qi()));
}

TEST_CASE("jacobian classes at simple zeros") {
  VarList vars = make_vars({"x"});
  auto f = sys(q(), vars, {"x^2 + 1"});
  PointSpec at_i{qi(), {FieldElement::generator(qi())}};
  GWClass j = jacobian_class(f, at_i);
  REQUIRE(j.rank() == 1);
  FieldElement two_i =
      FieldElement::from_integer(qi(), 2) * FieldElement::generator(qi());
  CHECK(is_square(j.diagonal()[0] / two_i) == Ternary::yes);

  VarList v2 = make_vars({"x", "y"});
  auto g = sys(q(), v2, {"x^2 - y", "y^2 - x"});
  PointSpec one_one{q(), {FieldElement::one(q()), FieldElement::one(q())}};
  GWClass jg = jacobian_class(g, one_one);
  REQUIRE(jg.rank() == 1);
  CHECK(jg.diagonal()[0].base_value() == Rational(3));
}

TEST_CASE("vanishing jacobian is refused") {
  VarList vars = make_vars({"x"});
  auto f = sys(q(), vars, {"(x - 1)^2 * (x^2 + 1)"});
  PointSpec one{q(), {FieldElement::one(q())}};
  CHECK(code_of([&] { jacobian_class(f, one); }) == Errc::zero_jacobian);
}

TEST_CASE("at simple zeros the degree is the transferred jacobian line") {
  for (const char* name :
       {"sq_i.gwdeg", "cube2.gwdeg", "f3_quad.gwdeg", "plane_deg1.gwdeg"}) {
    CAPTURE(name);
    LoadedProblem lp = fixture(name);
    REQUIRE(lp.points.size() == 1);
    const PointSpec& p = lp.points[0];
    std::vector<MultiPoly> fL;
    for (const auto& poly : lp.polys) fL.push_back(base_change(poly, p.residue_field));
    GWClass upstairs = jacobian_class(fL, canonical_point(p));
    TransferContext ctx = TransferContext::make(lp.field, p.residue_field);
    GWClass expected = transfer_class(upstairs, ctx);
    GWClass direct = local_degree_direct(lp.polys, p, lp.seed);
    CHECK(gw_equal(direct, expected) == Verdict::equal);
  }
}

TEST_CASE("both pipelines agree on the bundled corpus sample") {
  for (const char* name : {"sq_i.gwdeg", "plane_quad.gwdeg", "sym2.gwdeg",
                           "f5_quartic.gwdeg", "mult_quadratic.gwdeg"}) {
    CAPTURE(name);
    LoadedProblem lp = fixture(name);
    VerifyResult vr = verify_trace_theorem(lp.polys, lp.points[0], lp.seed);
    CHECK(vr.verdict == Verdict::equal);
    CHECK(vr.direct.local_dim == vr.trace.local_dim);
  }
}

TEST_CASE("the degree is invariant under translation") {
  VarList vars = make_vars({"x"});
  auto f = sys(q(), vars, {"x^2 + 1"});
  PointSpec at_i{qi(), {FieldElement::generator(qi())}};
  GWClass before = local_degree_direct(f, at_i, 0);

  // g(x) = f(x + 3) vanishes at i - 3
  std::vector<MultiPoly> shift{MultiPoly::variable(q(), vars, 0) +
                               MultiPoly::constant(q(), vars, FieldElement::from_integer(q(), 3))};
  std::vector<MultiPoly> g{substitute(f[0], shift)};
  PointSpec moved{qi(), {FieldElement::generator(qi()) - FieldElement::from_integer(qi(), 3)}};
  GWClass after = local_degree_direct(g, moved, 0);
  CHECK(gw_equal(before, after) == Verdict::equal);

  // and the trace pipeline sees the same class
  CHECK(gw_equal(local_degree_trace(g, moved, 0), before) == Verdict::equal);
}

TEST_CASE("scaling one equation by a unit scales the class") {
  VarList vars = make_vars({"x"});
  auto f = sys(q(), vars, {"x^2 + 1"});
  PointSpec at_i{qi(), {FieldElement::generator(qi())}};
  GWClass base = local_degree_direct(f, at_i, 0);

  std::vector<MultiPoly> g{f[0].scaled(FieldElement::from_integer(q(), 3))};
  GWClass scaled = local_degree_direct(g, at_i, 0);

  std::vector<FieldElement> entries;
  for (const auto& d : base.diagonal())
    entries.push_back(d * FieldElement::from_integer(q(), 3));
  GWClass expected = GWClass::from_diagonal(q(), std::move(entries));
  CHECK(gw_equal(scaled, expected) == Verdict::equal);
}

TEST_CASE("local classes sum to the global class over a complete zero set") {
  for (const char* name : {"add_sq.gwdeg", "add_mult.gwdeg", "add_cubefree.gwdeg",
                           "add_plane.gwdeg", "add_f3.gwdeg"}) {
    CAPTURE(name);
    LoadedProblem lp = fixture(name);
    REQUIRE(!lp.points.empty());
    GlobalOutcome total = global_degree_full(lp.polys);
    GWClass sum = local_degree_direct(lp.polys, lp.points[0], lp.seed);
    size_t dims = sum.rank();
    for (size_t k = 1; k < lp.points.size(); ++k) {
      GWClass next = local_degree_direct(lp.polys, lp.points[k], lp.seed);
      dims += next.rank();
      sum = sum + next;
    }
    CHECK(dims == total.algebra_dim);
    CHECK(gw_equal(sum, total.cls) == Verdict::equal);
  }
}

TEST_CASE("rank factors through the residue degree") {
  for (const char* name :
       {"sq_i.gwdeg", "cube2.gwdeg", "quart2.gwdeg", "plane_quad.gwdeg", "sym2.gwdeg",
        "mult_quadratic.gwdeg", "mult5_sq.gwdeg", "ext_base.gwdeg"}) {
    CAPTURE(name);
    LoadedProblem lp = fixture(name);
    const PointSpec& p = lp.points[0];
    PipelineOutcome out = local_degree_trace_full(lp.polys, p, lp.seed);
    size_t d = TransferContext::make(lp.field, p.residue_field).degree();
    CHECK(out.local_dim == d * out.inner_local_dim);
    PipelineOutcome direct = local_degree_direct_full(lp.polys, p, lp.seed);
    CHECK(direct.local_dim == out.local_dim);
  }
}

TEST_CASE("global outcome of a split quadratic") {
  VarList vars = make_vars({"x"});
  auto f = sys(q(), vars, {"x^2 - 1"});
  GlobalOutcome total = global_degree_full(f);
  CHECK(total.algebra_dim == 2);
  CHECK(total.inv.rank == 2);
  CHECK(total.inv.det_square_class.base_value() == Rational(-1));
  CHECK(total.inv.signature.value() == 0);
}
