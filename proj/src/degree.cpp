#include "gwdeg/degree.hpp"

#include <random>

namespace gwdeg {

namespace {

void check_square_system(const std::vector<MultiPoly>& f) {
  if (f.empty()) fail(Errc::invalid_input, "no polynomials");
  for (const auto& fi : f) {
    if (fi.field() != f[0].field())
      fail(Errc::descriptor_mismatch, "polynomials over different fields");
    if (*fi.vars() != *f[0].vars())
      fail(Errc::descriptor_mismatch, "polynomials over different variable lists");
  }
  if (f.size() != f[0].nvars())
    fail(Errc::invalid_input, "need exactly as many polynomials as variables");
}

// Largest residue degree reachable by linear combinations of the coordinates;
// the declared residue field must be attained by some candidate.
void check_residue_generation(const PointSpec& p) {
  const FieldDescriptor& R = p.residue_field;
  const size_t want = R.degree();
  if (want == 1) return;
  const size_t n = p.coords.size();
  std::mt19937_64 rng(0x5eed5eedULL);
  for (size_t k = 0; k < 32; ++k) {
    FieldElement v = FieldElement::zero(R);
    if (k < n) {
      v = p.coords[k];
    } else {
      for (size_t i = 0; i < n; ++i) {
        long c = static_cast<long>(rng() % 7) - 3;
        if (c != 0)
          v = v + p.coords[i] * FieldElement::from_integer(R, c);
      }
    }
    if (min_poly_of(v).size() - 1 == want) return;
  }
  fail(Errc::residue_field_mismatch,
       "coordinates do not generate the declared residue field " + R.to_string());
}

}  // namespace

void validate_point(const std::vector<MultiPoly>& f, const PointSpec& p) {
  check_square_system(f);
  const FieldDescriptor& K = f[0].field();
  const FieldDescriptor& R = p.residue_field;
  if (p.coords.size() != f[0].nvars())
    fail(Errc::invalid_input, "point arity does not match the variable count");
  for (const auto& c : p.coords)
    if (c.field() != R)
      fail(Errc::descriptor_mismatch, "point coordinate outside the residue field");
  if (!(R == K)) {
    if (!(K.is_base_only() && K.base() == R.base()))
      fail(Errc::incompatible_fields,
           "residue field " + R.to_string() + " does not extend " + K.to_string());
    check_residue_generation(p);
  }
  for (size_t i = 0; i < f.size(); ++i) {
    FieldElement v = f[i].evaluate(p.coords, R);
    if (!v.is_zero())
      fail(Errc::not_a_zero, "the point is not a zero: polynomial " +
                                 std::to_string(i + 1) + " evaluates to " + v.to_string());
  }
}

PointSpec canonical_point(const PointSpec& p) {
  return PointSpec{p.residue_field, p.coords};
}

PipelineOutcome local_degree_direct_full(const std::vector<MultiPoly>& f,
                                         const PointSpec& p, uint64_t seed) {
  validate_point(f, p);
  AlgebraPtr A = QuotientAlgebra::make(f, MonomialOrder());
  SeparatingForm sf = separating_form(A, p, seed);
  LocalFactor lf = localize(A, p, sf);
  GramMatrix gl = gram_local(f, *A, lf);
  Diagonalization d = diagonalize(gl);
  return PipelineOutcome{d.cls,          invariants(d.cls),
                         lf.local_dim,   lf.local_dim,
                         sf.form.to_string(), A->dim()};
}

PipelineOutcome local_degree_trace_full(const std::vector<MultiPoly>& f,
                                        const PointSpec& p, uint64_t seed) {
  validate_point(f, p);
  const FieldDescriptor& K = f[0].field();
  const FieldDescriptor& L = p.residue_field;
  TransferContext ctx = TransferContext::make(K, L);

  std::vector<MultiPoly> fL;
  fL.reserve(f.size());
  for (const auto& fi : f) fL.push_back(base_change(fi, L));
  PointSpec above = canonical_point(p);

  PipelineOutcome inner = local_degree_direct_full(fL, above, seed);
  GWClass down = transfer_class(inner.cls, ctx);
  return PipelineOutcome{down,
                         invariants(down),
                         ctx.degree() * inner.local_dim,
                         inner.local_dim,
                         inner.separating_form_text,
                         inner.ambient_dim};
}

GWClass local_degree_direct(const std::vector<MultiPoly>& f, const PointSpec& p,
                            uint64_t seed) {
  return local_degree_direct_full(f, p, seed).cls;
}

GWClass local_degree_trace(const std::vector<MultiPoly>& f, const PointSpec& p,
                           uint64_t seed) {
  return local_degree_trace_full(f, p, seed).cls;
}

VerifyResult verify_trace_theorem(const std::vector<MultiPoly>& f, const PointSpec& p,
                                  uint64_t seed) {
  PipelineOutcome direct = local_degree_direct_full(f, p, seed);
  PipelineOutcome trace = local_degree_trace_full(f, p, seed);
  Verdict v = gw_equal(direct.cls, trace.cls);
  return VerifyResult{std::move(direct), std::move(trace), v};
}

GWClass jacobian_class(const std::vector<MultiPoly>& f, const PointSpec& p) {
  validate_point(f, p);
  const size_t n = f.size();
  const FieldDescriptor& R = p.residue_field;
  Matrix J(R, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      J.at(i, j) = f[i].derivative(j).evaluate(p.coords, R);
  FieldElement det = J.det();
  if (det.is_zero())
    fail(Errc::zero_jacobian, "Jacobian determinant vanishes at the point");
  return GWClass::from_diagonal(R, {det});
}

GlobalOutcome global_degree_full(const std::vector<MultiPoly>& f) {
  check_square_system(f);
  AlgebraPtr A = QuotientAlgebra::make(f, MonomialOrder());
  GramMatrix G = gram_global(f, *A);
  Diagonalization d = diagonalize(G);
  return GlobalOutcome{d.cls, invariants(d.cls), A->dim()};
}

GWClass global_degree(const std::vector<MultiPoly>& f) {
  return global_degree_full(f).cls;
}

}  // namespace gwdeg
