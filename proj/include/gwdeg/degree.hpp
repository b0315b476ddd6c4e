// Local degree pipelines. The direct route localizes the residue pairing of
// k[x]/(f) at the point and diagonalizes it over k. The trace route base
// changes to the residue field L = k(p), localizes there at the canonical
// point above p, and carries the class back down along the field trace. Both
// land in the same ring of classes over k and agree; deciding that equality
// is the verification entry point.
#ifndef GWDEG_DEGREE_HPP
#define GWDEG_DEGREE_HPP

#include "gwdeg/transfer.hpp"

namespace gwdeg {

// Checks shape (as many polynomials as variables, coordinates in the residue
// field, a residue field that is the ambient field or extends its base),
// membership f(p) = 0, and that the coordinates generate the whole declared
// residue field.
void validate_point(const std::vector<MultiPoly>& f, const PointSpec& p);

// The point above p with residue field equal to the new ambient field L =
// k(p): same coordinates, now read over L.
PointSpec canonical_point(const PointSpec& p);

struct PipelineOutcome {
  GWClass cls;
  GWInvariants inv;
  size_t local_dim;       // rank of the class; equals the local multiplicity
  size_t inner_local_dim; // multiplicity upstairs (same as local_dim if direct)
  std::string separating_form_text;
  size_t ambient_dim;     // dimension of the algebra that was localized
};

PipelineOutcome local_degree_direct_full(const std::vector<MultiPoly>& f,
                                         const PointSpec& p, uint64_t seed);
PipelineOutcome local_degree_trace_full(const std::vector<MultiPoly>& f,
                                        const PointSpec& p, uint64_t seed);
GWClass local_degree_direct(const std::vector<MultiPoly>& f, const PointSpec& p,
                            uint64_t seed = 0);
GWClass local_degree_trace(const std::vector<MultiPoly>& f, const PointSpec& p,
                           uint64_t seed = 0);

struct VerifyResult {
  PipelineOutcome direct;
  PipelineOutcome trace;
  Verdict verdict;
};

// Runs both pipelines independently and decides equality of the two classes.
VerifyResult verify_trace_theorem(const std::vector<MultiPoly>& f, const PointSpec& p,
                                  uint64_t seed);

// <det Jf(p)> over the residue field; throws Errc::zero_jacobian when the
// Jacobian determinant vanishes at p.
GWClass jacobian_class(const std::vector<MultiPoly>& f, const PointSpec& p);

struct GlobalOutcome {
  GWClass cls;
  GWInvariants inv;
  size_t algebra_dim;
};

// The residue pairing class of the whole finite algebra k[x]/(f).
GlobalOutcome global_degree_full(const std::vector<MultiPoly>& f);
GWClass global_degree(const std::vector<MultiPoly>& f);

}  // namespace gwdeg

#endif
