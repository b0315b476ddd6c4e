// Transfer of symmetric bilinear forms along a finite separable field
// extension L/k: composing a form over L with the field trace yields a form
// over k of rank [L:k] times the original.
#ifndef GWDEG_TRANSFER_HPP
#define GWDEG_TRANSFER_HPP

#include "gwdeg/gw_ring.hpp"

namespace gwdeg {

class TransferContext {
 public:
  // Valid shapes: upper == lower (identity transfer), or lower is a trivial
  // tower and upper extends the same base field.
  static TransferContext make(FieldDescriptor lower, FieldDescriptor upper);

  const FieldDescriptor& lower() const { return lower_; }
  const FieldDescriptor& upper() const { return upper_; }
  // [upper : lower]
  size_t degree() const { return degree_; }

 private:
  TransferContext(FieldDescriptor lo, FieldDescriptor up, size_t d)
      : lower_(std::move(lo)), upper_(std::move(up)), degree_(d) {}
  FieldDescriptor lower_;
  FieldDescriptor upper_;
  size_t degree_;
};

// Gram matrix of the composed form on the power basis {g^a v_i}: entry
// ((a,i),(b,j)) is the trace of g^(a+b) G[i][j], with row index a*m + i.
GramMatrix trace_form(const GramMatrix& upper_form, const TransferContext& ctx);

// Transfer on diagonal classes: build the diagonal Gram matrix, compose with
// the trace, rediagonalize downstairs.
GWClass transfer_class(const GWClass& upper_class, const TransferContext& ctx);

}  // namespace gwdeg

#endif
