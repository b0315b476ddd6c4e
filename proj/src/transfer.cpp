#include "gwdeg/transfer.hpp"

namespace gwdeg {

TransferContext TransferContext::make(FieldDescriptor lower, FieldDescriptor upper) {
  if (upper == lower) return TransferContext(std::move(lower), std::move(upper), 1);
  if (lower.is_base_only() && !upper.is_base_only() && lower.base() == upper.base()) {
    size_t d = upper.degree();
    return TransferContext(std::move(lower), std::move(upper), d);
  }
  fail(Errc::incompatible_fields, "transfer requires upper == lower or a single-step "
                                  "extension of the lower field's base");
}

GramMatrix trace_form(const GramMatrix& upper_form, const TransferContext& ctx) {
  const Matrix& G = upper_form.mat;
  if (G.field() != ctx.upper())
    fail(Errc::descriptor_mismatch, "form is not over the context's upper field");
  if (!G.is_symmetric()) fail(Errc::invalid_input, "trace form needs a symmetric input");

  if (ctx.degree() == 1 && ctx.upper() == ctx.lower())
    return upper_form;  // identity transfer

  const size_t d = ctx.degree();
  const size_t m = G.rows();
  Matrix out(ctx.lower(), d * m, d * m);
  FieldElement gen = FieldElement::generator(ctx.upper());
  // Powers g^0 .. g^(2d-2) once.
  std::vector<FieldElement> pw{FieldElement::one(ctx.upper())};
  for (size_t k = 1; k <= 2 * d - 2; ++k) pw.push_back(pw.back() * gen);

  for (size_t a = 0; a < d; ++a)
    for (size_t i = 0; i < m; ++i)
      for (size_t b = 0; b < d; ++b)
        for (size_t j = 0; j < m; ++j) {
          FieldElement e = pw[a + b] * G.at(i, j);
          out.at(a * m + i, b * m + j) =
              FieldElement::from_base(ctx.lower(), trace_to_base(e));
        }

  std::vector<std::string> labels;
  labels.reserve(d * m);
  const std::string g = ctx.upper().generator();
  for (size_t a = 0; a < d; ++a)
    for (size_t i = 0; i < m; ++i) {
      std::string up = i < upper_form.basis_labels.size()
                           ? upper_form.basis_labels[i]
                           : "v" + std::to_string(i + 1);
      std::string power = a == 0 ? "1" : (a == 1 ? g : g + "^" + std::to_string(a));
      labels.push_back(power + "(x)" + up);
    }
  return GramMatrix{std::move(out), std::move(labels)};
}

GWClass transfer_class(const GWClass& upper_class, const TransferContext& ctx) {
  if (upper_class.field() != ctx.upper())
    fail(Errc::descriptor_mismatch, "class is not over the context's upper field");
  if (ctx.degree() == 1 && ctx.upper() == ctx.lower()) return upper_class;

  const size_t r = upper_class.rank();
  Matrix G(ctx.upper(), r, r);
  for (size_t i = 0; i < r; ++i) G.at(i, i) = upper_class.diagonal()[i];
  GramMatrix down = trace_form(GramMatrix{std::move(G), {}}, ctx);
  return diagonalize(down).cls;
}

}  // namespace gwdeg
