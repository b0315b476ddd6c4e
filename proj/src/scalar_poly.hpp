// Internal dense polynomial arithmetic over a BaseField. Coefficients are
// constant-first vectors of canonical scalars; the zero polynomial is the
// empty vector. Used by the field tower and irreducibility tests only.
#ifndef GWDEG_SCALAR_POLY_HPP
#define GWDEG_SCALAR_POLY_HPP

#include <vector>

#include "gwdeg/base_field.hpp"

namespace gwdeg::spoly {

using Poly = std::vector<Rational>;

inline void normalize(const BaseField& F, Poly& a) {
  for (auto& c : a) c = F.canon(c);
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline bool is_zero(const Poly& a) { return a.empty(); }

inline Poly add(const BaseField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  normalize(F, r);
  return r;
}

inline Poly sub(const BaseField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  normalize(F, r);
  return r;
}

inline Poly mul(const BaseField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  normalize(F, r);
  return r;
}

inline Poly scale(const BaseField& F, const Poly& a, const Rational& c) {
  Poly r = a;
  for (auto& x : r) x = F.mul(x, c);
  normalize(F, r);
  return r;
}

// Division with remainder; divisor must be nonzero.
inline void divmod(const BaseField& F, const Poly& a, const Poly& b, Poly& q,
                   Poly& r) {
  hard_check(!b.empty(), "polynomial division by zero");
  r = a;
  normalize(F, r);
  q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rational(0));
  const Rational lead_inv = F.inv(b.back());
  while (r.size() >= b.size() && !r.empty()) {
    const size_t shift = r.size() - b.size();
    const Rational c = F.mul(r.back(), lead_inv);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[i + shift] = F.sub(r[i + shift], F.mul(c, b[i]));
    while (!r.empty() && F.is_zero(r.back())) r.pop_back();
  }
  normalize(F, q);
}

inline Poly mod(const BaseField& F, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(F, a, b, q, r);
  return r;
}

inline Poly make_monic(const BaseField& F, const Poly& a) {
  hard_check(!a.empty(), "monic normalization of zero");
  return scale(F, a, F.inv(a.back()));
}

inline Poly gcd(const BaseField& F, Poly a, Poly b) {
  normalize(F, a);
  normalize(F, b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = make_monic(F, a);
  return a;
}

// g = gcd monic, with u*a + v*b = g.
inline void ext_gcd(const BaseField& F, const Poly& a, const Poly& b, Poly& g,
                    Poly& u, Poly& v) {
  Poly r0 = a, r1 = b;
  normalize(F, r0);
  normalize(F, r1);
  Poly u0 = {Rational(1)}, v0 = {}, u1 = {}, v1 = {Rational(1)};
  while (!r1.empty()) {
    Poly q, r;
    divmod(F, r0, r1, q, r);
    Poly u2 = sub(F, u0, mul(F, q, u1));
    Poly v2 = sub(F, v0, mul(F, q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  hard_check(!r0.empty(), "ext_gcd of two zero polynomials");
  const Rational s = F.inv(r0.back());
  g = scale(F, r0, s);
  u = scale(F, u0, s);
  v = scale(F, v0, s);
}

inline Rational eval(const BaseField& F, const Poly& a, const Rational& x) {
  Rational acc(0);
  for (size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return F.canon(acc);
}

inline Poly derivative(const BaseField& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = F.mul(a[i], Rational(static_cast<long>(i)));
  normalize(F, r);
  return r;
}

}  // namespace gwdeg::spoly

#endif
