#include "gwdeg/unipoly.hpp"

namespace gwdeg {

namespace {
void check_field(const UniPoly& a, const UniPoly& b) {
  if (a.field() != b.field())
    fail(Errc::descriptor_mismatch, "univariate polynomials over different fields");
}
}  // namespace

UniPoly::UniPoly(const FieldDescriptor& f, std::vector<FieldElement> coeffs)
    : field_(f), c_(std::move(coeffs)) {
  for (const auto& x : c_)
    if (x.field() != field_)
      fail(Errc::descriptor_mismatch, "coefficient field mismatch");
  normalize();
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldDescriptor& f, const FieldElement& c) {
  return UniPoly(f, std::vector<FieldElement>{c});
}

UniPoly UniPoly::variable(const FieldDescriptor& f) {
  return UniPoly(f, {FieldElement::zero(f), FieldElement::one(f)});
}

UniPoly UniPoly::from_base(const FieldDescriptor& f, const std::vector<Rational>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.push_back(FieldElement::from_base(f, q));
  return UniPoly(f, std::move(c));
}

FieldElement UniPoly::leading() const {
  hard_check(!c_.empty(), "leading coefficient of zero polynomial");
  return c_.back();
}

FieldElement UniPoly::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : FieldElement::zero(field_);
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  check_field(*this, o);
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), FieldElement::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<FieldElement> r(c_.size(), FieldElement::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  check_field(*this, o);
  if (c_.empty() || o.c_.empty()) return UniPoly(field_);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, FieldElement::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
  std::vector<FieldElement> r(c_.size(), FieldElement::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::monic() const {
  hard_check(!c_.empty(), "monic normalization of zero polynomial");
  return scaled(c_.back().inverse());
}

UniPoly UniPoly::pow(unsigned long e) const {
  UniPoly acc = constant(field_, FieldElement::one(field_));
  UniPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool UniPoly::operator==(const UniPoly& o) const {
  return field_ == o.field_ && c_ == o.c_;
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(field_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<FieldElement> r(c_.size() - 1, FieldElement::zero(field_));
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * FieldElement::from_integer(field_, static_cast<long>(i));
  return UniPoly(field_, std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string cs = c_[k].to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    bool composite = cs.find(' ') != std::string::npos;
    if (first) {
      first = false;
      if (negative && !composite) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      if (negative && !composite) {
        out += " - ";
        cs = cs.substr(1);
      } else {
        out += " + ";
      }
    }
    if (composite) cs = "(" + cs + ")";
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  const FieldDescriptor& f = a.field();
  std::vector<FieldElement> rem(a.coeffs());
  std::vector<FieldElement> quo(
      rem.size() >= b.coeffs().size() ? rem.size() - b.coeffs().size() + 1 : 0,
      FieldElement::zero(f));
  const FieldElement lead_inv = b.leading().inverse();
  while (rem.size() >= b.coeffs().size() && !rem.empty()) {
    size_t shift = rem.size() - b.coeffs().size();
    FieldElement c = rem.back() * lead_inv;
    quo[shift] = c;
    for (size_t i = 0; i < b.coeffs().size(); ++i)
      rem[i + shift] = rem[i + shift] - c * b.coeffs()[i];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  q = UniPoly(f, std::move(quo));
  r = UniPoly(f, std::move(rem));
}

UniPoly mod(const UniPoly& a, const UniPoly& b) {
  UniPoly q(a.field()), r(a.field());
  divmod(a, b, q, r);
  return r;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = mod(a, b);
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

void poly_ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& u, UniPoly& v) {
  const FieldDescriptor& f = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(f, FieldElement::one(f)), u1 = UniPoly::zero(f);
  UniPoly v0 = UniPoly::zero(f), v1 = UniPoly::constant(f, FieldElement::one(f));
  while (!r1.is_zero()) {
    UniPoly q(f), r(f);
    divmod(r0, r1, q, r);
    UniPoly u2 = u0 - q * u1;
    UniPoly v2 = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  hard_check(!r0.is_zero(), "ext gcd of two zero polynomials");
  FieldElement s = r0.leading().inverse();
  g = r0.scaled(s);
  u = u0.scaled(s);
  v = v0.scaled(s);
}

}  // namespace gwdeg
