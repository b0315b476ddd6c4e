#include "gwdeg/field.hpp"

#include <algorithm>
#include <cctype>

#include "scalar_poly.hpp"

namespace gwdeg {

namespace {

bool valid_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Pretty form of a constant-first coefficient vector in one variable.
std::string format_base_poly(const std::vector<Rational>& c, const std::string& var) {
  std::string out;
  bool first = true;
  for (size_t k = c.size(); k-- > 0;) {
    if (rat_is_zero(c[k])) continue;
    Rational a = c[k];
    bool negative = sgn(a) < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(a);
    if (k == 0) {
      out += rat_to_string(mag);
    } else {
      if (mag != 1) out += rat_to_string(mag) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  if (first) out = "0";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Irreducibility

namespace {

using spoly::Poly;

bool has_root_in_prime_field(const BaseField& F, const Poly& m) {
  const long p = F.characteristic();
  for (long x = 0; x < p; ++x)
    if (rat_is_zero(spoly::eval(F, m, Rational(x)))) return true;
  return false;
}

// Exhaustive scan over monic divisors of degree 2..deg/2.
bool has_proper_factor_in_prime_field(const BaseField& F, const Poly& m) {
  const long p = F.characteristic();
  const int deg = spoly::degree(m);
  for (int e = 2; e <= deg / 2; ++e) {
    std::vector<long> digits(e, 0);
    while (true) {
      Poly cand(e + 1);
      for (int i = 0; i < e; ++i) cand[i] = Rational(digits[i]);
      cand[e] = 1;
      if (spoly::is_zero(spoly::mod(F, m, cand))) return true;
      int pos = 0;
      while (pos < e && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == e) break;
    }
  }
  return false;
}

Cert irreducible_over_prime_field(const BaseField& F, const Poly& m) {
  const int deg = spoly::degree(m);
  if (deg == 1) return Cert::yes;
  if (spoly::degree(spoly::gcd(F, m, spoly::derivative(F, m))) >= 1) return Cert::no;
  if (has_root_in_prime_field(F, m)) return Cert::no;
  if (deg <= 3) return Cert::yes;
  return has_proper_factor_in_prime_field(F, m) ? Cert::no : Cert::yes;
}

// Divisors of |n|, ascending; gives up past the iteration cap.
bool positive_divisors(const Integer& n_in, std::vector<Integer>& out) {
  Integer n = abs(n_in);
  hard_check(n != 0, "divisor scan of zero");
  out.clear();
  std::vector<Integer> high;
  Integer i = 1;
  long iterations = 0;
  while (i * i <= n) {
    if (++iterations > 10'000'000) return false;
    if (n % i == 0) {
      out.push_back(i);
      Integer j = n / i;
      if (j != i) high.push_back(j);
    }
    ++i;
  }
  out.insert(out.end(), high.rbegin(), high.rend());
  return true;
}

// Content-free integer form of a monic rational polynomial.
Poly integral_form(const Poly& m) {
  Integer lcden = 1;
  for (const auto& c : m) lcden = lcm(lcden, Integer(c.get_den()));
  Poly P(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    P[i] = Rational(Integer(m[i].get_num() * (lcden / m[i].get_den())));
  Integer content = 0;
  for (const auto& c : P) content = gcd(content, Integer(c.get_num()));
  for (auto& c : P) c = Rational(Integer(c.get_num() / content));
  return P;
}

Cert irreducible_over_rationals(const BaseField& F, const Poly& m) {
  const int deg = spoly::degree(m);
  if (deg == 1) return Cert::yes;
  if (spoly::degree(spoly::gcd(F, m, spoly::derivative(F, m))) >= 1) return Cert::no;

  Poly P = integral_form(m);
  if (rat_is_zero(P[0])) return Cert::no;  // root at 0
  std::vector<Integer> rs, ss;
  bool scanned = positive_divisors(P[0].get_num(), rs) &&
                 positive_divisors(P.back().get_num(), ss);
  if (scanned) {
    for (const Integer& s : ss)
      for (const Integer& r : rs) {
        Rational cand(r, s);
        cand.canonicalize();
        if (rat_is_zero(spoly::eval(F, m, cand))) return Cert::no;
        if (rat_is_zero(spoly::eval(F, m, Rational(-cand)))) return Cert::no;
      }
    if (deg <= 3) return Cert::yes;
  } else if (deg <= 3) {
    return Cert::cannot_certify;  // root scan budget exhausted
  }

  // Reduction certificates: irreducible mod q for a good prime q suffices.
  static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  const Integer lead = P.back().get_num();
  const Integer constant = P[0].get_num();
  for (long q : primes) {
    if (lead % q == 0 || constant % q == 0) continue;
    BaseField Fq = BaseField::prime_field(q);
    Poly Pq(P.size());
    for (size_t i = 0; i < P.size(); ++i) Pq[i] = Fq.canon(P[i]);
    spoly::normalize(Fq, Pq);
    if (spoly::degree(Pq) != deg) continue;
    Pq = spoly::make_monic(Fq, Pq);
    if (irreducible_over_prime_field(Fq, Pq) == Cert::yes) return Cert::yes;
  }
  return Cert::cannot_certify;
}

}  // namespace

Cert is_irreducible(const std::vector<Rational>& monic_poly, const BaseField& base) {
  Poly m = monic_poly;
  spoly::normalize(base, m);
  if (spoly::degree(m) < 1) fail(Errc::invalid_input, "minimal polynomial must have degree >= 1");
  if (!base.is_one(m.back())) fail(Errc::invalid_input, "minimal polynomial must be monic");
  if (base.is_prime_field()) return irreducible_over_prime_field(base, m);
  return irreducible_over_rationals(base, m);
}

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor FieldDescriptor::base_only(BaseField base) {
  auto d = std::make_shared<Data>(Data{base, std::nullopt});
  return FieldDescriptor(std::move(d));
}

FieldDescriptor FieldDescriptor::extension(BaseField base, std::string generator,
                                           std::vector<Rational> min_poly) {
  if (!valid_symbol(generator))
    fail(Errc::invalid_input, "invalid generator name '" + generator + "'");
  spoly::normalize(base, min_poly);
  if (spoly::degree(min_poly) < 1)
    fail(Errc::invalid_input, "minimal polynomial must have degree >= 1");
  if (!base.is_one(min_poly.back()))
    fail(Errc::invalid_input, "minimal polynomial must be monic");
  Cert cert = is_irreducible(min_poly, base);
  if (cert == Cert::no)
    fail(Errc::min_poly_reducible,
         "minimal polynomial " + format_base_poly(min_poly, generator) + " is reducible over " +
             base.to_string());
  if (cert == Cert::cannot_certify)
    fail(Errc::cannot_certify,
         "cannot certify irreducibility of " + format_base_poly(min_poly, generator) + " over " +
             base.to_string());
  // Separability witness; automatic in characteristic 0 and for irreducibles
  // over F_p with p odd, but asserted anyway.
  spoly::Poly g = spoly::gcd(base, min_poly, spoly::derivative(base, min_poly));
  if (spoly::degree(g) != 0)
    fail(Errc::min_poly_reducible, "minimal polynomial is not separable");
  auto d = std::make_shared<Data>(
      Data{base, std::make_pair(std::move(generator), std::move(min_poly))});
  return FieldDescriptor(std::move(d));
}

size_t FieldDescriptor::degree() const {
  return data_->ext ? data_->ext->second.size() - 1 : 1;
}

const std::string& FieldDescriptor::generator() const {
  hard_check(data_->ext.has_value(), "generator of a base-only field");
  return data_->ext->first;
}

const std::vector<Rational>& FieldDescriptor::min_poly() const {
  hard_check(data_->ext.has_value(), "minimal polynomial of a base-only field");
  return data_->ext->second;
}

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
  if (data_ == o.data_) return true;
  if (!(data_->base == o.data_->base)) return false;
  if (data_->ext.has_value() != o.data_->ext.has_value()) return false;
  if (!data_->ext) return true;
  return data_->ext->first == o.data_->ext->first &&
         data_->ext->second == o.data_->ext->second;
}

std::string FieldDescriptor::to_string() const {
  if (is_base_only()) return base().to_string();
  return base().to_string() + "(" + generator() + "; " +
         format_base_poly(min_poly(), generator()) + ")";
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement()
    : field_(FieldDescriptor::base_only(BaseField::rationals())),
      coords_(1, Rational(0)) {}

FieldElement::FieldElement(FieldDescriptor f, std::vector<Rational> c)
    : field_(std::move(f)), coords_(std::move(c)) {}

FieldElement FieldElement::zero(const FieldDescriptor& f) {
  return FieldElement(f, std::vector<Rational>(f.degree(), Rational(0)));
}

FieldElement FieldElement::one(const FieldDescriptor& f) {
  std::vector<Rational> c(f.degree(), Rational(0));
  c[0] = f.base().canon(Rational(1));
  return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_base(const FieldDescriptor& f, const Rational& value) {
  std::vector<Rational> c(f.degree(), Rational(0));
  c[0] = f.base().canon(value);
  return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_integer(const FieldDescriptor& f, long value) {
  return from_base(f, Rational(value));
}

FieldElement FieldElement::generator(const FieldDescriptor& f) {
  hard_check(!f.is_base_only(), "generator element of a base-only field");
  std::vector<Rational> c(f.degree(), Rational(0));
  if (f.degree() == 1) {
    // Degree-one extension: the generator is the residue of its min poly root.
    c[0] = f.base().neg(f.min_poly()[0]);
  } else {
    c[1] = 1;
  }
  return FieldElement(f, std::move(c));
}

FieldElement FieldElement::make(const FieldDescriptor& f, std::vector<Rational> coords) {
  if (coords.size() != f.degree())
    fail(Errc::invalid_input, "coordinate vector length does not match field degree");
  for (auto& c : coords) c = f.base().canon(c);
  return FieldElement(f, std::move(coords));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (!rat_is_zero(c)) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (!field_.base().is_one(coords_[0])) return false;
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!rat_is_zero(coords_[i])) return false;
  return true;
}

bool FieldElement::is_base() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (!rat_is_zero(coords_[i])) return false;
  return true;
}

Rational FieldElement::base_value() const {
  hard_check(is_base(), "base_value of a non-base element");
  return coords_[0];
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field())
    fail(Errc::descriptor_mismatch, "elements of different fields: " +
                                        a.field().to_string() + " vs " +
                                        b.field().to_string());
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*this, o);
  std::vector<Rational> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = field_.base().add(coords_[i], o.coords_[i]);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(*this, o);
  std::vector<Rational> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = field_.base().sub(coords_[i], o.coords_[i]);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = field_.base().neg(coords_[i]);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*this, o);
  const BaseField& F = field_.base();
  if (field_.is_base_only() || field_.degree() == 1) {
    Rational prod = F.mul(coords_[0], o.coords_[0]);
    return FieldElement(field_, {std::move(prod)});
  }
  spoly::Poly a(coords_.begin(), coords_.end());
  spoly::Poly b(o.coords_.begin(), o.coords_.end());
  spoly::normalize(F, a);
  spoly::normalize(F, b);
  spoly::Poly r = spoly::mod(F, spoly::mul(F, a, b), field_.min_poly());
  r.resize(field_.degree(), Rational(0));
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  const BaseField& F = field_.base();
  if (field_.is_base_only() || field_.degree() == 1)
    return FieldElement(field_, {F.inv(coords_[0])});
  spoly::Poly a(coords_.begin(), coords_.end());
  spoly::normalize(F, a);
  spoly::Poly g, u, v;
  spoly::ext_gcd(F, a, field_.min_poly(), g, u, v);
  hard_check(spoly::degree(g) == 0, "nonunit element in a field");
  spoly::Poly r = spoly::mod(F, u, field_.min_poly());
  r.resize(field_.degree(), Rational(0));
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::pow(const Integer& e) const {
  hard_check(sgn(e) >= 0, "negative exponent in pow");
  FieldElement acc = one(field_);
  FieldElement base = *this;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return acc;
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * base;
    if (i + 1 < bits) base = base * base;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && coords_ == o.coords_;
}

std::string FieldElement::to_string() const {
  if (field_.is_base_only() || is_base()) return rat_to_string(coords_[0]);
  return format_base_poly(coords_, field_.generator());
}

int compare(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  for (size_t i = 0; i < a.coords().size(); ++i) {
    int c = cmp(a.coords()[i], b.coords()[i]);
    if (c != 0) return c;
  }
  return 0;
}

Rational trace_to_base(const FieldElement& x) {
  const FieldDescriptor& f = x.field();
  const size_t d = f.degree();
  if (d == 1 || f.is_base_only()) return x.coords()[0];
  const BaseField& F = f.base();
  Rational acc(0);
  FieldElement cur = x;
  FieldElement gen = FieldElement::generator(f);
  for (size_t j = 0; j < d; ++j) {
    acc = F.add(acc, cur.coords()[j]);
    if (j + 1 < d) cur = cur * gen;
  }
  return acc;
}

std::vector<Rational> min_poly_of(const FieldElement& x) {
  const FieldDescriptor& f = x.field();
  const BaseField& F = f.base();
  const size_t d = f.degree();
  // Power coordinates x^0 .. x^d as columns.
  std::vector<std::vector<Rational>> pw;
  FieldElement cur = FieldElement::one(f);
  for (size_t j = 0; j <= d; ++j) {
    pw.push_back(cur.coords());
    cur = cur * x;
  }
  // First D with x^D dependent on lower powers gives the minimal polynomial.
  for (size_t D = 1; D <= d; ++D) {
    // Solve [pw_0 .. pw_{D-1}] c = pw_D by elimination on the augmented matrix.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(D + 1));
    for (size_t i = 0; i < d; ++i) {
      for (size_t j = 0; j < D; ++j) m[i][j] = pw[j][i];
      m[i][D] = pw[D][i];
    }
    size_t row = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < D && row < d; ++col) {
      size_t sel = row;
      while (sel < d && F.is_zero(m[sel][col])) ++sel;
      if (sel == d) continue;
      std::swap(m[sel], m[row]);
      Rational piv_inv = F.inv(m[row][col]);
      for (size_t j = col; j <= D; ++j) m[row][j] = F.mul(m[row][j], piv_inv);
      for (size_t i = 0; i < d; ++i) {
        if (i == row || F.is_zero(m[i][col])) continue;
        Rational factor = m[i][col];
        for (size_t j = col; j <= D; ++j)
          m[i][j] = F.sub(m[i][j], F.mul(factor, m[row][j]));
      }
      pivot_col.push_back(col);
      ++row;
    }
    bool consistent = true;
    for (size_t i = row; i < d; ++i)
      if (!F.is_zero(m[i][D])) { consistent = false; break; }
    if (!consistent) continue;
    // Full column rank holds at the minimal D, so the solution reads off rows.
    std::vector<Rational> c(D, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = m[r][D];
    std::vector<Rational> mp(D + 1);
    for (size_t j = 0; j < D; ++j) mp[j] = F.neg(c[j]);
    mp[D] = F.canon(Rational(1));
    return mp;
  }
  fail(Errc::internal, "minimal polynomial search failed");
}

FieldElement embed(const FieldElement& x, const FieldDescriptor& target) {
  if (x.field() == target) return x;
  if (x.field().is_base_only() && x.field().base() == target.base())
    return FieldElement::from_base(target, x.coords()[0]);
  fail(Errc::incompatible_fields, "cannot embed element of " + x.field().to_string() +
                                      " into " + target.to_string());
}

}  // namespace gwdeg
