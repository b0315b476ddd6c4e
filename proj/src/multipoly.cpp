#include "gwdeg/multipoly.hpp"

#include <algorithm>

namespace gwdeg {

Monomial::Monomial(std::vector<unsigned> exps) : e_(std::move(exps)), total_(0) {
  for (unsigned x : e_) total_ += x;
}

Monomial Monomial::operator*(const Monomial& o) const {
  hard_check(e_.size() == o.e_.size(), "monomial arity mismatch");
  std::vector<unsigned> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  hard_check(e_.size() == o.e_.size(), "monomial arity mismatch");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  hard_check(o.divides(*this), "inexact monomial division");
  std::vector<unsigned> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - o.e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::lcm_with(const Monomial& o) const {
  hard_check(e_.size() == o.e_.size(), "monomial arity mismatch");
  std::vector<unsigned> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
  return Monomial(std::move(r));
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<size_t> perm)
    : kind_(kind), perm_(std::move(perm)) {}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  hard_check(a.nvars() == b.nvars(), "monomial arity mismatch");
  const size_t n = a.nvars();
  auto exp = [&](const Monomial& m, size_t i) -> unsigned {
    return perm_.empty() ? m[i] : m[perm_[i]];
  };
  if (kind_ == Kind::lex) {
    for (size_t i = 0; i < n; ++i) {
      if (exp(a, i) != exp(b, i)) return exp(a, i) < exp(b, i);
    }
    return false;
  }
  // grevlex: total degree first, then the last differing permuted exponent
  // decides, reversed.
  if (a.total_degree() != b.total_degree())
    return a.total_degree() < b.total_degree();
  for (size_t i = n; i-- > 0;) {
    if (exp(a, i) != exp(b, i)) return exp(a, i) > exp(b, i);
  }
  return false;
}

std::string MonomialOrder::to_string() const {
  std::string s = kind_ == Kind::grevlex ? "grevlex" : "lex";
  if (!perm_.empty()) {
    s += "[";
    for (size_t i = 0; i < perm_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(perm_[i]);
    }
    s += "]";
  }
  return s;
}

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly MultiPoly::zero(const FieldDescriptor& f, VarList vars) {
  return MultiPoly(f, std::move(vars));
}

MultiPoly MultiPoly::constant(const FieldDescriptor& f, VarList vars, const FieldElement& c) {
  MultiPoly p(f, std::move(vars));
  p.add_term(Monomial(p.nvars()), c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldDescriptor& f, VarList vars, size_t index) {
  MultiPoly p(f, std::move(vars));
  hard_check(index < p.nvars(), "variable index out of range");
  std::vector<unsigned> e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(Monomial(std::move(e)), FieldElement::one(f));
  return p;
}

MultiPoly MultiPoly::term(const FieldDescriptor& f, VarList vars, const Monomial& m,
                          const FieldElement& c) {
  MultiPoly p(f, std::move(vars));
  hard_check(m.nvars() == p.nvars(), "monomial arity mismatch");
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.field() != field_) fail(Errc::descriptor_mismatch, "coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  FieldElement s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = std::move(s);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

FieldElement MultiPoly::constant_value() const {
  Monomial one(nvars());
  auto it = terms_.find(one);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

namespace {
void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.field() != b.field())
    fail(Errc::descriptor_mismatch, "polynomials over different fields");
  if (a.vars() != b.vars() && *a.vars() != *b.vars())
    fail(Errc::descriptor_mismatch, "polynomials over different variable lists");
}
}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(*this, o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(*this, o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(*this, o);
  MultiPoly r(field_, vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  MultiPoly r(field_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly acc = constant(field_, vars_, FieldElement::one(field_));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return field_ == o.field_ && (vars_ == o.vars_ || *vars_ == *o.vars_) &&
         terms_ == o.terms_;
}

std::pair<Monomial, FieldElement> MultiPoly::leading_term(const MonomialOrder& order) const {
  hard_check(!terms_.empty(), "leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

MultiPoly MultiPoly::derivative(size_t var) const {
  hard_check(var < nvars(), "derivative variable out of range");
  MultiPoly r(field_, vars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[var];
    if (e == 0) continue;
    std::vector<unsigned> exps(nvars());
    for (size_t i = 0; i < nvars(); ++i) exps[i] = m[i];
    exps[var] -= 1;
    r.add_term(Monomial(std::move(exps)),
               c * FieldElement::from_integer(field_, static_cast<long>(e)));
  }
  return r;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point,
                                 const FieldDescriptor& target) const {
  if (point.size() != nvars()) fail(Errc::invalid_input, "evaluation arity mismatch");
  for (const auto& x : point)
    if (x.field() != target) fail(Errc::descriptor_mismatch, "point coordinate field mismatch");
  FieldElement acc = FieldElement::zero(target);
  for (const auto& [m, c] : terms_) {
    FieldElement t = embed(c, target);
    for (size_t i = 0; i < nvars(); ++i)
      if (m[i] > 0) t = t * point[i].pow(Integer(m[i]));
    acc = acc + t;
  }
  return acc;
}

std::string MultiPoly::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, FieldElement>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return order.greater(a->first, b->first); });
  std::string out;
  bool first = true;
  for (auto* t : ts) {
    const Monomial& m = t->first;
    std::string cs = t->second.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    bool composite = cs.find(' ') != std::string::npos;
    if (first) {
      first = false;
      if (negative && !composite) {
        out += "-";
        cs = cs.substr(1);
      }
    } else if (negative && !composite) {
      out += " - ";
      cs = cs.substr(1);
    } else {
      out += " + ";
    }
    if (composite) cs = "(" + cs + ")";
    std::string mono;
    for (size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly map_terms(const MultiPoly& p, const FieldDescriptor& f, VarList vars,
                    const std::vector<size_t>& index_map) {
  MultiPoly r(f, std::move(vars));
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> exps(r.nvars(), 0);
    for (size_t i = 0; i < p.nvars(); ++i) exps[index_map[i]] += m[i];
    r.add_term(Monomial(std::move(exps)), embed(c, f));
  }
  return r;
}

MultiPoly base_change(const MultiPoly& p, const FieldDescriptor& target) {
  std::vector<size_t> ident(p.nvars());
  for (size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  return map_terms(p, target, p.vars(), ident);
}

MultiPoly embed_vars(const MultiPoly& p, VarList new_vars, const std::vector<size_t>& index_map) {
  hard_check(index_map.size() == p.nvars(), "variable map arity mismatch");
  for (size_t i : index_map) hard_check(i < new_vars->size(), "variable map out of range");
  return map_terms(p, p.field(), std::move(new_vars), index_map);
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  check_compatible(num, den);
  if (den.is_zero()) fail(Errc::inexact_division, "division by the zero polynomial");
  MonomialOrder order;  // any admissible order works for exact division
  MultiPoly q = MultiPoly::zero(num.field(), num.vars());
  MultiPoly r = num;
  auto [dm, dc] = den.leading_term(order);
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading_term(order);
    if (!dm.divides(rm))
      fail(Errc::inexact_division, "polynomial division left a remainder");
    MultiPoly t = MultiPoly::term(num.field(), num.vars(), rm.divide_by(dm), rc / dc);
    q = q + t;
    r = r - t * den;
  }
  return q;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& values) {
  if (values.size() != p.nvars()) fail(Errc::invalid_input, "substitution arity mismatch");
  hard_check(!values.empty(), "substitution into a ring with no variables");
  const FieldDescriptor& f = values[0].field();
  const VarList& vars = values[0].vars();
  MultiPoly acc = MultiPoly::zero(f, vars);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(f, vars, embed(c, f));
    for (size_t i = 0; i < p.nvars(); ++i)
      if (m[i] > 0) t = t * values[i].pow(m[i]);
    acc = acc + t;
  }
  return acc;
}

}  // namespace gwdeg
