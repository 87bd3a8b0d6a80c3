#include "gwmirror/multipoly.hpp"

#include "gwmirror/errors.hpp"

namespace gwmirror {

namespace {

std::size_t slot(PolyVar var, std::size_t nvars) {
  switch (var.kind) {
    case PolyVar::Kind::kX:
      if (var.index >= nvars) throw UsageError("MultiPoly: x index out of range");
      return var.index;
    case PolyVar::Kind::kT:
      return nvars;
    case PolyVar::Kind::kZ:
      return nvars + 1;
  }
  return nvars;
}

}  // namespace

MultiPoly::MultiPoly(std::size_t nvars, unsigned xdeg_max) : nvars_(nvars), xdeg_max_(xdeg_max) {}

MultiPoly MultiPoly::constant(const BigRat& c, std::size_t nvars, unsigned xdeg_max) {
  MultiPoly p(nvars, xdeg_max);
  p.add_term(Monomial(nvars + 2, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(PolyVar var, std::size_t nvars, unsigned xdeg_max) {
  MultiPoly p(nvars, xdeg_max);
  Monomial m(nvars + 2, 0);
  m[slot(var, nvars)] = 1;
  p.add_term(m, BigRat(1));
  return p;
}

BigRat MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRat(0) : it->second;
}

unsigned MultiPoly::x_degree(const Monomial& m) const {
  unsigned deg = 0;
  for (std::size_t i = 0; i < nvars_; ++i) deg += m[i];
  return deg;
}

void MultiPoly::add_term(const Monomial& m, const BigRat& c) {
  if (m.size() != nvars_ + 2) throw UsageError("MultiPoly: monomial has wrong length");
  if (c.is_zero() || x_degree(m) > xdeg_max_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::x_constant_part() const {
  MultiPoly out(nvars_, xdeg_max_);
  for (const auto& [m, c] : terms_) {
    if (x_degree(m) == 0) out.terms_.emplace(m, c);
  }
  return out;
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
  if (o.nvars_ != nvars_ || o.xdeg_max_ != xdeg_max_) {
    throw UsageError("MultiPoly: operands live in different truncated rings");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly out(a.nvars_, a.xdeg_max_);
  // Bucket b by x-degree so pairs past the truncation are never formed.
  std::vector<std::vector<const std::pair<const Monomial, BigRat>*>> by_deg(a.xdeg_max_ + 1);
  for (const auto& term : b.terms_) by_deg[b.x_degree(term.first)].push_back(&term);

  Monomial m(a.nvars_ + 2);
  for (const auto& [ma, ca] : a.terms_) {
    const unsigned da = a.x_degree(ma);
    for (unsigned db = 0; da + db <= a.xdeg_max_; ++db) {
      for (const auto* tb : by_deg[db]) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + tb->first[i];
        out.add_term(m, ca * tb->second);
      }
    }
  }
  return out;
}

std::string MultiPoly::term_to_string(const Monomial& m, const BigRat& c) const {
  std::string vars;
  auto put = [&](const std::string& name, unsigned e) {
    if (e == 0) return;
    if (!vars.empty()) vars += "·";
    vars += name;
    if (e > 1) vars += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < nvars_; ++i) put("x" + std::to_string(i + 1), m[i]);
  put("t", m[nvars_]);
  put("z", m[nvars_ + 1]);
  return vars.empty() ? c.to_string() : c.to_string() + " · " + vars;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += term_to_string(m, c);
  }
  return out;
}

MultiPoly partial(const MultiPoly& p, PolyVar var) {
  const std::size_t s = slot(var, p.nvars());
  MultiPoly out(p.nvars(), p.xdeg_max());
  for (const auto& [m, c] : p.terms()) {
    if (m[s] == 0) continue;
    Monomial dm = m;
    --dm[s];
    out.add_term(dm, c * BigRat(static_cast<long>(m[s])));
  }
  return out;
}

MultiPoly log(const MultiPoly& p) {
  const MultiPoly one = MultiPoly::constant(BigRat(1), p.nvars(), p.xdeg_max());
  if (!(p.x_constant_part() == one)) {
    throw DomainError("MultiPoly log: x-constant part must be exactly 1, got " +
                      p.x_constant_part().to_string());
  }
  // u has x-degree >= 1, so u^m vanishes once m > xdeg_max.
  const MultiPoly u = p - one;
  MultiPoly power = u;
  MultiPoly sum(p.nvars(), p.xdeg_max());
  for (unsigned m = 1; m <= p.xdeg_max() && !power.is_zero(); ++m) {
    const long sign = (m % 2 == 1) ? 1 : -1;
    sum += power * BigRat(sign, static_cast<long>(m));
    power = power * u;
  }
  return sum;
}

MultiPoly exp(const MultiPoly& p) {
  if (!p.x_constant_part().is_zero()) {
    throw DomainError("MultiPoly exp: argument has x-degree-0 terms");
  }
  MultiPoly term = MultiPoly::constant(BigRat(1), p.nvars(), p.xdeg_max());
  MultiPoly sum = term;
  for (unsigned m = 1; m <= p.xdeg_max(); ++m) {
    term = term * p * BigRat(1, static_cast<long>(m));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace gwmirror
