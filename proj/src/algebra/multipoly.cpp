#include "quatroid/algebra/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quat {

MultiPoly MultiPoly::variable(int nvars, int i) {
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  return monomial(Exponent(nvars, 0), c);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent length");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.nvars_, b.nvars_));
  out.names_ = a.names_.empty() ? b.names_ : a.names_;
  MultiPoly::Exponent e(out.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < out.nvars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(nvars_);
  out.names_ = names_;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& g) const {
  if (g.is_zero()) throw std::domain_error("MultiPoly: division by zero");
  // a single divisor is a Groebner basis of its ideal, so a nonzero
  // remainder in any term order means g does not divide
  const auto& [lg, lc] = *g.terms_.rbegin();
  MultiPoly r = *this;
  MultiPoly q(nvars_);
  q.names_ = names_;
  while (!r.is_zero()) {
    const auto [lr, cr] = *r.terms_.rbegin();
    Exponent e(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      e[v] = lr[v] - lg[v];
      if (e[v] < 0) return std::nullopt;
    }
    MultiPoly t = monomial(e, cr / lc);
    q += t;
    r -= t * g;
  }
  return q;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (a < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    bool constant = true;
    for (int x : e) constant = constant && x == 0;
    if (a != 1 || constant) os << a;
    bool need_star = a != 1;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << (v < static_cast<int>(names_.size()) ? names_[v] : "x" + std::to_string(v));
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace quat
