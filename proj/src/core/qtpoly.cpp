#include "core/qtpoly.hpp"

namespace hk {

void QtPoly::add_term(const Key& k, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QtPoly QtPoly::constant(const Int& c) { return monomial(c, 0, 0); }

QtPoly QtPoly::monomial(const Int& c, int64_t qe, int64_t te) {
  require(qe >= 0 && te >= 0, "negative exponent");
  QtPoly p;
  p.add_term({qe, te}, c);
  return p;
}

Int QtPoly::coeff(int64_t qe, int64_t te) const {
  auto it = terms_.find({qe, te});
  return it == terms_.end() ? Int(0) : it->second;
}

int64_t QtPoly::q_degree() const {
  int64_t d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int64_t QtPoly::t_degree() const {
  int64_t d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
  QtPoly r = *this;
  r += o;
  return r;
}

QtPoly QtPoly::operator-(const QtPoly& o) const {
  QtPoly r = *this;
  r -= o;
  return r;
}

QtPoly QtPoly::operator-() const {
  QtPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

QtPoly& QtPoly::operator+=(const QtPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QtPoly& QtPoly::operator-=(const QtPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QtPoly QtPoly::operator*(const QtPoly& o) const {
  QtPoly r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  return r;
}

QtPoly& QtPoly::operator*=(const QtPoly& o) {
  *this = *this * o;
  return *this;
}

QtPoly QtPoly::div_exact(const QtPoly& d) const {
  require(!d.is_zero(), "division by zero polynomial");
  QtPoly rem = *this, quot;
  const auto& dlead = *d.terms_.rbegin();  // lex-largest (qe, te)
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    int64_t qe = rlead.first.first - dlead.first.first;
    int64_t te = rlead.first.second - dlead.first.second;
    if (qe < 0 || te < 0 || rlead.second % dlead.second != 0)
      throw ConsistencyError("polynomial division left a remainder");
    QtPoly m = monomial(rlead.second / dlead.second, qe, te);
    quot += m;
    rem -= m * d;
  }
  return quot;
}

static Int int_pow(const Int& b, int64_t e) {
  if (b == 1 || e == 0) return 1;
  Int r = 1, base = b;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Int QtPoly::eval(const Int& qv, const Int& tv) const {
  Int s = 0;
  for (const auto& [k, c] : terms_)
    s += c * int_pow(qv, k.first) * int_pow(tv, k.second);
  return s;
}

QtPoly QtPoly::subst_t(const Int& tv) const {
  QtPoly r;
  for (const auto& [k, c] : terms_)
    r.add_term({k.first, 0}, c * int_pow(tv, k.second));
  return r;
}

QtPoly QtPoly::subst_q(const Int& qv) const {
  QtPoly r;
  for (const auto& [k, c] : terms_)
    r.add_term({0, k.second}, c * int_pow(qv, k.first));
  return r;
}

QtPoly QtPoly::swap_variables() const {
  QtPoly r;
  for (const auto& [k, c] : terms_) r.add_term({k.second, k.first}, c);
  return r;
}

QtPoly QtPoly::scale_t_exponents(int64_t m) const {
  require(m >= 1, "exponent scale must be positive");
  QtPoly r;
  for (const auto& [k, c] : terms_) r.add_term({k.first, k.second * m}, c);
  return r;
}

std::string QtPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    auto var = [&](const char* name, int64_t e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    var("q", k.first);
    var("t", k.second);
    if (vars.empty()) {
      s += a.str();
    } else {
      if (a != 1) s += a.str() + "*";
      s += vars;
    }
  }
  return s;
}

QtPoly operator*(const Int& c, const QtPoly& p) {
  return QtPoly::constant(c) * p;
}

}  // namespace hk
