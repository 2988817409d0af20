#include "core/hecke.hpp"

#include <sstream>

namespace hk {

HeckeElement::HeckeElement(int n) : n_(n) { require(n >= 1, "n must be positive"); }

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement e(w.n());
  e.terms_[w] = Rat(1);
  return e;
}

HeckeElement HeckeElement::unit(int n) { return basis(Permutation::identity(n)); }

void HeckeElement::add_term(const Permutation& w, const Rat& c) {
  require(w.n() == n_, "permutation size mismatch");
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  require(n_ == o.n_, "size mismatch");
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  require(n_ == o.n_, "size mismatch");
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

HeckeElement HeckeElement::scale(const Rat& c) const {
  HeckeElement r(n_);
  if (c == 0) return r;
  for (const auto& [w, cw] : terms_) r.terms_[w] = cw * c;
  return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

HeckeElement HeckeElement::t_mul(int i) const {
  require(i >= 1 && i < n_, "generator index out of range");
  HeckeElement r(n_);
  for (const auto& [w, c] : terms_) {
    Permutation sw = w.left_mul_s(i);
    if (sw.inversions() > w.inversions()) {
      r.add_term(sw, c);
    } else {
      r.add_term(w, -c);
    }
  }
  return r;
}

HeckeElement HeckeElement::tprime_mul(int i) const { return t_mul(i) + *this; }

HeckeElement HeckeElement::tprime(const Permutation& w) {
  HeckeElement r = unit(w.n());
  std::vector<int> word = w.reduced_word();
  // w = s_{i_1} ... s_{i_k}; multiply T'_{i_k} first, T'_{i_1} last.
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = r.tprime_mul(*it);
  return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
  require(n_ == o.n_, "size mismatch");
  HeckeElement acc(n_);
  for (const auto& [u, c] : terms_) {
    HeckeElement part = o;
    std::vector<int> word = u.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) part = part.t_mul(*it);
    acc = acc + part.scale(c);
  }
  return acc;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.str() << "*";
    os << "T" << w.str();
  }
  return os.str();
}

}  // namespace hk
