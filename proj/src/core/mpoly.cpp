#include "core/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace hk {

MPoly::MPoly(int nvars) : nvars_(nvars) {
  require(nvars >= 0, "negative variable count");
}

void MPoly::add_term(const std::vector<int>& e, const Int& c) {
  require(static_cast<int>(e.size()) == nvars_, "exponent vector length mismatch");
  if (c == 0) return;
  for (int x : e) require(x >= 0, "negative exponent");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::constant(int nvars, const Int& c) {
  MPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

MPoly MPoly::monomial(std::vector<int> exponents, const Int& c) {
  MPoly p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  require(i >= 1 && i <= nvars, "variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

Int MPoly::coeff(const std::vector<int>& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -2;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d == -2) d = s;
    else if (d != s) return false;
  }
  return true;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) p.add_term(e, c);
  return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require(nvars_ == o.nvars_, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require(nvars_ == o.nvars_, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
  require(nvars_ == o.nvars_, "variable count mismatch");
  MPoly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MPoly MPoly::apply_permutation(const Permutation& w) const {
  require(w.n() == nvars_, "permutation size mismatch");
  MPoly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [e1, c] : terms_) {
    for (int j = 1; j <= nvars_; ++j) e[w(j) - 1] = e1[j - 1];
    r.add_term(e, c);
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
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
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      s += a.str();
    } else {
      if (a != 1) s += a.str() + "*";
      s += vars;
    }
  }
  return s;
}

namespace {

// Shared three-case kernel; bar drops the k = a term when a >= b and adds
// the k = a one when a < b, matching pibar = pi - 1 monomial by monomial.
MPoly demazure_impl(int i, const MPoly& f, bool bar) {
  int n = f.nvars();
  require(i >= 1 && i < n, "operator index out of range");
  MPoly r(n);
  std::vector<int> e(n);
  for (const auto& [e1, c] : f.terms()) {
    int a = e1[i - 1], b = e1[i];
    e = e1;
    if (a >= b) {
      int hi = bar ? a - 1 : a;
      for (int k = b; k <= hi; ++k) {
        e[i - 1] = k;
        e[i] = a + b - k;
        r.add_term(e, c);
      }
    } else {
      int lo = bar ? a : a + 1;
      for (int k = lo; k <= b - 1; ++k) {
        e[i - 1] = k;
        e[i] = a + b - k;
        r.add_term(e, -c);
      }
    }
  }
  return r;
}

}  // namespace

MPoly demazure(int i, const MPoly& f) { return demazure_impl(i, f, false); }

MPoly demazure_bar(int i, const MPoly& f) { return demazure_impl(i, f, true); }

MPoly demazure_word(const Permutation& w, const MPoly& f) {
  std::vector<int> word = w.reduced_word();
  MPoly r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure(*it, r);
  return r;
}

MPoly demazure_bar_word(const Permutation& w, const MPoly& f) {
  std::vector<int> word = w.reduced_word();
  MPoly r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure_bar(*it, r);
  return r;
}

MPoly x_descent_set(int nvars, const std::vector<int>& s) {
  std::vector<int> e(nvars, 0);
  for (int i : s) {
    require(i >= 1 && i < nvars, "descent outside 1..n-1");
    for (int j = 0; j < i; ++j) ++e[j];
  }
  return MPoly::monomial(std::move(e));
}

MPoly descent_monomial(const Permutation& w) {
  std::vector<int> e(w.n(), 0);
  for (int i : w.descents())
    for (int j = 1; j <= i; ++j) ++e[w(j) - 1];
  return MPoly::monomial(std::move(e));
}

MPoly elementary_symmetric(int nvars, int r) {
  std::vector<int> all(nvars);
  std::iota(all.begin(), all.end(), 1);
  return elementary_symmetric_subset(nvars, r, all);
}

MPoly elementary_symmetric_subset(int nvars, int r, const std::vector<int>& s) {
  require(r >= 0, "negative degree");
  for (int i : s) require(i >= 1 && i <= nvars, "subset index out of range");
  MPoly p(nvars);
  int m = static_cast<int>(s.size());
  if (r > m) return p;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> e(nvars, 0);
    for (int k : idx) e[s[k] - 1] = 1;
    p.add_term(e, 1);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return p;
}

MPoly complete_homogeneous_subset(int nvars, int r, const std::vector<int>& s) {
  require(r >= 0, "negative degree");
  for (int i : s) require(i >= 1 && i <= nvars, "subset index out of range");
  MPoly p(nvars);
  if (s.empty()) return r == 0 ? MPoly::constant(nvars, 1) : p;
  // Multisets of size r from s, enumerated by nondecreasing index sequences.
  std::vector<int> pick(r, 0);
  int m = static_cast<int>(s.size());
  while (true) {
    std::vector<int> e(nvars, 0);
    for (int k : pick) ++e[s[k] - 1];
    p.add_term(e, 1);
    int i = r - 1;
    while (i >= 0 && pick[i] == m - 1) --i;
    if (i < 0) break;
    int v = pick[i] + 1;
    for (int j = i; j < r; ++j) pick[j] = v;
  }
  return p;
}

MPoly monomial_symmetric(int nvars, const Partition& lam) {
  require(is_partition(lam), "monomial_symmetric: not a partition");
  require(static_cast<int>(lam.size()) <= nvars,
          "partition has more parts than variables");
  std::vector<int> e(lam.rbegin(), lam.rend());
  e.insert(e.begin(), nvars - lam.size(), 0);
  MPoly p(nvars);
  do {
    p.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

bool prec_less(const std::vector<int>& d, const std::vector<int>& e) {
  std::vector<int> ld(d.rbegin(), d.rend()), le(e.rbegin(), e.rend());
  std::sort(ld.rbegin(), ld.rend());
  std::sort(le.rbegin(), le.rend());
  return ld < le;
}

bool ts_less(const std::vector<int>& d, const std::vector<int>& e) {
  std::vector<int> ld = d, le = e;
  std::sort(ld.rbegin(), ld.rend());
  std::sort(le.rbegin(), le.rend());
  if (ld != le) return ld < le;
  return d < e;
}

PPartitionEncoding p_partition_encode(const std::vector<int>& d) {
  int n = static_cast<int>(d.size());
  for (int x : d) require(x >= 0, "entries must be nonnegative");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return d[i] > d[j]; });
  std::vector<int> label(n);  // label[pos], 1-based labels
  for (int k = 0; k < n; ++k) label[order[k]] = k + 1;

  std::vector<int> gamma(n, 0);
  // order[t-1] is the position of label t; walk labels downward.
  for (int t = n - 1; t >= 1; --t) {
    int pos = order[t - 1], next = order[t];
    gamma[pos] = gamma[next] + (pos < next ? 0 : 1);
  }
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) {
    mu[i] = d[i] - gamma[i];
    check(mu[i] >= 0, "p-partition encoding produced a negative part");
  }
  PPartitionEncoding out;
  out.sigma = Permutation(label);
  out.gamma = std::move(gamma);
  out.mu = std::move(mu);
  return out;
}

}  // namespace hk
