#include "core/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace hk {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    require(v >= 1 && v <= static_cast<int>(img_.size()) && !seen[v],
            "not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  require(n >= 0, "identity: n must be nonnegative");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

Permutation Permutation::longest(int n) {
  require(n >= 0, "longest: n must be nonnegative");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i) + 1;
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

Permutation Permutation::operator*(const Permutation& o) const {
  require(n() == o.n(), "size mismatch in permutation product");
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[o.img_[i] - 1];
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int Permutation::inversions() const {
  int inv = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (size_t i = 0; i + 1 < img_.size(); ++i)
    if (img_[i] > img_[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

int Permutation::maj() const {
  int m = 0;
  for (int d : descents()) m += d;
  return m;
}

Composition Permutation::descent_composition() const {
  return Composition::from_descents(descents(), n());
}

Permutation Permutation::left_mul_s(int i) const {
  require(i >= 1 && i < n(), "generator index out of range");
  std::vector<int> v = img_;
  for (int& x : v) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

Permutation Permutation::right_mul_s(int i) const {
  require(i >= 1 && i < n(), "generator index out of range");
  std::vector<int> v = img_;
  std::swap(v[i - 1], v[i]);
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (true) {
    std::vector<int> d = w.descents();
    if (d.empty()) break;
    word.push_back(d[0]);
    w = w.right_mul_s(d[0]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

bool left_weak_leq(const Permutation& u, const Permutation& w) {
  require(u.n() == w.n(), "size mismatch in weak order comparison");
  Permutation t = w * u.inverse();
  return w.inversions() == u.inversions() + t.inversions();
}

std::vector<Permutation> all_permutations(int n, int bound) {
  guard_n(n, bound, "all_permutations");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> descent_class(const Composition& a, int bound) {
  std::vector<int> want = a.descents();
  std::vector<Permutation> out;
  for (const Permutation& w : all_permutations(a.size(), bound))
    if (w.descents() == want) out.push_back(w);
  return out;
}

}  // namespace hk
