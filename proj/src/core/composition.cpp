#include "core/composition.hpp"

#include <algorithm>
#include <numeric>

namespace hk {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p > 0, "composition parts must be positive");
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_descents(const std::vector<int>& descents, int n) {
  require(n >= 0, "composition size must be nonnegative");
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    require(d > prev && d < n, "descents must be strictly increasing within 1..n-1");
    parts.push_back(d - prev);
    prev = d;
  }
  if (n > prev) parts.push_back(n - prev);
  Composition a;
  a.parts_ = std::move(parts);
  a.n_ = n;
  return a;
}

std::vector<int> Composition::descents() const {
  std::vector<int> d;
  int s = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    d.push_back(s);
  }
  return d;
}

int Composition::maj() const {
  int m = 0;
  for (int d : descents()) m += d;
  return m;
}

bool Composition::has_descent(int i) const {
  int s = 0;
  for (size_t k = 0; k + 1 < parts_.size(); ++k) {
    s += parts_[k];
    if (s == i) return true;
    if (s > i) return false;
  }
  return false;
}

Composition Composition::reversed() const {
  std::vector<int> p(parts_.rbegin(), parts_.rend());
  return Composition(p);
}

Composition Composition::complement() const {
  std::vector<int> d = descents(), c;
  size_t k = 0;
  for (int i = 1; i < n_; ++i) {
    while (k < d.size() && d[k] < i) ++k;
    if (k == d.size() || d[k] != i) c.push_back(i);
  }
  return from_descents(c, n_);
}

Composition Composition::transposed() const { return complement().reversed(); }

std::string Composition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool coarsens(const Composition& b, const Composition& a) {
  if (b.size() != a.size()) return false;
  for (int d : b.descents())
    if (!a.has_descent(d)) return false;
  return true;
}

std::vector<Composition> compositions_of(int n, int bound) {
  guard_n(n, bound, "compositions_of");
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back(Composition());
    return out;
  }
  for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) d.push_back(i);
    out.push_back(Composition::from_descents(d, n));
  }
  return out;
}

std::vector<Composition> coarsenings(const Composition& a) {
  std::vector<int> d = a.descents();
  int k = static_cast<int>(d.size());
  std::vector<Composition> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) sub.push_back(d[i]);
    out.push_back(Composition::from_descents(sub, a.size()));
  }
  return out;
}

Partition partition_of(const Composition& a) {
  Partition p = a.parts();
  std::sort(p.rbegin(), p.rend());
  return p;
}

Partition conjugate(const Partition& lam) {
  Partition c;
  if (lam.empty()) return c;
  for (int col = 1; col <= lam[0]; ++col) {
    int h = 0;
    for (int part : lam)
      if (part >= col) ++h;
    c.push_back(h);
  }
  return c;
}

static void partitions_rec(int n, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int bound) {
  guard_n(n, bound, "partitions_of");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  if (n == 0) out.push_back({});
  return out;
}

bool is_partition(const std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) return false;
    if (i && v[i] > v[i - 1]) return false;
  }
  return true;
}

std::vector<int> hook_lengths(const Partition& lam) {
  require(is_partition(lam), "hook_lengths: not a partition");
  Partition conj = conjugate(lam);
  std::vector<int> h;
  for (size_t r = 0; r < lam.size(); ++r)
    for (int c = 1; c <= lam[r]; ++c)
      h.push_back(lam[r] - c + conj[c - 1] - static_cast<int>(r) - 1 + 1);
  return h;
}

int partition_nstat(const Partition& lam) {
  int s = 0;
  for (size_t i = 0; i < lam.size(); ++i) s += static_cast<int>(i) * lam[i];
  return s;
}

bool is_hook(const Partition& lam) {
  int big = 0;
  for (int p : lam)
    if (p > 1) ++big;
  return big <= 1;
}

std::string partition_str(const Partition& lam) {
  std::string s = "(";
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s + ")";
}

}  // namespace hk
