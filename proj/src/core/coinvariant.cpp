#include "core/coinvariant.hpp"

#include <algorithm>

namespace hk {

std::vector<MPoly> symmetric_ideal_generators(int n) {
  require(n >= 1, "need n >= 1");
  std::vector<MPoly> gens;
  for (int r = 1; r <= n; ++r) gens.push_back(elementary_symmetric(n, r));
  return gens;
}

namespace {

// All subsets of {1..n} of size k, as sorted index vectors.
void subsets_of_size(int n, int k, std::vector<int>& cur, int start,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    subsets_of_size(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MPoly> tanisaki_generators(int n, const Partition& mu) {
  int wt = 0;
  for (int p : mu) wt += p;
  require(wt == n, "partition must have weight n");
  Partition conj = conjugate(mu);
  require(static_cast<int>(conj.size()) <= n, "conjugate longer than n");
  // pad with zeros in front, increasing order; conj is decreasing
  std::vector<int> cp(n, 0);
  for (size_t j = 0; j < conj.size(); ++j) cp[n - 1 - j] = conj[j];
  std::vector<MPoly> gens;
  for (int k = 1; k <= n; ++k) {
    int dk = 0;
    for (int j = 0; j < k; ++j) dk += cp[j];
    if (dk == 0) continue;
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    subsets_of_size(n, k, cur, 1, subs);
    for (int r = std::max(1, k - dk + 1); r <= k; ++r)
      for (const auto& s : subs) gens.push_back(elementary_symmetric_subset(n, r, s));
  }
  return gens;
}

std::vector<MPoly> hook_ideal_generators(int n, int h) {
  require(h >= 1 && h <= n, "hook leg out of range");
  std::vector<MPoly> gens = symmetric_ideal_generators(n);
  std::vector<std::vector<int>> subs;
  std::vector<int> cur;
  subsets_of_size(n, h, cur, 1, subs);
  for (const auto& s : subs) {
    std::vector<int> e(n, 0);
    for (int i : s) e[i - 1] = 1;
    gens.push_back(MPoly::monomial(e));
  }
  return gens;
}

bool is_symmetric_poly(const MPoly& f) {
  int n = f.nvars();
  for (int i = 1; i < n; ++i) {
    Permutation s = Permutation::identity(n).right_mul_s(i);
    if (!(f.apply_permutation(s) == f)) return false;
  }
  return true;
}

std::vector<Permutation> descents_within(int n, const std::vector<int>& allowed) {
  std::vector<bool> ok(n + 1, false);
  for (int i : allowed) {
    require(i >= 1 && i < n, "descent position out of range");
    ok[i] = true;
  }
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n)) {
    bool good = true;
    for (int i : w.descents())
      if (!ok[i]) {
        good = false;
        break;
      }
    if (good) out.push_back(w);
  }
  return out;
}

std::vector<int> block_indices(int n, const Composition& alpha) {
  require(alpha.size() == n, "composition must have weight n");
  auto perms = all_permutations(n);
  std::vector<int> idx;
  for (size_t k = 0; k < perms.size(); ++k)
    if (perms[k].descent_composition() == alpha) idx.push_back(static_cast<int>(k));
  return idx;
}

}  // namespace hk
