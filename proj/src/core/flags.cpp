#include "core/flags.hpp"

#include <map>
#include <set>

namespace hk {

Subspace subspace_span(const GfTable& gf, std::vector<std::vector<int>> rows) {
  if (rows.empty()) return {};
  int ncols = static_cast<int>(rows[0].size());
  for (const auto& r : rows) require(static_cast<int>(r.size()) == ncols, "ragged rows");
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    int inv = gf.inv(rows[r][c]);
    for (int j = 0; j < ncols; ++j) rows[r][j] = gf.mul(rows[r][j], inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      int f = rows[i][c];
      for (int j = 0; j < ncols; ++j)
        rows[i][j] = gf.add(rows[i][j], gf.neg(gf.mul(f, rows[r][j])));
    }
    ++r;
  }
  rows.resize(r);
  return Subspace{std::move(rows)};
}

bool subspace_contains(const GfTable& gf, const Subspace& s, std::vector<int> v) {
  for (const auto& row : s.rows) {
    int c = 0;
    while (row[c] == 0) ++c;
    if (v[c] == 0) continue;
    int f = v[c];
    for (size_t j = c; j < v.size(); ++j)
      v[j] = gf.add(v[j], gf.neg(gf.mul(f, row[j])));
  }
  for (int x : v)
    if (x != 0) return false;
  return true;
}

namespace {

// All vectors of GF(q)^n, the zero vector first.
std::vector<std::vector<int>> all_vectors(const GfTable& gf, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  while (true) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[k] == gf.q() - 1) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

// Subspaces of dimension target containing s.
std::vector<Subspace> extend_to(const GfTable& gf, const Subspace& s, int n, int target) {
  auto vecs = all_vectors(gf, n);
  std::set<Subspace> cur = {s};
  for (int t = s.dim(); t < target; ++t) {
    std::set<Subspace> next;
    for (const auto& sp : cur)
      for (const auto& v : vecs) {
        if (subspace_contains(gf, sp, v)) continue;
        auto rows = sp.rows;
        rows.push_back(v);
        next.insert(subspace_span(gf, std::move(rows)));
      }
    cur = std::move(next);
  }
  return std::vector<Subspace>(cur.begin(), cur.end());
}

}  // namespace

std::vector<PartialFlag> partial_flags(const GfTable& gf, int n, const std::vector<int>& dims) {
  for (size_t k = 0; k < dims.size(); ++k) {
    require(dims[k] >= 1 && dims[k] < n, "flag dimensions must lie in 1..n-1");
    if (k) require(dims[k] > dims[k - 1], "flag dimensions must increase");
  }
  std::vector<PartialFlag> out = {{}};
  for (int d : dims) {
    std::vector<PartialFlag> next;
    for (const auto& f : out) {
      Subspace top = f.empty() ? Subspace{} : f.back();
      for (auto& t : extend_to(gf, top, n, d)) {
        PartialFlag g = f;
        g.push_back(std::move(t));
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<PartialFlag> complete_flags(const GfTable& gf, int n) {
  std::vector<int> dims;
  for (int d = 1; d < n; ++d) dims.push_back(d);
  return partial_flags(gf, n, dims);
}

std::string flag_str(const PartialFlag& f) {
  std::string s = "(";
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) s += " < ";
    for (size_t r = 0; r < f[k].rows.size(); ++r) {
      if (r) s += ",";
      for (int x : f[k].rows[r]) s += (x < 10) ? std::to_string(x) : "." + std::to_string(x);
    }
  }
  return s + ")";
}

FiniteModule<Fp> flag_module(const GfTable& gf, int n, int64_t flag_cap) {
  require(n >= 1, "n must be positive");
  Int expected = 1;
  for (int k = 2; k <= n; ++k) {
    Int qk = 0, pw = 1;
    for (int j = 0; j < k; ++j) {
      qk += pw;
      pw *= gf.q();
    }
    expected *= qk;
  }
  if (expected > flag_cap)
    throw SizeLimitError("flag count " + expected.str() + " exceeds cap " +
                         std::to_string(flag_cap));
  auto flags = complete_flags(gf, n);
  check(Int(flags.size()) == expected, "flag count mismatch");

  std::map<PartialFlag, int> index;
  for (size_t k = 0; k < flags.size(); ++k) index.emplace(flags[k], static_cast<int>(k));

  int64_t p = gf.p();
  FiniteModule<Fp> M;
  M.n = n;
  M.dim = static_cast<int>(flags.size());
  for (int i = 1; i < n; ++i) {
    Mat<Fp> A(M.dim, M.dim);
    for (int c = 0; c < M.dim; ++c) {
      const PartialFlag& f = flags[c];
      Subspace low = (i >= 2) ? f[i - 2] : Subspace{};
      std::vector<std::vector<int>> hi;
      if (i <= n - 2) {
        hi = f[i].rows;
      } else {
        for (int r = 0; r < n; ++r) {
          std::vector<int> e(n, 0);
          e[r] = 1;
          hi.push_back(std::move(e));
        }
      }
      // middle spaces between low and the span of hi
      std::set<Subspace> mids;
      int m = static_cast<int>(hi.size());
      std::vector<int> co(m, 0);
      while (true) {
        std::vector<int> v(n, 0);
        for (int r = 0; r < m; ++r)
          if (co[r] != 0)
            for (int j = 0; j < n; ++j) v[j] = gf.add(v[j], gf.mul(co[r], hi[r][j]));
        bool zero = true;
        for (int x : v)
          if (x != 0) {
            zero = false;
            break;
          }
        if (!zero && !subspace_contains(gf, low, v)) {
          auto rows = low.rows;
          rows.push_back(std::move(v));
          mids.insert(subspace_span(gf, std::move(rows)));
        }
        int k = m - 1;
        while (k >= 0 && co[k] == gf.q() - 1) co[k--] = 0;
        if (k < 0) break;
        ++co[k];
      }
      check(static_cast<int64_t>(mids.size()) == gf.q() + 1, "fiber must have q+1 points");
      for (const auto& mid : mids) {
        if (mid == f[i - 1]) continue;
        PartialFlag g = f;
        g[i - 1] = mid;
        A[index.at(g)][c] = A[index.at(g)][c] + Fp(1, p);
      }
    }
    M.gen.push_back(std::move(A));
  }
  for (const auto& f : flags) M.basis_labels.push_back(flag_str(f));
  return M;
}

ChainComplex tits_chain_complex(const GfTable& gf, const Composition& alpha, int64_t flag_cap) {
  int n = alpha.size();
  std::vector<int> dset = alpha.descents();
  int m = static_cast<int>(dset.size());
  int64_t p = gf.p();

  // level j holds the types dropping j descents; within a level the types are
  // in mask order of the kept subset, each with its own flag list
  struct Term {
    std::vector<int> dims;
    std::vector<PartialFlag> flags;
    int offset = 0;
  };
  std::vector<std::vector<Term>> levels(m + 1);
  std::vector<std::map<std::vector<int>, int>> term_of(m + 1);
  ChainComplex cc;
  cc.dims.assign(m + 1, 0);
  int64_t total = 0;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> keep;
    for (int b = 0; b < m; ++b)
      if (mask & (1 << b)) keep.push_back(dset[b]);
    int j = m - static_cast<int>(keep.size());
    Term t;
    t.dims = keep;
    t.flags = partial_flags(gf, n, keep);
    total += static_cast<int64_t>(t.flags.size());
    if (total > flag_cap) throw SizeLimitError("chain complex size exceeds cap");
    t.offset = cc.dims[j];
    cc.dims[j] += static_cast<int>(t.flags.size());
    term_of[j].emplace(keep, static_cast<int>(levels[j].size()));
    levels[j].push_back(std::move(t));
  }

  auto flag_index = [&](int j, const std::vector<int>& dims, const PartialFlag& f) -> int {
    const Term& t = levels[j][term_of[j].at(dims)];
    auto it = std::lower_bound(t.flags.begin(), t.flags.end(), f);
    check(it != t.flags.end() && *it == f, "partial flag not found");
    return t.offset + static_cast<int>(it - t.flags.begin());
  };

  for (int j = 0; j < m; ++j) {
    Mat<Fp> B(cc.dims[j + 1], cc.dims[j]);
    for (const Term& t : levels[j]) {
      for (size_t fi = 0; fi < t.flags.size(); ++fi) {
        int col = t.offset + static_cast<int>(fi);
        for (size_t k = 0; k < t.dims.size(); ++k) {
          std::vector<int> sub = t.dims;
          sub.erase(sub.begin() + k);
          PartialFlag g = t.flags[fi];
          g.erase(g.begin() + k);
          int row = flag_index(j + 1, sub, g);
          Fp sgn = (k % 2 == 0) ? Fp(1, p) : Fp(p - 1, p);
          B[row][col] = B[row][col] + sgn;
        }
      }
    }
    cc.boundary.push_back(std::move(B));
  }
  return cc;
}

bool chain_exact(const ChainComplex& c, int* kernel_dim) {
  int m = static_cast<int>(c.boundary.size());
  std::vector<int> r(m + 1, 0);
  for (int j = 0; j < m; ++j) r[j] = rank(c.boundary[j]);
  for (int j = 0; j + 1 < m; ++j) {
    Mat<Fp> prod = matmul(c.boundary[j + 1], c.boundary[j]);
    for (int a = 0; a < prod.rows; ++a)
      for (int b = 0; b < prod.cols; ++b)
        if (!is_zero(prod[a][b])) return false;
  }
  if (kernel_dim) *kernel_dim = c.dims[0] - (m > 0 ? r[0] : 0);
  for (int j = 1; j <= m; ++j)
    if (c.dims[j] != r[j - 1] + r[j]) return false;
  return true;
}

}  // namespace hk
