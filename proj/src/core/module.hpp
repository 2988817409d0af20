#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/composition.hpp"
#include "core/linalg.hpp"
#include "core/permutation.hpp"
#include "core/qtpoly.hpp"

namespace hk {

// Finite dimensional module over H_n(0), given by the matrices of the
// generators T_1,...,T_{n-1} acting on a chosen basis.  Columns hold images:
// T_i(b_c) = sum_r gen[i-1][r][c] b_r.
//
// Optional structure, validated by check_module:
//   degrees:       basis is homogeneous, generators preserve degree;
//   length_levels: basis is adapted to a module filtration F^(0) >= F^(1) >= ...
//                  where F^(l) = span of basis vectors with level >= l, and
//                  each F^(l) is a submodule;
//   cyclic:        coordinates of a generating vector.
template <class F>
struct FiniteModule {
  int n = 0;
  int dim = 0;
  std::vector<Mat<F>> gen;
  std::optional<std::vector<int>> degrees;
  std::optional<std::vector<int>> length_levels;
  std::optional<Vec<F>> cyclic;
  std::vector<std::string> basis_labels;

  const Mat<F>& action(int i) const {
    require(i >= 1 && i < n, "generator index out of range");
    return gen[i - 1];
  }
};

enum class CharMode { plain, t, q, qt };

inline const char* char_mode_name(CharMode m) {
  switch (m) {
    case CharMode::plain: return "plain";
    case CharMode::t: return "t";
    case CharMode::q: return "q";
    default: return "qt";
  }
}

template <class F>
Vec<F> module_act(const FiniteModule<F>& M, int i, const Vec<F>& v) {
  return matvec(M.action(i), v);
}

// T_w v, multiplying generators along a reduced word from the right.
template <class F>
Vec<F> module_act_word(const FiniteModule<F>& M, const Permutation& w, Vec<F> v) {
  std::vector<int> word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = module_act(M, *it, v);
  return v;
}

template <class F>
bool mat_is_zero(const Mat<F>& m) {
  for (const auto& row : m.a)
    for (const auto& x : row)
      if (!is_zero(x)) return false;
  return true;
}

// Validates the generator relations and any optional structure.
template <class F>
void check_module(const FiniteModule<F>& M) {
  require(M.n >= 1, "module needs n >= 1");
  require(static_cast<int>(M.gen.size()) == M.n - 1, "need n-1 generator matrices");
  for (const auto& g : M.gen)
    require(g.rows == M.dim && g.cols == M.dim, "generator matrix shape mismatch");
  for (int i = 1; i < M.n; ++i) {
    const Mat<F>& A = M.gen[i - 1];
    Mat<F> A2 = matmul(A, A);
    check(mat_is_zero(mat_add(A2, A)), "generator fails T_i^2 = -T_i");
    for (int j = i + 2; j < M.n; ++j) {
      const Mat<F>& Bm = M.gen[j - 1];
      check(matmul(A, Bm) == matmul(Bm, A), "distant generators fail to commute");
    }
    if (i + 1 < M.n) {
      const Mat<F>& Bm = M.gen[i];
      check(matmul(matmul(A, Bm), A) == matmul(matmul(Bm, A), Bm),
            "adjacent generators fail the braid relation");
    }
  }
  if (M.degrees) {
    require(static_cast<int>(M.degrees->size()) == M.dim, "degrees size mismatch");
    for (const auto& g : M.gen)
      for (int r = 0; r < M.dim; ++r)
        for (int c = 0; c < M.dim; ++c)
          if (!is_zero(g[r][c]))
            check((*M.degrees)[r] == (*M.degrees)[c], "generator does not preserve degree");
  }
  if (M.length_levels) {
    require(static_cast<int>(M.length_levels->size()) == M.dim, "length levels size mismatch");
    for (const auto& g : M.gen)
      for (int r = 0; r < M.dim; ++r)
        for (int c = 0; c < M.dim; ++c)
          if (!is_zero(g[r][c]))
            check((*M.length_levels)[r] >= (*M.length_levels)[c],
                  "generator does not respect the level filtration");
  }
  if (M.cyclic) {
    require(static_cast<int>(M.cyclic->size()) == M.dim, "cyclic vector size mismatch");
    check(cyclic_generates(M, *M.cyclic), "cyclic vector does not generate");
  }
}

// Orbit closure of a vector under the generator action; returns a row-space
// RREF basis of the submodule it generates.
template <class F>
std::vector<Vec<F>> generated_subspace(const FiniteModule<F>& M, const std::vector<Vec<F>>& seeds) {
  Echelon<F> ech(M.dim);
  std::vector<Vec<F>> frontier;
  for (const auto& s : seeds)
    if (ech.add(s)) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<Vec<F>> next;
    for (const auto& v : frontier)
      for (int i = 1; i < M.n; ++i) {
        Vec<F> w = module_act(M, i, v);
        if (ech.add(w)) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return ech.rows;
}

template <class F>
bool cyclic_generates(const FiniteModule<F>& M, const Vec<F>& v) {
  return static_cast<int>(generated_subspace(M, {v}).size()) == M.dim;
}

// Module structure on the span of an invariant subspace.  sub_basis rows must
// be closed under the action (checked).  Degrees carry over when every basis
// row is degree pure.
template <class F>
FiniteModule<F> submodule_on(const FiniteModule<F>& M, const std::vector<Vec<F>>& sub_basis) {
  int d = static_cast<int>(sub_basis.size());
  for (const auto& v : sub_basis)
    require(static_cast<int>(v.size()) == M.dim, "subspace vector size mismatch");
  FiniteModule<F> S;
  S.n = M.n;
  S.dim = d;
  for (int i = 1; i < M.n; ++i) {
    std::vector<Vec<F>> targets;
    for (int j = 0; j < d; ++j) targets.push_back(module_act(M, i, sub_basis[j]));
    auto coords = in_basis(sub_basis, targets);
    check(coords.has_value(), "subspace is not invariant under the action");
    // coords[b][j]: coefficient of basis b in the image of basis j.
    S.gen.push_back(*coords);
  }
  if (M.degrees) {
    std::vector<int> degs(d, -1);
    bool pure = true;
    for (int j = 0; j < d && pure; ++j) {
      for (int c = 0; c < M.dim; ++c)
        if (!is_zero(sub_basis[j][c])) {
          if (degs[j] < 0) degs[j] = (*M.degrees)[c];
          else if (degs[j] != (*M.degrees)[c]) pure = false;
        }
      if (degs[j] < 0) pure = false;
    }
    if (pure) S.degrees = degs;
  }
  return S;
}

// Quotient of M by the invariant span of sub_basis.  Quotient basis: standard
// basis vectors at the non-pivot coordinates of the subspace row space.
template <class F>
FiniteModule<F> quotient_module(const FiniteModule<F>& M, const std::vector<Vec<F>>& sub_basis) {
  Mat<F> S(0, M.dim);
  for (const auto& v : sub_basis) {
    require(static_cast<int>(v.size()) == M.dim, "subspace vector size mismatch");
    S.a.push_back(v);
    S.rows++;
  }
  std::vector<int> pivots = rref(S);
  while (S.rows > 0 && std::all_of(S.a.back().begin(), S.a.back().end(),
                                   [](const F& x) { return is_zero(x); })) {
    S.a.pop_back();
    S.rows--;
  }
  std::vector<bool> is_pivot(M.dim, false);
  for (size_t k = 0; k < S.a.size(); ++k) is_pivot[pivots[k]] = true;
  std::vector<int> keep;
  for (int c = 0; c < M.dim; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  int d = static_cast<int>(keep.size());
  std::vector<int> pos(M.dim, -1);
  for (int k = 0; k < d; ++k) pos[keep[k]] = k;

  // Reduce a vector mod the subspace, leaving support on non-pivot coords.
  auto project = [&](Vec<F> v) {
    for (size_t k = 0; k < S.a.size(); ++k) {
      F c = v[pivots[k]];
      if (is_zero(c)) continue;
      for (int j = 0; j < M.dim; ++j) v[j] = v[j] - c * S.a[k][j];
    }
    Vec<F> out(d, F(0));
    for (int j = 0; j < M.dim; ++j) {
      if (pos[j] >= 0) out[pos[j]] = v[j];
      else check(is_zero(v[j]), "projection left support on the subspace");
    }
    return out;
  };

  FiniteModule<F> Q;
  Q.n = M.n;
  Q.dim = d;
  for (int i = 1; i < M.n; ++i) {
    Mat<F> A(d, d);
    for (int c = 0; c < d; ++c) {
      Vec<F> e(M.dim, F(0));
      e[keep[c]] = F(1);
      Vec<F> img = project(module_act(M, i, e));
      for (int r = 0; r < d; ++r) A[r][c] = img[r];
    }
    Q.gen.push_back(std::move(A));
  }
  if (M.degrees) {
    std::vector<int> degs(d);
    for (int k = 0; k < d; ++k) degs[k] = (*M.degrees)[keep[k]];
    bool graded_sub = true;
    for (const auto& row : S.a) {
      int dd = -1;
      for (int c = 0; c < M.dim; ++c)
        if (!is_zero(row[c])) {
          if (dd < 0) dd = (*M.degrees)[c];
          else if (dd != (*M.degrees)[c]) graded_sub = false;
        }
    }
    if (graded_sub) Q.degrees = degs;
  }
  if (!M.basis_labels.empty()) {
    for (int k = 0; k < d; ++k) Q.basis_labels.push_back(M.basis_labels[keep[k]]);
  }
  return Q;
}

// Restriction of the generator matrices to a coordinate subset.  Meaningful
// for level pieces of an adapted basis (the subquotient F^(l)/F^(l+1)) and for
// degree pieces of a graded module.
template <class F>
FiniteModule<F> coordinate_piece(const FiniteModule<F>& M, const std::vector<int>& idx) {
  FiniteModule<F> P;
  P.n = M.n;
  P.dim = static_cast<int>(idx.size());
  for (int i = 1; i < M.n; ++i) {
    Mat<F> A(P.dim, P.dim);
    for (int r = 0; r < P.dim; ++r)
      for (int c = 0; c < P.dim; ++c) A[r][c] = M.action(i)[idx[r]][idx[c]];
    P.gen.push_back(std::move(A));
  }
  if (M.degrees) {
    std::vector<int> degs;
    for (int j : idx) degs.push_back((*M.degrees)[j]);
    P.degrees = degs;
  }
  if (!M.basis_labels.empty())
    for (int j : idx) P.basis_labels.push_back(M.basis_labels[j]);
  return P;
}

// dim of the simultaneous kernel of the T_j for j outside D(beta), split by
// degree when requested: Hilb(Q_beta, t).
template <class F>
QtPoly invariants_hilbert(const FiniteModule<F>& M, const Composition& beta, bool by_degree) {
  require(beta.size() == M.n, "composition size must match module rank");
  std::vector<int> outside;
  for (int j = 1; j < M.n; ++j)
    if (!beta.has_descent(j)) outside.push_back(j);

  auto kernel_dim = [&](const std::vector<int>& idx) -> int {
    std::vector<Mat<F>> ms;
    for (int j : outside) {
      Mat<F> A(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
      for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c) A[r][c] = M.action(j)[idx[r]][idx[c]];
      ms.push_back(std::move(A));
    }
    return static_cast<int>(kernel_intersection(ms, static_cast<int>(idx.size())).size());
  };

  QtPoly out;
  if (by_degree) {
    require(M.degrees.has_value(), "degree split needs a graded module");
    std::map<int, std::vector<int>> by_deg;
    for (int j = 0; j < M.dim; ++j) by_deg[(*M.degrees)[j]].push_back(j);
    for (const auto& [d, idx] : by_deg) {
      int k = kernel_dim(idx);
      if (k > 0) out = out + Int(k) * QtPoly::monomial(1, 0, d);
    }
  } else {
    std::vector<int> all(M.dim);
    for (int j = 0; j < M.dim; ++j) all[j] = j;
    int k = kernel_dim(all);
    if (k > 0) out = QtPoly::constant(k);
  }
  return out;
}

// Composition factor multiplicities by inclusion-exclusion over coarsenings:
// c_alpha = sum over beta coarsening alpha of (-1)^(l(alpha)-l(beta)) Hilb(Q_beta).
// Exponents: t tracks the degree grading (modes t, qt), q tracks the level
// filtration (modes q, qt).  Zero multiplicities are omitted.
template <class F>
std::map<Composition, QtPoly> composition_factors(const FiniteModule<F>& M, CharMode mode) {
  bool use_t = (mode == CharMode::t || mode == CharMode::qt);
  bool use_q = (mode == CharMode::q || mode == CharMode::qt);
  if (use_t) require(M.degrees.has_value(), "t mode needs a graded module");
  if (use_q) require(M.length_levels.has_value(), "q mode needs a level filtration");

  std::vector<std::pair<int, FiniteModule<F>>> pieces;
  if (use_q) {
    std::map<int, std::vector<int>> by_level;
    for (int j = 0; j < M.dim; ++j) by_level[(*M.length_levels)[j]].push_back(j);
    for (const auto& [lvl, idx] : by_level) pieces.emplace_back(lvl, coordinate_piece(M, idx));
  } else {
    pieces.emplace_back(0, M);
  }

  std::map<Composition, QtPoly> hilb;
  for (const auto& beta : compositions_of(M.n)) {
    QtPoly h;
    for (const auto& [lvl, P] : pieces) {
      QtPoly piece = invariants_hilbert(P, beta, use_t);
      if (use_q) piece = piece * QtPoly::monomial(1, lvl, 0);
      h = h + piece;
    }
    hilb.emplace(beta, std::move(h));
  }

  std::map<Composition, QtPoly> out;
  for (const auto& alpha : compositions_of(M.n)) {
    QtPoly c;
    for (const auto& beta : coarsenings(alpha)) {
      int sign = ((alpha.length() - beta.length()) % 2 == 0) ? 1 : -1;
      c = c + Int(sign) * hilb.at(beta);
    }
    if (!c.is_zero()) out.emplace(alpha, std::move(c));
  }
  return out;
}

// Hilb(Q_beta) for every beta, the M-basis coefficients of the characteristic.
template <class F>
std::map<Composition, QtPoly> invariants_table(const FiniteModule<F>& M, CharMode mode) {
  bool use_t = (mode == CharMode::t || mode == CharMode::qt);
  bool use_q = (mode == CharMode::q || mode == CharMode::qt);
  if (use_t) require(M.degrees.has_value(), "t mode needs a graded module");
  if (use_q) require(M.length_levels.has_value(), "q mode needs a level filtration");
  std::vector<std::pair<int, FiniteModule<F>>> pieces;
  if (use_q) {
    std::map<int, std::vector<int>> by_level;
    for (int j = 0; j < M.dim; ++j) by_level[(*M.length_levels)[j]].push_back(j);
    for (const auto& [lvl, idx] : by_level) pieces.emplace_back(lvl, coordinate_piece(M, idx));
  } else {
    pieces.emplace_back(0, M);
  }
  std::map<Composition, QtPoly> hilb;
  for (const auto& beta : compositions_of(M.n)) {
    QtPoly h;
    for (const auto& [lvl, P] : pieces) {
      QtPoly piece = invariants_hilbert(P, beta, use_t);
      if (use_q) piece = piece * QtPoly::monomial(1, lvl, 0);
      h = h + piece;
    }
    hilb.emplace(beta, std::move(h));
  }
  return hilb;
}

// Rebuild M on a basis adapted to the length filtration generated by its
// cyclic vector v: F^(l) = span{T_w v : l(w) >= l}.  Basis vectors are picked
// from the T_w v in increasing length order, scanning lengths top down so that
// each level extends the span of the deeper levels.
template <class F>
FiniteModule<F> cyclic_length_filtration(const FiniteModule<F>& M, const Vec<F>& v) {
  require(static_cast<int>(v.size()) == M.dim, "cyclic vector size mismatch");
  int maxlen = M.n * (M.n - 1) / 2;
  std::vector<std::vector<std::pair<Permutation, Vec<F>>>> orbit(maxlen + 1);
  std::map<Permutation, Vec<F>> computed;
  for (const auto& w : all_permutations(M.n)) {
    Vec<F> tv;
    if (w.is_identity()) {
      tv = v;
    } else {
      int i = 0;
      for (int j = 1; j < M.n; ++j)
        if (w.inverse()(j) > w.inverse()(j + 1)) { i = j; break; }
      // i is a left descent: w = s_i u with u shorter.
      Permutation u = w.left_mul_s(i);
      tv = module_act(M, i, computed.at(u));
    }
    computed.emplace(w, tv);
    orbit[static_cast<int>(w.inversions())].emplace_back(w, tv);
  }

  // From the top length down, extend an echelon of the deeper span and record
  // the accepted vectors per level.
  Echelon<F> span(M.dim);
  std::vector<std::vector<std::pair<Permutation, Vec<F>>>> chosen(maxlen + 1);
  for (int l = maxlen; l >= 0; --l)
    for (const auto& [w, x] : orbit[l])
      if (span.add(x)) chosen[l].emplace_back(w, x);
  check(span.rank() == M.dim, "cyclic vector does not generate the module");

  std::vector<Vec<F>> basis;
  std::vector<int> levels;
  std::vector<std::string> labels;
  for (int l = 0; l <= maxlen; ++l)
    for (const auto& [w, x] : chosen[l]) {
      basis.push_back(x);
      levels.push_back(l);
      labels.push_back("T" + w.str() + "*v");
    }

  FiniteModule<F> R;
  R.n = M.n;
  R.dim = M.dim;
  R.length_levels = levels;
  R.basis_labels = labels;
  for (int i = 1; i < M.n; ++i) {
    std::vector<Vec<F>> targets;
    for (const auto& b : basis) targets.push_back(module_act(M, i, b));
    auto coords = in_basis(basis, targets);
    check(coords.has_value(), "closure failure while rebasing");
    R.gen.push_back(*coords);
  }
  {
    auto coords = in_basis(basis, {v});
    check(coords.has_value(), "cyclic vector escaped its own span");
    Vec<F> vc(M.dim, F(0));
    for (int r = 0; r < M.dim; ++r) vc[r] = (*coords)[r][0];
    R.cyclic = vc;
  }
  if (M.degrees) {
    std::vector<int> degs(M.dim, -1);
    bool pure = true;
    for (int j = 0; j < M.dim && pure; ++j) {
      for (int c = 0; c < M.dim; ++c)
        if (!is_zero(basis[j][c])) {
          if (degs[j] < 0) degs[j] = (*M.degrees)[c];
          else if (degs[j] != (*M.degrees)[c]) pure = false;
        }
      if (degs[j] < 0) pure = false;
    }
    if (pure) R.degrees = degs;
  }
  return R;
}

// Isomorphism test.  With cyclic vectors on both sides, tries the map sending
// T_w vA to T_w vB over a spanning family; that map, when invertible and
// intertwining, is a genuine witness.  Otherwise solves the full intertwiner
// system and searches for an invertible element (complete for small dims; a
// nonempty space with no invertible combination found reports failure).
template <class F>
std::optional<Mat<F>> module_isomorphic(const FiniteModule<F>& A, const FiniteModule<F>& B) {
  if (A.n != B.n || A.dim != B.dim) return std::nullopt;
  int d = A.dim;
  if (d == 0) return Mat<F>(0, 0);

  auto intertwines = [&](const Mat<F>& X) {
    for (int i = 1; i < A.n; ++i)
      if (!(matmul(X, A.action(i)) == matmul(B.action(i), X))) return false;
    return true;
  };

  if (A.cyclic && B.cyclic) {
    // Collect words w with {T_w vA} a basis, scanning in one-line lex order
    // (which visits s_i w before w whenever s_i w is shorter).
    std::vector<Vec<F>> pa, pb;
    Echelon<F> ech(d);
    std::map<Permutation, Vec<F>> oa, ob;
    for (const auto& w : all_permutations(A.n)) {
      Vec<F> ta, tb;
      if (w.is_identity()) {
        ta = *A.cyclic;
        tb = *B.cyclic;
      } else {
        int i = 0;
        for (int j = 1; j < A.n; ++j)
          if (w.inverse()(j) > w.inverse()(j + 1)) { i = j; break; }
        Permutation u = w.left_mul_s(i);
        ta = module_act(A, i, oa.at(u));
        tb = module_act(B, i, ob.at(u));
      }
      oa.emplace(w, ta);
      ob.emplace(w, tb);
      if (ech.add(ta)) {
        pa.push_back(ta);
        pb.push_back(tb);
        if (static_cast<int>(pa.size()) == d) break;
      }
    }
    if (static_cast<int>(pa.size()) == d) {
      // X maps the column vectors pa[j] to pb[j]: X = Qt * Pt^{-1} with the
      // vectors as columns.
      Mat<F> Pt(d, d), Qt(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          Pt[r][c] = pa[c][r];
          Qt[r][c] = pb[c][r];
        }
      auto Pinv = inverse(Pt);
      if (Pinv) {
        Mat<F> X = matmul(Qt, *Pinv);
        if (intertwines(X) && inverse(X).has_value()) return X;
      }
    }
  }

  // General route: nullspace of X A_i - B_i X over d*d unknowns.
  if (Int(d) * Int(d) > 4096) return std::nullopt;
  int nn = d * d;
  Mat<F> sys(0, nn);
  for (int i = 1; i < A.n; ++i) {
    const Mat<F>& Am = A.action(i);
    const Mat<F>& Bm = B.action(i);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        Vec<F> row(nn, F(0));
        // (X Am - Bm X)[r][c] = sum_k X[r][k] Am[k][c] - Bm[r][k] X[k][c]
        for (int k = 0; k < d; ++k) {
          row[r * d + k] = row[r * d + k] + Am[k][c];
          row[k * d + c] = row[k * d + c] - Bm[r][k];
        }
        sys.a.push_back(std::move(row));
        sys.rows++;
      }
  }
  std::vector<Vec<F>> space = kernel_basis(sys);
  auto unflatten = [&](const Vec<F>& x) {
    Mat<F> X(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) X[r][c] = x[r * d + c];
    return X;
  };
  for (const auto& x : space) {
    Mat<F> X = unflatten(x);
    if (inverse(X).has_value()) {
      check(intertwines(X), "solved intertwiner fails to intertwine");
      return X;
    }
  }
  // Deterministic small combinations of pairs.
  for (size_t a = 0; a < space.size(); ++a)
    for (size_t b = a + 1; b < space.size(); ++b)
      for (int c = 1; c <= 3; ++c) {
        Vec<F> x(nn, F(0));
        for (int k = 0; k < nn; ++k) x[k] = space[a][k] + F(c) * space[b][k];
        Mat<F> X = unflatten(x);
        if (inverse(X).has_value()) {
          check(intertwines(X), "solved intertwiner fails to intertwine");
          return X;
        }
      }
  return std::nullopt;
}

// Attach a prime modulus to every entry of a module built from plain integer
// literals.
inline void attach_modulus(FiniteModule<Fp>& M, int64_t p) {
  for (auto& g : M.gen)
    for (auto& row : g.a)
      for (auto& x : row) x = Fp(x.v, p);
  if (M.cyclic)
    for (auto& x : *M.cyclic) x = Fp(x.v, p);
}

// Direct sum, concatenating bases.
template <class F>
FiniteModule<F> direct_sum(const FiniteModule<F>& A, const FiniteModule<F>& B) {
  require(A.n == B.n, "summands need matching n");
  FiniteModule<F> S;
  S.n = A.n;
  S.dim = A.dim + B.dim;
  for (int i = 1; i < A.n; ++i) {
    Mat<F> M(S.dim, S.dim);
    for (int r = 0; r < A.dim; ++r)
      for (int c = 0; c < A.dim; ++c) M[r][c] = A.action(i)[r][c];
    for (int r = 0; r < B.dim; ++r)
      for (int c = 0; c < B.dim; ++c) M[A.dim + r][A.dim + c] = B.action(i)[r][c];
    S.gen.push_back(std::move(M));
  }
  if (A.degrees && B.degrees) {
    std::vector<int> degs = *A.degrees;
    degs.insert(degs.end(), B.degrees->begin(), B.degrees->end());
    S.degrees = degs;
  }
  if (A.length_levels && B.length_levels) {
    std::vector<int> lv = *A.length_levels;
    lv.insert(lv.end(), B.length_levels->begin(), B.length_levels->end());
    S.length_levels = lv;
  }
  if (!A.basis_labels.empty() && !B.basis_labels.empty()) {
    S.basis_labels = A.basis_labels;
    S.basis_labels.insert(S.basis_labels.end(), B.basis_labels.begin(), B.basis_labels.end());
  }
  return S;
}

}  // namespace hk
