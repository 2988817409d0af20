#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/composition.hpp"
#include "core/module.hpp"
#include "core/mpoly.hpp"
#include "core/permutation.hpp"
#include "core/quotient_ring.hpp"
#include "core/tableau.hpp"

namespace hk {

// e_1..e_n, cutting out the coinvariant algebra.
std::vector<MPoly> symmetric_ideal_generators(int n);

// Garsia-Procesi ideal of a partition mu of n: e_r(S) over subsets S with
// |S| = k and k - d_k < r <= k, where d_k sums the k smallest entries of the
// conjugate of mu padded with zeros to length n.
std::vector<MPoly> tanisaki_generators(int n, const Partition& mu);

// For the hook (n-h+1, 1^{h-1}) the same ideal is e_1..e_n plus the
// squarefree monomials of degree h.
std::vector<MPoly> hook_ideal_generators(int n, int h);

struct IdealWitness {
  int op = 0;     // index of the escaping bar operator
  MPoly element;  // ideal member (integer coefficients)
  MPoly image;    // its bar image, outside the ideal
};

// True when f is invariant under every adjacent transposition.
bool is_symmetric_poly(const MPoly& f);

// Degree by degree test that the bar operators map the ideal into itself.
// pibar_i(e*f) = e*pibar_i(f) for symmetric e, so only monomial products
// with the non symmetric generators can escape.  Once the ideal fills a
// whole degree it fills every higher one, so the scan stops there.  Returns
// the first escape found, or nothing when the ideal is preserved through
// max_degree.
template <class F>
std::optional<IdealWitness> demazure_ideal_witness(int n, const std::vector<MPoly>& gens,
                                                   int max_degree, F sample) {
  std::vector<MPoly> moving;
  for (const auto& g : gens)
    if (!is_symmetric_poly(g)) moving.push_back(g);
  if (moving.empty()) return std::nullopt;
  QuotientRing<F> Q(n, gens, max_degree, sample);
  for (int d = 0; d <= max_degree; ++d) {
    if (d > 0 && Q.quotient_dim(d) == 0) break;
    for (const auto& g : moving) {
      int e = g.total_degree();
      if (e > d) continue;
      for (const auto& m : monomials_of_degree(n, d - e)) {
        MPoly f = MPoly::monomial(m) * g;
        for (int i = 1; i < n; ++i) {
          MPoly img = demazure_bar(i, f);
          if (!Q.contains(img)) return IdealWitness{i, f, img};
        }
      }
    }
  }
  return std::nullopt;
}

// Module on the atoms pibar_w(x_{D(w)}) of the listed permutations inside a
// quotient that the bar operators preserve.  Checks that per degree the atoms
// form a basis of the quotient, through every degree up to check_through when
// that is nonnegative.  Basis index follows perms; degree maj(w), filtration
// level inv(w).
template <class F>
FiniteModule<F> atom_quotient_module(QuotientRing<F>& Q, const std::vector<Permutation>& perms,
                                     int check_through = -1) {
  int n = Q.nvars();
  int dim = static_cast<int>(perms.size());
  std::vector<MPoly> atoms;
  atoms.reserve(dim);
  std::vector<int> degs(dim), lvls(dim);
  std::map<int, std::vector<int>> by_deg;
  for (int k = 0; k < dim; ++k) {
    const Permutation& w = perms[k];
    require(w.n() == n, "permutation size mismatch");
    atoms.push_back(demazure_bar_word(w, x_descent_set(n, w.descents())));
    degs[k] = w.maj();
    lvls[k] = w.inversions();
    by_deg[degs[k]].push_back(k);
  }
  int max_atom_deg = by_deg.empty() ? -1 : by_deg.rbegin()->first;
  for (int d = 0; d <= check_through; ++d) {
    int cnt = by_deg.count(d) ? static_cast<int>(by_deg.at(d).size()) : 0;
    require(cnt == Q.quotient_dim(d),
            "quotient dimension must match the atom count in each degree");
    // an empty degree forces every higher degree empty
    if (d > max_atom_deg && cnt == 0) break;
  }

  std::map<int, std::vector<Vec<F>>> coords;
  for (const auto& [d, idxs] : by_deg) {
    require(static_cast<int>(idxs.size()) == Q.quotient_dim(d),
            "atom count must match the quotient dimension in each degree");
    Echelon<F> ech(Q.quotient_dim(d));
    std::vector<Vec<F>> vs;
    for (int k : idxs) {
      Vec<F> v = Q.quotient_coords(atoms[k], d);
      require(ech.add(v), "atoms must be independent in the quotient");
      vs.push_back(std::move(v));
    }
    coords.emplace(d, std::move(vs));
  }

  FiniteModule<F> M;
  M.n = n;
  M.dim = dim;
  M.degrees = degs;
  M.length_levels = lvls;
  for (int k = 0; k < dim; ++k) M.basis_labels.push_back("atom" + perms[k].str());
  for (int i = 1; i < n; ++i) {
    Mat<F> A(dim, dim);
    for (const auto& [d, idxs] : by_deg) {
      std::vector<Vec<F>> targets;
      for (int k : idxs) targets.push_back(Q.quotient_coords(demazure_bar(i, atoms[k]), d));
      auto sol = in_basis(coords.at(d), targets);
      require(sol.has_value(), "bar image must stay inside the atom span");
      for (size_t bc = 0; bc < idxs.size(); ++bc)
        for (size_t br = 0; br < idxs.size(); ++br)
          A[idxs[br]][idxs[bc]] = (*sol)[br][bc];
    }
    M.gen.push_back(std::move(A));
  }
  return M;
}

// Permutations with descents contained in the set, lex order.
std::vector<Permutation> descents_within(int n, const std::vector<int>& allowed);

// The coinvariant algebra F[x]/(e_1..e_n) on all n! atoms, basis in lex order
// of the permutations.  Cyclic vector: sum of the block generators at w0(a).
template <class F>
FiniteModule<F> coinvariant_module(int n, F sample) {
  QuotientRing<F> Q(n, symmetric_ideal_generators(n), n * (n - 1) / 2, sample);
  auto perms = all_permutations(n);
  FiniteModule<F> M = atom_quotient_module(Q, perms, n * (n - 1) / 2);
  Vec<F> v(M.dim, F(0));
  for (int k = 0; k < M.dim; ++k)
    if (perms[k] == w0_of(perms[k].descent_composition())) v[k] = F(1);
  M.cyclic = v;
  return M;
}

// Garsia-Procesi quotient for the hook (n-h+1, 1^{h-1}) on the atoms with
// descents inside {1..h-1}.
template <class F>
FiniteModule<F> springer_hook_module(int n, int h, F sample) {
  require(h >= 1 && h <= n, "hook leg out of range");
  QuotientRing<F> Q(n, hook_ideal_generators(n, h), n * (n - 1) / 2, sample);
  std::vector<int> allowed;
  for (int i = 1; i < h; ++i) allowed.push_back(i);
  auto perms = descents_within(n, allowed);
  FiniteModule<F> M = atom_quotient_module(Q, perms, n * (n - 1) / 2);
  Vec<F> v(M.dim, F(0));
  for (int k = 0; k < M.dim; ++k)
    if (perms[k] == w0_of(perms[k].descent_composition())) v[k] = F(1);
  M.cyclic = v;
  return M;
}

// Positions (in lex order on S_n) of the descent class of alpha.
std::vector<int> block_indices(int n, const Composition& alpha);

// Checks that no generator matrix crosses between descent classes.
template <class F>
void check_block_diagonal(const FiniteModule<F>& M, const std::vector<Permutation>& perms) {
  require(static_cast<int>(perms.size()) == M.dim, "basis size mismatch");
  std::vector<Composition> cls;
  for (const auto& w : perms) cls.push_back(w.descent_composition());
  for (int i = 1; i < M.n; ++i)
    for (int r = 0; r < M.dim; ++r)
      for (int c = 0; c < M.dim; ++c)
        if (!is_zero(M.action(i)[r][c]))
          require(cls[r] == cls[c], "generator matrix crosses descent classes");
}

// Block of the coinvariant module on the descent class of alpha, with cyclic
// vector at w0(alpha) and filtration levels carried over.
template <class F>
FiniteModule<F> coinvariant_block(const FiniteModule<F>& M, const Composition& alpha) {
  std::vector<int> idx = block_indices(M.n, alpha);
  FiniteModule<F> B = coordinate_piece(M, idx);
  if (M.length_levels) {
    std::vector<int> lv;
    for (int j : idx) lv.push_back((*M.length_levels)[j]);
    B.length_levels = lv;
  }
  auto perms = all_permutations(M.n);
  Permutation w0 = w0_of(alpha);
  Vec<F> v(B.dim, F(0));
  for (size_t k = 0; k < idx.size(); ++k)
    if (perms[idx[k]] == w0) v[k] = F(1);
  B.cyclic = v;
  return B;
}

}  // namespace hk
