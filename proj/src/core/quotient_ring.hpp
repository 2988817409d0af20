#pragma once

#include <map>
#include <vector>

#include "core/linalg.hpp"
#include "core/mpoly.hpp"

namespace hk {

// Monomial exponent vectors of total degree d in descending plain lex order
// (x_1 heaviest), the column order used by the per degree echelons.
std::vector<std::vector<int>> monomials_of_degree(int nvars, int d);

// Integer coefficient transfer into the working field.
template <class F>
struct IntTo;

template <>
struct IntTo<Rat> {
  static Rat conv(const Int& v, const Rat&) { return Rat(v); }
};

template <>
struct IntTo<Fp> {
  static Fp conv(const Int& v, const Fp& sample) {
    require(sample.p > 0, "field sample must carry a modulus");
    Int r = v % sample.p;
    return Fp(static_cast<int64_t>(r), sample.p);
  }
};

// Graded quotient of F[x_1..x_nvars] by a homogeneous ideal, with lazy per
// degree echelon normal forms.  Reduced vectors vanish on the pivot (ideal
// leading) columns; the surviving columns index the quotient basis monomials.
template <class F>
class QuotientRing {
 public:
  QuotientRing(int nvars, std::vector<MPoly> gens, int degree_cap, F sample)
      : nvars_(nvars), cap_(degree_cap), sample_(sample), gens_(std::move(gens)) {
    require(nvars >= 1, "need at least one variable");
    for (const auto& g : gens_) {
      require(g.nvars() == nvars_, "generator variable count mismatch");
      require(!g.is_zero() && g.is_homogeneous(), "generators must be homogeneous and nonzero");
    }
  }

  int nvars() const { return nvars_; }
  int degree_cap() const { return cap_; }
  const std::vector<MPoly>& gens() const { return gens_; }

  const std::vector<std::vector<int>>& degree_monomials(int d) {
    auto it = monos_.find(d);
    if (it == monos_.end())
      it = monos_.emplace(d, monomials_of_degree(nvars_, d)).first;
    return it->second;
  }

  // Coefficient vector of the degree d part of f in column order.
  Vec<F> to_vec(const MPoly& f, int d) {
    const auto& cols = degree_monomials(d);
    const auto& index = column_index(d);
    Vec<F> v(cols.size(), F(0));
    for (const auto& [e, c] : f.terms()) {
      int deg = 0;
      for (int x : e) deg += x;
      if (deg != d) continue;
      v[index.at(e)] = IntTo<F>::conv(c, sample_);
    }
    return v;
  }

  Vec<F> normal_form_vec(int d, const Vec<F>& v) { return echelon(d).reduce(v); }

  bool vec_in_ideal(int d, const Vec<F>& v) { return echelon(d).contains(v); }

  // Membership of a not necessarily homogeneous polynomial.
  bool contains(const MPoly& f) {
    if (f.is_zero()) return true;
    int top = f.total_degree();
    require(top <= cap_, "polynomial degree exceeds the ring's degree cap");
    for (int d = 0; d <= top; ++d) {
      MPoly part = f.homogeneous_part(d);
      if (part.is_zero()) continue;
      if (!vec_in_ideal(d, to_vec(part, d))) return false;
    }
    return true;
  }

  // Column indices of the quotient basis monomials in degree d.
  const std::vector<int>& quotient_columns(int d) {
    build_degree(d);
    return qcols_.at(d);
  }

  int quotient_dim(int d) { return static_cast<int>(quotient_columns(d).size()); }

  // Coordinates of the degree d part of f on the quotient basis of degree d.
  Vec<F> quotient_coords(const MPoly& f, int d) {
    Vec<F> red = normal_form_vec(d, to_vec(f, d));
    const auto& qc = quotient_columns(d);
    Vec<F> out(qc.size(), F(0));
    for (size_t k = 0; k < qc.size(); ++k) out[k] = red[qc[k]];
    return out;
  }

  // Echelonized spanning rows of the degree d part of the ideal.
  const std::vector<Vec<F>>& ideal_rows(int d) {
    build_degree(d);
    return ech_.at(d).rows;
  }

  // Quotient basis monomials of degree d.
  std::vector<std::vector<int>> quotient_basis(int d) {
    const auto& cols = degree_monomials(d);
    std::vector<std::vector<int>> out;
    for (int c : quotient_columns(d)) out.push_back(cols[c]);
    return out;
  }

 private:
  const std::map<std::vector<int>, int>& column_index(int d) {
    auto it = colidx_.find(d);
    if (it == colidx_.end()) {
      const auto& cols = degree_monomials(d);
      std::map<std::vector<int>, int> m;
      for (size_t k = 0; k < cols.size(); ++k) m.emplace(cols[k], static_cast<int>(k));
      it = colidx_.emplace(d, std::move(m)).first;
    }
    return it->second;
  }

  Echelon<F>& echelon(int d) {
    build_degree(d);
    return ech_.at(d);
  }

  void build_degree(int d) {
    require(d >= 0 && d <= cap_, "degree outside the ring's cap");
    if (ech_.count(d)) return;
    const auto& cols = degree_monomials(d);
    Echelon<F> ech(static_cast<int>(cols.size()));
    for (const auto& g : gens_) {
      int e = g.total_degree();
      if (e > d) continue;
      for (const auto& m : monomials_of_degree(nvars_, d - e)) {
        MPoly prod = MPoly::monomial(m) * g;
        ech.add(to_vec_raw(prod, d, cols));
      }
    }
    std::vector<bool> is_pivot(cols.size(), false);
    for (int p : ech.pivots) is_pivot[p] = true;
    std::vector<int> qc;
    for (size_t k = 0; k < cols.size(); ++k)
      if (!is_pivot[k]) qc.push_back(static_cast<int>(k));
    qcols_.emplace(d, std::move(qc));
    ech_.emplace(d, std::move(ech));
  }

  // to_vec without triggering build_degree recursion.
  Vec<F> to_vec_raw(const MPoly& f, int d, const std::vector<std::vector<int>>& cols) {
    const auto& index = column_index(d);
    Vec<F> v(cols.size(), F(0));
    for (const auto& [e, c] : f.terms()) {
      int deg = 0;
      for (int x : e) deg += x;
      if (deg != d) continue;
      v[index.at(e)] = IntTo<F>::conv(c, sample_);
    }
    return v;
  }

  int nvars_;
  int cap_;
  F sample_;
  std::vector<MPoly> gens_;
  std::map<int, std::vector<std::vector<int>>> monos_;
  std::map<int, std::map<std::vector<int>, int>> colidx_;
  std::map<int, Echelon<F>> ech_;
  std::map<int, std::vector<int>> qcols_;
};

}  // namespace hk
