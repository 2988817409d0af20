#pragma once

#include <compare>
#include "core/composition.hpp"

namespace hk {

// Permutation of {1..n} in one-line notation; w(i) is 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation longest(int n);        // w(i) = n+1-i

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& o) const;  // (w*u)(i) = w(u(i))
  bool is_identity() const;

  int inversions() const;
  std::vector<int> descents() const;        // {i : w(i) > w(i+1)}
  int maj() const;
  Composition descent_composition() const;

  Permutation left_mul_s(int i) const;      // s_i * w: swap values i, i+1
  Permutation right_mul_s(int i) const;     // w * s_i: swap positions i, i+1

  // Reduced word i1..ik with w = s_{i1} * ... * s_{ik}, built by repeatedly
  // stripping the leftmost (right-)descent; deterministic.
  std::vector<int> reduced_word() const;

  std::string str() const;                  // "[2,1,4,3]"

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  auto operator<=>(const Permutation& o) const { return img_ <=> o.img_; }

 private:
  std::vector<int> img_;
};

// u <= w in left weak order: inv(w) = inv(u) + inv(w u^-1).
bool left_weak_leq(const Permutation& u, const Permutation& w);

// All of S_n in lex order on one-line notation.
std::vector<Permutation> all_permutations(int n, int bound = kDefaultMaxN);

// {w : descents(w) = descents(a)}, lex order on one-line notation.
// First element is the ribbon column filling w0(a), last the row filling w1(a).
std::vector<Permutation> descent_class(const Composition& a, int bound = kDefaultMaxN);

}  // namespace hk
