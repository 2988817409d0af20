#include "core/standard_modules.hpp"

#include <algorithm>
#include <map>

namespace hk {

ActionTable regular_table(int n) {
  guard_n(n, 8, "regular module");
  std::vector<Permutation> perms = all_permutations(n);
  std::map<Permutation, int> index;
  for (size_t j = 0; j < perms.size(); ++j) index.emplace(perms[j], static_cast<int>(j));
  ActionTable tb;
  tb.n = n;
  tb.dim = static_cast<int>(perms.size());
  tb.arrows.assign(n - 1, std::vector<ActionArrow>(tb.dim));
  for (size_t j = 0; j < perms.size(); ++j) {
    const Permutation& w = perms[j];
    tb.levels.push_back(static_cast<int>(w.inversions()));
    tb.labels.push_back("T" + w.str());
    for (int i = 1; i < n; ++i) {
      Permutation sw = w.left_mul_s(i);
      if (sw.inversions() > w.inversions()) {
        tb.arrows[i - 1][j] = {index.at(sw), 1};
      } else {
        tb.arrows[i - 1][j] = {static_cast<int>(j), -1};
      }
    }
  }
  tb.cyclic_index = index.at(Permutation::identity(n));
  return tb;
}

ActionTable projective_table(const Composition& alpha) {
  int n = alpha.size();
  guard_n(n, 10, "projective module");
  std::vector<Tableau> tabs = standard_tableaux(alpha);
  std::sort(tabs.begin(), tabs.end(), [](const Tableau& a, const Tableau& b) {
    return a.reading_word() < b.reading_word();
  });
  std::map<Permutation, int> index;
  for (size_t j = 0; j < tabs.size(); ++j)
    index.emplace(Permutation(tabs[j].reading_word()), static_cast<int>(j));

  ActionTable tb;
  tb.n = n;
  tb.dim = static_cast<int>(tabs.size());
  tb.arrows.assign(std::max(0, n - 1), std::vector<ActionArrow>(tb.dim));
  for (size_t j = 0; j < tabs.size(); ++j) {
    const Tableau& tau = tabs[j];
    Permutation w(tau.reading_word());
    tb.levels.push_back(static_cast<int>(w.inversions()));
    tb.labels.push_back(tau.str());
    std::vector<int> row_of = tau.row_of_values();
    for (int i = 1; i < n; ++i) {
      if (row_of[i] > row_of[i + 1]) {
        tb.arrows[i - 1][j] = {static_cast<int>(j), -1};
      } else if (row_of[i] == row_of[i + 1]) {
        tb.arrows[i - 1][j] = {-1, 0};
      } else {
        // swapping i and i+1 in the filling swaps them as values of the
        // reading word
        tb.arrows[i - 1][j] = {index.at(w.left_mul_s(i)), 1};
      }
    }
  }
  Tableau col = ribbon_column_filling(alpha);
  tb.cyclic_index = index.at(Permutation(col.reading_word()));
  return tb;
}

ActionTable simple_table(const Composition& alpha) {
  int n = alpha.size();
  ActionTable tb;
  tb.n = n;
  tb.dim = 1;
  tb.arrows.assign(std::max(0, n - 1), std::vector<ActionArrow>(1));
  for (int i = 1; i < n; ++i) {
    if (alpha.has_descent(i)) tb.arrows[i - 1][0] = {0, -1};
    else tb.arrows[i - 1][0] = {-1, 0};
  }
  tb.levels = {0};
  tb.labels = {"C" + alpha.str()};
  tb.cyclic_index = 0;
  return tb;
}

Permutation parabolic_longest(const Composition& alpha) {
  int n = alpha.size();
  std::vector<int> img(n);
  int a = 1;
  while (a <= n) {
    int b = a;
    while (b < n && alpha.has_descent(b)) ++b;
    // positions a..b get reversed
    for (int p = a; p <= b; ++p) img[p - 1] = a + b - p;
    a = b + 1;
  }
  return Permutation(img);
}

std::vector<std::pair<Permutation, std::vector<Rat>>> norton_basis(const Composition& alpha) {
  int n = alpha.size();
  guard_n(n, 8, "norton basis");
  std::vector<Permutation> perms = all_permutations(n);
  std::map<Permutation, int> index;
  for (size_t j = 0; j < perms.size(); ++j) index.emplace(perms[j], static_cast<int>(j));

  HeckeElement tp = HeckeElement::tprime(parabolic_longest(alpha.complement()));
  std::vector<std::pair<Permutation, std::vector<Rat>>> out;
  for (const Permutation& w : descent_class(alpha)) {
    HeckeElement el = tp;
    std::vector<int> word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) el = el.t_mul(*it);
    std::vector<Rat> coords(perms.size(), Rat(0));
    for (const auto& [u, c] : el.terms()) coords[index.at(u)] = c;
    out.emplace_back(w, std::move(coords));
  }
  return out;
}

}  // namespace hk
