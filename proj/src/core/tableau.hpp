#pragma once

#include "core/permutation.hpp"

namespace hk {

// Fillings of two kinds of diagram.
//
// Straight shapes use a partition with rows indexed top to bottom (row r has
// lam_r cells, columns increase strictly downward, rows weakly or strictly
// increase rightward).
//
// Ribbon shapes use a composition with rows indexed bottom to top; row r
// occupies columns [start_r, start_r + a_r - 1] where start_1 = 1 and each
// row starts in the column where the previous one ends.  The only vertical
// adjacencies are the shared corner columns, where the upper entry must be
// smaller than the lower one.
class Tableau {
 public:
  enum class Kind { straight, ribbon };

  static Tableau straight(Partition shape, std::vector<std::vector<int>> rows);
  static Tableau ribbon(Composition shape, std::vector<std::vector<int>> rows);

  Kind kind() const { return kind_; }
  int size() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition straight_shape() const;
  Composition ribbon_shape() const;

  bool is_standard() const;
  bool is_semistandard() const;        // straight shapes only
  std::vector<int> content(int max_value) const;

  // Ribbon: concatenation of rows bottom to top.
  std::vector<int> reading_word() const;

  // Standard tableaux: i such that i+1 sits in a row strictly below i on the
  // page (row indices grow downward for straight shapes, upward for ribbons).
  // These are the descents of the inverse of the reading word.
  std::vector<int> descents() const;
  int maj() const;

  // Row index of each value in a standard filling, 0-based per kind's
  // orientation; entry v at row_of_values()[v].
  std::vector<int> row_of_values() const;

  std::string str() const;

  bool operator==(const Tableau& o) const;
  bool operator<(const Tableau& o) const;

 private:
  Kind kind_ = Kind::straight;
  std::vector<int> shape_;
  std::vector<std::vector<int>> rows_;
};

// Column start of each ribbon row, bottom to top (1-based columns).
std::vector<int> ribbon_row_starts(const Composition& a);

// Ribbon tableau whose reading word is w, rows cut by the parts of a.
Tableau ribbon_from_word(const Composition& a, const Permutation& w);

// Fill columns left to right, each top to bottom; its reading word is w0(a),
// the minimum of the descent class of a in left weak order.
Tableau ribbon_column_filling(const Composition& a);
Permutation w0_of(const Composition& a);

// Fill rows top to bottom, each left to right; reading word w1(a), the
// maximum of the descent class.
Tableau ribbon_row_filling(const Composition& a);
Permutation w1_of(const Composition& a);

std::vector<Tableau> standard_tableaux(const Composition& ribbon,
                                       int bound = kDefaultMaxN);
std::vector<Tableau> standard_tableaux(const Partition& shape,
                                       int bound = kDefaultMaxN);

// Number of semistandard tableaux of straight shape lam and content mu.
Int kostka_number(const Partition& lam, const std::vector<int>& mu,
                  int bound = kDefaultMaxN);

// Row insertion on a lex-sorted biword (top weakly increasing, ties sorted by
// bottom).  Returns the insertion tableau P (entries from bottom) and the
// recording tableau Q (entries from top).
std::pair<Tableau, Tableau> rsk(const std::vector<int>& top,
                                const std::vector<int>& bottom);

}  // namespace hk
