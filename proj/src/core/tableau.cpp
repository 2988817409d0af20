#include "core/tableau.hpp"

#include <algorithm>
#include <map>

namespace hk {

Tableau Tableau::straight(Partition shape, std::vector<std::vector<int>> rows) {
  require(is_partition(shape), "straight shape must be a partition");
  require(shape.size() == rows.size(), "row count does not match shape");
  for (size_t r = 0; r < rows.size(); ++r)
    require(static_cast<int>(rows[r].size()) == shape[r],
            "row length does not match shape");
  Tableau t;
  t.kind_ = Kind::straight;
  t.shape_ = std::move(shape);
  t.rows_ = std::move(rows);
  return t;
}

Tableau Tableau::ribbon(Composition shape, std::vector<std::vector<int>> rows) {
  require(static_cast<size_t>(shape.length()) == rows.size(),
          "row count does not match shape");
  for (int r = 0; r < shape.length(); ++r)
    require(static_cast<int>(rows[r].size()) == shape.parts()[r],
            "row length does not match shape");
  Tableau t;
  t.kind_ = Kind::ribbon;
  t.shape_ = shape.parts();
  t.rows_ = std::move(rows);
  return t;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

Partition Tableau::straight_shape() const {
  require(kind_ == Kind::straight, "not a straight tableau");
  return shape_;
}

Composition Tableau::ribbon_shape() const {
  require(kind_ == Kind::ribbon, "not a ribbon tableau");
  return Composition(shape_);
}

bool Tableau::is_standard() const {
  int n = size();
  std::vector<char> seen(n + 1, 0);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
    }
  for (const auto& row : rows_)
    for (size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] >= row[c]) return false;
  if (kind_ == Kind::straight) {
    for (size_t r = 1; r < rows_.size(); ++r)
      for (size_t c = 0; c < rows_[r].size(); ++c)
        if (rows_[r - 1][c] >= rows_[r][c]) return false;
  } else {
    // Shared corner: first cell of row r+1 sits above last cell of row r.
    for (size_t r = 0; r + 1 < rows_.size(); ++r)
      if (rows_[r + 1].front() >= rows_[r].back()) return false;
  }
  return true;
}

bool Tableau::is_semistandard() const {
  require(kind_ == Kind::straight, "semistandardness is for straight shapes");
  for (const auto& row : rows_) {
    for (int v : row)
      if (v < 1) return false;
    for (size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] > row[c]) return false;
  }
  for (size_t r = 1; r < rows_.size(); ++r)
    for (size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r - 1][c] >= rows_[r][c]) return false;
  return true;
}

std::vector<int> Tableau::content(int max_value) const {
  std::vector<int> cnt(max_value, 0);
  for (const auto& row : rows_)
    for (int v : row) {
      require(v >= 1 && v <= max_value, "entry outside content range");
      ++cnt[v - 1];
    }
  return cnt;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::vector<int> Tableau::row_of_values() const {
  int n = size();
  std::vector<int> row_of(n + 1, -1);
  for (size_t r = 0; r < rows_.size(); ++r)
    for (int v : rows_[r]) {
      require(v >= 1 && v <= n && row_of[v] < 0, "entries are not 1..n");
      row_of[v] = static_cast<int>(r);
    }
  return row_of;
}

std::vector<int> Tableau::descents() const {
  int n = size();
  std::vector<int> row_of = row_of_values();
  std::vector<int> d;
  for (int i = 1; i < n; ++i) {
    bool below = kind_ == Kind::straight ? row_of[i + 1] > row_of[i]
                                         : row_of[i + 1] < row_of[i];
    if (below) d.push_back(i);
  }
  return d;
}

int Tableau::maj() const {
  int m = 0;
  for (int d : descents()) m += d;
  return m;
}

std::string Tableau::str() const {
  std::string s;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += "/";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(rows_[r][c]);
    }
  }
  return s;
}

bool Tableau::operator==(const Tableau& o) const {
  return kind_ == o.kind_ && shape_ == o.shape_ && rows_ == o.rows_;
}

bool Tableau::operator<(const Tableau& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (shape_ != o.shape_) return shape_ < o.shape_;
  return rows_ < o.rows_;
}

std::vector<int> ribbon_row_starts(const Composition& a) {
  std::vector<int> starts;
  int s = 1;
  for (int r = 0; r < a.length(); ++r) {
    starts.push_back(s);
    s += a.parts()[r] - 1;
  }
  return starts;
}

Tableau ribbon_from_word(const Composition& a, const Permutation& w) {
  require(a.size() == w.n(), "word length does not match ribbon size");
  std::vector<std::vector<int>> rows;
  int pos = 1;
  for (int p : a.parts()) {
    std::vector<int> row;
    for (int c = 0; c < p; ++c) row.push_back(w(pos++));
    rows.push_back(std::move(row));
  }
  return Tableau::ribbon(a, std::move(rows));
}

Tableau ribbon_column_filling(const Composition& a) {
  std::vector<int> starts = ribbon_row_starts(a);
  int ell = a.length();
  std::vector<std::vector<int>> rows(ell);
  for (int r = 0; r < ell; ++r) rows[r].assign(a.parts()[r], 0);
  int width = ell ? starts.back() + a.parts()[ell - 1] - 1 : 0;
  int next = 1;
  for (int col = 1; col <= width; ++col) {
    // Rows meeting this column form a contiguous run; fill top to bottom.
    std::vector<int> hit;
    for (int r = 0; r < ell; ++r)
      if (starts[r] <= col && col <= starts[r] + a.parts()[r] - 1)
        hit.push_back(r);
    for (auto it = hit.rbegin(); it != hit.rend(); ++it)
      rows[*it][col - starts[*it]] = next++;
  }
  return Tableau::ribbon(a, std::move(rows));
}

Permutation w0_of(const Composition& a) {
  return Permutation(ribbon_column_filling(a).reading_word());
}

Tableau ribbon_row_filling(const Composition& a) {
  int ell = a.length();
  std::vector<std::vector<int>> rows(ell);
  int next = 1;
  for (int r = ell - 1; r >= 0; --r)
    for (int c = 0; c < a.parts()[r]; ++c) rows[r].push_back(next++);
  return Tableau::ribbon(a, std::move(rows));
}

Permutation w1_of(const Composition& a) {
  return Permutation(ribbon_row_filling(a).reading_word());
}

namespace {

// Values are placed in increasing order; a row may close (receive its last
// cell) only once the row above has started, so shared corners stay strict.
void ribbon_syt_rec(const Composition& a, int placed, std::vector<int>& filled,
                    std::vector<std::vector<int>>& rows,
                    std::vector<Tableau>& out) {
  int n = a.size(), ell = a.length();
  if (placed == n) {
    out.push_back(Tableau::ribbon(a, rows));
    return;
  }
  for (int r = 0; r < ell; ++r) {
    if (filled[r] >= a.parts()[r]) continue;
    bool closing = filled[r] + 1 == a.parts()[r];
    if (closing && r + 1 < ell && filled[r + 1] == 0) continue;
    rows[r].push_back(placed + 1);
    ++filled[r];
    ribbon_syt_rec(a, placed + 1, filled, rows, out);
    --filled[r];
    rows[r].pop_back();
  }
}

void straight_syt_rec(const Partition& lam, int placed, std::vector<int>& filled,
                      std::vector<std::vector<int>>& rows,
                      std::vector<Tableau>& out) {
  int n = 0;
  for (int p : lam) n += p;
  if (placed == n) {
    out.push_back(Tableau::straight(lam, rows));
    return;
  }
  for (size_t r = 0; r < lam.size(); ++r) {
    if (filled[r] >= lam[r]) continue;
    if (r > 0 && filled[r - 1] <= filled[r]) continue;
    rows[r].push_back(placed + 1);
    ++filled[r];
    straight_syt_rec(lam, placed + 1, filled, rows, out);
    --filled[r];
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Composition& ribbon, int bound) {
  guard_n(ribbon.size(), bound, "standard_tableaux");
  std::vector<Tableau> out;
  std::vector<int> filled(ribbon.length(), 0);
  std::vector<std::vector<int>> rows(ribbon.length());
  ribbon_syt_rec(ribbon, 0, filled, rows, out);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape, int bound) {
  require(is_partition(shape), "standard_tableaux: not a partition");
  int n = 0;
  for (int p : shape) n += p;
  guard_n(n, bound, "standard_tableaux");
  std::vector<Tableau> out;
  std::vector<int> filled(shape.size(), 0);
  std::vector<std::vector<int>> rows(shape.size());
  straight_syt_rec(shape, 0, filled, rows, out);
  return out;
}

namespace {

// Distribute the copies of one value across rows; count_r new cells in row r
// must keep rows within shape and land strictly below shorter prefixes.
void kostka_value_rec(const Partition& lam, const std::vector<int>& before,
                      std::vector<int>& after, int row, int remaining,
                      const std::vector<int>& mu, size_t vi, Int& acc);

void kostka_rec(const Partition& lam, std::vector<int>& filled,
                const std::vector<int>& mu, size_t vi, Int& acc) {
  if (vi == mu.size()) {
    for (size_t r = 0; r < lam.size(); ++r)
      if (filled[r] != lam[r]) return;
    acc += 1;
    return;
  }
  std::vector<int> after = filled;
  kostka_value_rec(lam, filled, after, 0, mu[vi], mu, vi, acc);
}

void kostka_value_rec(const Partition& lam, const std::vector<int>& before,
                      std::vector<int>& after, int row, int remaining,
                      const std::vector<int>& mu, size_t vi, Int& acc) {
  if (remaining == 0) {
    std::vector<int> next = after;
    kostka_rec(lam, next, mu, vi + 1, acc);
    return;
  }
  if (row >= static_cast<int>(lam.size())) return;
  int cap = lam[row] - before[row];
  if (row > 0) cap = std::min(cap, before[row - 1] - before[row]);
  for (int c = std::min(cap, remaining); c >= 0; --c) {
    after[row] = before[row] + c;
    kostka_value_rec(lam, before, after, row + 1, remaining - c, mu, vi, acc);
  }
  after[row] = before[row];
}

}  // namespace

Int kostka_number(const Partition& lam, const std::vector<int>& mu, int bound) {
  require(is_partition(lam), "kostka_number: not a partition");
  int n = 0, m = 0;
  for (int p : lam) n += p;
  for (int p : mu) {
    require(p >= 0, "content entries must be nonnegative");
    m += p;
  }
  require(n == m, "shape size and content size differ");
  guard_n(n, bound, "kostka_number");
  Int acc = 0;
  std::vector<int> filled(lam.size(), 0);
  kostka_rec(lam, filled, mu, 0, acc);
  return acc;
}

std::pair<Tableau, Tableau> rsk(const std::vector<int>& top,
                                const std::vector<int>& bottom) {
  require(top.size() == bottom.size(), "biword rows differ in length");
  for (size_t i = 1; i < top.size(); ++i) {
    require(top[i - 1] <= top[i], "biword top row must be weakly increasing");
    if (top[i - 1] == top[i])
      require(bottom[i - 1] <= bottom[i],
              "biword must be sorted lexicographically");
  }
  std::vector<std::vector<int>> p, q;
  for (size_t k = 0; k < top.size(); ++k) {
    int x = bottom[k];
    size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({top[k]});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(top[k]);
        break;
      }
      std::swap(*it, x);
      ++r;
    }
  }
  Partition shape;
  for (const auto& row : p) shape.push_back(static_cast<int>(row.size()));
  return {Tableau::straight(shape, p), Tableau::straight(shape, q)};
}

}  // namespace hk
