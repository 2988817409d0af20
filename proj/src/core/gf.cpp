#include "core/gf.hpp"

#include "core/ribbon_numbers.hpp"

namespace hk {

namespace {

// Polynomial coefficients c[0..deg] over F_p, c[deg] != 0.
int poly_deg(const std::vector<int>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i]) return i;
  return -1;
}

// Remainder of a modulo b over F_p.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int64_t p) {
  int db = poly_deg(b);
  require(db >= 0, "polynomial modulus is zero");
  // b is monic in all uses.
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    int64_t lead = a[da];
    for (int i = 0; i <= db; ++i) {
      a[da - db + i] = static_cast<int>(
          ((a[da - db + i] - lead * b[i]) % p + p) % p);
    }
  }
  a.resize(db);
  return a;
}

std::vector<int> decode(int64_t x, int64_t p, int e) {
  std::vector<int> c(e);
  for (int i = 0; i < e; ++i) {
    c[i] = static_cast<int>(x % p);
    x /= p;
  }
  return c;
}

int64_t encode(const std::vector<int>& c, int64_t p) {
  int64_t x = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) x = x * p + c[i];
  return x;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& m, int64_t p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + int64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(prod), m, p);
}

bool is_irreducible(const std::vector<int>& f, int64_t p, int e) {
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int d = 1; 2 * d <= e; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t x = 0; x < count; ++x) {
      std::vector<int> g = decode(x, p, d);
      g.push_back(1);  // monic
      if (poly_deg(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

GfTable::GfTable(int64_t q) : q_(q) {
  require(is_prime_power(q), "GF order must be a prime power");
  require(q <= 512, "GF table capped at q <= 512");
  p_ = 2;
  while (q % p_ != 0) ++p_;
  e_ = 0;
  int64_t t = q;
  while (t > 1) {
    t /= p_;
    ++e_;
  }

  irred_.assign(e_ + 1, 0);
  irred_[e_] = 1;
  if (e_ == 1) {
    // x itself would be reducible-free but we never reduce for e=1.
  } else {
    int64_t count = 1;
    for (int i = 0; i < e_; ++i) count *= p_;
    bool found = false;
    for (int64_t x = 0; x < count && !found; ++x) {
      std::vector<int> f = decode(x, p_, e_);
      f.push_back(1);
      if (is_irreducible(f, p_, e_)) {
        irred_ = f;
        found = true;
      }
    }
    check(found, "no irreducible polynomial found");
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, -1);
  for (int64_t a = 0; a < q_; ++a) {
    std::vector<int> ca = decode(a, p_, e_);
    std::vector<int> na(e_);
    for (int i = 0; i < e_; ++i) na[i] = static_cast<int>((p_ - ca[i]) % p_);
    neg_[a] = static_cast<int>(encode(na, p_));
    for (int64_t b = 0; b < q_; ++b) {
      std::vector<int> cb = decode(b, p_, e_);
      std::vector<int> s(e_);
      for (int i = 0; i < e_; ++i) s[i] = static_cast<int>((ca[i] + cb[i]) % p_);
      add_[a * q_ + b] = static_cast<int>(encode(s, p_));
      std::vector<int> m = poly_mul_mod(ca, cb, irred_, p_);
      m.resize(e_);
      int64_t prod = encode(m, p_);
      mul_[a * q_ + b] = static_cast<int>(prod);
      if (prod == 1) inv_[a] = static_cast<int>(b);
    }
  }
  for (int64_t a = 1; a < q_; ++a)
    check(inv_[a] >= 0, "GF element without inverse");
}

int GfTable::inv(int a) const {
  require(a != 0, "division by zero in GF");
  return inv_[a];
}

}  // namespace hk
