#include <doctest.h>

#include "core/permutation.hpp"
#include "core/qsym.hpp"
#include "core/ribbon_numbers.hpp"
#include "core/tableau.hpp"

using namespace hk;

TEST_CASE("fundamental and monomial expansions convert both ways") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      QSym f(QBasis::F, n);
      f.add_term(a, QtPoly(1));
      QSym m = f.to_basis(QBasis::M);
      // F_a = sum of M_b over refinements b of a
      for (const auto& [b, c] : m.terms()) {
        CHECK(coarsens(a, b));
        CHECK(c == QtPoly(1));
      }
      CHECK(m.to_basis(QBasis::F) == f);
    }
}

TEST_CASE("pairing is the Kronecker delta on dual bases") {
  int n = 4;
  for (const auto& a : compositions_of(n))
    for (const auto& b : compositions_of(n)) {
      QSym f(QBasis::F, n);
      f.add_term(a, QtPoly(1));
      NSym s(NBasis::s, n);
      s.add_term(b, QtPoly(1));
      CHECK(pairing(f, s) == (a == b ? QtPoly(1) : QtPoly()));

      QSym m(QBasis::M, n);
      m.add_term(a, QtPoly(1));
      NSym h(NBasis::h, n);
      h.add_term(b, QtPoly(1));
      CHECK(pairing(m, h) == (a == b ? QtPoly(1) : QtPoly()));
    }
}

TEST_CASE("complete basis expands in ribbons by coarsening") {
  int n = 4;
  for (const auto& a : compositions_of(n)) {
    NSym h(NBasis::h, n);
    h.add_term(a, QtPoly(1));
    NSym s = h.to_basis(NBasis::s);
    // h_a = sum of ribbons over coarsenings of a
    for (const auto& [b, c] : s.terms()) {
      CHECK(coarsens(b, a));
      CHECK(c == QtPoly(1));
    }
    CHECK(static_cast<int>(s.terms().size()) == (1 << static_cast<int>(a.descents().size())));
    CHECK(s.to_basis(NBasis::h) == h);
  }
}

TEST_CASE("ribbon functions expand over standard fillings") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      QSym direct(QBasis::F, n);
      for (const auto& w : descent_class(a)) {
        Composition d = w.inverse().descent_composition();
        direct.add_term(d, QtPoly(1));
      }
      CHECK(ribbon_schur_F(a) == direct);
    }
}

TEST_CASE("one-part and all-ones ribbons are complete and elementary") {
  int n = 4;
  auto rn = ribbon_schur_F(Composition({n}));
  CHECK(rn.terms().size() == 1);
  CHECK(rn.coeff(Composition({n})) == QtPoly(1));

  auto re = ribbon_schur_F(Composition({1, 1, 1, 1}));
  CHECK(re.terms().size() == 1);
  CHECK(re.coeff(Composition({1, 1, 1, 1})) == QtPoly(1));
}

TEST_CASE("straight shape functions count descents of standard tableaux") {
  for (const auto& lam : partitions_of(5)) {
    QSym s = schur_F(lam);
    CHECK(s.is_symmetric());
    // total coefficient mass is the number of standard tableaux
    Int total = 0;
    for (const auto& [a, c] : s.terms()) total += c.eval(1, 1);
    CHECK(total == static_cast<Int>(standard_tableaux(lam).size()));
  }
}

TEST_CASE("ribbon commutative images are signed sums of straight shapes") {
  // single ribbon (2,1): equals s_{(2,1)} as a symmetric function
  NSym r(NBasis::s, 3);
  r.add_term(Composition({2, 1}), QtPoly(1));
  QSym img = r.commutative_image(QBasis::F);
  CHECK(img == schur_F(Partition{2, 1}));

  // hook ribbons match hook shapes
  NSym r2(NBasis::s, 4);
  r2.add_term(Composition({3, 1}), QtPoly(1));
  CHECK(r2.commutative_image(QBasis::F) == schur_F(Partition{3, 1}));
}

TEST_CASE("symmetric detection and conversion to the schur basis") {
  QSym s = schur_F(Partition{2, 2});
  auto sym = s.to_symmetric();
  REQUIRE(sym.has_value());
  SymFn sch = sym->to_basis(SBasis::schur);
  CHECK(sch.coeff(Partition{2, 2}) == QtPoly(1));
  CHECK(sch.terms().size() == 1);

  QSym f(QBasis::F, 3);
  f.add_term(Composition({2, 1}), QtPoly(1));
  CHECK(!f.is_symmetric());
}

TEST_CASE("column Hall-Littlewood expansion") {
  QtPoly t = QtPoly::t();
  SymFn h2 = hl_column(2);
  CHECK(h2.coeff(Partition{2}) == QtPoly(1));
  CHECK(h2.coeff(Partition{1, 1}) == t);

  SymFn h3 = hl_column(3);
  CHECK(h3.coeff(Partition{3}) == QtPoly(1));
  CHECK(h3.coeff(Partition{2, 1}) == t + t * t);
  CHECK(h3.coeff(Partition{1, 1, 1}) == t * t * t);

  // coefficient of lambda: t^n(lam) [n]!_t / prod hook lengths [h]_t
  for (int n = 2; n <= 5; ++n) {
    SymFn h = hl_column(n);
    for (const auto& lam : partitions_of(n)) {
      QtPoly denom(1);
      for (int hl : hook_lengths(lam)) denom *= q_integer(hl);
      QtPoly expect = QtPoly::monomial(1, partition_nstat(lam), 0) * q_factorial(n);
      CHECK(h.coeff(lam) * denom.swap_variables() == expect.swap_variables());
    }
  }
}

TEST_CASE("hook Hall-Littlewood matches the graded ribbon sum") {
  for (int n = 2; n <= 5; ++n)
    for (int h = 1; h <= n; ++h) {
      Partition mu(1, n - h + 1);
      mu.resize(h, 1);
      SymFn lhs = hl_hook(mu);
      // sum over coarsenings of (1^{h-1}, n-h+1) of t^maj ribbon
      std::vector<int> fine(h - 1, 1);
      fine.push_back(n - h + 1);
      QSym rhs(QBasis::F, n);
      for (const auto& a : coarsenings(Composition(fine)))
        rhs = rhs + ribbon_schur_F(a).scale(QtPoly::monomial(1, 0, a.maj()));
      auto sym = rhs.to_symmetric();
      REQUIRE(sym.has_value());
      CHECK(sym->to_basis(SBasis::schur) == lhs.to_basis(SBasis::schur));
    }
}

TEST_CASE("full column matches the full hook") {
  for (int n = 2; n <= 5; ++n) {
    Partition col(n, 1);
    CHECK(hl_hook(col).to_basis(SBasis::schur) == hl_column(n).to_basis(SBasis::schur));
  }
}

TEST_CASE("complete homogeneous products expand by the Pieri rule") {
  SymFn hp = h_product_schur(Partition{2, 1});
  CHECK(hp.coeff(Partition{2, 1}) == QtPoly(1));
  CHECK(hp.coeff(Partition{3}) == QtPoly(1));
  CHECK(hp.coeff(Partition{1, 1, 1}) == QtPoly());
}
