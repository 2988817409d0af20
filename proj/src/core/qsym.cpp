#include "core/qsym.hpp"

#include <algorithm>
#include <sstream>

#include "core/ribbon_numbers.hpp"
#include "core/tableau.hpp"

namespace hk {

const char* qbasis_name(QBasis b) { return b == QBasis::M ? "M" : "F"; }
const char* nbasis_name(NBasis b) { return b == NBasis::h ? "h" : "s"; }
const char* sbasis_name(SBasis b) { return b == SBasis::m ? "m" : "s"; }

namespace {

// Compositions refining a: descent sets containing D(a), in mask order over
// the free positions.
std::vector<Composition> refinements(const Composition& a) {
  int n = a.size();
  std::vector<int> des = a.descents();
  std::vector<int> free;
  for (int i = 1; i < n; ++i)
    if (std::find(des.begin(), des.end(), i) == des.end()) free.push_back(i);
  std::vector<Composition> out;
  int f = static_cast<int>(free.size());
  for (int mask = 0; mask < (1 << f); ++mask) {
    std::vector<int> d = des;
    for (int k = 0; k < f; ++k)
      if (mask & (1 << k)) d.push_back(free[k]);
    std::sort(d.begin(), d.end());
    out.push_back(Composition::from_descents(d, n));
  }
  return out;
}

template <class K>
void add_into(std::map<K, QtPoly>& terms, const K& key, const QtPoly& c) {
  if (c.is_zero()) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <class K>
std::string format_terms(const std::map<K, QtPoly>& terms, const char* basis,
                         std::string (*keystr)(const K&)) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis << keystr(k);
  }
  return os.str();
}

std::string comp_str(const Composition& a) { return a.str(); }
std::string part_str(const Partition& p) { return partition_str(p); }

}  // namespace

QSym::QSym(QBasis basis, int n) : basis_(basis), n_(n) { require(n >= 0, "bad degree"); }

QtPoly QSym::coeff(const Composition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? QtPoly() : it->second;
}

void QSym::add_term(const Composition& a, const QtPoly& c) {
  require(a.size() == n_, "composition degree mismatch");
  add_into(terms_, a, c);
}

QSym QSym::operator+(const QSym& o) const {
  require(basis_ == o.basis_ && n_ == o.n_, "basis mismatch");
  QSym r = *this;
  for (const auto& [k, c] : o.terms_) add_into(r.terms_, k, c);
  return r;
}

QSym QSym::operator-(const QSym& o) const {
  require(basis_ == o.basis_ && n_ == o.n_, "basis mismatch");
  QSym r = *this;
  for (const auto& [k, c] : o.terms_) add_into(r.terms_, k, Int(-1) * c);
  return r;
}

QSym QSym::scale(const QtPoly& c) const {
  QSym r(basis_, n_);
  for (const auto& [k, v] : terms_) add_into(r.terms_, k, v * c);
  return r;
}

bool QSym::operator==(const QSym& o) const {
  require(n_ == o.n_, "degree mismatch");
  if (basis_ == o.basis_) return terms_ == o.terms_;
  return to_basis(QBasis::M).terms() == o.to_basis(QBasis::M).terms();
}

QSym QSym::to_basis(QBasis target) const {
  if (target == basis_) return *this;
  QSym r(target, n_);
  for (const auto& [a, c] : terms_) {
    for (const auto& b : refinements(a)) {
      if (basis_ == QBasis::F) {
        // F_a = sum over refinements b of M_b
        add_into(r.terms_, b, c);
      } else {
        // M_a = sum over refinements b of (-1)^(l(b)-l(a)) F_b
        int sign = ((b.length() - a.length()) % 2 == 0) ? 1 : -1;
        add_into(r.terms_, b, Int(sign) * c);
      }
    }
  }
  return r;
}

bool QSym::is_symmetric() const { return to_symmetric().has_value(); }

std::optional<SymFn> QSym::to_symmetric() const {
  QSym m = to_basis(QBasis::M);
  std::map<Partition, QtPoly> classes;
  // every composition of n must carry the coefficient of its sorted class
  for (const auto& a : compositions_of(n_)) {
    Partition lam = partition_of(a);
    QtPoly c = m.coeff(a);
    auto it = classes.find(lam);
    if (it == classes.end()) classes.emplace(lam, c);
    else if (!(it->second == c)) return std::nullopt;
  }
  SymFn out(SBasis::m, n_);
  for (const auto& [lam, c] : classes)
    if (!c.is_zero()) out.add_term(lam, c);
  return out;
}

std::string QSym::str() const { return format_terms(terms_, qbasis_name(basis_), comp_str); }

NSym::NSym(NBasis basis, int n) : basis_(basis), n_(n) { require(n >= 0, "bad degree"); }

QtPoly NSym::coeff(const Composition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? QtPoly() : it->second;
}

void NSym::add_term(const Composition& a, const QtPoly& c) {
  require(a.size() == n_, "composition degree mismatch");
  add_into(terms_, a, c);
}

NSym NSym::operator+(const NSym& o) const {
  require(basis_ == o.basis_ && n_ == o.n_, "basis mismatch");
  NSym r = *this;
  for (const auto& [k, c] : o.terms_) add_into(r.terms_, k, c);
  return r;
}

NSym NSym::operator-(const NSym& o) const {
  require(basis_ == o.basis_ && n_ == o.n_, "basis mismatch");
  NSym r = *this;
  for (const auto& [k, c] : o.terms_) add_into(r.terms_, k, Int(-1) * c);
  return r;
}

NSym NSym::scale(const QtPoly& c) const {
  NSym r(basis_, n_);
  for (const auto& [k, v] : terms_) add_into(r.terms_, k, v * c);
  return r;
}

bool NSym::operator==(const NSym& o) const {
  require(n_ == o.n_, "degree mismatch");
  if (basis_ == o.basis_) return terms_ == o.terms_;
  return to_basis(NBasis::h).terms() == o.to_basis(NBasis::h).terms();
}

NSym NSym::to_basis(NBasis target) const {
  if (target == basis_) return *this;
  NSym r(target, n_);
  for (const auto& [a, c] : terms_) {
    for (const auto& b : coarsenings(a)) {
      if (basis_ == NBasis::s) {
        // s_a = sum over coarsenings b of (-1)^(l(a)-l(b)) h_b
        int sign = ((a.length() - b.length()) % 2 == 0) ? 1 : -1;
        add_into(r.terms_, b, Int(sign) * c);
      } else {
        // h_a = sum over coarsenings b of s_b
        add_into(r.terms_, b, c);
      }
    }
  }
  return r;
}

QSym NSym::commutative_image(QBasis target) const {
  NSym s = to_basis(NBasis::s);
  QSym out(QBasis::F, n_);
  for (const auto& [a, c] : s.terms()) out = out + ribbon_schur_F(a).scale(c);
  return out.to_basis(target);
}

std::string NSym::str() const { return format_terms(terms_, nbasis_name(basis_), comp_str); }

SymFn::SymFn(SBasis basis, int n) : basis_(basis), n_(n) { require(n >= 0, "bad degree"); }

QtPoly SymFn::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? QtPoly() : it->second;
}

void SymFn::add_term(const Partition& p, const QtPoly& c) {
  int sz = 0;
  for (int x : p) sz += x;
  require(sz == n_, "partition degree mismatch");
  require(is_partition(p), "parts must be decreasing positive");
  add_into(terms_, p, c);
}

SymFn SymFn::operator+(const SymFn& o) const {
  require(basis_ == o.basis_ && n_ == o.n_, "basis mismatch");
  SymFn r = *this;
  for (const auto& [k, c] : o.terms_) add_into(r.terms_, k, c);
  return r;
}

SymFn SymFn::operator-(const SymFn& o) const {
  require(basis_ == o.basis_ && n_ == o.n_, "basis mismatch");
  SymFn r = *this;
  for (const auto& [k, c] : o.terms_) add_into(r.terms_, k, Int(-1) * c);
  return r;
}

SymFn SymFn::scale(const QtPoly& c) const {
  SymFn r(basis_, n_);
  for (const auto& [k, v] : terms_) add_into(r.terms_, k, v * c);
  return r;
}

bool SymFn::operator==(const SymFn& o) const {
  require(n_ == o.n_, "degree mismatch");
  if (basis_ == o.basis_) return terms_ == o.terms_;
  return to_basis(SBasis::m).terms() == o.to_basis(SBasis::m).terms();
}

namespace {

// s_lam in the m basis via Kostka numbers.
std::map<Partition, QtPoly> schur_in_m(const Partition& lam, int n) {
  std::map<Partition, QtPoly> out;
  for (const auto& mu : partitions_of(n)) {
    Int k = kostka_number(lam, mu);
    if (k != 0) out.emplace(mu, QtPoly::constant(k));
  }
  return out;
}

}  // namespace

SymFn SymFn::to_basis(SBasis target) const {
  if (target == basis_) return *this;
  if (basis_ == SBasis::schur) {
    SymFn r(SBasis::m, n_);
    for (const auto& [lam, c] : terms_)
      for (const auto& [mu, k] : schur_in_m(lam, n_)) add_into(r.terms_, mu, c * k);
    return r;
  }
  // m -> schur: eliminate the lex-largest remaining partition; dominance
  // implies lex order, so its m coefficient is its Schur coefficient.
  std::map<Partition, QtPoly> rem = terms_;
  SymFn r(SBasis::schur, n_);
  while (!rem.empty()) {
    auto it = std::max_element(
        rem.begin(), rem.end(),
        [](const auto& x, const auto& y) { return x.first < y.first; });
    Partition lam = it->first;
    QtPoly c = it->second;
    r.add_term(lam, c);
    for (const auto& [mu, k] : schur_in_m(lam, n_)) add_into(rem, mu, Int(-1) * (c * k));
  }
  return r;
}

QSym SymFn::to_qsym(QBasis target) const {
  if (basis_ == SBasis::schur) {
    QSym out(QBasis::F, n_);
    for (const auto& [lam, c] : terms_) out = out + schur_F(lam).scale(c);
    return out.to_basis(target);
  }
  QSym out(QBasis::M, n_);
  for (const auto& [lam, c] : terms_)
    for (const auto& a : compositions_of(n_))
      if (partition_of(a) == lam) out.add_term(a, c);
  return out.to_basis(target);
}

std::string SymFn::str() const { return format_terms(terms_, sbasis_name(basis_), part_str); }

QtPoly pairing(const QSym& f, const NSym& g) {
  require(f.n() == g.n(), "degree mismatch");
  QSym ff = f.to_basis(QBasis::F);
  NSym gs = g.to_basis(NBasis::s);
  QtPoly out;
  for (const auto& [a, c] : ff.terms()) {
    QtPoly d = gs.coeff(a);
    if (!d.is_zero()) out = out + c * d;
  }
  return out;
}

QSym ribbon_schur_F(const Composition& alpha) {
  QSym out(QBasis::F, alpha.size());
  for (const auto& tau : standard_tableaux(alpha))
    out.add_term(Composition::from_descents(tau.descents(), alpha.size()), QtPoly::constant(1));
  return out;
}

QSym schur_F(const Partition& lambda) {
  int n = 0;
  for (int x : lambda) n += x;
  QSym out(QBasis::F, n);
  for (const auto& tau : standard_tableaux(lambda))
    out.add_term(Composition::from_descents(tau.descents(), n), QtPoly::constant(1));
  return out;
}

SymFn hl_column(int n) {
  SymFn out(SBasis::schur, n);
  for (const auto& lam : partitions_of(n)) {
    QtPoly num = q_factorial(n) * QtPoly::monomial(1, partition_nstat(lam), 0);
    QtPoly den = QtPoly::constant(1);
    for (int h : hook_lengths(lam)) den = den * q_integer(h);
    out.add_term(lam, num.div_exact(den).swap_variables());
  }
  return out;
}

SymFn hl_hook(const Partition& mu) {
  require(is_hook(mu), "shape must be a hook");
  int n = 0;
  for (int x : mu) n += x;
  std::vector<int> parts(mu.rbegin(), mu.rend());  // increasing order
  Composition comp(parts);
  QSym acc(QBasis::F, n);
  for (const auto& a : coarsenings(comp))
    acc = acc + ribbon_schur_F(a).scale(QtPoly::monomial(1, 0, a.maj()));
  auto sym = acc.to_symmetric();
  check(sym.has_value(), "hook Hall-Littlewood sum failed to be symmetric");
  return sym->to_basis(SBasis::schur);
}

SymFn h_product_schur(const Partition& mu) {
  int n = 0;
  for (int x : mu) n += x;
  SymFn out(SBasis::schur, n);
  for (const auto& lam : partitions_of(n)) {
    Int k = kostka_number(lam, mu);
    if (k != 0) out.add_term(lam, QtPoly::constant(k));
  }
  return out;
}

}  // namespace hk
