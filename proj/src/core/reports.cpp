#include "core/reports.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "core/charmap.hpp"
#include "core/coinvariant.hpp"
#include "core/flags.hpp"
#include "core/json_io.hpp"
#include "core/ribbon_numbers.hpp"
#include "core/standard_modules.hpp"

namespace hk {

ReportFormat parse_format(const std::string& s) {
  if (s == "pretty") return ReportFormat::pretty;
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw ArgumentError("unknown format: " + s);
}

CharMode parse_mode(const std::string& s) {
  if (s == "plain") return CharMode::plain;
  if (s == "t") return CharMode::t;
  if (s == "q") return CharMode::q;
  if (s == "qt") return CharMode::qt;
  throw ArgumentError("unknown mode: " + s);
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

constexpr int64_t kBigPrime = 1000003;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int k = 15; k >= 0; --k) {
    s[k] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string entry_str(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string entry_str(const Fp& x) { return std::to_string(x.p ? x.reduced(x.p) : x.v); }

template <class F>
std::string mat_fingerprint(const Mat<F>& X) {
  std::string s = std::to_string(X.rows) + "x" + std::to_string(X.cols) + ":";
  for (const auto& row : X.a)
    for (const auto& x : row) s += entry_str(x) + ";";
  return s;
}

// ---------------------------------------------------------------- ribbon ----

struct RibbonRow {
  Composition alpha;
  QtPoly rq, rt, mult_q;
  QtPoly rqt, mult_qt;
  bool has_qt = false;
};

std::vector<RibbonRow> ribbon_rows(int n, const std::vector<int>& alpha_parts, int64_t q,
                                   const ReportOptions& opt) {
  std::vector<Composition> alphas;
  if (!alpha_parts.empty()) {
    Composition a(alpha_parts);
    if (n == 0) n = a.size();
    require(a.size() == n, "alpha must be a composition of n");
    alphas.push_back(a);
  } else {
    require(n >= 1, "a positive n or an alpha is required");
    guard_n(n, std::min(opt.max_n, 8), "ribbon report");
    alphas = compositions_of(n);
  }
  guard_n(n, std::min(opt.max_n, 8), "ribbon report");

  std::optional<QtFactorialContext> ctx;
  if (q > 0) {
    require(is_prime_power(q), "q must be a prime power");
    ctx.emplace(q);
  }

  std::vector<RibbonRow> rows;
  for (const auto& a : alphas) {
    RibbonRow r;
    r.alpha = a;
    r.rq = ribbon_number_q(a);
    r.rt = ribbon_number_t(a);
    check(r.rq.swap_variables() == r.rt,
          "inversion and inverse-major distributions disagree");
    r.mult_q = q_multinomial(a);
    if (ctx) {
      r.rqt = ribbon_number_qt(*ctx, a);
      r.mult_qt = qt_multinomial(*ctx, a);
      check(r.rqt.subst_t(1) == QtPoly::constant(r.rq.eval(q, 1)),
            "qt layer disagrees with the q count at t = 1");
      r.has_qt = true;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string render_ribbon(int n, int64_t q, const std::vector<RibbonRow>& rows,
                          ReportFormat fmt) {
  std::ostringstream os;
  if (fmt == ReportFormat::pretty) {
    os << "descent classes of n = " << (rows.empty() ? n : rows.front().alpha.size());
    if (q > 0) os << ", q = " << q;
    os << "\n";
    for (const auto& r : rows) {
      os << "class " << r.alpha.str() << "\n";
      os << "  count            " << r.rq.eval(1, 1).str() << "\n";
      os << "  by inversions    " << r.rq.str() << "\n";
      os << "  by inverse maj   " << r.rt.str() << "\n";
      os << "  q-multinomial    " << r.mult_q.str() << "\n";
      if (r.has_qt) {
        os << "  qt count         " << r.rqt.str() << "\n";
        os << "  qt-multinomial   " << r.mult_qt.str() << "\n";
      }
    }
  } else if (fmt == ReportFormat::json) {
    Json j;
    j["report"] = "ribbon";
    j["n"] = rows.empty() ? n : rows.front().alpha.size();
    if (q > 0) j["q"] = q;
    j["classes"] = Json::array();
    for (const auto& r : rows) {
      Json c;
      c["alpha"] = composition_to_json(r.alpha);
      c["count"] = r.rq.eval(1, 1).str();
      c["by_inversions"] = qtpoly_to_json(r.rq);
      c["by_inverse_major"] = qtpoly_to_json(r.rt);
      c["q_multinomial"] = qtpoly_to_json(r.mult_q);
      if (r.has_qt) {
        c["qt"] = qtpoly_to_json(r.rqt);
        c["qt_multinomial"] = qtpoly_to_json(r.mult_qt);
      }
      j["classes"].push_back(std::move(c));
    }
    os << j.dump(2) << "\n";
  } else {
    os << "alpha,n,statistic,value\n";
    for (const auto& r : rows) {
      auto line = [&](const std::string& stat, const std::string& val) {
        os << csv_field(r.alpha.str()) << "," << r.alpha.size() << "," << stat << ","
           << csv_field(val) << "\n";
      };
      line("count", r.rq.eval(1, 1).str());
      line("by_inversions", r.rq.str());
      line("by_inverse_major", r.rt.str());
      line("q_multinomial", r.mult_q.str());
      if (r.has_qt) {
        line("qt", r.rqt.str());
        line("qt_multinomial", r.mult_qt.str());
      }
    }
  }
  return os.str();
}

// -------------------------------------------------------- characteristic ----

struct BlockRow {
  Composition alpha;
  int degree_offset = 0;
  int dimension = 0;
  std::string witness;
};

struct FactorRow {
  Composition alpha;
  Int dim_q = 0;
  Int multiplicity = 0;
  Int predicted = 0;
};

struct CharData {
  std::string module;
  std::string label;
  int n = 0;
  int64_t q = 0;
  CharMode mode = CharMode::plain;
  QSym fund{QBasis::F, 0};
  QSym mono{QBasis::M, 0};
  std::optional<NSym> ribbon;
  std::optional<SymFn> schur;
  std::vector<BlockRow> blocks;
  std::vector<FactorRow> factors;
  bool has_blocks = false;
  bool has_factors = false;
};

void need_mode(bool ok, const std::string& module, CharMode mode) {
  if (!ok)
    throw UnavailableError("mode " + std::string(char_mode_name(mode)) +
                           " is not available for the " + module + " module");
}

template <class F>
void fill_characteristics(CharData& D, const FiniteModule<F>& M) {
  D.n = M.n;
  D.fund = characteristic(M, D.mode);
  D.mono = characteristic_monomial(M, D.mode);
  auto sym = D.mono.to_symmetric();
  if (sym) D.schur = sym->to_basis(SBasis::schur);
}

// The ribbon row records the projective summands; its commutative image must
// reproduce the fundamental row whenever the grading matches the summands.
void ribbon_from_summands(CharData& D, const std::vector<std::pair<Composition, int>>& parts) {
  D.ribbon = nsym_of_projectives(D.n, parts, D.mode);
  if (D.mode == CharMode::plain || D.mode == CharMode::t)
    check(D.ribbon->commutative_image(QBasis::F) == D.fund,
          "summand ribbon image disagrees with the characteristic");
}

template <class F>
BlockRow make_block(const FiniteModule<F>& M, const std::vector<Permutation>& perms,
                    const Composition& alpha, F sample) {
  std::vector<int> idx;
  for (size_t k = 0; k < perms.size(); ++k)
    if (perms[k].descent_composition() == alpha) idx.push_back(static_cast<int>(k));
  FiniteModule<F> B = coordinate_piece(M, idx);
  Vec<F> v(B.dim, F(0));
  Permutation w0 = w0_of(alpha);
  for (size_t k = 0; k < idx.size(); ++k)
    if (perms[idx[k]] == w0) v[k] = F(1);
  B.cyclic = v;
  FiniteModule<F> P = projective_module<F>(alpha);
  if constexpr (std::is_same_v<F, Fp>) attach_modulus(P, sample.p);
  auto X = module_isomorphic(B, P);
  check(X.has_value(), "block is not isomorphic to the tableau model");
  BlockRow r;
  r.alpha = alpha;
  r.degree_offset = alpha.maj();
  r.dimension = B.dim;
  r.witness = "fnv1a:" + hex64(fnv1a64(mat_fingerprint(*X)));
  return r;
}

template <class F>
void build_coinvariant_char(CharData& D, int n, F sample) {
  FiniteModule<F> M = coinvariant_module<F>(n, sample);
  fill_characteristics(D, M);
  auto perms = all_permutations(n);
  std::vector<std::pair<Composition, int>> parts;
  for (const auto& alpha : compositions_of(n)) {
    D.blocks.push_back(make_block(M, perms, alpha, sample));
    parts.emplace_back(alpha, alpha.maj());
  }
  D.has_blocks = true;
  ribbon_from_summands(D, parts);
}

template <class F>
void build_springer_char(CharData& D, int n, int h, F sample) {
  FiniteModule<F> M = springer_hook_module<F>(n, h, sample);
  fill_characteristics(D, M);
  std::vector<int> allowed;
  for (int i = 1; i < h; ++i) allowed.push_back(i);
  auto perms = descents_within(n, allowed);
  std::vector<std::pair<Composition, int>> parts;
  for (const auto& alpha : compositions_of(n)) {
    bool inside = true;
    for (int d : alpha.descents())
      if (d >= h) inside = false;
    if (!inside) continue;
    D.blocks.push_back(make_block(M, perms, alpha, sample));
    parts.emplace_back(alpha, alpha.maj());
  }
  D.has_blocks = true;
  ribbon_from_summands(D, parts);
}

CharData build_char(const std::string& module, int n, const std::vector<int>& alpha_parts,
                    const std::vector<int>& mu_parts, int64_t q, CharMode mode,
                    const ReportOptions& opt) {
  CharData D;
  D.module = module;
  D.mode = mode;

  if (module == "regular") {
    require(n >= 1, "the regular module needs --n");
    guard_n(n, std::min(opt.max_n, 6), "regular module");
    need_mode(mode == CharMode::plain || mode == CharMode::q, module, mode);
    FiniteModule<Rat> M = regular_module<Rat>(n);
    fill_characteristics(D, M);
    std::vector<std::pair<Composition, int>> parts;
    for (const auto& alpha : compositions_of(n)) parts.emplace_back(alpha, alpha.maj());
    ribbon_from_summands(D, parts);
    D.label = "regular module, n = " + std::to_string(n);
  } else if (module == "coinvariant") {
    require(n >= 1, "the coinvariant module needs --n");
    guard_n(n, std::min(opt.max_n, 5), "coinvariant module");
    if (n <= 4)
      build_coinvariant_char<Rat>(D, n, Rat(0));
    else
      build_coinvariant_char<Fp>(D, n, Fp(1, kBigPrime));
    D.label = "coinvariant module, n = " + std::to_string(n);
  } else if (module == "projective" || module == "simple") {
    require(!alpha_parts.empty(), "the " + module + " module needs --alpha");
    Composition alpha(alpha_parts);
    int na = alpha.size();
    guard_n(na, std::min(opt.max_n, 7), module + " module");
    need_mode(mode == CharMode::plain, module, mode);
    if (module == "projective") {
      FiniteModule<Rat> M = projective_module<Rat>(alpha);
      fill_characteristics(D, M);
      check(D.fund == ribbon_schur_F(alpha), "characteristic is not the ribbon Schur function");
      ribbon_from_summands(D, {{alpha, alpha.maj()}});
    } else {
      FiniteModule<Rat> M = simple_module<Rat>(alpha);
      fill_characteristics(D, M);
      QSym fa(QBasis::F, na);
      fa.add_term(alpha, QtPoly::constant(1));
      check(D.fund == fa, "characteristic is not the fundamental function");
      // a simple module is projective exactly when its descent class is a point
      if (ribbon_number_q(alpha).eval(1, 1) == 1) ribbon_from_summands(D, {{alpha, alpha.maj()}});
    }
    D.label = module + " module of " + alpha.str();
  } else if (module == "springer") {
    require(!mu_parts.empty(), "the springer module needs --mu");
    Partition mu = mu_parts;
    require(is_partition(mu), "mu must be a partition");
    int nm = 0;
    for (int p : mu) nm += p;
    guard_n(nm, std::min(opt.max_n, 5), "springer module");
    if (!is_hook(mu))
      throw UnavailableError("springer module is only available for hook shapes");
    need_mode(mode == CharMode::plain || mode == CharMode::t, module, mode);
    int h = static_cast<int>(mu.size());
    if (nm <= 4)
      build_springer_char<Rat>(D, nm, h, Rat(0));
    else
      build_springer_char<Fp>(D, nm, h, Fp(1, kBigPrime));
    D.label = "springer module of " + partition_str(mu);
  } else if (module == "flag") {
    require(n >= 1, "the flag module needs --n");
    require(q >= 2, "the flag module needs --q");
    require(is_prime_power(q), "q must be a prime power");
    guard_n(n, std::min(opt.max_n, 5), "flag module");
    need_mode(mode == CharMode::plain, module, mode);
    GfTable gf(q);
    FiniteModule<Fp> M = flag_module(gf, n);
    fill_characteristics(D, M);
    D.q = q;
    auto fac = composition_factors(M, CharMode::plain);
    for (const auto& alpha : compositions_of(n)) {
      FactorRow r;
      r.alpha = alpha;
      r.dim_q = invariants_hilbert(M, alpha, false).eval(1, 1);
      r.multiplicity = fac.count(alpha) ? fac.at(alpha).eval(1, 1) : Int(0);
      r.predicted = ribbon_number_q(alpha).eval(q, 1);
      D.factors.push_back(std::move(r));
    }
    D.has_factors = true;
    D.label = "flag module, n = " + std::to_string(n) + ", q = " + std::to_string(q);
  } else {
    throw ArgumentError("unknown module: " + module);
  }
  return D;
}

std::string render_char(const CharData& D, ReportFormat fmt) {
  std::ostringstream os;
  if (fmt == ReportFormat::pretty) {
    os << "characteristic of the " << D.label << ", mode " << char_mode_name(D.mode) << "\n";
    os << "  fundamental  " << D.fund.str() << "\n";
    os << "  monomial     " << D.mono.str() << "\n";
    if (D.ribbon)
      os << "  ribbon       " << D.ribbon->str() << "\n";
    else
      os << "  ribbon       (not a sum of projectives)\n";
    if (D.schur)
      os << "  schur        " << D.schur->str() << "\n";
    else
      os << "  schur        (not symmetric)\n";
    if (D.has_blocks) {
      os << "blocks\n";
      for (const auto& b : D.blocks)
        os << "  " << b.alpha.str() << "  degree " << b.degree_offset << "  dim "
           << b.dimension << "  " << b.witness << "\n";
    }
    if (D.has_factors) {
      os << "factors\n";
      for (const auto& f : D.factors)
        os << "  " << f.alpha.str() << "  dim_Q " << f.dim_q.str() << "  mult "
           << f.multiplicity.str() << "  predicted " << f.predicted.str() << "\n";
    }
  } else if (fmt == ReportFormat::json) {
    Json j;
    j["report"] = "characteristic";
    j["module"] = D.module;
    j["n"] = D.n;
    if (D.q > 0) j["q"] = D.q;
    j["mode"] = char_mode_name(D.mode);
    j["fundamental"] = qsym_to_json(D.fund);
    j["monomial"] = qsym_to_json(D.mono);
    j["ribbon"] = D.ribbon ? nsym_to_json(*D.ribbon) : Json(nullptr);
    j["schur"] = D.schur ? symfn_to_json(*D.schur) : Json(nullptr);
    if (D.has_blocks) {
      j["decomposition"] = Json::array();
      for (const auto& b : D.blocks) {
        Json e;
        e["alpha"] = composition_to_json(b.alpha);
        e["degree_offset"] = b.degree_offset;
        e["dimension"] = b.dimension;
        e["isomorphism_witness_checksum"] = b.witness;
        j["decomposition"].push_back(std::move(e));
      }
    }
    if (D.has_factors) {
      j["factors"] = Json::array();
      for (const auto& f : D.factors) {
        Json e;
        e["alpha"] = composition_to_json(f.alpha);
        e["dim_Q_alpha"] = f.dim_q.str();
        e["multiplicity"] = f.multiplicity.str();
        e["predicted_r_alpha_q"] = f.predicted.str();
        j["factors"].push_back(std::move(e));
      }
    }
    os << j.dump(2) << "\n";
  } else {
    if (D.has_factors) {
      os << "alpha,dim_Q_alpha,multiplicity,predicted_r_alpha_q\n";
      for (const auto& f : D.factors)
        os << csv_field(f.alpha.str()) << "," << f.dim_q.str() << "," << f.multiplicity.str()
           << "," << f.predicted.str() << "\n";
    } else {
      os << "basis,index,coefficient\n";
      for (const auto& [a, c] : D.fund.terms())
        os << "F," << csv_field(a.str()) << "," << csv_field(c.str()) << "\n";
      for (const auto& [a, c] : D.mono.terms())
        os << "M," << csv_field(a.str()) << "," << csv_field(c.str()) << "\n";
      if (D.ribbon)
        for (const auto& [a, c] : D.ribbon->terms())
          os << "s," << csv_field(a.str()) << "," << csv_field(c.str()) << "\n";
      if (D.schur)
        for (const auto& [lam, c] : D.schur->terms())
          os << "schur," << csv_field(partition_str(lam)) << "," << csv_field(c.str()) << "\n";
    }
  }
  return os.str();
}

}  // namespace

std::string ribbon_report(int n, const std::vector<int>& alpha_parts, int64_t q,
                          const ReportOptions& opt) {
  auto rows = ribbon_rows(n, alpha_parts, q, opt);
  return render_ribbon(n, q, rows, opt.format);
}

std::string characteristic_report(const std::string& module, int n,
                                  const std::vector<int>& alpha_parts,
                                  const std::vector<int>& mu_parts, int64_t q,
                                  CharMode mode, const ReportOptions& opt) {
  CharData D = build_char(module, n, alpha_parts, mu_parts, q, mode, opt);
  return render_char(D, opt.format);
}

std::string verify_report(const SuiteResult& r, const ReportOptions& opt) {
  std::ostringstream os;
  if (opt.format == ReportFormat::pretty) {
    for (const auto& c : r.checks)
      os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name
         << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
       << r.passed_count() << "/" << r.checks.size() << " checks)\n";
  } else if (opt.format == ReportFormat::json) {
    Json j;
    j["report"] = "verify";
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    j["checks"] = Json::array();
    for (const auto& c : r.checks) {
      Json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["detail"] = c.detail;
      j["checks"].push_back(std::move(e));
    }
    os << j.dump(2) << "\n";
  } else {
    os << "suite,check,passed,detail\n";
    for (const auto& c : r.checks)
      os << csv_field(r.suite) << "," << csv_field(c.name) << ","
         << (c.passed ? "true" : "false") << "," << csv_field(c.detail) << "\n";
  }
  return os.str();
}

}  // namespace hk
