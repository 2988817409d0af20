#include "core/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "core/charmap.hpp"
#include "core/coinvariant.hpp"
#include "core/flags.hpp"
#include "core/module.hpp"
#include "core/mpoly.hpp"
#include "core/qsym.hpp"
#include "core/quotient_ring.hpp"
#include "core/ribbon_numbers.hpp"
#include "core/standard_modules.hpp"

namespace hk {

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int SuiteResult::passed_count() const {
  int k = 0;
  for (const auto& c : checks)
    if (c.passed) ++k;
  return k;
}

namespace {

// Modulus for exact runs whose rational coordinates would be too slow.
constexpr int64_t kBigPrime = 1000003;

// Wraps one check; failures are recorded, size and availability limits
// propagate to the caller.
template <class Fn>
void run_check(SuiteResult& out, const std::string& name, Fn fn) {
  try {
    std::string detail = fn();
    out.checks.push_back({name, true, std::move(detail)});
  } catch (const SizeLimitError&) {
    throw;
  } catch (const UnavailableError&) {
    throw;
  } catch (const std::exception& e) {
    out.checks.push_back({name, false, e.what()});
  }
}

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

MPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg = 6) {
  MPoly f(nvars);
  int terms = pick(rng, 1, 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars);
    int total = 0;
    for (int j = 0; j < nvars; ++j) {
      e[j] = pick(rng, 0, 3);
      total += e[j];
    }
    while (total > max_deg) {
      int j = pick(rng, 0, nvars - 1);
      if (e[j] > 0) {
        --e[j];
        --total;
      }
    }
    int c = pick(rng, 1, 3) * (pick(rng, 0, 1) ? 1 : -1);
    f.add_term(e, c);
  }
  return f;
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = j + 1;
  for (int j = n - 1; j > 0; --j) std::swap(img[j], img[pick(rng, 0, j)]);
  return Permutation(img);
}

SuiteResult suite_demazure(const VerifyConfig& cfg) {
  SuiteResult out{"demazure-relations", {}};
  int n = cfg.n ? cfg.n : 4;
  guard_n(n, std::min(cfg.max_n, 8), "demazure-relations");
  require(n >= 2, "demazure-relations needs n >= 2");
  int trials = cfg.trials ? cfg.trials : 60;
  std::mt19937_64 rng(cfg.seed);

  struct Tally {
    int bad = 0;
    int ran = 0;
    std::string witness;
    void note(bool ok, const std::string& w) {
      ++ran;
      if (!ok && ++bad == 1) witness = w;
    }
  };
  Tally def, idem, comm, braid, prod;

  for (int t = 0; t < trials; ++t) {
    MPoly f = random_poly(rng, n);
    int i = pick(rng, 1, n - 1);
    std::string tag = "i=" + std::to_string(i) + " f=" + f.str();

    MPoly xi = MPoly::variable(n, i);
    MPoly xj = MPoly::variable(n, i + 1);
    Permutation si = Permutation::identity(n).right_mul_s(i);
    def.note((xi - xj) * demazure(i, f) == xi * f - xj * f.apply_permutation(si), tag);

    MPoly b = demazure_bar(i, f);
    idem.note(demazure(i, demazure(i, f)) == demazure(i, f) && demazure_bar(i, b) == -b, tag);

    if (i + 2 <= n - 1) {
      int j = pick(rng, i + 2, n - 1);
      comm.note(demazure(i, demazure(j, f)) == demazure(j, demazure(i, f)) &&
                    demazure_bar(i, demazure_bar(j, f)) == demazure_bar(j, demazure_bar(i, f)),
                "i=" + std::to_string(i) + " j=" + std::to_string(j) + " f=" + f.str());
    }
    if (n >= 3) {
      int k = pick(rng, 1, n - 2);
      braid.note(
          demazure(k, demazure(k + 1, demazure(k, f))) ==
                  demazure(k + 1, demazure(k, demazure(k + 1, f))) &&
              demazure_bar(k, demazure_bar(k + 1, demazure_bar(k, f))) ==
                  demazure_bar(k + 1, demazure_bar(k, demazure_bar(k + 1, f))),
          "k=" + std::to_string(k) + " f=" + f.str());
    }

    Permutation w = random_permutation(rng, n);
    MPoly g = demazure_bar_word(w, f);
    Permutation siw = w.left_mul_s(i);
    MPoly expect = siw.inversions() > w.inversions() ? demazure_bar_word(siw, f) : -g;
    prod.note(demazure_bar(i, g) == expect, "i=" + std::to_string(i) + " w=" + w.str() + " f=" + f.str());
  }

  auto emit = [&](const std::string& name, const Tally& ty) {
    if (ty.ran == 0) return;
    if (ty.bad == 0)
      out.checks.push_back({name, true, std::to_string(ty.ran) + " random instances"});
    else
      out.checks.push_back(
          {name, false, std::to_string(ty.bad) + " failures, first at " + ty.witness});
  };
  emit("definition", def);
  emit("idempotence", idem);
  emit("commutation", comm);
  emit("braid", braid);
  emit("product-rule", prod);
  return out;
}

SuiteResult suite_norton(const VerifyConfig& cfg) {
  SuiteResult out{"norton", {}};
  int n = cfg.n ? cfg.n : 4;
  guard_n(n, std::min(cfg.max_n, 5), "norton");
  require(n >= 1, "norton needs n >= 1");

  FiniteModule<Rat> R = regular_module<Rat>(n);
  run_check(out, "regular-relations", [&] {
    check_module(R);
    return "generator relations and filtration hold";
  });

  Echelon<Rat> span(R.dim);
  Int dimsum = 0;
  for (const auto& alpha : compositions_of(n)) {
    run_check(out, "summand " + alpha.str(), [&] {
      auto nb = norton_basis(alpha);
      std::vector<Vec<Rat>> vs;
      int cyc = -1;
      Permutation w0 = w0_of(alpha);
      for (size_t k = 0; k < nb.size(); ++k) {
        vs.push_back(nb[k].second);
        if (nb[k].first == w0) cyc = static_cast<int>(k);
      }
      dimsum += static_cast<int>(vs.size());
      for (const auto& v : vs) span.add(v);
      check(static_cast<int>(vs.size()) == static_cast<int>(descent_class(alpha).size()),
            "summand dimension differs from the descent class size");
      FiniteModule<Rat> S = submodule_on(R, vs);
      check(cyc >= 0, "generator T_w0 T'_w0c missing from the basis");
      Vec<Rat> cv(S.dim, Rat(0));
      cv[cyc] = Rat(1);
      S.cyclic = cv;
      FiniteModule<Rat> P = projective_module<Rat>(alpha);
      check_module(P);
      auto X = module_isomorphic(S, P);
      check(X.has_value(), "no isomorphism with the ribbon tableau model");
      return "dim " + std::to_string(S.dim) + ", matches the tableau model";
    });
  }
  run_check(out, "dimension-sum", [&] {
    check(dimsum == factorial(n), "summand dimensions sum to " + dimsum.str());
    return "summand dimensions sum to n!";
  });
  run_check(out, "direct-sum", [&] {
    check(span.rank() == R.dim, "summands span rank " + std::to_string(span.rank()));
    return "summands decompose the regular module";
  });
  return out;
}

template <class F>
void coinvariant_checks(SuiteResult& out, int n, F sample) {
  std::optional<FiniteModule<F>> M;
  run_check(out, "build", [&] {
    M = coinvariant_module<F>(n, sample);
    check(Int(M->dim) == factorial(n), "dimension " + std::to_string(M->dim));
    return "dim " + std::to_string(M->dim) + " on the descent set atoms";
  });
  auto need = [&]() -> FiniteModule<F>& {
    check(M.has_value(), "module unavailable");
    return *M;
  };
  run_check(out, "relations", [&] {
    check_module(need());
    return "generator relations, grading, filtration, cyclic vector";
  });
  run_check(out, "hilbert-series", [&] {
    QtPoly hilb;
    for (int d : *need().degrees) hilb = hilb + QtPoly::monomial(1, 0, d);
    check(hilb == q_factorial(n).swap_variables(), "graded dimensions differ from [n]!_t");
    return "graded dimensions match [n]!_t";
  });
  run_check(out, "block-diagonal", [&] {
    check_block_diagonal(need(), all_permutations(n));
    return "action preserves the descent classes";
  });
  for (const auto& alpha : compositions_of(n)) {
    run_check(out, "block " + alpha.str(), [&] {
      FiniteModule<F> B = coinvariant_block(need(), alpha);
      FiniteModule<F> P = projective_module<F>(alpha);
      if constexpr (std::is_same_v<F, Fp>) attach_modulus(P, sample.p);
      auto X = module_isomorphic(B, P);
      check(X.has_value(), "no isomorphism with the ribbon tableau model");
      return "dim " + std::to_string(B.dim) + ", matches the tableau model";
    });
  }
  run_check(out, "regular-isomorphism", [&] {
    FiniteModule<F> R = regular_module<F>(n);
    if constexpr (std::is_same_v<F, Fp>) attach_modulus(R, sample.p);
    auto X = module_isomorphic(need(), R);
    check(X.has_value(), "no isomorphism with the regular module");
    return "isomorphic to the regular module";
  });
  run_check(out, "length-filtration", [&] {
    FiniteModule<F>& Mr = need();
    FiniteModule<F> C = cyclic_length_filtration(Mr, *Mr.cyclic);
    std::map<int, int> a, b;
    for (int l : *Mr.length_levels) a[l]++;
    for (int l : *C.length_levels) b[l]++;
    check(a == b, "cyclic filtration levels differ from the inversion grading");
    return "cyclic filtration matches the inversion grading";
  });
}

SuiteResult suite_coinvariant(const VerifyConfig& cfg) {
  SuiteResult out{"coinvariant-regular", {}};
  int n = cfg.n ? cfg.n : 4;
  guard_n(n, std::min(cfg.max_n, 5), "coinvariant-regular");
  require(n >= 1, "coinvariant-regular needs n >= 1");
  if (n <= 4)
    coinvariant_checks<Rat>(out, n, Rat(0));
  else
    coinvariant_checks<Fp>(out, n, Fp(1, kBigPrime));
  return out;
}

SuiteResult suite_foata(const VerifyConfig& cfg) {
  SuiteResult out{"foata", {}};
  int n = cfg.n ? cfg.n : 6;
  guard_n(n, std::min(cfg.max_n, 8), "foata");
  require(n >= 1, "foata needs n >= 1");
  Int total = 0;
  for (const auto& alpha : compositions_of(n)) {
    run_check(out, "class " + alpha.str(), [&] {
      QtPoly rq = ribbon_number_q(alpha);
      QtPoly rt = ribbon_number_t(alpha);
      check(rq.swap_variables() == rt,
            "inversion and inverse-major distributions differ: " + rq.str() + " vs " + rt.str());
      total += rq.eval(1, 1);
      return "r = " + rq.eval(1, 1).str() + ", inv and maj-of-inverse agree";
    });
  }
  run_check(out, "total", [&] {
    check(total == factorial(n), "class sizes sum to " + total.str());
    return "class sizes sum to n!";
  });
  return out;
}

SuiteResult suite_flag(const VerifyConfig& cfg) {
  SuiteResult out{"flag-multiplicity", {}};
  int n = cfg.n ? cfg.n : 3;
  int64_t q = cfg.q ? cfg.q : 2;
  guard_n(n, std::min(cfg.max_n, 5), "flag-multiplicity");
  require(n >= 1, "flag-multiplicity needs n >= 1");
  require(is_prime_power(q), "q must be a prime power");
  GfTable gf(q);
  FiniteModule<Fp> M = flag_module(gf, n);

  run_check(out, "count", [&] {
    Int fq = q_factorial(n).eval(q, 1);
    check(Int(M.dim) == fq, "flag count " + std::to_string(M.dim));
    return "[n]!_q = " + fq.str() + " complete flags";
  });
  run_check(out, "relations", [&] {
    check_module(M);
    return "generator relations hold in characteristic " + std::to_string(gf.p());
  });
  for (const auto& beta : compositions_of(n)) {
    run_check(out, "invariants " + beta.str(), [&] {
      Int dim = invariants_hilbert(M, beta, false).eval(1, 1);
      Int pred = q_multinomial(beta).eval(q, 1);
      check(dim == pred, "dim " + dim.str() + ", expected " + pred.str());
      return "dim " + dim.str() + " matches the q-multinomial";
    });
  }
  std::map<Composition, QtPoly> fac = composition_factors(M, CharMode::plain);
  for (const auto& alpha : compositions_of(n)) {
    run_check(out, "multiplicity " + alpha.str(), [&] {
      Int got = fac.count(alpha) ? fac.at(alpha).eval(1, 1) : Int(0);
      Int pred = ribbon_number_q(alpha).eval(q, 1);
      check(got == pred, "multiplicity " + got.str() + ", expected " + pred.str());
      return got.str() + " matches the q-ribbon number";
    });
  }
  run_check(out, "characteristic", [&] {
    QSym ch = characteristic(M).to_basis(QBasis::M);
    auto sym = ch.to_symmetric();
    check(sym.has_value(), "characteristic is not symmetric");
    SymFn pred(SBasis::schur, n);
    for (const auto& [lam, c] : hl_column(n).terms())
      pred.add_term(lam, QtPoly::constant(c.eval(1, q)));
    check(sym->to_basis(SBasis::schur) == pred,
          "characteristic differs from the column Hall-Littlewood at q");
    return "matches the column Hall-Littlewood at q";
  });
  return out;
}

template <class F>
void springer_checks(SuiteResult& out, int n, int h, F sample) {
  Partition mu;
  mu.push_back(n - h + 1);
  for (int k = 1; k < h; ++k) mu.push_back(1);
  std::string tag = partition_str(mu);

  std::optional<FiniteModule<F>> S;
  run_check(out, "build " + tag, [&] {
    S = springer_hook_module<F>(n, h, sample);
    check_module(*S);
    Int pred = 1;
    for (int k = n - h + 2; k <= n; ++k) pred *= k;
    check(Int(S->dim) == pred, "dimension " + std::to_string(S->dim));
    return "dim " + pred.str() + ", relations and filtration hold";
  });
  auto need = [&]() -> FiniteModule<F>& {
    check(S.has_value(), "module unavailable");
    return *S;
  };

  std::vector<int> allowed;
  for (int i = 1; i < h; ++i) allowed.push_back(i);
  std::vector<Permutation> perms = descents_within(n, allowed);
  std::vector<Composition> alphas;
  for (const auto& a : compositions_of(n)) {
    bool inside = true;
    for (int d : a.descents())
      if (d >= h) inside = false;
    if (inside) alphas.push_back(a);
  }

  for (const auto& alpha : alphas) {
    run_check(out, "block " + tag + " " + alpha.str(), [&] {
      FiniteModule<F>& Sr = need();
      std::vector<int> idx;
      for (size_t k = 0; k < perms.size(); ++k)
        if (perms[k].descent_composition() == alpha) idx.push_back(static_cast<int>(k));
      FiniteModule<F> B = coordinate_piece(Sr, idx);
      Permutation w0 = w0_of(alpha);
      Vec<F> v(B.dim, F(0));
      for (size_t k = 0; k < idx.size(); ++k)
        if (perms[idx[k]] == w0) v[k] = F(1);
      B.cyclic = v;
      FiniteModule<F> P = projective_module<F>(alpha);
      if constexpr (std::is_same_v<F, Fp>) attach_modulus(P, sample.p);
      auto X = module_isomorphic(B, P);
      check(X.has_value(), "no isomorphism with the ribbon tableau model");
      return "dim " + std::to_string(B.dim) + ", matches the tableau model";
    });
  }

  run_check(out, "characteristic " + tag, [&] {
    QSym ch = characteristic(need(), CharMode::t);
    QSym pred(QBasis::F, n);
    for (const auto& alpha : alphas)
      pred = pred + ribbon_schur_F(alpha).scale(QtPoly::monomial(1, 0, alpha.maj()));
    check(ch == pred, "graded factors differ from the t^maj ribbon sum");
    std::vector<std::pair<Composition, int>> parts;
    for (const auto& alpha : alphas) parts.emplace_back(alpha, alpha.maj());
    NSym nch = nsym_of_projectives(n, parts, CharMode::t);
    check(nch.commutative_image(QBasis::F) == ch, "noncommutative image mismatch");
    auto sym = ch.to_basis(QBasis::M).to_symmetric();
    check(sym.has_value(), "graded characteristic is not symmetric");
    check(sym->to_basis(SBasis::schur) == hl_hook(mu),
          "differs from the hook Hall-Littlewood");
    return "matches the hook Hall-Littlewood in t";
  });

  if (n <= 4) {
    run_check(out, "tanisaki " + tag, [&] {
      int cap = n * (n - 1) / 2;
      QuotientRing<Rat> A(n, hook_ideal_generators(n, h), cap, Rat(0));
      QuotientRing<Rat> B(n, tanisaki_generators(n, mu), cap, Rat(0));
      for (const auto& g : tanisaki_generators(n, mu))
        check(A.contains(g), "tanisaki generator escapes the hook ideal");
      for (const auto& g : hook_ideal_generators(n, h))
        check(B.contains(g), "hook generator escapes the tanisaki ideal");
      for (int d = 0; d <= cap; ++d)
        check(A.quotient_dim(d) == B.quotient_dim(d), "graded dimensions differ");
      return "hook ideal equals the tanisaki ideal";
    });
  }
}

SuiteResult suite_springer(const VerifyConfig& cfg) {
  SuiteResult out{"hook-springer", {}};
  int n = cfg.n ? cfg.n : 4;
  guard_n(n, std::min(cfg.max_n, 5), "hook-springer");
  require(n >= 1, "hook-springer needs n >= 1");
  for (int h = 1; h <= n; ++h) {
    if (n <= 4)
      springer_checks<Rat>(out, n, h, Rat(0));
    else
      springer_checks<Fp>(out, n, h, Fp(1, kBigPrime));
  }
  for (const auto& mu : partitions_of(n)) {
    int cap = n * (n - 1) / 2;
    if (is_hook(mu)) {
      run_check(out, "preserved " + partition_str(mu), [&] {
        std::optional<IdealWitness> w;
        if (n <= 4)
          w = demazure_ideal_witness(n, tanisaki_generators(n, mu), cap, Rat(0));
        else
          w = demazure_ideal_witness(n, tanisaki_generators(n, mu), cap, Fp(1, kBigPrime));
        check(!w.has_value(), "found an unexpected escape from the ideal");
        return "bar operators preserve the ideal";
      });
    } else {
      run_check(out, "escape " + partition_str(mu), [&] {
        auto w = demazure_ideal_witness(n, tanisaki_generators(n, mu), cap, Rat(0));
        check(w.has_value(), "no escape found; the ideal appears preserved");
        return "op " + std::to_string(w->op) + " sends " + w->element.str() + " to " +
               w->image.str() + ", outside the ideal";
      });
    }
  }
  return out;
}

SuiteResult suite_chain(const VerifyConfig& cfg) {
  SuiteResult out{"chain-complex", {}};
  int n = cfg.n ? cfg.n : 3;
  int64_t q = cfg.q ? cfg.q : 2;
  guard_n(n, std::min(cfg.max_n, 4), "chain-complex");
  require(n >= 1, "chain-complex needs n >= 1");
  require(is_prime_power(q), "q must be a prime power");
  GfTable gf(q);
  for (const auto& alpha : compositions_of(n)) {
    ChainComplex C = tits_chain_complex(gf, alpha);
    run_check(out, "complex " + alpha.str(), [&] {
      int kdim = 0;
      check(chain_exact(C, &kdim), "boundary fails exactness");
      Int pred = ribbon_number_q(alpha).eval(q, 1);
      check(Int(kdim) == pred,
            "kernel dim " + std::to_string(kdim) + ", expected " + pred.str());
      return "exact, kernel dim " + std::to_string(kdim) + " matches the q-ribbon number";
    });
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "demazure-relations", "norton",        "coinvariant-regular", "foata",
      "flag-multiplicity",  "hook-springer", "chain-complex"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& ns = suite_names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "demazure-relations") return suite_demazure(cfg);
  if (name == "norton") return suite_norton(cfg);
  if (name == "coinvariant-regular") return suite_coinvariant(cfg);
  if (name == "foata") return suite_foata(cfg);
  if (name == "flag-multiplicity") return suite_flag(cfg);
  if (name == "hook-springer") return suite_springer(cfg);
  if (name == "chain-complex") return suite_chain(cfg);
  throw ArgumentError("unknown suite: " + name);
}

}  // namespace hk
