#include "core/json_io.hpp"

namespace hk {

namespace {

Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace

Json composition_to_json(const Composition& a) { return Json(a.parts()); }

Composition composition_from_json(const Json& j) {
  require(j.is_array(), "composition must be an array of parts");
  return Composition(j.get<std::vector<int>>());
}

Json partition_to_json(const Partition& p) { return Json(p); }

Partition partition_from_json(const Json& j) {
  require(j.is_array(), "partition must be an array of parts");
  auto v = j.get<std::vector<int>>();
  require(is_partition(v), "parts must decrease weakly");
  return v;
}

Json permutation_to_json(const Permutation& w) { return Json(w.one_line()); }

Permutation permutation_from_json(const Json& j) {
  require(j.is_array(), "permutation must be an array of images");
  return Permutation(j.get<std::vector<int>>());
}

Json tableau_to_json(const Tableau& t) { return Json(t.rows()); }

Json qtpoly_to_json(const QtPoly& f) {
  Json out = Json::array();
  for (const auto& [k, c] : f.terms())
    out.push_back(Json::array({k.first, k.second, c.str()}));
  return out;
}

QtPoly qtpoly_from_json(const Json& j) {
  require(j.is_array(), "polynomial must be an array of triples");
  QtPoly f;
  for (const auto& t : j) {
    require(t.is_array() && t.size() == 3, "term must be [q-exp, t-exp, coeff]");
    f += QtPoly::monomial(int_from_string(t[2].get<std::string>()), t[0].get<int64_t>(),
                          t[1].get<int64_t>());
  }
  return f;
}

Json mpoly_to_json(const MPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({Json(e), c.str()}));
  return out;
}

MPoly mpoly_from_json(const Json& j) {
  require(j.is_array(), "polynomial must be an array of pairs");
  std::optional<MPoly> f;
  for (const auto& t : j) {
    require(t.is_array() && t.size() == 2, "term must be [exponents, coeff]");
    auto e = t[0].get<std::vector<int>>();
    if (!f) f = MPoly(static_cast<int>(e.size()));
    f->add_term(e, int_from_string(t[1].get<std::string>()));
  }
  require(f.has_value(), "cannot recover the variable count of an empty polynomial");
  return *f;
}

namespace {

template <class T, class IndexFn>
Json basis_element_to_json(const char* basis, int n, const T& terms, IndexFn index_json) {
  Json out;
  out["basis"] = basis;
  out["degree"] = n;
  Json arr = Json::array();
  for (const auto& [k, c] : terms) {
    Json term;
    term["index"] = index_json(k);
    term["coeff"] = qtpoly_to_json(c);
    arr.push_back(std::move(term));
  }
  out["terms"] = std::move(arr);
  return out;
}

}  // namespace

Json qsym_to_json(const QSym& x) {
  return basis_element_to_json(qbasis_name(x.basis()), x.n(), x.terms(), composition_to_json);
}

Json nsym_to_json(const NSym& x) {
  return basis_element_to_json(nbasis_name(x.basis()), x.n(), x.terms(), composition_to_json);
}

Json symfn_to_json(const SymFn& x) {
  return basis_element_to_json(sbasis_name(x.basis()), x.n(), x.terms(), partition_to_json);
}

namespace {

template <class Elem, class Basis, class KeyFn>
Elem element_from_json(const Json& j, Basis basis, KeyFn key) {
  require(j.is_object() && j.contains("degree") && j.contains("terms"),
          "element must be {basis, degree, terms}");
  Elem x(basis, j["degree"].get<int>());
  for (const auto& t : j["terms"])
    x.add_term(key(t["index"]), qtpoly_from_json(t["coeff"]));
  return x;
}

}  // namespace

QSym qsym_from_json(const Json& j) {
  std::string b = j.at("basis").get<std::string>();
  require(b == "M" || b == "F", "unknown quasisymmetric basis");
  return element_from_json<QSym>(j, b == "M" ? QBasis::M : QBasis::F, composition_from_json);
}

NSym nsym_from_json(const Json& j) {
  std::string b = j.at("basis").get<std::string>();
  require(b == "h" || b == "s", "unknown noncommutative basis");
  return element_from_json<NSym>(j, b == "h" ? NBasis::h : NBasis::s, composition_from_json);
}

SymFn symfn_from_json(const Json& j) {
  std::string b = j.at("basis").get<std::string>();
  require(b == "m" || b == "s", "unknown symmetric basis");
  return element_from_json<SymFn>(j, b == "m" ? SBasis::m : SBasis::schur, partition_from_json);
}

}  // namespace hk
