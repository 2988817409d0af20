#pragma once

#include <json.hpp>

#include "core/composition.hpp"
#include "core/mpoly.hpp"
#include "core/permutation.hpp"
#include "core/qsym.hpp"
#include "core/qtpoly.hpp"
#include "core/tableau.hpp"

namespace hk {

using Json = nlohmann::json;

// Compositions and partitions: arrays of parts.  Permutations: one-line
// image arrays.  Tableaux: arrays of rows, bottom row first.
Json composition_to_json(const Composition& a);
Composition composition_from_json(const Json& j);
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json permutation_to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);
Json tableau_to_json(const Tableau& t);

// [[q-exp, t-exp, coefficient-string], ...] in ascending (q,t) order.
Json qtpoly_to_json(const QtPoly& f);
QtPoly qtpoly_from_json(const Json& j);

// [[exponent-vector, coefficient-string], ...] in the polynomial's term order.
Json mpoly_to_json(const MPoly& f);
MPoly mpoly_from_json(const Json& j);

// {basis, degree, terms: [{index, coeff}]} with indices in ascending lex.
Json qsym_to_json(const QSym& x);
Json nsym_to_json(const NSym& x);
Json symfn_to_json(const SymFn& x);
QSym qsym_from_json(const Json& j);
NSym nsym_from_json(const Json& j);
SymFn symfn_from_json(const Json& j);

}  // namespace hk
