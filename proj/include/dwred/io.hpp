#pragma once

#include <string>

#include <json.hpp>

#include "dwred/cochain.hpp"
#include "dwred/complex.hpp"
#include "dwred/cyclotomic.hpp"
#include "dwred/group.hpp"
#include "dwred/tft.hpp"

namespace dwred {

using nlohmann::json;

// Group files: { "name": str, "order": n, "mult": [[...], ...] }.
// The inverse table is derived on load; non-group tables are rejected with a
// diagnostic naming the violated axiom.
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

// Cocycle files: { "group": name, "degree": d,
//                  "entries": [[g1,...,gd, num, den], ...] };
// omitted entries are zero. The loader verifies normalization (always) and
// the cocycle condition (when verify_cocycle is set).
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j, const FiniteGroup& group, bool verify_cocycle);

// Complex files: dimension, vertex count, per-level simplex lists with
// face-id arrays, top-level signs.
json complex_to_json(const DeltaComplex& x);
DeltaComplex complex_from_json(const json& j);

// Cyclotomic values: { "conductor": n, "terms": [[power, num, den], ...] },
// with convenience "rational" and "approx" fields emitted on dump.
json cyclotomic_to_json(const CyclotomicSum& v);
CyclotomicSum cyclotomic_from_json(const json& j);

json report_to_json(const DecompositionReport& r);

// CLI-facing spec resolution.
//   group:   builtin name (Z<k>, D<k>, S<n>, Q8) or a path to a group file
//   space:   circle:m | sphere | surface:h | torusgrid:p:q | path, with any
//            number of " x S1" product suffixes
//   cocycle: trivial | cyclic:k:p | inflate:path | path
FiniteGroup resolve_group_spec(const std::string& spec);
DeltaComplex resolve_space_spec(const std::string& spec);
Cochain resolve_cocycle_spec(const std::string& spec, const FiniteGroup& group,
                             int degree, bool verify_cocycle = true);

json load_json_file(const std::string& path);

} // namespace dwred
