#pragma once

#include <json.hpp>
#include <string>

#include "ghom/complex.hpp"
#include "ghom/filtered.hpp"
#include "ghom/gmodule.hpp"
#include "ghom/group.hpp"
#include "ghom/homology.hpp"
#include "ghom/spectral.hpp"

namespace ghom {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const SparseMat& m);
SparseMat matrix_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

/// Module JSON carries ring, rank and non-identity action matrices; the group
/// is supplied by the caller.
Json module_to_json(const GModule& m);
GModule module_from_json(const Json& j, const GroupPtr& g);

Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

Json filtered_to_json(const FilteredComplex& f);
FilteredComplex filtered_from_json(const Json& j);

Json finab_to_json(const FinAbGroup& g);
FinAbGroup finab_from_json(const Json& j);

Json homology_result_to_json(const HomologyResult& r);

Json pages_to_json(const std::vector<SSPage>& pages);
std::string pages_to_grid(const std::vector<SSPage>& pages);

/// Deterministic serialization used for cache keys.
std::string canonical_dump(const Json& j);
uint64_t content_hash(const std::string& s);

/// Built-in group specifiers: zmod:n, sym:n, dihedral:n, gl:n,q,
/// product:a,b and file:path.
GroupPtr parse_group_spec(const std::string& spec);

/// Coefficient specifiers: Z, Q, F<p>, regular, sign (order-2 quotients) and
/// file:path.
GModule parse_coeff_spec(const std::string& spec, const GroupPtr& g);

}  // namespace ghom
