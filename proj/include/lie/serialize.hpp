#pragma once

// JSON forms of the library's result types. Node indices and reflection
// letters are 1-based in JSON; roots appear as simple-root coordinates.
// Every *_from_json re-parses what the matching to_json emitted, and
// re-emission is byte-identical.

#include <json.hpp>
#include <vector>

#include "lie/curves.hpp"
#include "lie/desing.hpp"
#include "lie/orbits.hpp"
#include "lie/parabolic.hpp"
#include "lie/rootsys.hpp"
#include "lie/weyl.hpp"

namespace lie {

using Json = nlohmann::ordered_json;

Json to_json(const NodeSet& s);
NodeSet node_set_from_json(const Json& j);

Json to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const Json& j);

Json to_json(const RootDatum& rd, const WeylElement& w);
WeylElement weyl_from_json(const RootDatum& rd, const Json& j);

Json to_json(const RootDatum& rd, const RootSubset& s);
RootSubset root_subset_from_json(const RootDatum& rd, const Json& j);

Json to_json(const RootDatum& rd, const std::vector<OrbitDescriptor>& table);
std::vector<OrbitDescriptor> orbit_table_from_json(const RootDatum& rd, const Json& j);

Json to_json(const LeviQuotient& q);
LeviQuotient levi_quotient_from_json(const Json& j);

Json to_json(const RootDatum& rd, const NilradicalFiltration& f);
NilradicalFiltration nilradical_from_json(const RootDatum& rd, const Json& j);

Json to_json(const CurveClass& c);
CurveClass curve_class_from_json(const Json& j);

Json to_json(const ExistenceVerdict& v);
ExistenceVerdict verdict_from_json(const Json& j);

Json to_json(const RootDatum& rd, const DesingTower& t);
DesingTower tower_from_json(const RootDatum& rd, const Json& j);

Json to_json(const RootDatum& rd, const RefinedChain& c);
RefinedChain refined_chain_from_json(const RootDatum& rd, const Json& j);

Json to_json(const RootDatum& rd, const MinimalSchubert& m);
MinimalSchubert minimal_schubert_from_json(const RootDatum& rd, const Json& j);

/// Canonical text form used by the CLI.
std::string dump(const Json& j);

}  // namespace lie
