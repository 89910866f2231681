#pragma once

// JSON forms of the library's objects. Output is deterministic: no
// timestamps, keys in nlohmann's sorted order.

#include <json.hpp>
#include <optional>

#include "hyperforge/hyperfield.hpp"
#include "hyperforge/logic/ef.hpp"
#include "hyperforge/projgeom.hpp"
#include "hyperforge/rank_witness.hpp"

namespace hyperforge::io {

using Json = nlohmann::json;

/// {"n", "one", "mul": [[..]], "neg": [..], "hyperadd": [[[members]]]}
Json to_json(const FiniteHyperfield& h);
/// Inverse of to_json. MalformedError for missing keys, wrong shapes or
/// tables the constructor rejects.
FiniteHyperfield hyperfield_from_json(const Json& j, std::string label = {});

/// {"all_pass", "axioms": [{"name", "pass", "counterexample"}]}
Json to_json(const AxiomReport& r);

/// {"points", "lines"}
Json to_json(const ProjectiveGeometry& g);
ProjectiveGeometry geometry_from_json(const Json& j);
Json to_json(const IncidenceReport& r);

/// {"case", "k", "elements", "columns", "matrix", "rank", "independent",
///  "oracle": {"bound", "relation"}}; relation is null when none was found.
Json certificate_json(const WitnessFamily& fam, const IndependenceCertificate& c, int oracle_bound,
                      const std::optional<std::vector<int>>& relation);

Json to_json(const TorsionReport& r);
Json to_json(const logic::TransferReport& r);

} // namespace hyperforge::io
