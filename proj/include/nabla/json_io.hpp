#pragma once

#include <json.hpp>

#include "nabla/duality.hpp"
#include "nabla/fixtures.hpp"
#include "nabla/ring.hpp"

namespace nabla {

using Json = nlohmann::json;

// Serialization. Lattice/algebra documents carry the derived tables for
// readability; loaders only require the defining fields.

Json poset_to_json(const FinitePoset& p,
                   const std::vector<std::string>& labels = {});
Json lattice_to_json(const FiniteLattice& l,
                     const std::vector<std::string>& labels = {});
Json algebra_to_json(const NablaAlgebra& a,
                     const std::vector<std::string>& labels = {});
Json frame_to_json(const KripkeFrame& f);
Json space_to_json(const FiniteSpace& s);
Json ring_to_json(const FiniteRing& r);
Json proof_to_json(const ProofTree& t);
Json fixture_to_json(const ProofFixture& f);

// Loaders. Malformed documents (missing/ill-typed fields) throw
// ValidationError with code "Schema"; failed mathematical validation is
// returned as a described error.

Result<FinitePoset, std::string> poset_from_json(const Json& j);
Result<FiniteLattice, std::string> lattice_from_json(const Json& j);
Result<NablaAlgebra, std::string> algebra_from_json(const Json& j);
Result<KripkeFrame, std::string> frame_from_json(const Json& j);
Result<FiniteSpace, std::string> space_from_json(const Json& j);
Result<FiniteRing, std::string> ring_from_json(const Json& j);
Result<ProofTree, std::string> proof_from_json(const Json& j, LanguageMode mode);
Result<ProofFixture, std::string> fixture_from_json(const Json& j);

std::vector<std::string> labels_from_json(const Json& j);

}  // namespace nabla
