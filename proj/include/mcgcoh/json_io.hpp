#pragma once

#include "mcgcoh/cocycle.hpp"
#include "mcgcoh/presentation.hpp"
#include "mcgcoh/smith.hpp"
#include "mcgcoh/symplectic.hpp"
#include "mcgcoh/wajnryb.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mcgcoh::json_io {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json to_json(std::span<const Integer> v);
IntVector vector_from_json(const Json& j);

/// { "genus": g, "generators": [ { "name", "matrix": [[...]] } ] }; a
/// representation without a genus writes "dimension" instead.
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

/// { "genus", "generators": [...], "relators": [ { "tag", "word" } ] }
Json to_json(const WajnrybPresentation& p);

struct TaggedPresentation {
  Presentation presentation;
  std::vector<std::string> tags;
};
TaggedPresentation presentation_from_json(const Json& j);

/// { "genus": g, "values": { "<generator>": [int x 2g] } }
Json to_json(const CocycleAssignment& u);
/// Values are aligned to the representation's generator order; every
/// generator must be present.
CocycleAssignment cocycle_from_json(const Json& j, const Representation& rep);

/// [ { "relator_index", "tag", "ok", "residue" } ]
Json to_json(const VerificationReport& report, std::span<const std::string> tags = {});

Json to_json(const AbelianInvariants& inv);
AbelianInvariants invariants_from_json(const Json& j);

/// Parses text, mapping syntax errors to MalformedInput.
Json parse(const std::string& text);

}  // namespace mcgcoh::json_io
