#pragma once

#include "indec/decomposition.hpp"
#include "indec/dense.hpp"
#include "indec/designs.hpp"
#include "indec/embedded.hpp"
#include "indec/graph.hpp"
#include "indec/oracle.hpp"

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace indec {

// All serialized vertex ids and design indices are 1-based.

nlohmann::json to_json(const LatinSquare& square);
nlohmann::json to_json(const MolsFamily& family);
nlohmann::json to_json(const TransversalDesign& td);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const EmbeddedDecomposition& d);
nlohmann::json to_json(const DenseCertificate& cert);
nlohmann::json to_json(const CexResult& cex);

/// Reads the pattern and copies of a decomposition or dense certificate.
/// Throws InvalidArgument on malformed input.
Decomposition decomposition_from_json(const nlohmann::json& j);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const nlohmann::json& j);

/// "# vertices N" header, then one "u v" line per edge.
std::string to_edge_list(const SmallGraph& g);
/// Accepts '#' comment lines; the vertex count comes from a "# vertices N"
/// header when present, otherwise from the largest id seen.
SmallGraph parse_edge_list(std::istream& in);

} // namespace indec
