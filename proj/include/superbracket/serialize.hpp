#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "superbracket/classifier.hpp"
#include "superbracket/constructions.hpp"
#include "superbracket/pspace.hpp"

namespace superbracket {

using Json = nlohmann::json;

/// Algebra plus the optional free-form string map carried alongside it.
struct AlgebraFile {
    SuperAlgebra algebra;
    std::map<std::string, std::string> metadata;
};

/// Canonical form: sorted keys, entries in index order, zeros omitted,
/// scalars as "a/b" over Q and residues over F_p.
Json to_json(const SuperAlgebra& g, const std::map<std::string, std::string>& metadata = {});
std::string dump_canonical(const Json& j);

/// Throws SchemaError on malformed input, unknown keys or out-of-range
/// indices, ModeError on a mode/characteristic clash.
AlgebraFile algebra_from_json(const Json& j);
AlgebraFile parse_algebra(const std::string& text);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Json p_tensor_to_json(const PTensor& t);
Json p_space_to_json(const PSolutionSpace& space);
Json classification_to_json(const ClassificationResult& r);
Json report_to_json(const ValidationReport& report);

} // namespace superbracket
