#pragma once

#include "linrel/relation.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace linrel {

/// {"p": 3, "dim_dom": 1, "dim_cod": 1, "generators": [[1, 2]]}, generators domain-first.
/// The writer always emits the canonical RREF basis.
nlohmann::json relation_to_json(const LinearRelation& phi);

/// Validates and canonicalizes a relation document. Throws FormatError.
LinearRelation relation_from_json(const nlohmann::json& doc);

/// Generator list of the canonical basis, e.g. [[1,2]].
nlohmann::json basis_to_json(const Subspace& s);
nlohmann::json matrix_to_json(const Matrix& m);

LinearRelation load_relation(const std::filesystem::path& path);

/// Writes `text` to `path`, or to stdout when `path` is empty. Throws std::runtime_error with the path on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace linrel
