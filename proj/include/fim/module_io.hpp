#pragma once

#include "fim/module.hpp"

#include <json.hpp>

#include <string>

namespace fim {

using Json = nlohmann::json;

/// {"order", "mult", "generators"}, 0-based element indices, identity at 0.
Json group_to_json(const GroupTable& g);
GroupPtr group_from_json(const Json& j);

Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// Module document. Coordinates (window, "at", inclusion and transposition coordinates)
/// are 1-based; a transposition {"swap": [i, k]} exchanges points k and k+1 of
/// coordinate i. Group generators {"group": j} are 0-based positions in the generator list.
/// Actions on zero-dimensional spaces are omitted.
Json module_to_json(const TruncatedModule& v);
TruncatedModule module_from_json(const Json& j);

void save_module(const TruncatedModule& v, const std::string& path);
TruncatedModule load_module(const std::string& path);

std::string object_key(const ObjectIndex& n);
Json object_to_json(const ObjectIndex& n);
ObjectIndex object_from_json(const Json& j);

}  // namespace fim
