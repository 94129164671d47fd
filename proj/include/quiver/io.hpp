#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quiver/representation.hpp"

namespace quiver {

using Json = nlohmann::json;

/// Parses "a,b,c" (vertex order, no whitespace) into a vector of length n.
DimVector parse_dim_vector(std::string_view text, Index n);
std::string format_dim_vector(const DimVector& x);

/// Exact integers become JSON numbers when they fit in 64 bits and decimal
/// strings otherwise.
Json integer_to_json(const Integer& v);
Json dim_vector_to_json(const DimVector& x);

/// { "field": p, "dims": [...], "arrows": { "<name>": [[row-major]] } }
Json representation_to_json(const Representation& x);
Representation representation_from_json(const Quiver& q, const Json& j);
Representation load_representation(const Quiver& q, const std::filesystem::path& path);
void save_representation(const Representation& x, const std::filesystem::path& path);

} // namespace quiver
