#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "made/tensor.hpp"

namespace made {

using Json = nlohmann::ordered_json;

Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);
Json read_json(const std::filesystem::path& path);

}  // namespace made
