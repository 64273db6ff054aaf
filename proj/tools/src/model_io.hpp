#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "htoric/git_model.hpp"
#include "htoric/verifiers.hpp"

namespace htoric::cli {

/// Raw contents of a model file, after type checks but before model construction.
struct ModelSpec {
  ModelKind kind = ModelKind::Hypertoric;
  IntMatrix a;
  std::optional<IntVector> theta;
  std::vector<CoordSet> unstable;  // 0-based, direct models only
};

/// Integers may be JSON numbers or decimal strings.
Integer integer_from_json(const nlohmann::json& j, const std::string& where);
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
/// Numbers when they fit in 64 bits, strings otherwise.
nlohmann::ordered_json integer_to_json(const Integer& z);

nlohmann::json read_json_file(const std::filesystem::path& path);

ModelSpec parse_model_spec(const nlohmann::json& j);
/// Validates rank and genericity and builds the model. Throws htoric::Error.
StackModel build_model(const ModelSpec& spec);
StackModel parse_model(const nlohmann::json& j);
StackModel parse_model_file(const std::filesystem::path& path);

/// {"group_order": r, "generator": k, "normal_weights": [w...]} or
/// {"generators": [["1/2", ...], ...], "normal_weights": [[w...], ...]}.
bool is_local_model(const nlohmann::json& j);
LocalModelSRE parse_local_model(const nlohmann::json& j);

}  // namespace htoric::cli
