#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jgpt/model.hpp"

namespace jgpt {

// JSON model descriptor; the on-disk interface of the CLI.
struct ModelDescriptor {
  int schema_version = 1;
  std::string backend;  // "classical" | "jordan" | "polytopic"

  // jordan
  std::string kind;  // "real" | "complex" | "quaternionic" | "spin"
  int size = 0;

  // classical / polytopic
  std::vector<std::string> outcomes;
  std::vector<std::vector<std::string>> tests;  // outcome labels
  std::vector<std::vector<double>> vertices;

  static ModelDescriptor from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Throws DescriptorError with line/column on malformed JSON.
ModelDescriptor parse_descriptor(const std::string& text);
ModelDescriptor load_descriptor(const std::string& path);

Model build_model(const ModelDescriptor& d);
ModelDescriptor describe_model(const Model& m);

Algebra algebra_from_kind(const std::string& kind, int size);

}  // namespace jgpt
