#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace jgpt {

struct CheckRecord {
  std::string name;    // stable identifier; reports sort by it
  std::string claim;
  std::string anchor;  // which statement the check exercises
  int samples = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckRecord> checks;

  bool overall_pass() const;
  void add(CheckRecord record);
  void merge(const Report& other);  // absorbs the other suite's checks

  nlohmann::json to_json() const;   // checks sorted by name
  std::string to_string() const;    // pretty JSON
  std::string summary_lines() const;  // one pass/fail line per check
};

std::uint64_t check_stream_id(const std::string& name);

}  // namespace jgpt
