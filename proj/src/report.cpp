#include "jgpt/report.hpp"

#include <algorithm>
#include <sstream>

namespace jgpt {

bool Report::overall_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::add(CheckRecord record) { checks.push_back(std::move(record)); }

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

nlohmann::json Report::to_json() const {
  std::vector<CheckRecord> sorted = checks;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckRecord& a, const CheckRecord& b) {
              return a.name < b.name;
            });
  nlohmann::json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["tolerance"] = tolerance;
  out["overall_pass"] = overall_pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : sorted) {
    nlohmann::json j;
    j["name"] = c.name;
    j["claim"] = c.claim;
    j["anchor"] = c.anchor;
    j["samples"] = c.samples;
    j["worst_residual"] = c.worst_residual;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  return out;
}

std::string Report::to_string() const { return to_json().dump(2) + "\n"; }

std::string Report::summary_lines() const {
  std::vector<CheckRecord> sorted = checks;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckRecord& a, const CheckRecord& b) {
              return a.name < b.name;
            });
  std::ostringstream os;
  for (const auto& c : sorted) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": worst="
       << c.worst_residual << " tol=" << c.tolerance << " samples="
       << c.samples << " (" << c.anchor << ")\n";
  }
  os << (overall_pass() ? "[PASS] " : "[FAIL] ") << suite << " overall\n";
  return os.str();
}

std::uint64_t check_stream_id(const std::string& name) {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace jgpt
