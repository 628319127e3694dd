#pragma once

#include <map>
#include <string>
#include <vector>

#include "gdsl/agents/agent.hpp"
#include "gdsl/design/schema.hpp"
#include "gdsl/pattern/pattern.hpp"

namespace fixtures {

inline std::map<std::string, std::string> default_table() {
  return gdsl::agents::default_answer_table(gdsl::design::default_schema());
}

inline bool has_prefix(const std::string& id, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (id.rfind(p, 0) == 0) return true;
  return false;
}

// Panels whose id starts with none of `prefixes`, in pattern order.
inline std::vector<gdsl::pattern::Panel> panels_outside(const gdsl::pattern::Pattern& p,
                                                        const std::vector<std::string>& prefixes) {
  std::vector<gdsl::pattern::Panel> out;
  for (const auto& panel : p.panels)
    if (!has_prefix(panel.id, prefixes)) out.push_back(panel);
  return out;
}

// Paths whose values differ, including paths present on one side only.
inline std::vector<std::string> changed_paths(const gdsl::design::DesignConfiguration& a,
                                              const gdsl::design::DesignConfiguration& b) {
  std::vector<std::string> out;
  for (const auto& [k, v] : a.assignments) {
    auto it = b.assignments.find(k);
    if (it == b.assignments.end() || !(it->second == v)) out.push_back(k);
  }
  for (const auto& [k, v] : b.assignments)
    if (!a.assignments.count(k)) out.push_back(k);
  return out;
}

}  // namespace fixtures
