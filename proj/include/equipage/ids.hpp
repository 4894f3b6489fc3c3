#ifndef EQUIPAGE_IDS_HPP
#define EQUIPAGE_IDS_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace equipage {

// Identifier formatting for derived structures. All canonical constructions
// (opposites, products, commas, quotients, collages) name their cells with
// these helpers, so outputs are reproducible byte for byte.

inline std::string tuple_id(std::initializer_list<std::string> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ",";
    out += p;
    first = false;
  }
  out += ")";
  return out;
}

inline std::string tuple_id(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

// Stable name for a finite function table; entries in key order.
inline std::string table_id(const std::map<std::string, std::string>& table) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : table) {
    if (!first) out += ";";
    out += k + ">" + v;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace equipage

#endif
