// Cayley tables in JSON: {"name": "Z2", "order": 2, "table": [[0,1],[1,0]]},
// zero-based entries with the identity at index 0.
#pragma once

#include "qglab/group.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qglab {

/// Raised for syntactically malformed or structurally wrong input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline GroupTable parse_cayley(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("cayley table: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("cayley table: top level must be an object");
  for (const char* key : {"name", "order", "table"})
    if (!j.contains(key)) throw ParseError(std::string("cayley table: missing field '") + key + "'");
  if (!j["name"].is_string()) throw ParseError("cayley table: 'name' must be a string");
  if (!j["order"].is_number_integer() || j["order"].get<long long>() <= 0)
    throw ParseError("cayley table: 'order' must be a positive integer");
  const auto order = j["order"].get<std::size_t>();
  const auto& t = j["table"];
  if (!t.is_array() || t.size() != order)
    throw ParseError("cayley table: 'table' must be an array of " + std::to_string(order) + " rows");
  std::vector<std::vector<std::size_t>> rows(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (!t[i].is_array() || t[i].size() != order)
      throw ParseError("cayley table: row " + std::to_string(i) + " must have " + std::to_string(order) + " entries");
    for (std::size_t k = 0; k < order; ++k) {
      const auto& e = t[i][k];
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw ParseError("cayley table: entry [" + std::to_string(i) + "][" + std::to_string(k) +
                         "] must be a non-negative integer");
      rows[i].push_back(e.get<std::size_t>());
    }
  }
  return GroupTable(j["name"].get<std::string>(), std::move(rows));
}

inline GroupTable load_cayley(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley(buf.str());
}

inline std::string to_cayley_json(const GroupTable& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table();
  return j.dump() + "\n";
}

}  // namespace qglab
