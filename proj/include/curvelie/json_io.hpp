#ifndef CURVELIE_JSON_IO_HPP
#define CURVELIE_JSON_IO_HPP

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvelie/diagram.hpp"
#include "curvelie/formal_sum.hpp"
#include "curvelie/word.hpp"

namespace curvelie {

using json = nlohmann::json;

/// {"terms":[{"coeff": c, "class": "ab"}, ...]} sorted by class string.
inline json to_json(const FormalSum& s) {
  std::vector<std::pair<std::string, long long>> rows;
  for (const auto& [cls, c] : s.terms()) rows.emplace_back(cls.str(), c);
  std::sort(rows.begin(), rows.end());
  json terms = json::array();
  for (const auto& [str, c] : rows)
    terms.push_back({{"coeff", c}, {"class", str}});
  return json{{"terms", terms}};
}

inline json to_json(const TensorSquareSum& s) {
  std::vector<std::pair<std::pair<std::string, std::string>, long long>> rows;
  for (const auto& [pair, c] : s.terms())
    rows.push_back({{pair.first.str(), pair.second.str()}, c});
  std::sort(rows.begin(), rows.end());
  json terms = json::array();
  for (const auto& [key, c] : rows)
    terms.push_back({{"coeff", c}, {"left", key.first}, {"right", key.second}});
  return json{{"terms", terms}};
}

inline json to_json(const TensorCubeSum& s) {
  std::vector<std::pair<std::array<std::string, 3>, long long>> rows;
  for (const auto& [t, c] : s.terms())
    rows.push_back({{t[0].str(), t[1].str(), t[2].str()}, c});
  std::sort(rows.begin(), rows.end());
  json terms = json::array();
  for (const auto& [key, c] : rows)
    terms.push_back({{"coeff", c},
                     {"first", key[0]},
                     {"second", key[1]},
                     {"third", key[2]}});
  return json{{"terms", terms}};
}

inline json to_json(const Signature& s) {
  return json{{"g", s.g}, {"k", s.k}, {"l", s.l}, {"chi", s.chi()}};
}

inline Signature signature_from_json(const json& j) {
  return Signature{j.at("g").get<int>(), j.at("k").get<int>(),
                   j.at("l").get<int>()};
}

/// Diagram file schema: half edges are the integers 0..n-1 implied by the
/// involution array; "vertices" lists the cyclic orders; "coloring" maps each
/// face id (smallest half edge of the face) to "in" or "out".
inline StringDiagram diagram_from_json(const json& j) {
  StringDiagram d;
  d.graph.involution = j.at("involution").get<std::vector<int>>();
  d.graph.vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
  for (const auto& [key, val] : j.at("coloring").items()) {
    const std::string v = val.get<std::string>();
    if (v != "in" && v != "out")
      throw std::invalid_argument("coloring values must be \"in\" or \"out\"");
    d.coloring[std::stoi(key)] =
        v == "in" ? FaceColor::input : FaceColor::output;
  }
  return d;
}

inline json to_json(const StringDiagram& d) {
  json coloring = json::object();
  for (const auto& [fid, color] : d.coloring)
    coloring[std::to_string(fid)] = color == FaceColor::input ? "in" : "out";
  return json{{"involution", d.graph.involution},
              {"vertices", d.graph.vertices},
              {"coloring", coloring}};
}

}  // namespace curvelie

#endif  // CURVELIE_JSON_IO_HPP
