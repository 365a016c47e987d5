// Copyright 2026 The chimera-dyn Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "chimera_dyn/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "chimera_dyn/errors.hpp"
#include "chimera_dyn/format.hpp"
#include "json.hpp"

namespace chimera_dyn {

using nlohmann::json;

namespace {

NodeId parse_node_key(const std::string& key, const char* where) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != key.size() || key[0] == '-' || v > 0xffffffffULL) {
    throw InputError(std::string("graph json: bad node key '") + key + "' in " + where);
  }
  return static_cast<NodeId>(v);
}

Edge parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos) throw InputError("graph json: bad edge key '" + key + "'");
  return Edge(parse_node_key(key.substr(0, dash), "length_overrides"),
              parse_node_key(key.substr(dash + 1), "length_overrides"));
}

}  // namespace

std::string graph_to_json(const QubitGraph& g) {
  json j;
  j["nodes"] = g.nodes();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
  j["edges"] = std::move(edges);
  json coords = json::object();
  for (const auto& [n, p] : g.coords()) coords[std::to_string(n)] = {p.x, p.y};
  j["coords"] = std::move(coords);
  json cells = json::object();
  for (const auto& [n, c] : g.cells()) cells[std::to_string(n)] = c;
  j["cells"] = std::move(cells);
  json lengths = json::object();
  for (const auto& [e, len] : g.length_overrides()) lengths[e.key()] = len;
  j["length_overrides"] = std::move(lengths);
  return j.dump(1) + "\n";
}

QubitGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph json: ") + e.what());
  }
  try {
    std::vector<NodeId> nodes = j.at("nodes").get<std::vector<NodeId>>();
    std::vector<Edge> edges;
    for (const auto& item : j.at("edges")) {
      if (!item.is_array() || item.size() != 2) {
        throw InputError("graph json: edge " + item.dump() + " is not a pair");
      }
      edges.emplace_back(item[0].get<NodeId>(), item[1].get<NodeId>());
    }
    std::map<NodeId, Point> coords;
    for (const auto& [key, value] : j.at("coords").items()) {
      if (!value.is_array() || value.size() != 2) {
        throw InputError("graph json: coordinate of node " + key + " is not [x, y]");
      }
      coords[parse_node_key(key, "coords")] = {value[0].get<double>(), value[1].get<double>()};
    }
    std::map<NodeId, std::size_t> cells;
    for (const auto& [key, value] : j.at("cells").items()) {
      cells[parse_node_key(key, "cells")] = value.get<std::size_t>();
    }
    std::map<Edge, double> lengths;
    if (j.contains("length_overrides")) {
      for (const auto& [key, value] : j.at("length_overrides").items()) {
        lengths[parse_edge_key(key)] = value.get<double>();
      }
    }
    return QubitGraph(std::move(nodes), std::move(edges), std::move(coords), std::move(cells),
                      std::move(lengths));
  } catch (const json::exception& e) {
    throw InputError(std::string("graph json: ") + e.what());
  }
}

void write_graph(std::ostream& out, const QubitGraph& g) { out << graph_to_json(g); }

QubitGraph read_graph(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

QubitGraph load_graph_file(const std::string& path) { return graph_from_json(read_text_file(path)); }

void save_graph_file(const std::string& path, const QubitGraph& g) {
  write_text_file(path, graph_to_json(g));
}

}  // namespace chimera_dyn
