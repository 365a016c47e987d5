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

#include "chimera_dyn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chimera_dyn/errors.hpp"

namespace chimera_dyn {

std::string Edge::key() const { return std::to_string(a) + "-" + std::to_string(b); }

const char* to_string(EdgeClass c) {
  return c == EdgeClass::Internal ? "internal" : "external";
}

QubitGraph::QubitGraph(std::vector<NodeId> nodes, std::vector<Edge> edges,
                       std::map<NodeId, Point> coords, std::map<NodeId, std::size_t> cells,
                       std::map<Edge, double> length_overrides)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      coords_(std::move(coords)),
      cells_(std::move(cells)),
      length_overrides_(std::move(length_overrides)) {
  sorted_nodes_ = nodes_;
  std::sort(sorted_nodes_.begin(), sorted_nodes_.end());
  if (std::adjacent_find(sorted_nodes_.begin(), sorted_nodes_.end()) != sorted_nodes_.end()) {
    throw InputError("graph: duplicate node");
  }

  // Edge's constructor normalises orientation; re-normalise in case a caller
  // filled the fields directly.
  for (auto& e : edges_) {
    e = Edge(e.a, e.b);
    if (e.a == e.b) throw InputError("graph: self-loop on node " + std::to_string(e.a));
    if (!has_node(e.a) || !has_node(e.b)) {
      throw InputError("graph: edge " + e.key() + " has an endpoint outside the node set");
    }
  }
  sorted_edges_ = edges_;
  std::sort(sorted_edges_.begin(), sorted_edges_.end());
  auto dup = std::adjacent_find(sorted_edges_.begin(), sorted_edges_.end());
  if (dup != sorted_edges_.end()) throw InputError("graph: duplicate edge " + dup->key());

  for (NodeId n : nodes_) {
    if (!coords_.count(n)) throw InputError("graph: node " + std::to_string(n) + " has no coordinate");
    if (!cells_.count(n)) throw InputError("graph: node " + std::to_string(n) + " has no cell");
  }
  for (const auto& [n, p] : coords_) {
    if (!has_node(n)) throw InputError("graph: coordinate for unknown node " + std::to_string(n));
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("graph: non-finite coordinate for node " + std::to_string(n));
    }
  }
  for (const auto& [n, c] : cells_) {
    if (!has_node(n)) throw InputError("graph: cell for unknown node " + std::to_string(n));
  }
  for (const auto& [e, len] : length_overrides_) {
    if (!has_edge(e)) throw InputError("graph: length override for unknown edge " + e.key());
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw InputError("graph: length override for edge " + e.key() + " must be positive");
    }
  }
}

bool QubitGraph::has_node(NodeId n) const {
  return std::binary_search(sorted_nodes_.begin(), sorted_nodes_.end(), n);
}

bool QubitGraph::has_edge(Edge e) const {
  e = Edge(e.a, e.b);
  return std::binary_search(sorted_edges_.begin(), sorted_edges_.end(), e);
}

std::vector<NodeId> QubitGraph::neighbors(NodeId n) const {
  if (!has_node(n)) throw InputError("graph: unknown node " + std::to_string(n));
  std::vector<NodeId> out;
  for (const auto& e : edges_) {
    if (e.a == n) out.push_back(e.b);
    else if (e.b == n) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ChimeraLayout::default_vertical_length() { return std::cbrt(1.0 / 0.11); }

QubitGraph generate_chimera(int rows, int cols, int shore, const ChimeraLayout& layout) {
  if (rows < 1 || cols < 1 || shore < 1) {
    throw InputError("generate_chimera: rows, cols and shore must be >= 1");
  }
  const auto cell_size = static_cast<NodeId>(2 * shore);
  const double pitch_y = layout.cell_pitch_y.value_or(shore * layout.vertical_spacing + 1.0);
  auto index = [&](int i, int j, int k) {
    return static_cast<NodeId>((i * cols + j)) * cell_size + static_cast<NodeId>(k);
  };

  std::vector<NodeId> nodes;
  std::map<NodeId, Point> coords;
  std::map<NodeId, std::size_t> cells;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Point origin{j * layout.cell_pitch_x, -i * pitch_y};
      const auto cell = static_cast<std::size_t>(i * cols + j);
      for (int k = 0; k < 2 * shore; ++k) {
        const NodeId q = index(i, j, k);
        const int row = k < shore ? k : k - shore;
        const double dx = k < shore ? 0.0 : layout.horizontal_spacing;
        nodes.push_back(q);
        coords[q] = {origin.x + dx, origin.y - row * layout.vertical_spacing};
        cells[q] = cell;
      }
    }
  }

  std::vector<Edge> edges;
  std::map<Edge, double> lengths;
  auto add = [&](NodeId u, NodeId v, double len) {
    edges.emplace_back(u, v);
    if (layout.use_length_table) lengths[Edge(u, v)] = len;
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      for (int k = 0; k < shore; ++k) {
        for (int l = shore; l < 2 * shore; ++l) add(index(i, j, k), index(i, j, l), layout.internal_length);
      }
      for (int k = 0; k < shore; ++k) {
        if (i + 1 < rows) add(index(i, j, k), index(i + 1, j, k), layout.vertical_length);
      }
      for (int k = shore; k < 2 * shore; ++k) {
        if (j + 1 < cols) add(index(i, j, k), index(i, j + 1, k), layout.horizontal_length);
      }
    }
  }
  return QubitGraph(std::move(nodes), std::move(edges), std::move(coords), std::move(cells),
                    std::move(lengths));
}

EdgeClass classify_edge(const QubitGraph& g, Edge edge) {
  if (!g.has_edge(edge)) throw InputError("classify_edge: unknown edge " + Edge(edge.a, edge.b).key());
  return g.cells().at(edge.a) == g.cells().at(edge.b) ? EdgeClass::Internal : EdgeClass::External;
}

QubitGraph extract_subgraph(const QubitGraph& g, std::span<const NodeId> keep) {
  std::set<NodeId> wanted;
  for (NodeId n : keep) {
    if (!g.has_node(n)) throw InputError("extract_subgraph: unknown node " + std::to_string(n));
    wanted.insert(n);
  }
  std::vector<NodeId> nodes;
  std::map<NodeId, Point> coords;
  std::map<NodeId, std::size_t> cells;
  for (NodeId n : g.nodes()) {
    if (!wanted.count(n)) continue;
    nodes.push_back(n);
    coords[n] = g.coords().at(n);
    cells[n] = g.cells().at(n);
  }
  std::vector<Edge> edges;
  std::map<Edge, double> lengths;
  for (const auto& e : g.edges()) {
    if (!wanted.count(e.a) || !wanted.count(e.b)) continue;
    edges.push_back(e);
    if (auto it = g.length_overrides().find(e); it != g.length_overrides().end()) {
      lengths.emplace(e, it->second);
    }
  }
  return QubitGraph(std::move(nodes), std::move(edges), std::move(coords), std::move(cells),
                    std::move(lengths));
}

std::map<Edge, double> edge_lengths(const QubitGraph& g) {
  std::map<Edge, double> out;
  for (const auto& e : g.edges()) {
    double len;
    if (auto it = g.length_overrides().find(e); it != g.length_overrides().end()) {
      len = it->second;
    } else {
      const Point& p = g.coords().at(e.a);
      const Point& q = g.coords().at(e.b);
      len = std::hypot(p.x - q.x, p.y - q.y);
    }
    if (!(len > 0.0)) throw InputError("edge_lengths: edge " + e.key() + " has zero length");
    out.emplace(e, len);
  }
  return out;
}

std::vector<NodeId> default_experiment_nodes() { return {3, 7, 15, 11, 27, 31, 23, 19}; }

}  // namespace chimera_dyn
