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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chimera_dyn {

// Native hardware qubit index. Not necessarily consecutive.
using NodeId = std::uint32_t;

// Undirected edge, always stored with a < b.
struct Edge {
  NodeId a = 0;
  NodeId b = 0;

  Edge() = default;
  Edge(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  // "min-max" key used in the JSON formats.
  std::string key() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class EdgeClass { Internal, External };

const char* to_string(EdgeClass c);

// A qubit connectivity graph with schematic coordinates and unit-cell
// membership. Immutable once constructed; the constructor validates:
//  - no duplicate nodes, no duplicate edges, no self-loops
//  - every edge endpoint is a node
//  - every node has a coordinate and a cell
//  - length overrides refer to existing edges and are positive
class QubitGraph {
 public:
  QubitGraph() = default;
  QubitGraph(std::vector<NodeId> nodes, std::vector<Edge> edges,
             std::map<NodeId, Point> coords, std::map<NodeId, std::size_t> cells,
             std::map<Edge, double> length_overrides = {});

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<NodeId, Point>& coords() const { return coords_; }
  const std::map<NodeId, std::size_t>& cells() const { return cells_; }
  const std::map<Edge, double>& length_overrides() const { return length_overrides_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  bool has_node(NodeId n) const;
  bool has_edge(Edge e) const;

  // Neighbours of n in ascending order. Throws InputError for unknown n.
  std::vector<NodeId> neighbors(NodeId n) const;

  friend bool operator==(const QubitGraph&, const QubitGraph&) = default;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::map<NodeId, Point> coords_;
  std::map<NodeId, std::size_t> cells_;
  std::map<Edge, double> length_overrides_;
  std::vector<NodeId> sorted_nodes_;
  std::vector<Edge> sorted_edges_;
};

// Schematic placement and connection-length table for generate_chimera.
//
// Cell (i, j) has origin (j * cell_pitch_x, -i * cell_pitch_y). Left-shore
// qubit k sits at origin + (0, -k * vertical_spacing), right-shore qubit
// shore + k at origin + (horizontal_spacing, -k * vertical_spacing).
//
// A K_{s,s} drawn on two columns cannot have equal Euclidean edge lengths,
// so connection lengths come from a per-edge table: every internal edge
// gets internal_length, vertical inter-cell edges vertical_length and
// horizontal inter-cell edges horizontal_length.
struct ChimeraLayout {
  double vertical_spacing = 1.0;
  double horizontal_spacing = 1.0;
  double cell_pitch_x = 3.0;
  std::optional<double> cell_pitch_y;  // default: shore * vertical_spacing + 1

  bool use_length_table = true;
  double internal_length = 1.0;
  // (1 / 0.11)^(1/3): a vertical coupler carries 11% of the internal weight
  // under 1/r^3 scaling.
  double vertical_length = default_vertical_length();
  double horizontal_length = 1.8;

  static double default_vertical_length();
};

// Chimera graph with rows x cols unit cells of 2 * shore qubits. Native
// index of qubit k in cell (i, j) is (i * cols + j) * 2 * shore + k.
QubitGraph generate_chimera(int rows, int cols, int shore, const ChimeraLayout& layout = {});

// Internal iff both endpoints share a unit cell. Throws InputError if the
// edge is not in g.
EdgeClass classify_edge(const QubitGraph& g, Edge edge);

// Induced subgraph on `keep`. Coordinates, cells and length overrides of the
// kept nodes/edges are preserved; node order follows g.
QubitGraph extract_subgraph(const QubitGraph& g, std::span<const NodeId> keep);

// Connection length of every edge: the override if present, otherwise the
// Euclidean distance between endpoint coordinates. Throws InputError on a
// non-positive length.
std::map<Edge, double> edge_lengths(const QubitGraph& g);

// The 8-node single-loop subnetwork used for the dynamics experiment on a
// 2x2 shore-4 Chimera: 3-7-15-11-27-31-23-19-3.
std::vector<NodeId> default_experiment_nodes();

}  // namespace chimera_dyn
