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

#include <filesystem>
#include <map>
#include <random>
#include <string>

#include "chimera_dyn/chimera_dyn.hpp"
#include "oracles.hpp"

namespace testutil {

inline chimera_dyn::QubitGraph to_graph(const oracles::RandomGraph& r) {
  std::vector<chimera_dyn::Edge> edges;
  for (auto [a, b] : r.edges) edges.emplace_back(a, b);
  std::map<chimera_dyn::NodeId, chimera_dyn::Point> coords;
  std::map<chimera_dyn::NodeId, std::size_t> cells;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    coords[r.nodes[i]] = {r.coords[i].first, r.coords[i].second};
    cells[r.nodes[i]] = i / 8;
  }
  return chimera_dyn::QubitGraph(r.nodes, edges, coords, cells);
}

inline chimera_dyn::QubitGraph eight_node_loop() {
  return chimera_dyn::extract_subgraph(chimera_dyn::generate_chimera(2, 2, 4),
                                       chimera_dyn::default_experiment_nodes());
}

inline std::string temp_dir(const std::string& name) {
  const auto dir = std::filesystem::path(CHIMERA_DYN_TEST_TMP) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace testutil
