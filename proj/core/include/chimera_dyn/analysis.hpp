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
#include <span>
#include <string>
#include <vector>

#include "chimera_dyn/dynamics.hpp"
#include "chimera_dyn/ingest.hpp"
#include "chimera_dyn/topology.hpp"

namespace chimera_dyn {

// ---------------------------------------------------------------------------
// Peaks

struct Peak {
  std::size_t sample = 0;
  double time = 0.0;
  NodeId node = 0;
  double fidelity = 0.0;
};

struct PeakReport {
  Peak first_peak;  // earliest local maximum over non-source nodes
  Peak max_peak;    // global maximum over non-source nodes and the window
};

struct PeakOptions {
  // Local maxima below this fidelity are ignored.
  double threshold = 1e-3;
};

// A local maximum of node k at sample s satisfies f(s-1) < f(s) >= f(s+1)
// and f(s) >= threshold. The last sample counts when f(last) > f(last-1);
// t = 0 never counts. Ties on the first peak go to the larger fidelity, then
// the smaller dense index. Throws NumericalError if no node peaks above the
// threshold, InputError on fewer than 3 samples or an unknown source.
PeakReport find_peaks(const FidelityTrace& trace, NodeId source, const PeakOptions& options = {});

// ---------------------------------------------------------------------------
// Edge similarity, sim = 1 - |f_i - f_j|

struct SimilarityEntry {
  Edge edge;
  double rel_length = 0.0;  // length / shortest length in the graph
  double sim = 0.0;
};

struct SimilarityMatrix {
  std::size_t sample = 0;
  double time = 0.0;
  std::vector<SimilarityEntry> entries;  // graph edge order
};

// Snapshot at the sample nearest to t (no interpolation). Throws InputError
// when t is outside the window or an edge endpoint is missing from the trace.
SimilarityMatrix similarity_at(const FidelityTrace& trace, const QubitGraph& g, double t);

// ---------------------------------------------------------------------------
// Geary's C

// C = (n-1) sum_ij w_ij (x_i - x_j)^2 / (2 sum_i (x_i - mean)^2 sum_ij w_ij)
// with w_ij = w_ji = 1 on the listed edges. n, the mean and the variance
// term are taken over all of `values`; edges must join keys of `values`.
// Throws NumericalError for n < 2, no edges, or zero variance.
double geary_c(const std::map<NodeId, double>& values, std::span<const Edge> edges);

struct GearySubsets {
  double all = 0.0;
  double internal = 0.0;
  double external = 0.0;
  std::size_t n = 0;
  std::size_t edges_all = 0;
  std::size_t edges_internal = 0;
  std::size_t edges_external = 0;

  // "Strong" when a subset differs from the all-edges value by more than 10%.
  bool strong_internal() const;
  bool strong_external() const;
};

struct GearyReport {
  std::map<std::string, GearySubsets> attributes;
};

// For every attribute: drop dead qubits (absent from the attribute) with all
// their edges, then evaluate C over all, internal-only and external-only
// edges, keeping n and the variance term over the full live node set.
GearyReport geary_report(const AttributeSet& attrs, const QubitGraph& g);

struct PermutationResult {
  double observed = 0.0;
  double null_mean = 0.0;
  double p_value = 0.0;  // two-sided, deviation from C = 1
  std::size_t permutations = 0;
};

// Randomisation test: relabels the values over the nodes `permutations`
// times. p = (1 + #{|C_perm - 1| >= |C_obs - 1|}) / (1 + permutations).
PermutationResult geary_permutation_test(const std::map<NodeId, double>& values,
                                         std::span<const Edge> edges,
                                         std::size_t permutations = 999,
                                         std::uint64_t seed = 0);

}  // namespace chimera_dyn
