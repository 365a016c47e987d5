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

#include "chimera_dyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "chimera_dyn/errors.hpp"

namespace chimera_dyn {

namespace {

struct GearyTerms {
  std::size_t n = 0;
  double variance_sum = 0.0;  // sum_i (x_i - mean)^2
};

GearyTerms node_terms(const std::map<NodeId, double>& values) {
  GearyTerms t;
  t.n = values.size();
  if (t.n < 2) throw NumericalError("geary_c: need at least 2 nodes, got " + std::to_string(t.n));
  double mean = 0.0;
  for (const auto& [q, x] : values) mean += x;
  mean /= static_cast<double>(t.n);
  bool constant = true;
  const double first = values.begin()->second;
  for (const auto& [q, x] : values) {
    t.variance_sum += (x - mean) * (x - mean);
    constant = constant && x == first;
  }
  if (constant || !(t.variance_sum > 0.0)) {
    throw NumericalError("geary_c: constant field, C undefined (zero variance)");
  }
  return t;
}

// sum over listed undirected edges of (x_a - x_b)^2; each edge once.
double squared_differences(const std::map<NodeId, double>& values, std::span<const Edge> edges) {
  double s = 0.0;
  for (const auto& e : edges) {
    auto a = values.find(e.a);
    auto b = values.find(e.b);
    if (a == values.end() || b == values.end()) {
      throw InputError("geary_c: edge " + Edge(e.a, e.b).key() + " touches a node without a value");
    }
    const double d = a->second - b->second;
    s += d * d;
  }
  return s;
}

// Each undirected edge appears twice in both double sums of the formula, so
// the factors of 2 cancel: C = (n-1) S / (2 V E).
double combine(const GearyTerms& t, double diff_sum, std::size_t edge_count) {
  return static_cast<double>(t.n - 1) * diff_sum /
         (2.0 * t.variance_sum * static_cast<double>(edge_count));
}

}  // namespace

double geary_c(const std::map<NodeId, double>& values, std::span<const Edge> edges) {
  const GearyTerms t = node_terms(values);
  if (edges.empty()) throw NumericalError("geary_c: no edges");
  return combine(t, squared_differences(values, edges), edges.size());
}

bool GearySubsets::strong_internal() const { return std::abs(internal - all) > 0.1 * std::abs(all); }
bool GearySubsets::strong_external() const { return std::abs(external - all) > 0.1 * std::abs(all); }

GearyReport geary_report(const AttributeSet& attrs, const QubitGraph& g) {
  if (attrs.empty()) throw NumericalError("geary_report: no attributes");
  std::vector<EdgeClass> classes;
  classes.reserve(g.edge_count());
  for (const auto& e : g.edges()) classes.push_back(classify_edge(g, e));

  GearyReport report;
  for (const auto& [name, values] : attrs.attributes) {
    for (const auto& [q, x] : values) {
      if (!g.has_node(q)) {
        throw InputError("geary_report: attribute '" + name + "' has qubit " + std::to_string(q) +
                         " outside the graph");
      }
    }
    std::vector<Edge> all, internal, external;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      if (!values.count(e.a) || !values.count(e.b)) continue;  // dead endpoint
      all.push_back(e);
      (classes[i] == EdgeClass::Internal ? internal : external).push_back(e);
    }
    const GearyTerms t = node_terms(values);
    auto subset = [&](const std::vector<Edge>& edges, const char* label) {
      if (edges.empty()) {
        throw NumericalError("geary_report: attribute '" + name + "' has no live " + label + " edges");
      }
      return combine(t, squared_differences(values, edges), edges.size());
    };
    GearySubsets r;
    r.n = t.n;
    r.edges_all = all.size();
    r.edges_internal = internal.size();
    r.edges_external = external.size();
    r.all = subset(all, "");
    r.internal = subset(internal, "internal");
    r.external = subset(external, "external");
    report.attributes.emplace(name, r);
  }
  return report;
}

PermutationResult geary_permutation_test(const std::map<NodeId, double>& values,
                                         std::span<const Edge> edges, std::size_t permutations,
                                         std::uint64_t seed) {
  PermutationResult result;
  result.observed = geary_c(values, edges);
  result.permutations = permutations;

  std::vector<NodeId> keys;
  std::vector<double> pool;
  for (const auto& [q, x] : values) {
    keys.push_back(q);
    pool.push_back(x);
  }
  std::mt19937_64 rng(seed);
  std::map<NodeId, double> shuffled = values;
  const double observed_dev = std::abs(result.observed - 1.0);
  std::size_t extreme = 0;
  double sum = 0.0;
  for (std::size_t p = 0; p < permutations; ++p) {
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; i < keys.size(); ++i) shuffled[keys[i]] = pool[i];
    const double c = geary_c(shuffled, edges);
    sum += c;
    if (std::abs(c - 1.0) >= observed_dev) ++extreme;
  }
  result.null_mean = permutations ? sum / static_cast<double>(permutations) : 0.0;
  result.p_value = static_cast<double>(1 + extreme) / static_cast<double>(1 + permutations);
  return result;
}

}  // namespace chimera_dyn
