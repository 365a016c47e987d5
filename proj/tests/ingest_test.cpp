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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "chimera_dyn/analysis.hpp"
#include "chimera_dyn/ingest.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace chimera_dyn;

QubitGraph four_nodes() {
  return QubitGraph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}},
                    {{0, {0, 0}}, {1, {1, 0}}, {2, {2, 0}}, {3, {3, 0}}}, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
}

AttributeSet parse(const std::string& text, const QubitGraph& g) {
  std::istringstream in(text);
  return load_attributes(in, g);
}

TEST(LoadAttributes, MissingQubitsAreDead) {
  const auto attrs = parse(R"({"qubits": {"0": {"beta": 1.0, "b": 0.1},
                                           "1": {"beta": 2.0, "b": 0.2},
                                           "3": {"beta": 4.0, "b": 0.4}}})",
                           four_nodes());
  EXPECT_EQ(attrs.qubits(), (std::vector<NodeId>{0, 1, 3}));
  EXPECT_EQ(attrs.names(), (std::vector<std::string>{"b", "beta"}));
  EXPECT_EQ(attrs.attributes.at("beta").at(3), 4.0);
  EXPECT_FALSE(attrs.attributes.at("beta").count(2));
}

TEST(LoadAttributes, EmptyFileGivesEmptySet) {
  const auto attrs = parse("", four_nodes());
  EXPECT_TRUE(attrs.empty());
  EXPECT_THROW(geary_report(attrs, four_nodes()), NumericalError);
}

TEST(LoadAttributes, UnknownNamesCarriedThrough) {
  const auto attrs = parse(R"({"qubits": {"0": {"flux_offset": -3.5}}})", four_nodes());
  EXPECT_EQ(attrs.attributes.at("flux_offset").at(0), -3.5);
}

TEST(LoadAttributes, Errors) {
  const QubitGraph g = four_nodes();
  EXPECT_THROW(parse("{\"qubits\": ", g), InputError);
  EXPECT_THROW(parse(R"({"nodes": {}})", g), InputError);
  EXPECT_THROW(parse(R"({"qubits": {"9": {"beta": 1}}})", g), InputError);
  EXPECT_THROW(parse(R"({"qubits": {"x1": {"beta": 1}}})", g), InputError);
  EXPECT_THROW(parse(R"({"qubits": {"-1": {"beta": 1}}})", g), InputError);
  EXPECT_THROW(parse(R"({"qubits": {"1": {"beta": "hot"}}})", g), InputError);
  EXPECT_THROW(parse(R"({"qubits": {"1": 3}})", g), InputError);
  try {
    parse(R"({"qubits": {"0": {"beta": 1}, "1": {"beta": null}}})", g);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("record 1"), std::string::npos) << e.what();
  }
}

TEST(SaveAttributes, RoundTripIsBitExact) {
  const QubitGraph g = generate_chimera(2, 2, 4);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int trial = 0; trial < 20; ++trial) {
    AttributeSet attrs = synthesize_attributes(g, SyntheticModel::Iid, trial);
    for (NodeId q : g.nodes()) attrs.attributes["extra"][q] = u(rng);
    attrs.attributes["beta"][5] = std::numeric_limits<double>::denorm_min();
    attrs.attributes["beta"][6] = 0.1 + 0.2;
    attrs.attributes["eta"].erase(7);
    std::stringstream ss;
    save_attributes(ss, attrs);
    EXPECT_EQ(load_attributes(ss, g), attrs);
  }
}

TEST(Synthesize, Reproducible) {
  const QubitGraph g = generate_chimera(2, 2, 4);
  for (auto model : {SyntheticModel::Iid, SyntheticModel::Smooth, SyntheticModel::Anti}) {
    EXPECT_EQ(synthesize_attributes(g, model, 42), synthesize_attributes(g, model, 42));
  }
  EXPECT_NE(synthesize_attributes(g, SyntheticModel::Iid, 1), synthesize_attributes(g, SyntheticModel::Iid, 2));
  const auto attrs = synthesize_attributes(g, SyntheticModel::Iid, 1);
  EXPECT_EQ(attrs.names(), (std::vector<std::string>{"b", "beta", "eta", "lambda"}));
}

TEST(Synthesize, EmptyGraphThrows) {
  EXPECT_THROW(synthesize_attributes(QubitGraph{}, SyntheticModel::Iid, 0), InputError);
}

std::vector<std::pair<int, int>> dense_edges(const QubitGraph& g, const std::vector<NodeId>& order) {
  std::map<NodeId, int> idx;
  for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.push_back({idx[e.a], idx[e.b]});
  return out;
}

double brute_c(const std::map<NodeId, double>& values, const QubitGraph& g) {
  std::vector<double> x;
  std::vector<NodeId> order;
  for (const auto& [q, v] : values) {
    order.push_back(q);
    x.push_back(v);
  }
  return oracles::geary_brute_force(x, dense_edges(g, order));
}

TEST(Synthesize, AntiOnLoopIsNegativelyCorrelated) {
  const QubitGraph loop = testutil::eight_node_loop();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto attrs = synthesize_attributes(loop, SyntheticModel::Anti, seed);
    for (const auto& [name, values] : attrs.attributes) {
      const double c = brute_c(values, loop);
      EXPECT_GT(c, 1.0) << name;
      // alternating +-1 on an 8-cycle: (n-1) * 8 * 4 / (2 * 8 * 16) = 1.75
      EXPECT_NEAR(c, 1.75, 1e-12);
    }
  }
}

TEST(Synthesize, SmoothOnTwoByTwoIsPositivelyCorrelated) {
  const QubitGraph g = generate_chimera(2, 2, 4);
  double sum = 0.0;
  int below = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto attrs = synthesize_attributes(g, SyntheticModel::Smooth, seed);
    for (const auto& [name, values] : attrs.attributes) {
      const double c = brute_c(values, g);
      sum += c;
      below += c < 1.0;
      ++total;
    }
  }
  EXPECT_LT(sum / total, 0.8);
  EXPECT_GE(below, total * 9 / 10);
}

TEST(Synthesize, IidOnFullChipNearOne) {
  const QubitGraph g = generate_chimera(16, 16, 4);
  const auto attrs = synthesize_attributes(g, SyntheticModel::Iid, 7);
  for (const auto& [name, values] : attrs.attributes) {
    const double c = geary_c(values, g.edges());
    EXPECT_GE(c, 0.9) << name;
    EXPECT_LE(c, 1.1) << name;
  }
}

}  // namespace
