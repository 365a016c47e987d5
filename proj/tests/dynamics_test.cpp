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

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "chimera_dyn/dynamics.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace chimera_dyn;

Hamiltonian two_node(double j = 1.0) {
  const QubitGraph g({0, 1}, {{0, 1}}, {{0, {0, 0}}, {1, {1, 0}}}, {{0, 0}, {1, 0}});
  return build_hamiltonian(g, Scaling::constant(), j);
}

double max_abs_diff(const FidelityTrace& a, const FidelityTrace& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.fidelity.size(); ++i) worst = std::max(worst, std::abs(a.fidelity[i] - b.fidelity[i]));
  return worst;
}

TEST(Evolve, TwoLevelRabi) {
  const Hamiltonian h = two_node();
  const FidelityTrace tr = evolve(h, {0, 101, std::numbers::pi / 2});
  for (std::size_t s = 0; s < tr.sample_count(); ++s) {
    const double t = tr.times[s];
    EXPECT_NEAR(tr.at(s, 1), std::sin(t) * std::sin(t), 1e-13);
    EXPECT_NEAR(tr.at(s, 0), std::cos(t) * std::cos(t), 1e-13);
  }
  EXPECT_NEAR(tr.at(100, 1), 1.0, 1e-13);
  EXPECT_DOUBLE_EQ(tr.times.back(), std::numbers::pi / 2);
}

TEST(Evolve, InitialCondition) {
  const Hamiltonian h = build_hamiltonian(generate_chimera(2, 2, 4), Scaling::dipole());
  const FidelityTrace tr = evolve(h, {13, 5, 1.0});
  const std::size_t src = tr.column(13);
  for (std::size_t k = 0; k < tr.node_count(); ++k) EXPECT_NEAR(tr.at(0, k), k == src ? 1.0 : 0.0, 1e-12);
}

TEST(Evolve, DefaultWindowIsInverseWeakestCoupling) {
  const Hamiltonian h = build_hamiltonian(testutil::eight_node_loop(), Scaling::dipole());
  const FidelityTrace tr = evolve(h, {3, 11, std::nullopt});
  EXPECT_NEAR(tr.t_max(), 1.0 / 0.11, 1e-9);
  EXPECT_EQ(tr.times.size(), 11u);
  EXPECT_EQ(tr.times[0], 0.0);
}

TEST(Evolve, TwinNodesUnderConstantCoupling) {
  const Hamiltonian h = build_hamiltonian(testutil::eight_node_loop(), Scaling::constant());
  const FidelityTrace tr = evolve(h, {3, 2001, std::nullopt});
  const std::size_t a = tr.column(7), b = tr.column(19);
  for (std::size_t s = 0; s < tr.sample_count(); ++s) EXPECT_NEAR(tr.at(s, a), tr.at(s, b), 1e-12);
  // reflection through 3 also pairs 15<->23 and 11<->31
  for (std::size_t s = 0; s < tr.sample_count(); s += 50) {
    EXPECT_NEAR(tr.at(s, tr.column(15)), tr.at(s, tr.column(23)), 1e-12);
    EXPECT_NEAR(tr.at(s, tr.column(11)), tr.at(s, tr.column(31)), 1e-12);
  }
}

TEST(Evolve, Validation) {
  const Hamiltonian h = two_node();
  EXPECT_THROW(evolve(h, {5, 10, 1.0}), InputError);
  EXPECT_THROW(evolve(h, {0, 1, 1.0}), InputError);
  EXPECT_THROW(evolve(h, {0, 10, -1.0}), InputError);
  const QubitGraph lone({4}, {}, {{4, {0, 0}}}, {{4, 0}});
  const Hamiltonian h0 = build_hamiltonian(lone, Scaling::constant());
  EXPECT_THROW(evolve(h0, {4, 10, std::nullopt}), NumericalError);
  const FidelityTrace tr = evolve(h0, {4, 3, 2.0});
  for (double f : tr.fidelity) EXPECT_EQ(f, 1.0);
}

TEST(Evolve, ParallelMatchesSequentialBitForBit) {
  const Hamiltonian h = build_hamiltonian(generate_chimera(2, 2, 4), Scaling::dipole());
  const FidelityTrace seq = evolve(h, {0, 777, std::nullopt}, 1);
  for (unsigned jobs : {2u, 3u, 8u}) {
    const FidelityTrace par = evolve(h, {0, 777, std::nullopt}, jobs);
    EXPECT_EQ(par.fidelity, seq.fidelity);
    EXPECT_EQ(par.totals, seq.totals);
  }
}

TEST(Evolve, MatchesMatrixExponentialOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const QubitGraph g = testutil::to_graph(oracles::random_graph(rng, 3, 12));
    const Hamiltonian h = build_hamiltonian(g, Scaling::dipole());
    const NodeId src = g.nodes()[0];
    const Propagator prop(h, src);
    std::vector<double> m(h.matrix().begin(), h.matrix().end());
    for (double t : {0.3, 1.7, 6.0}) {
      const auto expect = oracles::fidelities_by_matrix_exponential(m, h.size(), 0, t);
      const auto got = prop.fidelities(t);
      for (std::size_t k = 0; k < h.size(); ++k) EXPECT_NEAR(got[k], expect[k], 1e-10);
    }
  }
}

TEST(Propagator, UnitarityTimeSymmetryEnergyOnRandomGraphs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> time(-20.0, 20.0);
  for (int trial = 0; trial < 25; ++trial) {
    const QubitGraph g = testutil::to_graph(oracles::random_graph(rng, 2, 64));
    const Hamiltonian h = build_hamiltonian(g, trial % 2 ? Scaling::dipole() : Scaling::constant());
    const NodeId src = g.nodes()[trial % g.node_count()];
    const Propagator prop(h, src);
    const double e0 = prop.energy(0.0);
    EXPECT_NEAR(e0, 0.0, 1e-12);  // <k|H|k> = h_k = 0
    for (int i = 0; i < 10; ++i) {
      const double t = time(rng);
      const auto f = prop.fidelities(t);
      const auto fneg = prop.fidelities(-t);
      double total = 0.0;
      for (std::size_t k = 0; k < f.size(); ++k) {
        total += f[k];
        EXPECT_GE(f[k], -1e-12);
        EXPECT_LE(f[k], 1.0 + 1e-12);
        EXPECT_NEAR(f[k], fneg[k], 1e-10);
      }
      EXPECT_NEAR(total, 1.0, 1e-9);
      EXPECT_NEAR(prop.energy(t), e0, 1e-9);
    }
  }
}

TEST(Propagator, AutomorphismPermutesTraces) {
  // Reflection of a single 8-qubit cell swapping left-shore qubits 1 and 2
  // while fixing qubit 0: the traces of 1 and 2 must coincide.
  const QubitGraph cell = generate_chimera(1, 1, 4);
  const Hamiltonian h = build_hamiltonian(cell, Scaling::constant());
  const Propagator prop(h, 0);
  for (double t : {0.1, 0.5, 1.3, 4.0}) {
    const auto f = prop.fidelities(t);
    EXPECT_NEAR(f[1], f[2], 1e-12);
    EXPECT_NEAR(f[4], f[7], 1e-12);
  }
}

TEST(EvolveOracle, TwoLevelAnalytic) {
  const FidelityTrace tr = evolve_oracle(two_node(), {0, 201, 3.0});
  for (std::size_t s = 0; s < tr.sample_count(); ++s) {
    EXPECT_NEAR(tr.at(s, 1), std::pow(std::sin(tr.times[s]), 2), 1e-8);
    EXPECT_NEAR(tr.totals[s], 1.0, 1e-8);
  }
}

TEST(EvolveOracle, AgreesWithEigenbasisOnDipoleLoop) {
  const Hamiltonian h = build_hamiltonian(testutil::eight_node_loop(), Scaling::dipole());
  const EvolutionSpec spec{3, 2001, std::nullopt};
  const FidelityTrace a = evolve(h, spec);
  const FidelityTrace b = evolve_oracle(h, spec);
  EXPECT_LT(max_abs_diff(a, b), 1e-6);
  for (double tot : b.totals) EXPECT_LT(std::abs(tot - 1.0), 1e-8);
}

TEST(EvolveOracle, AgreesOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const QubitGraph g = testutil::to_graph(oracles::random_graph(rng, 2, 20));
    const Hamiltonian h = build_hamiltonian(g, Scaling::constant());
    const EvolutionSpec spec{g.nodes().back(), 101, 5.0};
    EXPECT_LT(max_abs_diff(evolve(h, spec), evolve_oracle(h, spec)), 1e-6) << trial;
  }
}

}  // namespace
