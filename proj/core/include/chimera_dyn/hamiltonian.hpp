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
#include <span>
#include <string>
#include <vector>

#include "chimera_dyn/topology.hpp"

namespace chimera_dyn {

// Order-preserving bijection between native qubit indices and 0..N-1.
class IndexMap {
 public:
  IndexMap() = default;
  // Sorts and validates uniqueness.
  explicit IndexMap(std::vector<NodeId> natives);

  std::size_t size() const { return natives_.size(); }
  bool contains(NodeId native) const;
  // Throws InputError for an unknown native index.
  std::size_t dense(NodeId native) const;
  // Throws InputError when dense >= size().
  NodeId native(std::size_t dense) const;
  const std::vector<NodeId>& natives() const { return natives_; }

  friend bool operator==(const IndexMap&, const IndexMap&) = default;

 private:
  std::vector<NodeId> natives_;
};

// Coupling-versus-length rule. Constant ignores length; InversePower gives
// J = j0 * (min_length / length)^exponent (exponent 3 is dipole-dipole).
struct Scaling {
  enum class Kind { Constant, InversePower };

  Kind kind = Kind::Constant;
  double exponent = 0.0;

  static Scaling constant() { return {}; }
  static Scaling dipole() { return {Kind::InversePower, 3.0}; }
  static Scaling coulomb() { return {Kind::InversePower, 1.0}; }
  static Scaling inverse_power(double p);

  // "constant", "dipole", "coulomb", "r2", or "power:<p>".
  static Scaling parse(const std::string& name);
  std::string name() const;

  friend bool operator==(const Scaling&, const Scaling&) = default;
};

// Dense single-excitation Hamiltonian. Off-diagonal (i, j) holds the coupling
// J_ij in (0, j0] on edges and 0 elsewhere; the diagonal holds the qubit
// biases, which are zero here.
class Hamiltonian {
 public:
  Hamiltonian() = default;
  // Takes a row-major n x n matrix; throws InputError unless it is exactly
  // symmetric and sized to the index map.
  Hamiltonian(std::vector<double> matrix, IndexMap remap, Scaling scaling = {}, double j0 = 1.0);

  std::size_t size() const { return remap_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return matrix_[i * size() + j]; }
  std::span<const double> matrix() const { return matrix_; }
  const IndexMap& remap() const { return remap_; }
  const Scaling& scaling() const { return scaling_; }
  double j0() const { return j0_; }

  // Coupling between two native qubits.
  double coupling(NodeId a, NodeId b) const;
  // Smallest strictly positive off-diagonal entry; throws NumericalError
  // when there are no couplings.
  double min_coupling() const;
  double frobenius_norm() const;

  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;

 private:
  std::vector<double> matrix_;
  IndexMap remap_;
  Scaling scaling_;
  double j0_ = 1.0;
};

// Builds the coupling matrix of g. Entries are assigned in symmetric pairs,
// native indices are remapped in ascending order, and under InversePower
// scaling the shortest edge carries exactly j0.
Hamiltonian build_hamiltonian(const QubitGraph& g, Scaling scaling, double j0 = 1.0);

}  // namespace chimera_dyn
