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

#include "chimera_dyn/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chimera_dyn/errors.hpp"
#include "chimera_dyn/format.hpp"

namespace chimera_dyn {

IndexMap::IndexMap(std::vector<NodeId> natives) : natives_(std::move(natives)) {
  std::sort(natives_.begin(), natives_.end());
  if (std::adjacent_find(natives_.begin(), natives_.end()) != natives_.end()) {
    throw InputError("index map: duplicate native index");
  }
}

bool IndexMap::contains(NodeId native) const {
  return std::binary_search(natives_.begin(), natives_.end(), native);
}

std::size_t IndexMap::dense(NodeId native) const {
  auto it = std::lower_bound(natives_.begin(), natives_.end(), native);
  if (it == natives_.end() || *it != native) {
    throw InputError("index map: unknown native index " + std::to_string(native));
  }
  return static_cast<std::size_t>(it - natives_.begin());
}

NodeId IndexMap::native(std::size_t dense) const {
  if (dense >= natives_.size()) throw InputError("index map: dense index out of range");
  return natives_[dense];
}

Scaling Scaling::inverse_power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InputError("scaling: exponent must be positive");
  return {Kind::InversePower, p};
}

Scaling Scaling::parse(const std::string& name) {
  if (name == "constant") return constant();
  if (name == "dipole") return dipole();
  if (name == "coulomb") return coulomb();
  if (name == "r2") return inverse_power(2.0);
  if (name.rfind("power:", 0) == 0) {
    const std::string arg = name.substr(6);
    std::size_t pos = 0;
    double p = 0.0;
    try {
      p = std::stod(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != arg.size()) throw InputError("scaling: bad exponent in '" + name + "'");
    return inverse_power(p);
  }
  throw InputError("unknown scaling '" + name + "' (expected constant, dipole, coulomb, r2, power:<p>)");
}

std::string Scaling::name() const {
  if (kind == Kind::Constant) return "constant";
  if (exponent == 3.0) return "dipole";
  if (exponent == 1.0) return "coulomb";
  if (exponent == 2.0) return "r2";
  return "power:" + format_real(exponent);
}

Hamiltonian::Hamiltonian(std::vector<double> matrix, IndexMap remap, Scaling scaling, double j0)
    : matrix_(std::move(matrix)), remap_(std::move(remap)), scaling_(scaling), j0_(j0) {
  const std::size_t n = remap_.size();
  if (matrix_.size() != n * n) throw InputError("hamiltonian: matrix size does not match index map");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix_[i * n + j] != matrix_[j * n + i]) throw InputError("hamiltonian: matrix is not symmetric");
    }
  }
  for (double v : matrix_) {
    if (!std::isfinite(v)) throw InputError("hamiltonian: non-finite entry");
  }
}

double Hamiltonian::coupling(NodeId a, NodeId b) const {
  return (*this)(remap_.dense(a), remap_.dense(b));
}

double Hamiltonian::min_coupling() const {
  const std::size_t n = size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::abs((*this)(i, j));
      if (v > 0.0) best = std::min(best, v);
    }
  }
  if (!std::isfinite(best)) throw NumericalError("hamiltonian has no couplings; J_min is undefined");
  return best;
}

double Hamiltonian::frobenius_norm() const {
  double s = 0.0;
  for (double v : matrix_) s += v * v;
  return std::sqrt(s);
}

Hamiltonian build_hamiltonian(const QubitGraph& g, Scaling scaling, double j0) {
  if (g.empty()) throw InputError("build_hamiltonian: empty graph");
  if (!(j0 > 0.0) || !std::isfinite(j0)) throw InputError("build_hamiltonian: j0 must be positive");

  IndexMap remap(g.nodes());
  const std::size_t n = remap.size();
  std::vector<double> m(n * n, 0.0);  // diagonal: h_i = 0

  std::map<Edge, double> lengths;
  double min_length = 0.0;
  if (scaling.kind == Scaling::Kind::InversePower && g.edge_count() > 0) {
    lengths = edge_lengths(g);
    min_length = std::min_element(lengths.begin(), lengths.end(), [](auto& x, auto& y) {
                   return x.second < y.second;
                 })->second;
  }

  for (const auto& e : g.edges()) {
    double j = j0;
    if (scaling.kind == Scaling::Kind::InversePower) {
      const double len = lengths.at(e);
      j = len == min_length ? j0 : j0 * std::pow(min_length / len, scaling.exponent);
    }
    const std::size_t a = remap.dense(e.a);
    const std::size_t b = remap.dense(e.b);
    m[a * n + b] = j;
    m[b * n + a] = j;
  }
  return Hamiltonian(std::move(m), std::move(remap), scaling, j0);
}

}  // namespace chimera_dyn
