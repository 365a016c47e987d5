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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chimera_dyn/eigen.hpp"
#include "chimera_dyn/hamiltonian.hpp"

namespace chimera_dyn {

struct EvolutionSpec {
  NodeId source = 0;            // native index of the initially excited qubit
  std::size_t num_steps = 2001;  // samples including t = 0 and t = t_max
  std::optional<double> t_max;   // default 1 / J_min
};

// Per-node excitation probabilities sampled on [0, t_max].
struct FidelityTrace {
  std::vector<NodeId> nodes;      // native index of each dense column
  std::vector<double> times;      // ascending, times[s] = s * t_max / (S - 1)
  std::vector<double> fidelity;   // sample-major: fidelity[s * N + k]
  std::vector<double> totals;     // per sample sum over k

  std::size_t node_count() const { return nodes.size(); }
  std::size_t sample_count() const { return times.size(); }
  double at(std::size_t sample, std::size_t k) const { return fidelity[sample * nodes.size() + k]; }
  std::span<const double> sample(std::size_t s) const {
    return {fidelity.data() + s * nodes.size(), nodes.size()};
  }
  std::vector<double> series(std::size_t k) const;
  // Dense column of a native index; throws InputError if absent.
  std::size_t column(NodeId native) const;
  double t_max() const { return times.empty() ? 0.0 : times.back(); }
};

// Evaluates the single-excitation state at arbitrary times from the
// eigenbasis expansion of the initial state. Each time is computed directly
// from t = 0.
class Propagator {
 public:
  Propagator(const Hamiltonian& h, NodeId source, const JacobiOptions& options = {});
  Propagator(const Hamiltonian& h, Eigensystem es, NodeId source);

  std::size_t size() const { return es_.n; }
  const Eigensystem& eigensystem() const { return es_; }

  // a_k(t) = sum_m v_m[k] exp(-i lambda_m t) v_m[source]
  std::vector<std::complex<double>> amplitudes(double t) const;
  void fidelities(double t, std::span<double> out) const;
  std::vector<double> fidelities(double t) const;
  // <psi(t)| H |psi(t)>
  double energy(double t) const;

 private:
  std::vector<double> matrix_;
  Eigensystem es_;
  std::vector<double> overlap_;  // v_m[source]
  std::size_t source_ = 0;
};

// 1 / J_min of h.
double default_window(const Hamiltonian& h);

// Resolves defaults and validates (num_steps >= 2, t_max > 0, source known).
EvolutionSpec resolve_spec(const Hamiltonian& h, const EvolutionSpec& spec);

// Eigenbasis evolution. `jobs` > 1 splits samples across threads; output is
// identical to the sequential run.
FidelityTrace evolve(const Hamiltonian& h, const EvolutionSpec& spec, unsigned jobs = 1);

// Independent check: fixed-step classical RK4 integration of
// i d|psi>/dt = H|psi> with step <= min(t_max / 1e4, 0.02) / ||H||_F,
// landing exactly on every sample time.
FidelityTrace evolve_oracle(const Hamiltonian& h, const EvolutionSpec& spec);

}  // namespace chimera_dyn
