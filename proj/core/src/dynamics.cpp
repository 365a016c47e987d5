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

#include "chimera_dyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "chimera_dyn/errors.hpp"

namespace chimera_dyn {

std::vector<double> FidelityTrace::series(std::size_t k) const {
  std::vector<double> out(times.size());
  for (std::size_t s = 0; s < times.size(); ++s) out[s] = at(s, k);
  return out;
}

std::size_t FidelityTrace::column(NodeId native) const {
  auto it = std::find(nodes.begin(), nodes.end(), native);
  if (it == nodes.end()) throw InputError("trace has no column for node " + std::to_string(native));
  return static_cast<std::size_t>(it - nodes.begin());
}

Propagator::Propagator(const Hamiltonian& h, NodeId source, const JacobiOptions& options)
    : Propagator(h, eigendecompose_symmetric(h.matrix(), h.size(), options), source) {}

Propagator::Propagator(const Hamiltonian& h, Eigensystem es, NodeId source)
    : matrix_(h.matrix().begin(), h.matrix().end()), es_(std::move(es)) {
  if (es_.n != h.size()) throw InputError("propagator: eigensystem size does not match hamiltonian");
  const std::size_t src = h.remap().dense(source);
  source_ = src;
  overlap_.resize(es_.n);
  for (std::size_t m = 0; m < es_.n; ++m) overlap_[m] = es_.vectors[m * es_.n + src];
}

std::vector<std::complex<double>> Propagator::amplitudes(double t) const {
  const std::size_t n = es_.n;
  std::vector<std::complex<double>> a(n);
  if (t == 0.0) {
    a[source_] = 1.0;
    return a;
  }
  for (std::size_t m = 0; m < n; ++m) {
    const double phase = -es_.values[m] * t;
    const std::complex<double> w = std::complex<double>(std::cos(phase), std::sin(phase)) * overlap_[m];
    const double* vm = es_.vectors.data() + m * n;
    for (std::size_t k = 0; k < n; ++k) a[k] += w * vm[k];
  }
  return a;
}

void Propagator::fidelities(double t, std::span<double> out) const {
  const auto a = amplitudes(t);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::norm(a[k]);
}

std::vector<double> Propagator::fidelities(double t) const {
  std::vector<double> out(es_.n);
  fidelities(t, out);
  return out;
}

double Propagator::energy(double t) const {
  const auto a = amplitudes(t);
  const std::size_t n = a.size();
  std::complex<double> e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += matrix_[i * n + j] * a[j];
    e += std::conj(a[i]) * row;
  }
  return e.real();
}

double default_window(const Hamiltonian& h) { return 1.0 / h.min_coupling(); }

EvolutionSpec resolve_spec(const Hamiltonian& h, const EvolutionSpec& spec) {
  if (!h.remap().contains(spec.source)) {
    throw InputError("evolution: source node " + std::to_string(spec.source) + " is not in the hamiltonian");
  }
  if (spec.num_steps < 2) throw InputError("evolution: num_steps must be >= 2");
  EvolutionSpec out = spec;
  if (!out.t_max) out.t_max = default_window(h);
  if (!(*out.t_max > 0.0) || !std::isfinite(*out.t_max)) throw InputError("evolution: t_max must be positive");
  return out;
}

namespace {

FidelityTrace empty_trace(const Hamiltonian& h, const EvolutionSpec& spec) {
  FidelityTrace trace;
  trace.nodes = h.remap().natives();
  const std::size_t steps = spec.num_steps;
  trace.times.resize(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    trace.times[s] = *spec.t_max * static_cast<double>(s) / static_cast<double>(steps - 1);
  }
  trace.fidelity.assign(steps * h.size(), 0.0);
  trace.totals.assign(steps, 0.0);
  return trace;
}

void fill_totals(FidelityTrace& trace, std::size_t begin, std::size_t end) {
  for (std::size_t s = begin; s < end; ++s) {
    double total = 0.0;
    for (double f : trace.sample(s)) total += f;
    trace.totals[s] = total;
  }
}

}  // namespace

FidelityTrace evolve(const Hamiltonian& h, const EvolutionSpec& spec_in, unsigned jobs) {
  const EvolutionSpec spec = resolve_spec(h, spec_in);
  const Propagator prop(h, spec.source);
  FidelityTrace trace = empty_trace(h, spec);
  const std::size_t n = h.size();
  const std::size_t steps = spec.num_steps;

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      prop.fidelities(trace.times[s], std::span<double>(trace.fidelity.data() + s * n, n));
    }
    fill_totals(trace, begin, end);
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(steps)));
  if (jobs == 1) {
    work(0, steps);
    return trace;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (steps + jobs - 1) / jobs;
  for (std::size_t begin = 0; begin < steps; begin += chunk) {
    threads.emplace_back(work, begin, std::min(steps, begin + chunk));
  }
  for (auto& t : threads) t.join();
  return trace;
}

FidelityTrace evolve_oracle(const Hamiltonian& h, const EvolutionSpec& spec_in) {
  const EvolutionSpec spec = resolve_spec(h, spec_in);
  FidelityTrace trace = empty_trace(h, spec);
  const std::size_t n = h.size();
  const auto m = h.matrix();

  const double t_max = *spec.t_max;
  const double norm = h.frobenius_norm();
  // t_max / (1e4 ||H||) alone lets dt ||H|| grow with the window; RK4 phase
  // error is ~ (dt ||H||)^4 per unit of ||H|| t, so dt ||H|| is also capped.
  const double h_max = norm > 0.0 ? std::min(t_max / 1e4, 0.02) / norm : t_max / 1e4;
  const double interval = t_max / static_cast<double>(spec.num_steps - 1);
  const double substeps_real = std::ceil(interval / h_max);
  constexpr double kMaxSubsteps = 1e9;
  if (!(h_max > 0.0) || !std::isfinite(substeps_real) || substeps_real > kMaxSubsteps) {
    throw NumericalError("evolve_oracle: step size underflow (h_max = " + std::to_string(h_max) + ")");
  }
  const auto substeps = static_cast<std::size_t>(std::max(1.0, substeps_real));
  const double dt = interval / static_cast<double>(substeps);

  // psi = re + i im;  d re/dt = H im,  d im/dt = -H re
  std::vector<double> re(n, 0.0), im(n, 0.0);
  re[h.remap().dense(spec.source)] = 1.0;

  std::vector<double> k1r(n), k1i(n), k2r(n), k2i(n), k3r(n), k3i(n), k4r(n), k4i(n), tr(n), ti(n);
  auto deriv = [&](const std::vector<double>& xr, const std::vector<double>& xi, std::vector<double>& dr,
                   std::vector<double>& di) {
    for (std::size_t i = 0; i < n; ++i) {
      double hr = 0.0, hi = 0.0;
      const double* row = m.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        hr += row[j] * xr[j];
        hi += row[j] * xi[j];
      }
      dr[i] = hi;
      di[i] = -hr;
    }
  };
  auto step = [&] {
    deriv(re, im, k1r, k1i);
    for (std::size_t i = 0; i < n; ++i) tr[i] = re[i] + 0.5 * dt * k1r[i], ti[i] = im[i] + 0.5 * dt * k1i[i];
    deriv(tr, ti, k2r, k2i);
    for (std::size_t i = 0; i < n; ++i) tr[i] = re[i] + 0.5 * dt * k2r[i], ti[i] = im[i] + 0.5 * dt * k2i[i];
    deriv(tr, ti, k3r, k3i);
    for (std::size_t i = 0; i < n; ++i) tr[i] = re[i] + dt * k3r[i], ti[i] = im[i] + dt * k3i[i];
    deriv(tr, ti, k4r, k4i);
    for (std::size_t i = 0; i < n; ++i) {
      re[i] += dt / 6.0 * (k1r[i] + 2.0 * k2r[i] + 2.0 * k3r[i] + k4r[i]);
      im[i] += dt / 6.0 * (k1i[i] + 2.0 * k2i[i] + 2.0 * k3i[i] + k4i[i]);
    }
  };

  for (std::size_t s = 0; s < spec.num_steps; ++s) {
    if (s > 0) {
      for (std::size_t k = 0; k < substeps; ++k) step();
    }
    for (std::size_t i = 0; i < n; ++i) trace.fidelity[s * n + i] = re[i] * re[i] + im[i] * im[i];
  }
  fill_totals(trace, 0, spec.num_steps);
  return trace;
}

}  // namespace chimera_dyn
