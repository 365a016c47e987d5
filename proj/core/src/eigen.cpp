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

#include "chimera_dyn/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "chimera_dyn/errors.hpp"

namespace chimera_dyn {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(s);
}

// Rotation in the (p, q) plane that zeroes a[p][q]; a <- J^T a J, v <- v J.
void rotate(std::vector<double>& a, std::vector<double>& v, std::size_t n, std::size_t p,
            std::size_t q) {
  const double apq = a[p * n + q];
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    a[k * n + p] = c * akp - s * akq;
    a[k * n + q] = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a[p * n + k];
    const double aqk = a[q * n + k];
    a[p * n + k] = c * apk - s * aqk;
    a[q * n + k] = s * apk + c * aqk;
  }
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v[k * n + p];
    const double vkq = v[k * n + q];
    v[k * n + p] = c * vkp - s * vkq;
    v[k * n + q] = s * vkp + c * vkq;
  }
}

}  // namespace

Eigensystem eigendecompose_symmetric(std::span<const double> matrix, std::size_t n,
                                     const JacobiOptions& options) {
  if (matrix.size() != n * n) throw InputError("eigendecompose: matrix is not n x n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i * n + j] != matrix[j * n + i]) throw InputError("eigendecompose: matrix is not symmetric");
    }
  }

  std::vector<double> a(matrix.begin(), matrix.end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double norm = 0.0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);
  const double threshold = options.relative_tolerance * norm;

  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p * n + q] != 0.0) rotate(a, v, n, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  Eigensystem es;
  es.n = n;
  es.values.resize(n);
  es.vectors.resize(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t col = order[m];
    es.values[m] = a[col * n + col];
    for (std::size_t k = 0; k < n; ++k) es.vectors[m * n + k] = v[k * n + col];
  }

  const double residual = max_residual(matrix, es);
  if (!converged || residual > options.residual_tolerance * norm) {
    std::ostringstream msg;
    msg << "eigendecompose: " << (converged ? "residual check failed" : "no convergence after ")
        << (converged ? "" : std::to_string(options.max_sweeps) + " sweeps")
        << "; worst residual " << residual << " (||A||_F = " << norm << ")";
    throw NumericalError(msg.str());
  }
  return es;
}

double max_residual(std::span<const double> matrix, const Eigensystem& es) {
  const std::size_t n = es.n;
  double worst = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const auto vec = es.vector(m);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = -es.values[m] * vec[i];
      for (std::size_t j = 0; j < n; ++j) r += matrix[i * n + j] * vec[j];
      s += r * r;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

double orthonormality_error(const Eigensystem& es) {
  const std::size_t n = es.n;
  double worst = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t l = m; l < n; ++l) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += es.vectors[m * n + k] * es.vectors[l * n + k];
      worst = std::max(worst, std::abs(dot - (m == l ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace chimera_dyn
