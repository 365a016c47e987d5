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
#include <vector>

namespace chimera_dyn {

// Eigenpairs of a real symmetric matrix.
struct Eigensystem {
  std::size_t n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row m holds eigenvector m: vectors[m * n + k]

  std::span<const double> vector(std::size_t m) const { return {vectors.data() + m * n, n}; }
};

struct JacobiOptions {
  int max_sweeps = 100;
  // Stop once the off-diagonal Frobenius norm is below
  // relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-12;
  // Contract checked after convergence: ||A v - lambda v|| <= this * ||A||_F.
  double residual_tolerance = 1e-10;
};

// Cyclic Jacobi rotations on a row-major n x n symmetric matrix. Throws
// NumericalError (with the worst residual) if the sweep cap is hit or the
// residual contract fails, InputError if the matrix is not symmetric.
Eigensystem eigendecompose_symmetric(std::span<const double> matrix, std::size_t n,
                                     const JacobiOptions& options = {});

// max_m ||A v_m - lambda_m v_m||.
double max_residual(std::span<const double> matrix, const Eigensystem& es);
// max_{m,l} |<v_m, v_l> - delta_ml|.
double orthonormality_error(const Eigensystem& es);

}  // namespace chimera_dyn
