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

#include <iosfwd>
#include <string>

#include "chimera_dyn/hamiltonian.hpp"

namespace chimera_dyn {

// Binary layout (all little-endian):
//   "CHDM1"            5-byte magic
//   u32 N
//   N*N f64            row-major matrix
//   N u32              native indices (optional trailer; absent => 0..N-1)
void write_hamiltonian_binary(std::ostream& out, const Hamiltonian& h);
Hamiltonian read_hamiltonian_binary(std::istream& in);

// {"n": N, "natives": [...], "scaling": "...", "j0": j0, "matrix": [...]}
std::string hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const std::string& text);

// Dispatches on extension: ".json" selects JSON, anything else binary.
void save_hamiltonian_file(const std::string& path, const Hamiltonian& h);
Hamiltonian load_hamiltonian_file(const std::string& path);

}  // namespace chimera_dyn
