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

#include "chimera_dyn/analysis.hpp"

namespace chimera_dyn {

// {"first_peak": {"time", "node", "fidelity", "sample"}, "max_peak": {...}}
std::string peaks_to_json(const PeakReport& report);

// i,j,rel_length,sim
void write_similarity_csv(std::ostream& out, const SimilarityMatrix& sim);

// node,fidelity at one sample.
void write_snapshot_csv(std::ostream& out, const FidelityTrace& trace, std::size_t sample);

// {"beta": {"all": c, "internal": c, "external": c, "n": n,
//           "edges": {"all": E, "internal": E, "external": E},
//           "strong": {"internal": bool, "external": bool}}, ...}
std::string geary_to_json(const GearyReport& report);

// Plain-text table, one row per attribute with all/internal/external columns.
std::string geary_table(const GearyReport& report);

}  // namespace chimera_dyn
