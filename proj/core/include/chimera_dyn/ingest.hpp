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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "chimera_dyn/topology.hpp"

namespace chimera_dyn {

// Per-qubit named scalar attributes keyed by native index. Qubits missing
// from an attribute's map are dead for that attribute.
struct AttributeSet {
  std::map<std::string, std::map<NodeId, double>> attributes;

  bool empty() const { return attributes.empty(); }
  std::vector<std::string> names() const;
  // Union of qubits carrying at least one attribute.
  std::vector<NodeId> qubits() const;

  friend bool operator==(const AttributeSet&, const AttributeSet&) = default;
};

// QASA attribute names in table order.
inline constexpr const char* kKnownAttributes[] = {"beta", "b", "lambda", "eta"};

// {"qubits": {"<native idx>": {"beta": f, "b": f, "lambda": f, "eta": f}, ...}}
// Unknown attribute names are carried through. Throws InputError with the
// offending record on malformed input or on a qubit that is not in g.
AttributeSet load_attributes(std::istream& in, const QubitGraph& g);
AttributeSet load_attributes_file(const std::string& path, const QubitGraph& g);

// Values are written with shortest round-trip precision so loading the
// output reproduces every value bit-exactly.
void save_attributes(std::ostream& out, const AttributeSet& attrs);
void save_attributes_file(const std::string& path, const AttributeSet& attrs);

enum class SyntheticModel { Iid, Smooth, Anti };

SyntheticModel parse_synthetic_model(const std::string& name);
const char* to_string(SyntheticModel m);

// Test data for the autocorrelation statistics. Fills every known attribute
// name, each from its own stream derived from `seed`.
//  - Iid:    independent standard normal draws (no autocorrelation).
//  - Smooth: random low-frequency field over the qubit coordinates, length
//            scale two mean edge lengths, plus N(0, 0.05^2) noise.
//  - Anti:   +1/-1 two-colouring by breadth-first search, the colour of each
//            component's root chosen from the seed (negative autocorrelation
//            on bipartite graphs).
AttributeSet synthesize_attributes(const QubitGraph& g, SyntheticModel model,
                                   std::uint64_t seed);

}  // namespace chimera_dyn
