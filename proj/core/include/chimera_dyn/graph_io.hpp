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

#include "chimera_dyn/topology.hpp"

namespace chimera_dyn {

// JSON graph format:
//   {"nodes": [...], "edges": [[a,b],...], "coords": {"3":[x,y],...},
//    "cells": {"3":0,...}, "length_overrides": {"3-19": 2.087, ...}}
void write_graph(std::ostream& out, const QubitGraph& g);
QubitGraph read_graph(std::istream& in);

std::string graph_to_json(const QubitGraph& g);
QubitGraph graph_from_json(const std::string& text);

QubitGraph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const QubitGraph& g);

}  // namespace chimera_dyn
