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

#include "chimera_dyn/dynamics.hpp"

namespace chimera_dyn {

// CSV with header `t,f_<native0>,f_<native1>,...,total`; 12 significant
// digits per value.
void write_trace_csv(std::ostream& out, const FidelityTrace& trace);
FidelityTrace read_trace_csv(std::istream& in);

void save_trace_file(const std::string& path, const FidelityTrace& trace);
FidelityTrace load_trace_file(const std::string& path);

}  // namespace chimera_dyn
