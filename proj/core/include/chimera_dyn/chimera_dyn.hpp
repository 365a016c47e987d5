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

#include "chimera_dyn/analysis.hpp"
#include "chimera_dyn/dynamics.hpp"
#include "chimera_dyn/eigen.hpp"
#include "chimera_dyn/errors.hpp"
#include "chimera_dyn/format.hpp"
#include "chimera_dyn/graph_io.hpp"
#include "chimera_dyn/hamiltonian.hpp"
#include "chimera_dyn/hamiltonian_io.hpp"
#include "chimera_dyn/ingest.hpp"
#include "chimera_dyn/report_io.hpp"
#include "chimera_dyn/topology.hpp"
#include "chimera_dyn/trace_io.hpp"
