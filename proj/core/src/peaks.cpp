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

#include "chimera_dyn/analysis.hpp"

#include "chimera_dyn/errors.hpp"

namespace chimera_dyn {

PeakReport find_peaks(const FidelityTrace& trace, NodeId source, const PeakOptions& options) {
  const std::size_t samples = trace.sample_count();
  const std::size_t n = trace.node_count();
  if (samples < 3) throw InputError("find_peaks: trace needs at least 3 samples");
  const std::size_t src = trace.column(source);

  bool have_first = false;
  bool have_max = false;
  PeakReport report;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == src) continue;
    for (std::size_t s = 1; s < samples; ++s) {
      const double f = trace.at(s, k);
      if (have_max && f <= report.max_peak.fidelity) continue;
      report.max_peak = {s, trace.times[s], trace.nodes[k], f};
      have_max = true;
    }
    // Earliest local maximum of this node.
    for (std::size_t s = 1; s < samples; ++s) {
      if (have_first && s > report.first_peak.sample) break;
      const double f = trace.at(s, k);
      const bool rising = trace.at(s - 1, k) < f;
      const bool falls = s + 1 == samples || f >= trace.at(s + 1, k);
      if (!rising || !falls || f < options.threshold) continue;
      const bool better = !have_first || s < report.first_peak.sample ||
                          (s == report.first_peak.sample && f > report.first_peak.fidelity);
      if (better) report.first_peak = {s, trace.times[s], trace.nodes[k], f};
      have_first = true;
      break;
    }
  }
  if (!have_first) {
    throw NumericalError("find_peaks: no non-source node peaks above " + std::to_string(options.threshold) +
                         " in the window");
  }
  return report;
}

}  // namespace chimera_dyn
