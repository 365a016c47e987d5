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

#include <algorithm>
#include <cmath>

#include "chimera_dyn/errors.hpp"

namespace chimera_dyn {

SimilarityMatrix similarity_at(const FidelityTrace& trace, const QubitGraph& g, double t) {
  if (trace.sample_count() == 0) throw InputError("similarity_at: empty trace");
  const double t0 = trace.times.front();
  const double t1 = trace.times.back();
  if (!(t >= t0 && t <= t1)) throw InputError("similarity_at: snapshot time outside the trace window");

  // Nearest sample; ties go to the earlier one.
  auto it = std::lower_bound(trace.times.begin(), trace.times.end(), t);
  std::size_t s = static_cast<std::size_t>(it - trace.times.begin());
  if (s == trace.sample_count() || (s > 0 && t - trace.times[s - 1] <= trace.times[s] - t)) --s;
  if (s >= trace.sample_count()) s = trace.sample_count() - 1;

  SimilarityMatrix out;
  out.sample = s;
  out.time = trace.times[s];
  if (g.edge_count() == 0) return out;

  const auto lengths = edge_lengths(g);
  double min_length = lengths.begin()->second;
  for (const auto& [e, len] : lengths) min_length = std::min(min_length, len);

  for (const auto& e : g.edges()) {
    const double fa = trace.at(s, trace.column(e.a));
    const double fb = trace.at(s, trace.column(e.b));
    out.entries.push_back({e, lengths.at(e) / min_length, std::clamp(1.0 - std::abs(fa - fb), 0.0, 1.0)});
  }
  return out;
}

}  // namespace chimera_dyn
