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

#include "chimera_dyn/report_io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "chimera_dyn/format.hpp"

namespace chimera_dyn {

namespace {

// Minimal writer so result files carry 12 significant digits.
std::string peak_json(const Peak& p, const std::string& indent) {
  std::ostringstream ss;
  ss << "{\n"
     << indent << "  \"time\": " << format_real(p.time) << ",\n"
     << indent << "  \"node\": " << p.node << ",\n"
     << indent << "  \"fidelity\": " << format_real(p.fidelity) << ",\n"
     << indent << "  \"sample\": " << p.sample << "\n"
     << indent << "}";
  return ss.str();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string peaks_to_json(const PeakReport& report) {
  return "{\n  \"first_peak\": " + peak_json(report.first_peak, "  ") + ",\n  \"max_peak\": " +
         peak_json(report.max_peak, "  ") + "\n}\n";
}

void write_similarity_csv(std::ostream& out, const SimilarityMatrix& sim) {
  out << "i,j,rel_length,sim\n";
  for (const auto& e : sim.entries) {
    out << e.edge.a << ',' << e.edge.b << ',' << format_real(e.rel_length) << ',' << format_real(e.sim) << '\n';
  }
}

void write_snapshot_csv(std::ostream& out, const FidelityTrace& trace, std::size_t sample) {
  out << "node,fidelity\n";
  const auto row = trace.sample(sample);
  for (std::size_t k = 0; k < trace.node_count(); ++k) out << trace.nodes[k] << ',' << format_real(row[k]) << '\n';
}

std::string geary_to_json(const GearyReport& report) {
  std::ostringstream ss;
  ss << "{";
  bool first = true;
  for (const auto& [name, r] : report.attributes) {
    ss << (first ? "\n" : ",\n") << "  " << quoted(name) << ": {\n"
       << "    \"all\": " << format_real(r.all) << ",\n"
       << "    \"internal\": " << format_real(r.internal) << ",\n"
       << "    \"external\": " << format_real(r.external) << ",\n"
       << "    \"n\": " << r.n << ",\n"
       << "    \"edges\": {\"all\": " << r.edges_all << ", \"internal\": " << r.edges_internal
       << ", \"external\": " << r.edges_external << "},\n"
       << "    \"strong\": {\"internal\": " << (r.strong_internal() ? "true" : "false")
       << ", \"external\": " << (r.strong_external() ? "true" : "false") << "}\n"
       << "  }";
    first = false;
  }
  ss << "\n}\n";
  return ss.str();
}

std::string geary_table(const GearyReport& report) {
  std::ostringstream ss;
  ss << std::left << std::setw(12) << "" << std::right << std::setw(10) << "all" << std::setw(10) << "internal"
     << std::setw(10) << "external" << '\n';
  auto cell = [](double c, bool strong) {
    std::ostringstream v;
    v << std::fixed << std::setprecision(2) << c << (strong ? "*" : " ");
    return v.str();
  };
  for (const auto& [name, r] : report.attributes) {
    ss << std::left << std::setw(12) << name << std::right << std::setw(10) << cell(r.all, false)
       << std::setw(10) << cell(r.internal, r.strong_internal()) << std::setw(10)
       << cell(r.external, r.strong_external()) << '\n';
  }
  ss << "(* differs from the all-edges value by more than 10%)\n";
  return ss.str();
}

}  // namespace chimera_dyn
