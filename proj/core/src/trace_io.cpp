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

#include "chimera_dyn/trace_io.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "chimera_dyn/errors.hpp"
#include "chimera_dyn/format.hpp"

namespace chimera_dyn {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw InputError("trace csv line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

void write_trace_csv(std::ostream& out, const FidelityTrace& trace) {
  out << "t";
  for (NodeId n : trace.nodes) out << ",f_" << n;
  out << ",total\n";
  for (std::size_t s = 0; s < trace.sample_count(); ++s) {
    out << format_real(trace.times[s]);
    for (double f : trace.sample(s)) out << ',' << format_real(f);
    out << ',' << format_real(trace.totals[s]) << '\n';
  }
}

FidelityTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("trace csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  if (header.size() < 3 || header.front() != "t" || header.back() != "total") {
    throw InputError("trace csv line 1: expected header t,f_<node>,...,total");
  }
  FidelityTrace trace;
  for (std::size_t c = 1; c + 1 < header.size(); ++c) {
    const std::string& h = header[c];
    if (h.size() < 3 || h.compare(0, 2, "f_") != 0) {
      throw InputError("trace csv line 1: bad column '" + h + "'");
    }
    const std::string digits = h.substr(2);
    char* end = nullptr;
    const unsigned long v = std::strtoul(digits.c_str(), &end, 10);
    if (end == digits.c_str() || *end != '\0') throw InputError("trace csv line 1: bad column '" + h + "'");
    trace.nodes.push_back(static_cast<NodeId>(v));
  }
  const std::size_t n = trace.nodes.size();
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != n + 2) {
      throw InputError("trace csv line " + std::to_string(lineno) + ": expected " + std::to_string(n + 2) +
                       " fields, got " + std::to_string(fields.size()));
    }
    const double t = parse_double(fields[0], lineno);
    if (!trace.times.empty() && !(t > trace.times.back())) {
      throw InputError("trace csv line " + std::to_string(lineno) + ": times must be ascending");
    }
    trace.times.push_back(t);
    for (std::size_t k = 0; k < n; ++k) trace.fidelity.push_back(parse_double(fields[k + 1], lineno));
    trace.totals.push_back(parse_double(fields[n + 1], lineno));
  }
  if (trace.times.empty()) throw InputError("trace csv: no samples");
  return trace;
}

void save_trace_file(const std::string& path, const FidelityTrace& trace) {
  std::ostringstream ss;
  write_trace_csv(ss, trace);
  write_text_file(path, ss.str());
}

FidelityTrace load_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_trace_csv(in);
}

}  // namespace chimera_dyn
