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

#include "chimera_dyn/ingest.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "chimera_dyn/errors.hpp"
#include "json.hpp"

namespace chimera_dyn {

using nlohmann::json;

std::vector<std::string> AttributeSet::names() const {
  std::vector<std::string> out;
  for (const auto& [name, values] : attributes) out.push_back(name);
  return out;
}

std::vector<NodeId> AttributeSet::qubits() const {
  std::set<NodeId> all;
  for (const auto& [name, values] : attributes) {
    for (const auto& [q, v] : values) all.insert(q);
  }
  return {all.begin(), all.end()};
}

AttributeSet load_attributes(std::istream& in, const QubitGraph& g) {
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  AttributeSet out;
  // An empty file is an empty dataset.
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return out;

  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("attribute file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("qubits") || !j["qubits"].is_object()) {
    throw InputError("attribute file: expected an object with a \"qubits\" object");
  }

  std::size_t record = 0;
  for (const auto& [key, fields] : j["qubits"].items()) {
    const std::string where = "record " + std::to_string(record) + " (qubit \"" + key + "\")";
    std::size_t pos = 0;
    unsigned long long idx = 0;
    try {
      idx = std::stoull(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != key.size() || key[0] == '-' || idx > 0xffffffffULL) {
      throw InputError("attribute file: " + where + ": key is not a qubit index");
    }
    const auto q = static_cast<NodeId>(idx);
    if (!g.has_node(q)) throw InputError("attribute file: " + where + ": qubit is not in the graph");
    if (!fields.is_object()) throw InputError("attribute file: " + where + ": expected an object");
    for (const auto& [name, value] : fields.items()) {
      if (!value.is_number()) {
        throw InputError("attribute file: " + where + ": attribute \"" + name + "\" is not a number");
      }
      const double v = value.get<double>();
      if (!std::isfinite(v)) {
        throw InputError("attribute file: " + where + ": attribute \"" + name + "\" is not finite");
      }
      out.attributes[name][q] = v;
    }
    ++record;
  }
  return out;
}

AttributeSet load_attributes_file(const std::string& path, const QubitGraph& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_attributes(in, g);
}

void save_attributes(std::ostream& out, const AttributeSet& attrs) {
  json qubits = json::object();
  for (const auto& [name, values] : attrs.attributes) {
    for (const auto& [q, v] : values) qubits[std::to_string(q)][name] = v;
  }
  json j;
  j["qubits"] = std::move(qubits);
  out << j.dump(1) << "\n";
}

void save_attributes_file(const std::string& path, const AttributeSet& attrs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  save_attributes(out, attrs);
}

SyntheticModel parse_synthetic_model(const std::string& name) {
  if (name == "iid") return SyntheticModel::Iid;
  if (name == "smooth") return SyntheticModel::Smooth;
  if (name == "anti") return SyntheticModel::Anti;
  throw InputError("unknown synthetic model '" + name + "' (expected iid, smooth or anti)");
}

const char* to_string(SyntheticModel m) {
  switch (m) {
    case SyntheticModel::Iid: return "iid";
    case SyntheticModel::Smooth: return "smooth";
    case SyntheticModel::Anti: return "anti";
  }
  return "?";
}

namespace {

std::map<NodeId, double> two_colouring(const QubitGraph& g, std::mt19937_64& rng) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& e : g.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::map<NodeId, double> colour;
  std::bernoulli_distribution coin(0.5);
  for (NodeId root : g.nodes()) {
    if (colour.count(root)) continue;
    colour[root] = coin(rng) ? 1.0 : -1.0;
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adj[u]) {
        // Odd cycles keep whichever colour was reached first.
        if (colour.emplace(v, -colour[u]).second) queue.push_back(v);
      }
    }
  }
  return colour;
}

// Random Fourier features of a squared-exponential field over the schematic
// coordinates, length scale two mean edge lengths, plus a small nugget.
std::map<NodeId, double> smooth_field(const QubitGraph& g, std::mt19937_64& rng) {
  double mean_edge = 0.0;
  for (const auto& e : g.edges()) {
    const Point& p = g.coords().at(e.a);
    const Point& q = g.coords().at(e.b);
    mean_edge += std::hypot(p.x - q.x, p.y - q.y);
  }
  mean_edge = g.edges().empty() || mean_edge == 0.0 ? 1.0 : mean_edge / g.edges().size();
  const double scale = 2.0 * mean_edge;

  constexpr int kFeatures = 64;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::acos(-1.0));
  std::vector<std::array<double, 3>> features(kFeatures);
  for (auto& f : features) f = {normal(rng) / scale, normal(rng) / scale, phase(rng)};

  std::map<NodeId, double> out;
  for (NodeId n : g.nodes()) {
    const Point& p = g.coords().at(n);
    double v = 0.0;
    for (const auto& f : features) v += std::cos(f[0] * p.x + f[1] * p.y + f[2]);
    out[n] = v * std::sqrt(2.0 / kFeatures) + 0.05 * normal(rng);
  }
  return out;
}

}  // namespace

AttributeSet synthesize_attributes(const QubitGraph& g, SyntheticModel model, std::uint64_t seed) {
  if (g.empty()) throw InputError("synthesize_attributes: empty graph");
  AttributeSet out;
  std::uint64_t stream = 0;
  for (const char* name : kKnownAttributes) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream++)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto& values = out.attributes[name];
    switch (model) {
      case SyntheticModel::Iid:
        for (NodeId n : g.nodes()) values[n] = normal(rng);
        break;
      case SyntheticModel::Smooth:
        values = smooth_field(g, rng);
        break;
      case SyntheticModel::Anti:
        values = two_colouring(g, rng);
        break;
    }
  }
  return out;
}

}  // namespace chimera_dyn
