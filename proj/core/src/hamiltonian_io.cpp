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

#include "chimera_dyn/hamiltonian_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "chimera_dyn/errors.hpp"
#include "chimera_dyn/format.hpp"
#include "json.hpp"

namespace chimera_dyn {

namespace {

constexpr std::array<char, 5> kMagic{'C', 'H', 'D', 'M', '1'};

template <typename T>
void put_le(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  std::array<unsigned char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
bool get_le(std::istream& in, T& value) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) return false;
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  std::memcpy(&value, bytes.data(), sizeof(T));
  return true;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void write_hamiltonian_binary(std::ostream& out, const Hamiltonian& h) {
  out.write(kMagic.data(), kMagic.size());
  put_le(out, static_cast<std::uint32_t>(h.size()));
  for (double v : h.matrix()) put_le(out, v);
  for (NodeId n : h.remap().natives()) put_le(out, static_cast<std::uint32_t>(n));
}

Hamiltonian read_hamiltonian_binary(std::istream& in) {
  std::array<char, 5> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw InputError("hamiltonian binary: bad magic (expected CHDM1)");
  }
  std::uint32_t n = 0;
  if (!get_le(in, n)) throw InputError("hamiltonian binary: truncated header");
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!get_le(in, m[i])) {
      throw InputError("hamiltonian binary: truncated matrix at entry " + std::to_string(i));
    }
  }
  std::vector<NodeId> natives(n);
  std::uint32_t first = 0;
  if (n > 0 && get_le(in, first)) {
    natives[0] = first;
    for (std::size_t i = 1; i < n; ++i) {
      std::uint32_t v = 0;
      if (!get_le(in, v)) throw InputError("hamiltonian binary: truncated index trailer");
      natives[i] = v;
    }
    char extra;
    if (in.read(&extra, 1)) throw InputError("hamiltonian binary: trailing bytes");
    for (std::size_t i = 1; i < n; ++i) {
      if (natives[i] <= natives[i - 1]) throw InputError("hamiltonian binary: index trailer not ascending");
    }
  } else {
    for (std::uint32_t i = 0; i < n; ++i) natives[i] = i;
  }
  return Hamiltonian(std::move(m), IndexMap(std::move(natives)));
}

std::string hamiltonian_to_json(const Hamiltonian& h) {
  nlohmann::json j;
  j["n"] = h.size();
  j["natives"] = h.remap().natives();
  j["scaling"] = h.scaling().name();
  j["j0"] = h.j0();
  j["matrix"] = std::vector<double>(h.matrix().begin(), h.matrix().end());
  return j.dump() + "\n";
}

Hamiltonian hamiltonian_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto n = j.at("n").get<std::size_t>();
    auto natives = j.at("natives").get<std::vector<NodeId>>();
    auto matrix = j.at("matrix").get<std::vector<double>>();
    if (natives.size() != n) throw InputError("hamiltonian json: natives length != n");
    Scaling scaling = j.contains("scaling") ? Scaling::parse(j["scaling"].get<std::string>()) : Scaling{};
    const double j0 = j.value("j0", 1.0);
    return Hamiltonian(std::move(matrix), IndexMap(std::move(natives)), scaling, j0);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("hamiltonian json: ") + e.what());
  }
}

void save_hamiltonian_file(const std::string& path, const Hamiltonian& h) {
  if (ends_with(path, ".json")) {
    write_text_file(path, hamiltonian_to_json(h));
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_hamiltonian_binary(out, h);
  if (!out) throw InputError("failed writing '" + path + "'");
}

Hamiltonian load_hamiltonian_file(const std::string& path) {
  if (ends_with(path, ".json")) return hamiltonian_from_json(read_text_file(path));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_hamiltonian_binary(in);
}

}  // namespace chimera_dyn
