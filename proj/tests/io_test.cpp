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

#include <gtest/gtest.h>

#include <cstring>
#include <sstream>

#include "chimera_dyn/chimera_dyn.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace {

using namespace chimera_dyn;

TEST(HamiltonianBinary, LayoutIsExact) {
  const QubitGraph g({2, 9}, {{2, 9}}, {{2, {0, 0}}, {9, {1, 0}}}, {{2, 0}, {9, 0}});
  const Hamiltonian h = build_hamiltonian(g, Scaling::constant(), 0.5);
  std::ostringstream out;
  write_hamiltonian_binary(out, h);
  const std::string bytes = out.str();
  ASSERT_EQ(bytes.size(), 5u + 4u + 4u * 8u + 2u * 4u);
  EXPECT_EQ(bytes.substr(0, 5), "CHDM1");
  EXPECT_EQ(bytes.substr(5, 4), std::string("\x02\x00\x00\x00", 4));
  // 0.5 as little-endian IEEE-754 binary64
  EXPECT_EQ(bytes.substr(9 + 8, 8), std::string("\x00\x00\x00\x00\x00\x00\xe0\x3f", 8));
  EXPECT_EQ(bytes.substr(9 + 32), std::string("\x02\x00\x00\x00\x09\x00\x00\x00", 8));
}

TEST(HamiltonianBinary, RoundTripAndTrailerlessRead) {
  const Hamiltonian h = build_hamiltonian(testutil::eight_node_loop(), Scaling::dipole());
  std::stringstream ss;
  write_hamiltonian_binary(ss, h);
  const Hamiltonian back = read_hamiltonian_binary(ss);
  EXPECT_TRUE(std::equal(back.matrix().begin(), back.matrix().end(), h.matrix().begin()));
  EXPECT_EQ(back.remap(), h.remap());

  const std::string full = [&] {
    std::ostringstream o;
    write_hamiltonian_binary(o, h);
    return o.str();
  }();
  std::istringstream bare(full.substr(0, 9 + 64 * 8));
  const Hamiltonian plain = read_hamiltonian_binary(bare);
  EXPECT_EQ(plain.remap().natives(), (std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(std::equal(plain.matrix().begin(), plain.matrix().end(), h.matrix().begin()));
}

TEST(HamiltonianBinary, Corruption) {
  std::istringstream bad_magic("CHDM2xxxx");
  EXPECT_THROW(read_hamiltonian_binary(bad_magic), InputError);
  const Hamiltonian h = build_hamiltonian(testutil::eight_node_loop(), Scaling::dipole());
  std::ostringstream o;
  write_hamiltonian_binary(o, h);
  std::istringstream truncated(o.str().substr(0, 100));
  EXPECT_THROW(read_hamiltonian_binary(truncated), InputError);
  std::istringstream partial_trailer(o.str().substr(0, o.str().size() - 2));
  EXPECT_THROW(read_hamiltonian_binary(partial_trailer), InputError);
  std::istringstream extra(o.str() + "z");
  EXPECT_THROW(read_hamiltonian_binary(extra), InputError);
}

TEST(HamiltonianJson, RoundTrip) {
  const Hamiltonian h = build_hamiltonian(testutil::eight_node_loop(), Scaling::dipole(), 0.9);
  EXPECT_EQ(hamiltonian_from_json(hamiltonian_to_json(h)), h);
  EXPECT_THROW(hamiltonian_from_json(R"({"n": 2, "natives": [0], "matrix": [0,0,0,0]})"), InputError);
}

TEST(TraceCsv, HeaderAndPrecision) {
  const Hamiltonian h = build_hamiltonian(testutil::eight_node_loop(), Scaling::dipole());
  const FidelityTrace tr = evolve(h, {3, 5, std::nullopt});
  std::ostringstream out;
  write_trace_csv(out, tr);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "t,f_3,f_7,f_11,f_15,f_19,f_23,f_27,f_31,total");
  std::string row;
  std::getline(lines, row);
  EXPECT_EQ(row, "0,1,0,0,0,0,0,0,0,1");

  std::istringstream in(out.str());
  const FidelityTrace back = read_trace_csv(in);
  EXPECT_EQ(back.nodes, tr.nodes);
  ASSERT_EQ(back.fidelity.size(), tr.fidelity.size());
  for (std::size_t i = 0; i < tr.fidelity.size(); ++i) EXPECT_NEAR(back.fidelity[i], tr.fidelity[i], 1e-12);
  // re-serialising the parsed trace is a fixed point
  std::ostringstream again;
  write_trace_csv(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(TraceCsv, MalformedInput) {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_trace_csv(in);
  };
  EXPECT_THROW(parse(""), InputError);
  EXPECT_THROW(parse("time,f_0,total\n0,1,1\n"), InputError);
  EXPECT_THROW(parse("t,g_0,total\n0,1,1\n"), InputError);
  EXPECT_THROW(parse("t,f_0,total\n0,1\n"), InputError);
  EXPECT_THROW(parse("t,f_0,total\n0,x,1\n"), InputError);
  EXPECT_THROW(parse("t,f_0,total\n1,1,1\n0,1,1\n"), InputError);
  EXPECT_THROW(parse("t,f_0,total\n"), InputError);
  try {
    parse("t,f_0,total\n0,1,1\n1,oops,1\n");
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Reports, SimilarityCsvAndPeaksJson) {
  const QubitGraph loop = testutil::eight_node_loop();
  const FidelityTrace tr = evolve(build_hamiltonian(loop, Scaling::dipole()), {3, 2001, std::nullopt});
  const PeakReport peaks = find_peaks(tr, 3);
  const auto j = nlohmann::json::parse(peaks_to_json(peaks));
  EXPECT_EQ(j["first_peak"]["node"], 19);
  EXPECT_EQ(j["max_peak"]["node"], 7);
  EXPECT_NEAR(j["max_peak"]["fidelity"].get<double>(), peaks.max_peak.fidelity, 1e-11);

  std::ostringstream csv;
  write_similarity_csv(csv, similarity_at(tr, loop, peaks.max_peak.time));
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "i,j,rel_length,sim");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 8u);
}

TEST(Reports, GearyJsonSchema) {
  const QubitGraph g = generate_chimera(2, 2, 4);
  const GearyReport r = geary_report(synthesize_attributes(g, SyntheticModel::Iid, 1), g);
  const auto j = nlohmann::json::parse(geary_to_json(r));
  for (const char* name : {"beta", "b", "lambda", "eta"}) {
    ASSERT_TRUE(j.contains(name));
    EXPECT_NEAR(j[name]["all"].get<double>(), r.attributes.at(name).all, 1e-11);
    EXPECT_EQ(j[name]["n"], 32);
    EXPECT_EQ(j[name]["edges"]["internal"], 64);
    EXPECT_EQ(j[name]["edges"]["external"], 16);
    EXPECT_TRUE(j[name]["strong"]["internal"].is_boolean());
  }
  const std::string table = geary_table(r);
  EXPECT_NE(table.find("internal"), std::string::npos);
  EXPECT_NE(table.find("lambda"), std::string::npos);
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(1e-20), "1e-20");
  EXPECT_EQ(format_real(9.0909090909090899), "9.09090909091");
}

}  // namespace
