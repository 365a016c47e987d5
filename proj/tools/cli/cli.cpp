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

#include "cli/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chimera_dyn/chimera_dyn.hpp"

#ifndef CHIMERA_DYN_VERSION
#define CHIMERA_DYN_VERSION "0.0.0"
#endif

namespace chimera_dyn::cli {

namespace {

std::uint64_t seed_from_env() {
  const char* env = std::getenv("CHIMERA_DYN_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string("CHIMERA_DYN_SEED is not an integer: ") + env);
  return v;
}

std::optional<double> parse_tmax(const std::string& s) {
  if (s == "auto") return std::nullopt;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || !(v > 0.0)) throw UsageError("--tmax must be 'auto' or a positive number");
  return v;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  RunConfig cfg;
  CLI::App app{"Single-excitation dynamics and spatial autocorrelation on Chimera qubit graphs",
               "chimera-dyn"};
  app.set_version_flag("--version", CHIMERA_DYN_VERSION);
  app.require_subcommand(1);
  app.fallthrough(false);

  std::optional<std::uint64_t> seed;
  std::string tmax = "auto";

  auto* gen = app.add_subcommand("generate", "Generate a Chimera graph (optionally an induced subset)");
  gen->add_option("--rows", cfg.rows, "Unit-cell rows")->required()->check(CLI::PositiveNumber);
  gen->add_option("--cols", cfg.cols, "Unit-cell columns")->required()->check(CLI::PositiveNumber);
  gen->add_option("--shore", cfg.shore, "Qubits per shore (4 gives 8-qubit cells)")->required()->check(CLI::PositiveNumber);
  gen->add_option("--subset", cfg.subset, "Comma-separated native indices to keep")->delimiter(',');
  gen->add_option("--vertical-length", cfg.vertical_length, "Length of vertical inter-cell couplers")
      ->check(CLI::PositiveNumber);
  gen->add_option("--horizontal-length", cfg.horizontal_length, "Length of horizontal inter-cell couplers")
      ->check(CLI::PositiveNumber);
  gen->add_option("-o,--output", cfg.output, "Graph JSON output")->required();

  auto* ing = app.add_subcommand("ingest", "Load and validate (or synthesize) per-qubit attributes");
  ing->add_option("--graph", cfg.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  auto* data = ing->add_option("--data", cfg.data, "Attribute JSON")->check(CLI::ExistingFile);
  auto* synth = ing->add_option("--synthesize", cfg.synthesize, "Generate synthetic data: iid, smooth or anti")
                    ->check(CLI::IsMember({"iid", "smooth", "anti"}));
  data->excludes(synth);
  ing->add_flag("--validate", cfg.validate, "Only check the file; print a summary");
  ing->add_option("--seed", seed, "Seed for --synthesize (default $CHIMERA_DYN_SEED or 0)");
  ing->add_option("-o,--output", cfg.output, "Write the (normalised or synthetic) attribute JSON");

  auto* ham = app.add_subcommand("hamiltonian", "Build the coupling matrix of a graph");
  ham->add_option("--graph", cfg.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  ham->add_option("--scaling", cfg.scaling, "constant, dipole, coulomb, r2 or power:<p>")->capture_default_str();
  ham->add_option("--j0", cfg.j0, "Base coupling weight")->capture_default_str()->check(CLI::PositiveNumber);
  ham->add_option("-o,--output", cfg.output, "Output (.json for JSON, otherwise CHDM1 binary)")->required();

  auto* sim = app.add_subcommand("simulate", "Evolve a single excitation and write the fidelity trace");
  sim->add_option("--hamiltonian", cfg.hamiltonian, "Hamiltonian file")->required()->check(CLI::ExistingFile);
  sim->add_option("--source", cfg.source, "Native index of the initially excited qubit")->required();
  sim->add_option("--steps", cfg.steps, "Number of samples")->capture_default_str()->check(CLI::Range(2, 100000000));
  sim->add_option("--tmax", tmax, "Window end time or 'auto' (1/J_min)")->capture_default_str();
  sim->add_option("-o,--output", cfg.output, "Trace CSV")->required();
  sim->add_flag("--oracle", cfg.oracle, "Use the RK4 step integrator instead of the eigenbasis");
  sim->add_option("--jobs", cfg.jobs, "Worker threads for per-sample evaluation")->check(CLI::PositiveNumber);

  auto* ana = app.add_subcommand("analyze", "Peak detection and edge similarity from a trace");
  ana->add_option("--trace", cfg.trace, "Trace CSV")->required()->check(CLI::ExistingFile);
  ana->add_option("--graph", cfg.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  ana->add_option("--source", cfg.source, "Native index of the initially excited qubit")->required();
  ana->add_option("--at", cfg.at, "first-peak, max-peak or a time")->capture_default_str();
  ana->add_option("--threshold", cfg.peak_threshold, "Minimum fidelity of a counted peak")->capture_default_str();
  ana->add_option("--peaks", cfg.peaks, "Also write the peak report JSON here");
  ana->add_option("-o,--output", cfg.output, "Similarity CSV")->required();

  auto* gea = app.add_subcommand("geary", "Geary's C of each attribute over all/internal/external edges");
  gea->add_option("--graph", cfg.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  gea->add_option("--data", cfg.data, "Attribute JSON")->required()->check(CLI::ExistingFile);
  gea->add_option("-o,--output", cfg.output, "Report JSON")->required();
  gea->add_option("--table", cfg.table, "Also write the formatted table here");
  gea->add_option("--permutations", cfg.permutations, "Run a randomisation test with this many relabelings");
  gea->add_option("--seed", seed, "Seed for the randomisation test");

  auto* exp = app.add_subcommand("experiment", "Run the 8-node constant vs dipole coupling experiment");
  exp->add_option("--outdir", cfg.outdir, "Output directory")->required();
  exp->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  if (args.empty()) args.push_back("chimera-dyn");
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream ss;
    app.exit(e, ss, ss);
    cfg.command = Command::Help;
    cfg.help_text = ss.str();
    return cfg;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream ss;
    app.exit(e, ss, ss);
    cfg.command = Command::Help;
    cfg.help_text = ss.str();
    return cfg;
  } catch (const CLI::CallForVersion& e) {
    cfg.command = Command::Help;
    cfg.help_text = std::string(e.what()) + "\n";
    return cfg;
  } catch (const CLI::ParseError& e) {
    std::ostringstream ss;
    ss << e.what();
    if (!app.get_subcommands().empty()) ss << "\nRun with " << app.get_subcommands().front()->get_name() << " --help for more information.";
    throw UsageError(ss.str());
  }

  cfg.seed = seed ? *seed : seed_from_env();
  if (*gen) cfg.command = Command::Generate;
  if (*ing) {
    cfg.command = Command::Ingest;
    if (cfg.data.empty() && !cfg.synthesize) throw UsageError("ingest: one of --data or --synthesize is required");
    if (cfg.synthesize && cfg.output.empty()) throw UsageError("ingest: --synthesize needs -o/--output");
  }
  if (*ham) {
    cfg.command = Command::Hamiltonian;
    try {
      Scaling::parse(cfg.scaling);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  if (*sim) {
    cfg.command = Command::Simulate;
    cfg.t_max = parse_tmax(tmax);
  }
  if (*ana) {
    cfg.command = Command::Analyze;
    if (cfg.at != "first-peak" && cfg.at != "max-peak") {
      std::size_t pos = 0;
      try {
        std::stod(cfg.at, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != cfg.at.size()) throw UsageError("--at must be first-peak, max-peak or a time");
    }
  }
  if (*gea) cfg.command = Command::Geary;
  if (*exp) cfg.command = Command::Experiment;
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& log) {
  switch (cfg.command) {
    case Command::Help:
      log << cfg.help_text;
      return kSuccess;

    case Command::Generate: {
      ChimeraLayout layout;
      if (cfg.vertical_length) layout.vertical_length = *cfg.vertical_length;
      if (cfg.horizontal_length) layout.horizontal_length = *cfg.horizontal_length;
      QubitGraph g = generate_chimera(cfg.rows, cfg.cols, cfg.shore, layout);
      if (!cfg.subset.empty()) g = extract_subgraph(g, cfg.subset);
      save_graph_file(cfg.output, g);
      log << "wrote " << cfg.output << ": " << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
      return kSuccess;
    }

    case Command::Ingest: {
      const QubitGraph g = load_graph_file(cfg.graph);
      AttributeSet attrs;
      if (cfg.synthesize) {
        attrs = synthesize_attributes(g, parse_synthetic_model(*cfg.synthesize), cfg.seed);
      } else {
        attrs = load_attributes_file(cfg.data, g);
      }
      const auto live = attrs.qubits();
      log << "qubits: " << live.size() << " live, " << g.node_count() - live.size() << " dead\n";
      for (const auto& [name, values] : attrs.attributes) {
        log << "  " << name << ": " << values.size() << " values\n";
      }
      if (cfg.validate) log << "valid\n";
      if (!cfg.output.empty()) save_attributes_file(cfg.output, attrs);
      return kSuccess;
    }

    case Command::Hamiltonian: {
      const QubitGraph g = load_graph_file(cfg.graph);
      const Hamiltonian h = build_hamiltonian(g, Scaling::parse(cfg.scaling), cfg.j0);
      save_hamiltonian_file(cfg.output, h);
      log << "wrote " << cfg.output << ": N = " << h.size() << ", scaling " << h.scaling().name() << "\n";
      return kSuccess;
    }

    case Command::Simulate: {
      const Hamiltonian h = load_hamiltonian_file(cfg.hamiltonian);
      EvolutionSpec spec{cfg.source, cfg.steps, cfg.t_max};
      const FidelityTrace trace = cfg.oracle ? evolve_oracle(h, spec) : evolve(h, spec, cfg.jobs);
      save_trace_file(cfg.output, trace);
      log << "wrote " << cfg.output << ": " << trace.sample_count() << " samples over [0, "
          << format_real(trace.t_max()) << "]\n";
      return kSuccess;
    }

    case Command::Analyze: {
      const FidelityTrace trace = load_trace_file(cfg.trace);
      const QubitGraph g = load_graph_file(cfg.graph);
      const PeakReport peaks = find_peaks(trace, cfg.source, {cfg.peak_threshold});
      double t;
      if (cfg.at == "first-peak") t = peaks.first_peak.time;
      else if (cfg.at == "max-peak") t = peaks.max_peak.time;
      else t = std::stod(cfg.at);
      const SimilarityMatrix sim = similarity_at(trace, g, t);
      std::ostringstream csv;
      write_similarity_csv(csv, sim);
      write_text_file(cfg.output, csv.str());
      if (!cfg.peaks.empty()) write_text_file(cfg.peaks, peaks_to_json(peaks));
      log << "first peak: node " << peaks.first_peak.node << " t = " << format_real(peaks.first_peak.time)
          << " f = " << format_real(peaks.first_peak.fidelity) << "\n"
          << "max peak:   node " << peaks.max_peak.node << " t = " << format_real(peaks.max_peak.time)
          << " f = " << format_real(peaks.max_peak.fidelity) << "\n";
      return kSuccess;
    }

    case Command::Geary: {
      const QubitGraph g = load_graph_file(cfg.graph);
      const AttributeSet attrs = load_attributes_file(cfg.data, g);
      const GearyReport report = geary_report(attrs, g);
      write_text_file(cfg.output, geary_to_json(report));
      const std::string table = geary_table(report);
      if (!cfg.table.empty()) write_text_file(cfg.table, table);
      log << table;
      if (cfg.permutations > 0) {
        for (const auto& [name, values] : attrs.attributes) {
          std::vector<Edge> live;
          for (const auto& e : g.edges()) {
            if (values.count(e.a) && values.count(e.b)) live.push_back(e);
          }
          const auto p = geary_permutation_test(values, live, cfg.permutations, cfg.seed);
          log << name << ": C = " << format_real(p.observed) << ", null mean " << format_real(p.null_mean)
              << ", two-sided p = " << format_real(p.p_value) << " (" << p.permutations << " relabelings)\n";
        }
      }
      return kSuccess;
    }

    case Command::Experiment:
      return run_loop_experiment(cfg.outdir, log, cfg.jobs);
  }
  return kUsage;
}

int main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_args(argv);
    return run(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputFormat;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputFormat;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return main(args, std::cout, std::cerr);
}

}  // namespace chimera_dyn::cli
