// Copyright 2026 The Hyperion Desk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperion/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "hyperion/adapt/pool.hpp"
#include "hyperion/chem/jordan_wigner.hpp"
#include "hyperion/cli/output.hpp"
#include "hyperion/cli/run_config.hpp"
#include "hyperion/oracle/dense.hpp"
#include "hyperion/sv/csr_cache.hpp"

namespace hyperion::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// HYPERION_VERBOSE=1 prints one progress line per iteration to stderr.
int verbosity() {
  const char* v = std::getenv("HYPERION_VERBOSE");
  return v ? std::atoi(v) : 0;
}

ci::SpinOrdering ordering_from(const std::string& text) {
  if (text != "interleaved" && text != "blocked") throw ParseError("ordering: expected interleaved or blocked");
  return ci::parse_spin_ordering(text);
}

chem::IntegralSet load_fcidump(const std::string& path) {
  if (!fs::exists(path)) throw Error("FCIDUMP not found: " + path);
  return chem::read_fcidump(path);
}

adapt::Problem load_problem(const std::string& path, ci::SpinOrdering ordering) {
  auto ints = load_fcidump(path);
  return adapt::Problem::from_hamiltonian(chem::qubit_hamiltonian(ints, ordering), ints.n_alpha(), ints.n_beta(),
                                          ordering);
}

int cmd_ingest(const std::string& fcidump, const std::string& ordering_text, const std::string& pauli_out,
               std::ostream& out) {
  const auto ordering = ordering_from(ordering_text);
  auto ints = load_fcidump(fcidump);
  auto h = chem::qubit_hamiltonian(ints, ordering);
  if (!pauli_out.empty()) {
    std::ofstream f(pauli_out);
    if (!f) throw Error("cannot write " + pauli_out);
    for (const auto& t : h.terms()) f << format_double(t.coefficient) << ' ' << t.word.to_string() << '\n';
  }
  json j{{"norb", ints.norb},
         {"nelec", ints.nelec},
         {"ms2", ints.ms2},
         {"core_energy", ints.core_energy},
         {"n_qubits", h.n_qubits()},
         {"n_alpha", ints.n_alpha()},
         {"n_beta", ints.n_beta()},
         {"ordering", std::string(ci::to_string(ordering))},
         {"pauli_terms", h.size()}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_assemble(const std::string& fcidump, const std::string& ordering_text, const std::string& path,
                 unsigned threads, std::ostream& out) {
  auto problem = load_problem(fcidump, ordering_from(ordering_text));
  auto m = sv::assemble_subspace_hamiltonian(problem.hamiltonian, problem.basis, threads);
  sv::write_csr_cache(m, path);
  out << json{{"dimension", m.n_rows}, {"nnz", m.nnz()}, {"path", path}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& fcidump, const std::string& ordering_text, unsigned threads, std::ostream& out) {
  const auto ordering = ordering_from(ordering_text);
  auto ints = load_fcidump(fcidump);
  const int n = 2 * ints.norb;
  json j;
  oracle::EigenPair pair;
  if (n <= 12) {
    // Fully independent route: fermionic operators applied directly.
    auto full = oracle::dense_fermionic_hamiltonian(ints, ordering);
    auto states = oracle::sector_states(n, ints.n_alpha(), ints.n_beta(), ordering);
    auto sub = oracle::restrict_to(full, states);
    pair = oracle::fci_ground_energy(sub);
    const auto hf = ci::hartree_fock_reference(ints.nelec, n, ordering, ints.n_alpha());
    j["hf_energy"] = oracle::determinant_energy(full, hf.bits);
    j["dimension"] = states.size();
    j["method"] = "dense-fermionic";
  } else {
    auto problem = load_problem(fcidump, ordering);
    auto m = sv::assemble_subspace_hamiltonian(problem.hamiltonian, problem.basis, threads);
    pair = oracle::fci_ground_energy(m);
    j["dimension"] = m.n_rows;
    j["method"] = "krylov-csr";
  }
  j["fci_energy"] = pair.energy;
  j["residual"] = pair.residual;
  j["n_qubits"] = n;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_stats(const std::string& fcidump, int qubits, int electrons, int ms2, bool formula_only,
              const std::string& ordering_text, std::ostream& out) {
  const auto ordering = ordering_from(ordering_text);
  if (!fcidump.empty()) {
    auto ints = load_fcidump(fcidump);
    qubits = 2 * ints.norb;
    electrons = ints.nelec;
    ms2 = ints.ms2;
  }
  if (qubits <= 0 || electrons < 0) throw ParseError("stats: give --fcidump or --qubits and --electrons");
  if ((electrons + ms2) % 2 != 0 || std::abs(ms2) > electrons)
    throw ParseError("stats: ms2 must have the parity of the electron count");
  const int n_alpha = (electrons + ms2) / 2;
  const int n_beta = (electrons - ms2) / 2;
  auto stats = ci::subspace_stats_formula(qubits, n_alpha, n_beta);
  std::string method = "formula";
  if (!formula_only && qubits <= 24) {
    auto basis = ci::CiBasis::enumerate(qubits, n_alpha, n_beta, ordering);
    stats.ci_k = basis.size();
    stats.filling_ratio = static_cast<double>(stats.ci_k) / static_cast<double>(stats.hilbert);
    method = "enumerated";
  }
  json j{{"n_qubits", qubits},         {"n_electrons", electrons}, {"n_alpha", n_alpha},
         {"n_beta", n_beta},           {"hilbert", stats.hilbert}, {"ci", stats.ci},
         {"ci_k", stats.ci_k},         {"filling_ratio", stats.filling_ratio},
         {"ci_k_method", method}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_metrics(const std::string& csv, std::ostream& out) {
  std::ifstream in(csv);
  if (!in) throw Error("cannot read " + csv);
  auto records = parse_run_csv(in);
  auto fit = adapt::amortized_coefficient(records);
  json j{{"iterations", fit.iterations},
         {"coefficients", fit.coefficients},
         {"fitted_c", fit.fitted_c},
         {"second_half_max_rel_error", fit.second_half_max_rel_error},
         {"quadratic_valid", fit.quadratic_valid}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_run(RunSettings settings, std::ostream& out, std::ostream& err) {
  require_complete(settings);
  settings.adapt.engine_options.workers = settings.threads;
  settings.adapt.validate();
  auto problem = load_problem(settings.fcidump, settings.ordering);

  std::unique_ptr<adapt::Engine> engine;
  if (!settings.csr_cache.empty()) {
    if (settings.adapt.engine != adapt::EngineKind::kSv) throw ParseError("csr_cache applies to the sv engine only");
    engine = std::make_unique<adapt::SvEngine>(problem, sv::read_csr_cache(settings.csr_cache),
                                               settings.adapt.engine_options);
  } else {
    engine = adapt::make_engine(settings.adapt.engine, problem, settings.adapt.engine_options);
  }
  auto pool = adapt::build_qeb_pool(problem.n_qubits(), problem.n_alpha, problem.n_beta, problem.ordering);

  const fs::path dir(settings.out_dir);
  fs::create_directories(dir);
  const fs::path csv_path = dir / "run.csv";
  std::ofstream csv(csv_path, std::ios::trunc);
  if (!csv) throw Error("cannot write " + csv_path.string());
  csv << kRunCsvHeader << '\n' << std::flush;

  const bool tensor = settings.adapt.engine != adapt::EngineKind::kSv;
  std::unique_ptr<TruncationCsv> trunc;
  if (tensor) trunc = std::make_unique<TruncationCsv>((dir / "truncation.csv").string());
  if (auto* p = dynamic_cast<adapt::PartitionedEngine*>(engine.get())) {
    std::ofstream rep(dir / "partition_report.json");
    rep << partition_report(p->hamiltonian()).dump(2) << '\n';
  }

  const int verbose = verbosity();
  auto result = adapt::run_adapt(settings.adapt, *engine, pool, [&](const adapt::RunRecord& r) {
    csv << format_record(r) << '\n' << std::flush;
    // Screening for iteration j logs under tag j - 1, so that tag is complete.
    if (trunc) trunc->flush_through(*engine->truncation_log(), r.iteration - 1);
    if (verbose > 0) err << "iter " << r.iteration << ' ' << r.selected_op << " E=" << format_double(r.energy) << '\n';
  });
  if (trunc) trunc->flush_through(*engine->truncation_log(), std::numeric_limits<int>::max());

  const auto& last = result.records.back();
  json summary;
  summary["config"] = config_echo(settings);
  summary["status"] = adapt::to_string(result.status);
  summary["message"] = result.message;
  summary["iterations"] = last.iteration;
  summary["final_energy"] = last.energy;
  summary["final_abs_error"] = last.abs_error ? json(*last.abs_error) : json(nullptr);
  summary["max_trunc_err"] = last.max_trunc_err;
  summary["energy_evals"] = last.energy_evals;
  summary["wall_s"] = last.wall_s;
  summary["optimizer_hit_max_evals"] = result.optimizer_hit_max_evals;
  summary["n_qubits"] = problem.n_qubits();
  summary["n_alpha"] = problem.n_alpha;
  summary["n_beta"] = problem.n_beta;
  summary["subspace_dimension"] = problem.basis.size();
  summary["pool_size"] = pool.size();
  json ansatz = json::array();
  for (const auto& e : result.ansatz) ansatz.push_back({{"op", e.op.to_string()}, {"theta", e.theta}});
  summary["ansatz"] = ansatz;
  std::ofstream(dir / "summary.json") << summary.dump(2) << '\n';

  out << json{{"status", summary["status"]}, {"iterations", last.iteration}, {"final_energy", last.energy},
              {"out", settings.out_dir}}
             .dump()
      << '\n';
  if (result.status == adapt::RunStatus::kAborted) {
    err << "run aborted: " << result.message << '\n';
    return kExitAborted;
  }
  if (result.optimizer_hit_max_evals) err << "warning: optimizer reached max_evals at least once\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse state-vector and tensor-network emulator for ADAPT-VQE", "hyperion"};
  app.require_subcommand(1, 1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores); results do not depend on it");

  std::string fcidump, ordering = "interleaved", path, pauli_out, csv;
  auto* ingest = app.add_subcommand("ingest", "Parse an FCIDUMP and report its qubit Hamiltonian");
  ingest->add_option("--fcidump", fcidump, "FCIDUMP file")->required();
  ingest->add_option("--ordering", ordering, "Spin-orbital ordering: interleaved or blocked");
  ingest->add_option("--pauli-out", pauli_out, "Write the Pauli sum as 'coefficient word' lines");

  auto* assemble = app.add_subcommand("assemble", "Write the subspace Hamiltonian as a CSR cache");
  assemble->add_option("--fcidump", fcidump, "FCIDUMP file")->required();
  assemble->add_option("--ordering", ordering, "Spin-orbital ordering");
  assemble->add_option("--out", path, "Cache file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact ground-state energy of an FCIDUMP");
  oracle_cmd->add_option("--fcidump", fcidump, "FCIDUMP file")->required();
  oracle_cmd->add_option("--ordering", ordering, "Spin-orbital ordering");

  int qubits = 0, electrons = -1, ms2 = 0;
  bool formula_only = false;
  auto* stats = app.add_subcommand("stats", "Subspace dimensions of a molecule");
  stats->add_option("--fcidump", fcidump, "FCIDUMP file");
  stats->add_option("--qubits", qubits, "Qubit count (without --fcidump)");
  stats->add_option("--electrons", electrons, "Electron count (without --fcidump)");
  stats->add_option("--ms2", ms2, "Twice the spin projection");
  stats->add_option("--ordering", ordering, "Spin-orbital ordering");
  stats->add_flag("--formula-only", formula_only, "Skip enumeration of the basis");

  auto* metrics = app.add_subcommand("metrics", "Amortized iteration coefficient of a run CSV");
  metrics->add_option("--csv", csv, "run.csv written by 'run'")->required();

  std::string config_path;
  std::map<std::string, std::string> flags;
  auto* run = app.add_subcommand("run", "ADAPT-VQE run writing CSV and JSON artifacts");
  run->add_option("--config", config_path, "key = value settings file; flags override it");
  for (const auto& key : run_config_keys()) {
    if (key == "threads") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    run->add_option_function<std::string>(
        flag, [&flags, key](const std::string& v) { flags[key] = v; }, "Setting '" + key + "'");
  }
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(fcidump, ordering, pauli_out, out);
    if (assemble->parsed()) return cmd_assemble(fcidump, ordering, path, threads, out);
    if (oracle_cmd->parsed()) return cmd_oracle(fcidump, ordering, threads, out);
    if (stats->parsed()) return cmd_stats(fcidump, qubits, electrons, ms2, formula_only, ordering, out);
    if (metrics->parsed()) return cmd_metrics(csv, out);
    RunSettings settings;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error("cannot read config " + config_path);
      load_run_config(in, settings);
    }
    for (const auto& [key, value] : flags) apply_setting(settings, key, value);
    if (app.get_option("--threads")->count() > 0) settings.threads = threads;
    return cmd_run(std::move(settings), out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hyperion::cli
