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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperion/cli/cli.hpp"
#include "hyperion/cli/output.hpp"
#include "hyperion/cli/run_config.hpp"
#include "test_util.hpp"

namespace hyperion::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperion");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("hyperion_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliStats, H6FromFixture) {
  auto r = call({"stats", "--fcidump", testing::data_path("h6.fcidump")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hilbert"], 4096);
  EXPECT_EQ(j["ci"], 924);
  EXPECT_EQ(j["ci_k"], 400);
}

TEST(CliStats, ChainCountsWithoutFixture) {
  auto r = call({"stats", "--qubits", "16", "--electrons", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hilbert"], 65536);
  EXPECT_EQ(j["ci"], 12870);
  EXPECT_EQ(j["ci_k"], 4900);
  EXPECT_EQ(j["ci_k_method"], "enumerated");
  r = call({"stats", "--qubits", "32", "--electrons", "16"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["ci_k"], 165636900);
}

TEST(CliStats, RejectsMissingInput) {
  auto r = call({"stats"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliOracle, H2MatchesRecordedFci) {
  auto r = call({"oracle", "--fcidump", testing::data_path("h2.fcidump")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["fci_energy"].get<double>(), testing::reference("h2", "fci_energy"), 1e-10);
  EXPECT_NEAR(j["hf_energy"].get<double>(), testing::reference("h2", "hf_energy"), 1e-10);
}

TEST(CliIngest, ReportsTermsAndWritesPauliSum) {
  auto dir = scratch("ingest");
  auto r = call({"ingest", "--fcidump", testing::data_path("h2.fcidump"), "--pauli-out", (dir / "h.txt").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n_qubits"], 4);
  std::ifstream in(dir / "h.txt");
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, j["pauli_terms"].get<int>());
}

TEST(CliAssemble, CacheFeedsTheSvEngine) {
  auto dir = scratch("assemble");
  auto cache = (dir / "h4.csr").string();
  auto r = call({"assemble", "--fcidump", testing::data_path("h4.fcidump"), "--out", cache});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 36);
  auto a = call({"run", "--fcidump", testing::data_path("h4.fcidump"), "--out", (dir / "a").string(),
                 "--max-iter", "3", "--csr-cache", cache});
  auto b = call({"run", "--fcidump", testing::data_path("h4.fcidump"), "--out", (dir / "b").string(),
                 "--max-iter", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(nlohmann::json::parse(a.out)["final_energy"], nlohmann::json::parse(b.out)["final_energy"]);
}

TEST(CliRun, SvRunWritesArtifacts) {
  auto dir = scratch("run_sv");
  auto r = call({"run", "--engine", "sv", "--fcidump", testing::data_path("h4.fcidump"), "--max-iter", "100",
                 "--out", dir.string(), "--reference-energy", "-2.1663874486347625"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream csv(dir / "run.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "iter,selected_op,grad_max,energy,abs_error,nnz,max_trunc_err,wall_s,energy_evals");
  csv.seekg(0);
  auto records = parse_run_csv(csv);
  ASSERT_GE(records.size(), 2u);
  EXPECT_LE(*records.back().abs_error, 1e-4);
  auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_EQ(summary["status"], "converged");
  EXPECT_EQ(summary["iterations"], records.back().iteration);
  EXPECT_FALSE(fs::exists(dir / "truncation.csv"));
}

TEST(CliRun, SummaryEchoReproducesTheRun) {
  auto dir = scratch("echo");
  auto r = call({"run", "--fcidump", testing::data_path("h4.fcidump"), "--out", (dir / "first").string(),
                 "--max-iter", "4", "--optimizer", "coordinate", "--eps-grad", "1e-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto summary = nlohmann::json::parse(slurp(dir / "first" / "summary.json"));
  std::ofstream cfg(dir / "again.cfg");
  for (auto& [key, value] : summary["config"].items())
    cfg << key << " = " << (key == "out" ? (dir / "second").string() : value.get<std::string>()) << '\n';
  cfg.close();
  auto again = call({"run", "--config", (dir / "again.cfg").string()});
  ASSERT_EQ(again.code, 0) << again.err;
  auto a = [&](const fs::path& p) {
    std::ifstream in(p);
    return parse_run_csv(in);
  };
  auto first = a(dir / "first" / "run.csv");
  auto second = a(dir / "second" / "run.csv");
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    EXPECT_EQ(first[k].energy, second[k].energy);
    EXPECT_EQ(first[k].selected_op, second[k].selected_op);
    EXPECT_EQ(first[k].energy_evals, second[k].energy_evals);
  }
}

TEST(CliRun, ThreadCountDoesNotChangeResults) {
  auto dir = scratch("threads");
  for (const char* t : {"1", "3"}) {
    auto r = call({"--threads", t, "run", "--fcidump", testing::data_path("h4.fcidump"), "--out",
                   (dir / t).string(), "--max-iter", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  std::ifstream a(dir / "1" / "run.csv"), b(dir / "3" / "run.csv");
  auto ra = parse_run_csv(a), rb = parse_run_csv(b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    EXPECT_EQ(ra[k].energy, rb[k].energy);
    EXPECT_EQ(ra[k].grad_max, rb[k].grad_max);
  }
}

TEST(CliRun, PartitionedRunWritesReport) {
  auto dir = scratch("partitioned");
  auto r = call({"run", "--engine", "partitioned", "--eta", "1", "--delta", "1e-5", "--fcidump",
                 testing::data_path("h6.fcidump"), "--max-iter", "1", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto report = nlohmann::json::parse(slurp(dir / "partition_report.json"));
  EXPECT_EQ(report["eta"], 1);
  EXPECT_EQ(report["block_size"], 6);
  EXPECT_GT(report["boundary_terms"].get<int>(), 0);
  EXPECT_EQ(report["terms_per_level"][0].get<int>() + report["terms_per_level"][1].get<int>(),
            report["local_terms"].get<int>() + report["boundary_terms"].get<int>());
  ASSERT_TRUE(fs::exists(dir / "truncation.csv"));
  std::ifstream trunc(dir / "truncation.csv");
  std::string header;
  std::getline(trunc, header);
  EXPECT_EQ(header, "iteration,site,tail_norm,running_max");
}

TEST(CliRun, MissingFcidumpIsUsageError) {
  auto r = call({"run", "--fcidump", "/nonexistent/x.fcidump", "--out", scratch("missing").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not found"), std::string::npos);
}

TEST(CliRun, BondCapAbortExitsWithTwo) {
  auto dir = scratch("abort");
  auto r = call({"run", "--engine", "mps", "--delta", "0", "--bond-cap", "1", "--fcidump",
                 testing::data_path("h4.fcidump"), "--max-iter", "3", "--out", dir.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(slurp(dir / "summary.json"))["status"], "aborted");
  std::ifstream csv(dir / "run.csv");
  EXPECT_GE(parse_run_csv(csv).size(), 1u);
}

TEST(CliRun, UnknownConfigKeyIsRejected) {
  auto dir = scratch("badcfg");
  std::ofstream(dir / "bad.cfg") << "fcidump = " << testing::data_path("h2.fcidump") << "\nout = " << dir.string()
                                 << "\ncolour = blue\n";
  auto r = call({"run", "--config", (dir / "bad.cfg").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("colour"), std::string::npos);
}

TEST(RunConfig, ParsesAndValidates) {
  RunSettings s;
  std::istringstream in("# comment\nengine = mps\ndelta = 1e-3  # inline\nmax_iter=7\nordering = blocked\n");
  load_run_config(in, s);
  EXPECT_EQ(s.adapt.engine, adapt::EngineKind::kMps);
  EXPECT_EQ(s.adapt.engine_options.delta, 1e-3);
  EXPECT_EQ(s.adapt.max_iter, 7);
  EXPECT_EQ(s.ordering, ci::SpinOrdering::kBlocked);
  EXPECT_THROW(require_complete(s), ParseError);

  RunSettings t;
  std::istringstream dup("eta = 1\neta = 2\n");
  EXPECT_THROW(load_run_config(dup, t), ParseError);
  EXPECT_THROW(apply_setting(t, "eps_grad", "-1"), ParseError);
  EXPECT_THROW(apply_setting(t, "max_iter", "ten"), ParseError);
  EXPECT_THROW(apply_setting(t, "engine", "gpu"), ParseError);
  apply_setting(t, "reference-energy", "-1.5");
  EXPECT_EQ(*t.adapt.reference_energy, -1.5);
}

TEST(CliMetrics, SyntheticQuadraticTimes) {
  auto dir = scratch("metrics");
  {
    std::ofstream csv(dir / "synthetic.csv");
    csv << kRunCsvHeader << '\n' << "0,,0,-1,,1,0,0.001,1\n";
    for (int j = 1; j <= 8; ++j) csv << j << ",s(0->2),0.1,-1,,1,0," << 4.0 * j * j << ',' << j << '\n';
  }
  auto r = call({"metrics", "--csv", (dir / "synthetic.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["coefficients"]) EXPECT_EQ(c.get<double>(), 0.5);
  EXPECT_TRUE(j["quadratic_valid"].get<bool>());
}

TEST(CliMetrics, MalformedCsvIsRejected) {
  auto dir = scratch("badcsv");
  std::ofstream(dir / "bad.csv") << "iter,energy\n1,2\n";
  EXPECT_EQ(call({"metrics", "--csv", (dir / "bad.csv").string()}).code, 1);
}

TEST(RunCsv, RoundTripsRecords) {
  adapt::RunRecord r;
  r.iteration = 3;
  r.selected_op = "d(0 1->2 3)";
  r.grad_max = 0.125;
  r.energy = -1.137270174660903;
  r.nnz = 4;
  r.max_trunc_err = 1e-7;
  r.wall_s = 0.5;
  r.energy_evals = 42;
  std::istringstream in(std::string(kRunCsvHeader) + "\n" + format_record(r) + "\n");
  auto back = parse_run_csv(in);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].energy, r.energy);
  EXPECT_EQ(back[0].selected_op, r.selected_op);
  EXPECT_FALSE(back[0].abs_error.has_value());
  EXPECT_EQ(back[0].energy_evals, 42u);
}

}  // namespace
}  // namespace hyperion::cli
