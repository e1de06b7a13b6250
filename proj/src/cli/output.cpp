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

#include "hyperion/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hyperion::cli {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_double(const std::string& s, int line) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("csv line " + std::to_string(line) + ": bad number '" + s + "'");
  return x;
}

std::uint64_t to_count(const std::string& s, int line) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("csv line " + std::to_string(line) + ": bad integer '" + s + "'");
  return x;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, ptr);
}

std::string format_record(const adapt::RunRecord& r) {
  std::string s = std::to_string(r.iteration);
  s += ',' + r.selected_op;
  s += ',' + format_double(r.grad_max);
  s += ',' + format_double(r.energy);
  s += ',' + (r.abs_error ? format_double(*r.abs_error) : std::string());
  s += ',' + std::to_string(r.nnz);
  s += ',' + format_double(r.max_trunc_err);
  s += ',' + format_double(r.wall_s);
  s += ',' + std::to_string(r.energy_evals);
  return s;
}

std::vector<adapt::RunRecord> parse_run_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRunCsvHeader) throw ParseError("csv: unexpected header '" + line + "'");
  std::vector<adapt::RunRecord> out;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != 9) throw ParseError("csv line " + std::to_string(number) + ": expected 9 columns");
    adapt::RunRecord r;
    r.iteration = static_cast<int>(to_count(f[0], number));
    r.selected_op = f[1];
    r.grad_max = to_double(f[2], number);
    r.energy = to_double(f[3], number);
    if (!f[4].empty()) r.abs_error = to_double(f[4], number);
    r.nnz = to_count(f[5], number);
    r.max_trunc_err = to_double(f[6], number);
    r.wall_s = to_double(f[7], number);
    r.energy_evals = to_count(f[8], number);
    out.push_back(std::move(r));
  }
  return out;
}

TruncationCsv::TruncationCsv(const std::string& path) : out_(path, std::ios::trunc) {
  if (!out_) throw Error("cannot write " + path);
  out_ << kTruncationCsvHeader << '\n' << std::flush;
}

void TruncationCsv::flush_through(const mps::TruncationLog& log, int iteration) {
  if (iteration <= written_through_) return;
  for (const auto& row : log.rows()) {
    if (row.iteration <= written_through_ || row.iteration > iteration) continue;
    out_ << row.iteration << ',' << row.site << ',' << format_double(row.tail_norm) << ','
         << format_double(row.running_max) << '\n';
  }
  out_ << std::flush;
  written_through_ = iteration;
}

nlohmann::json partition_report(const partition::PartitionedHamiltonian& ph) {
  nlohmann::json j;
  j["n_qubits"] = ph.n_qubits;
  j["eta"] = ph.eta;
  j["block_size"] = ph.block_size;
  j["local_terms"] = ph.local_terms.size();
  j["boundary_terms"] = ph.boundary_term_count();
  std::vector<std::size_t> per_level(static_cast<std::size_t>(ph.eta) + 1, 0);
  per_level[0] = ph.local_terms.size();
  std::size_t boundary_nnz = 0;
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [key, g] : ph.boundary_groups) {
    per_level[static_cast<std::size_t>(key.first)] += g.terms.size();
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : g.mpo.parts) {
      std::vector<Eigen::Index> bonds;
      for (std::size_t k = 0; k + 1 < part.cores.size(); ++k) bonds.push_back(part.cores[k].right);
      for (const auto& c : part.cores) boundary_nnz += static_cast<std::size_t>(c.data.size());
      parts.push_back({{"bonds", bonds}, {"max_bond", part.max_bond()}});
    }
    groups.push_back({{"level", key.first}, {"cut", key.second}, {"terms", g.terms.size()}, {"parts", parts}});
  }
  j["terms_per_level"] = per_level;  // index 0 = block-local
  j["local_nnz"] = ph.has_local_csr ? ph.local_csr.nnz() : 0;
  j["boundary_nnz"] = boundary_nnz;
  j["groups"] = groups;
  return j;
}

}  // namespace hyperion::cli
