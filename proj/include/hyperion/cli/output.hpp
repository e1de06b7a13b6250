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

#pragma once

#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperion/adapt/adapt.hpp"
#include "hyperion/partition/partition.hpp"

namespace hyperion::cli {

inline constexpr const char* kRunCsvHeader =
    "iter,selected_op,grad_max,energy,abs_error,nnz,max_trunc_err,wall_s,energy_evals";
inline constexpr const char* kTruncationCsvHeader = "iteration,site,tail_norm,running_max";

/// Shortest round-tripping decimal form.
std::string format_double(double x);

/// One CSV row (no newline); abs_error is empty when unknown.
std::string format_record(const adapt::RunRecord& r);

/// Parses a run CSV with the header above. Throws ParseError on a bad header,
/// column count or number.
std::vector<adapt::RunRecord> parse_run_csv(std::istream& in);

/// Appends truncation rows as their iteration tags complete.
class TruncationCsv {
 public:
  explicit TruncationCsv(const std::string& path);
  /// Writes rows tagged <= `iteration` not written yet.
  void flush_through(const mps::TruncationLog& log, int iteration);

 private:
  std::ofstream out_;
  int written_through_ = -1;
};

/// Term counts per level, local and boundary storage, and the bond profile
/// of every boundary MPO part.
nlohmann::json partition_report(const partition::PartitionedHamiltonian& ph);

}  // namespace hyperion::cli
