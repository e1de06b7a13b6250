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

#include "hyperion/sv/excitation.hpp"

#include <algorithm>
#include <regex>

namespace hyperion::sv {

ExcitationOperator ExcitationOperator::single(int from, int to) {
  if (from < 0 || to < 0 || from == to || from > 61 || to > 61)
    throw ContractError("ExcitationOperator: invalid single indices");
  ExcitationOperator op;
  op.kind_ = Kind::kSingle;
  op.from_ = {from, from};
  op.to_ = {to, to};
  return op;
}

ExcitationOperator ExcitationOperator::double_(int p, int q, int r, int s) {
  std::array<int, 4> all{p, q, r, s};
  for (int i : all)
    if (i < 0 || i > 61) throw ContractError("ExcitationOperator: index out of range");
  std::array<int, 4> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractError("ExcitationOperator: double indices must be distinct");
  ExcitationOperator op;
  op.kind_ = Kind::kDouble;
  op.from_ = {std::min(p, q), std::max(p, q)};
  op.to_ = {std::min(r, s), std::max(r, s)};
  return op;
}

ExcitationOperator ExcitationOperator::parse(const std::string& text) {
  static const std::regex kSingle(R"(s\((\d+)->(\d+)\))");
  static const std::regex kDouble(R"(d\((\d+) (\d+)->(\d+) (\d+)\))");
  std::smatch m;
  if (std::regex_match(text, m, kSingle)) return single(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(text, m, kDouble))
    return double_(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]));
  throw ParseError("cannot parse excitation operator '" + text + "'");
}

Bits ExcitationOperator::from_mask() const {
  return (Bits{1} << from_[0]) | (Bits{1} << from_[1]);
}

Bits ExcitationOperator::to_mask() const { return (Bits{1} << to_[0]) | (Bits{1} << to_[1]); }

int ExcitationOperator::max_qubit() const { return std::max(from_[1], to_[1]); }

bool ExcitationOperator::spin_conserving(int n_spatial, ci::SpinOrdering ordering) const {
  auto alpha_count = [&](Bits mask) { return popcount(mask & ci::spin_mask(ci::Spin::kAlpha, n_spatial, ordering)); };
  return alpha_count(from_mask()) == alpha_count(to_mask());
}

std::string ExcitationOperator::to_string() const {
  if (kind_ == Kind::kSingle) return "s(" + std::to_string(from_[0]) + "->" + std::to_string(to_[0]) + ")";
  return "d(" + std::to_string(from_[0]) + " " + std::to_string(from_[1]) + "->" + std::to_string(to_[0]) + " " +
         std::to_string(to_[1]) + ")";
}

}  // namespace hyperion::sv
