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

#include "hyperion/sv/sv_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace hyperion::sv {

namespace {

// Terms sharing an X-mask map a ket to the same bra, so they are summed
// together before the basis lookup.
struct FlipGroup {
  Bits flip = 0;
  std::vector<Bits> z_masks;
  std::vector<double> weights;  // coefficient * i^{#Y}
};

std::vector<FlipGroup> group_by_flip(const chem::PauliSum& h) {
  std::map<Bits, FlipGroup> groups;
  for (const auto& t : h.terms()) {
    int ny = t.word.y_count();
    if (ny % 2 != 0) throw ContractError("assemble_subspace_hamiltonian: term " + t.word.to_string() +
                                         " has an odd number of Y letters (imaginary matrix)");
    auto& g = groups[t.word.x_mask()];
    g.flip = t.word.x_mask();
    g.z_masks.push_back(t.word.z_mask());
    g.weights.push_back(((ny / 2) % 2 == 0) ? t.coefficient : -t.coefficient);
  }
  std::vector<FlipGroup> out;
  out.reserve(groups.size());
  for (auto& [flip, g] : groups) out.push_back(std::move(g));
  return out;
}

void check_state(const SvState& s) {
  if (s.basis == nullptr) throw ContractError("SvState without basis");
  if (s.vec.dim() != s.basis->size()) throw ContractError("SvState dimension does not match its basis");
}

}  // namespace

SvState SvState::from_configuration(const ci::CiBasis& basis, const ci::Configuration& c) {
  auto pos = basis.index_of(c);
  if (!pos) throw ContractError("SvState: configuration " + c.to_string() + " is outside the basis");
  return {&basis, sparse::SparseVector::unit(basis.size(), static_cast<sparse::Index>(*pos))};
}

sparse::CsrMatrix assemble_subspace_hamiltonian(const chem::PauliSum& h, const ci::CiBasis& basis,
                                                unsigned workers) {
  if (h.n_qubits() != basis.n_qubits()) throw ContractError("assemble_subspace_hamiltonian: qubit count mismatch");
  const auto groups = group_by_flip(h);
  const auto& states = basis.states();
  const std::size_t n = states.size();

  const std::size_t blocks = block_count(n, workers);
  std::vector<std::vector<std::uint64_t>> row_len(blocks);
  std::vector<std::vector<sparse::Index>> cols(blocks);
  std::vector<std::vector<double>> vals(blocks);

  parallel_blocks(n, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
    std::vector<std::pair<sparse::Index, double>> row;
    std::unordered_map<Bits, double> leaked;
    for (std::size_t i = begin; i < end; ++i) {
      row.clear();
      leaked.clear();
      const Bits bra = states[i];
      for (const auto& g : groups) {
        // <bra| P |ket> with ket = bra ^ flip; P|ket> = i^{#Y} (-1)^{|ket & z|} |bra>.
        const Bits ket = bra ^ g.flip;
        double sum = 0.0;
        for (std::size_t t = 0; t < g.z_masks.size(); ++t)
          sum += (popcount(ket & g.z_masks[t]) & 1) ? -g.weights[t] : g.weights[t];
        if (sum == 0.0) continue;
        if (auto j = basis.index_of(ket)) {
          row.emplace_back(static_cast<sparse::Index>(*j), sum);
        } else {
          leaked[ket] += sum;
        }
      }
      for (const auto& [ket, sum] : leaked)
        if (std::abs(sum) > 1e-10)
          throw ContractError("assemble_subspace_hamiltonian: Hamiltonian couples the sector to configuration " +
                              ci::Configuration{ket, basis.n_qubits()}.to_string());
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
      std::uint64_t len = 0;
      for (std::size_t k = 0; k < row.size();) {
        sparse::Index col = row[k].first;
        double v = 0.0;
        for (; k < row.size() && row[k].first == col; ++k) v += row[k].second;
        if (std::abs(v) > 1e-14) {
          cols[b].push_back(col);
          vals[b].push_back(v);
          ++len;
        }
      }
      row_len[b].push_back(len);
    }
  });

  sparse::CsrMatrix m;
  m.n_rows = m.n_cols = n;
  m.row_offsets.assign(1, 0);
  m.row_offsets.reserve(n + 1);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (auto len : row_len[b]) m.row_offsets.push_back(m.row_offsets.back() + len);
    m.col_indices.insert(m.col_indices.end(), cols[b].begin(), cols[b].end());
    m.values.insert(m.values.end(), vals[b].begin(), vals[b].end());
  }
  return m;
}

double expectation(const sparse::CsrMatrix& m, const SvState& s, unsigned workers) {
  check_state(s);
  return sparse::dot(s.vec, sparse::spmspv(m, s.vec, 0.0, workers));
}

SvState apply_generator(const ExcitationOperator& op, const SvState& s) {
  check_state(s);
  const auto& basis = *s.basis;
  if (op.max_qubit() >= basis.n_qubits()) throw ContractError("apply_generator: operator index beyond qubit count");
  std::vector<std::pair<sparse::Index, double>> out;
  const auto& idx = s.vec.indices();
  const auto& val = s.vec.values();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    auto act = apply_generator(op, basis.states()[idx[k]]);
    if (act.sign == 0) continue;
    auto j = basis.index_of(act.target);
    if (!j) throw ContractError("apply_generator: excitation " + op.to_string() + " leaves the CI sector");
    out.emplace_back(static_cast<sparse::Index>(*j), act.sign * val[k]);
  }
  return {s.basis, sparse::SparseVector::from_unsorted(basis.size(), std::move(out))};
}

SvState apply_qeb_exponential(const ExcitationOperator& op, double theta, const SvState& s) {
  check_state(s);
  const auto& basis = *s.basis;
  if (op.max_qubit() >= basis.n_qubits())
    throw ContractError("apply_qeb_exponential: operator index beyond qubit count");
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  std::vector<std::pair<sparse::Index, double>> out;
  out.reserve(s.vec.nnz() * 2);
  const auto& idx = s.vec.indices();
  const auto& val = s.vec.values();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    auto act = apply_generator(op, basis.states()[idx[k]]);
    if (act.sign == 0) {
      out.emplace_back(idx[k], val[k]);
      continue;
    }
    // On the plane {x, Tx}: (I + sin T + (1 - cos) T^2) x = cos x + sin Tx.
    out.emplace_back(idx[k], c * val[k]);
    if (sn != 0.0) {
      auto j = basis.index_of(act.target);
      if (!j) throw ContractError("apply_qeb_exponential: excitation " + op.to_string() + " leaves the CI sector");
      out.emplace_back(static_cast<sparse::Index>(*j), sn * act.sign * val[k]);
    }
  }
  return {s.basis, sparse::SparseVector::from_unsorted(basis.size(), std::move(out))};
}

SvState prepare_state(std::span<const AnsatzElement> ansatz, const SvState& reference) {
  SvState s = reference;
  for (const auto& e : ansatz) s = apply_qeb_exponential(e.op, e.theta, s);
  return s;
}

double pool_gradient(const sparse::CsrMatrix& m, const SvState& s, const ExcitationOperator& op,
                     unsigned workers) {
  check_state(s);
  auto hs = sparse::spmspv(m, s.vec, 0.0, workers);
  return 2.0 * sparse::dot(hs, apply_generator(op, s).vec);
}

std::vector<double> pool_gradients(const sparse::CsrMatrix& m, const SvState& s,
                                   std::span<const ExcitationOperator> ops, unsigned workers) {
  check_state(s);
  return pool_gradients_from(sparse::spmspv(m, s.vec, 0.0, workers), s, ops, workers);
}

std::vector<double> pool_gradients_from(const sparse::SparseVector& h_s, const SvState& s,
                                        std::span<const ExcitationOperator> ops, unsigned workers) {
  check_state(s);
  std::vector<double> out(ops.size(), 0.0);
  parallel_blocks(ops.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) out[k] = 2.0 * sparse::dot(h_s, apply_generator(ops[k], s).vec);
  });
  return out;
}

}  // namespace hyperion::sv
