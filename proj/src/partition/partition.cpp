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

#include "hyperion/partition/partition.hpp"

#include <cmath>

namespace hyperion::partition {

std::size_t PartitionedHamiltonian::boundary_term_count() const {
  std::size_t n = 0;
  for (const auto& [key, g] : boundary_groups) n += g.terms.size();
  return n;
}

std::optional<GroupKey> classify_support(Bits support, int n_qubits, int eta) {
  if (support == 0) return std::nullopt;
  const int lo = __builtin_ctzll(support);
  const int hi = 63 - __builtin_clzll(support);
  for (int level = 1; level <= eta; ++level) {
    const int width = n_qubits >> level;
    if (lo / width != hi / width) return GroupKey{level, lo / width + 1};
  }
  return std::nullopt;
}

PartitionedHamiltonian partition(const chem::PauliSum& h, int eta, int n_qubits, const PartitionOptions& options) {
  if (h.empty()) throw ContractError("partition: empty Hamiltonian");
  if (h.n_qubits() != n_qubits) throw ContractError("partition: qubit count mismatch");
  if (eta < 1 || eta > 30 || n_qubits % (1 << eta) != 0)
    throw ContractError("partition: 2^eta must divide the qubit count");
  PartitionedHamiltonian ph;
  ph.n_qubits = n_qubits;
  ph.eta = eta;
  ph.block_size = n_qubits >> eta;
  std::vector<chem::PauliTerm> local;
  std::map<GroupKey, std::vector<chem::PauliTerm>> groups;
  for (const auto& t : h.terms()) {
    if (auto key = classify_support(t.word.support(), n_qubits, eta)) {
      groups[*key].push_back(t);
    } else {
      local.push_back(t);
    }
  }
  // Terms are already merged; a zero drop tolerance keeps the split exact.
  ph.local_terms = chem::PauliSum::from_terms(n_qubits, std::move(local), 0.0);
  for (auto& [key, terms] : groups) {
    BoundaryGroup g;
    g.terms = chem::PauliSum::from_terms(n_qubits, std::move(terms), 0.0);
    g.mpo = mps::mpo_from_pauli_sum(g.terms, options.mpo_delta, options.mpo_cap);
    ph.boundary_groups.emplace(key, std::move(g));
  }
  if (options.basis) {
    ph.local_csr = sv::assemble_subspace_hamiltonian(ph.local_terms, *options.basis, options.workers);
    ph.has_local_csr = true;
  }
  return ph;
}

DualState dual_from_configuration(const ci::CiBasis& basis, const ci::Configuration& c) {
  return {sv::SvState::from_configuration(basis, c), mps::from_configuration(c)};
}

namespace {

void require_csr(const PartitionedHamiltonian& ph) {
  if (!ph.has_local_csr) throw ContractError("partitioned Hamiltonian has no local CSR; pass a basis to partition()");
}

std::vector<const mps::Mpo*> boundary_parts(const PartitionedHamiltonian& ph) {
  std::vector<const mps::Mpo*> parts;
  for (const auto& [key, g] : ph.boundary_groups)
    for (const auto& p : g.mpo.parts) parts.push_back(&p);
  return parts;
}

}  // namespace

double boundary_expectation(const PartitionedHamiltonian& ph, const mps::MpsState& s, unsigned workers) {
  auto parts = boundary_parts(ph);
  std::vector<double> values(parts.size(), 0.0);
  parallel_blocks(parts.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = mps::expectation(*parts[i], s);
  });
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

double expectation_partitioned(const PartitionedHamiltonian& ph, const DualState& d, unsigned workers) {
  require_csr(ph);
  return sv::expectation(ph.local_csr, d.sv, workers) + boundary_expectation(ph, d.mps, workers);
}

DualState apply_ansatz_dual(const sv::ExcitationOperator& op, double theta, const DualState& d,
                            const mps::TruncationPolicy& policy, mps::TruncationLog* log) {
  DualState out;
  out.sv = sv::apply_qeb_exponential(op, theta, d.sv);
  if (theta == 0.0) {
    out.mps = d.mps;
    return out;
  }
  auto gate = mps::qeb_exponential_mpo(op, theta, d.mps.n_qubits());
  out.mps = mps::normalized(mps::apply_mpo_zipup(gate, d.mps, policy, log));
  return out;
}

double pool_gradient_partitioned(const PartitionedHamiltonian& ph, const DualState& d,
                                 const sv::ExcitationOperator& op) {
  require_csr(ph);
  double local = sv::pool_gradient(ph.local_csr, d.sv, op);
  mps::TruncationPolicy exact;
  exact.bond_cap = 0;
  auto t_psi = mps::apply_mpo_zipup(mps::qeb_generator_mpo(op, d.mps.n_qubits()), d.mps, exact);
  double boundary = 0.0;
  for (const auto* part : boundary_parts(ph)) boundary += 2.0 * mps::sandwich(d.mps, *part, t_psi);
  return local + boundary;
}

std::vector<mps::MpsState> boundary_images(const PartitionedHamiltonian& ph, const mps::MpsState& s,
                                           const mps::TruncationPolicy& policy, unsigned workers) {
  auto parts = boundary_parts(ph);
  std::vector<mps::MpsState> images(parts.size());
  parallel_blocks(parts.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) images[i] = mps::apply_mpo_zipup(*parts[i], s, policy);
  });
  return images;
}

double mps_gradient_from_images(std::span<const mps::MpsState> images, const mps::MpsState& s,
                                const sv::ExcitationOperator& op) {
  if (images.empty()) return 0.0;
  auto t = mps::qeb_generator_mpo(op, s.n_qubits());
  double total = 0.0;
  for (const auto& img : images) total += 2.0 * mps::sandwich(img, t, s);
  return total;
}

std::vector<double> pool_gradients_partitioned(const PartitionedHamiltonian& ph, const DualState& d,
                                               std::span<const sv::ExcitationOperator> ops,
                                               const mps::TruncationPolicy& policy, unsigned workers) {
  require_csr(ph);
  auto local = sv::pool_gradients(ph.local_csr, d.sv, ops, workers);
  auto images = boundary_images(ph, d.mps, policy, workers);
  parallel_blocks(ops.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) local[k] += mps_gradient_from_images(images, d.mps, ops[k]);
  });
  return local;
}

}  // namespace hyperion::partition
