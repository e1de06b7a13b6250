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

#include "hyperion/adapt/engine.hpp"

#include "hyperion/chem/jordan_wigner.hpp"

namespace hyperion::adapt {

Problem Problem::from_integrals(const chem::IntegralSet& ints, ci::SpinOrdering ordering) {
  return from_hamiltonian(chem::qubit_hamiltonian(ints, ordering), ints.n_alpha(), ints.n_beta(), ordering);
}

Problem Problem::from_hamiltonian(chem::PauliSum h, int n_alpha, int n_beta, ci::SpinOrdering ordering) {
  const int n = h.n_qubits();
  auto basis = ci::CiBasis::enumerate(n, n_alpha, n_beta, ordering);
  auto reference = ci::hartree_fock_reference(n_alpha + n_beta, n, ordering, n_alpha);
  return Problem{std::move(h), std::move(basis), reference, ordering, n_alpha, n_beta};
}

std::string to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::kSv: return "sv";
    case EngineKind::kMps: return "mps";
    case EngineKind::kPartitioned: return "partitioned";
  }
  return "sv";
}

EngineKind parse_engine_kind(const std::string& text) {
  if (text == "sv") return EngineKind::kSv;
  if (text == "mps") return EngineKind::kMps;
  if (text == "partitioned") return EngineKind::kPartitioned;
  throw ParseError("unknown engine '" + text + "' (expected sv, mps or partitioned)");
}

std::unique_ptr<Engine> make_engine(EngineKind kind, const Problem& problem, const EngineOptions& options) {
  switch (kind) {
    case EngineKind::kSv: return std::make_unique<SvEngine>(problem, options);
    case EngineKind::kMps: return std::make_unique<MpsEngine>(problem, options);
    case EngineKind::kPartitioned: return std::make_unique<PartitionedEngine>(problem, options);
  }
  throw ContractError("make_engine: unknown engine kind");
}

namespace {

bool same_element(const AnsatzElement& a, const AnsatzElement& b) { return a.op == b.op && a.theta == b.theta; }

/// Extends the cached chain of prefix states to `ansatz`, recomputing only
/// past the longest unchanged prefix. states[0] is the reference.
template <class State, class Apply>
const State& extend_prefix(std::vector<AnsatzElement>& keys, std::vector<State>& states,
                           std::span<const AnsatzElement> ansatz, Apply apply) {
  std::size_t common = 0;
  while (common < keys.size() && common < ansatz.size() && same_element(keys[common], ansatz[common])) ++common;
  keys.resize(common);
  states.resize(common + 1);
  for (std::size_t k = common; k < ansatz.size(); ++k) {
    State next = apply(ansatz[k], states.back());
    states.push_back(std::move(next));
    keys.push_back(ansatz[k]);
  }
  return states.back();
}

mps::TruncationPolicy state_policy(const EngineOptions& o) {
  mps::TruncationPolicy p;
  p.delta = o.delta;
  p.mode = o.truncation_mode;
  p.bond_cap = o.bond_cap;
  return p;
}

/// Auxiliary vectors (H|psi> and its back-propagated images) are not bound
/// by the state's bond cap.
mps::TruncationPolicy uncapped(mps::TruncationPolicy p) {
  p.bond_cap = 0;
  return p;
}

mps::MpsState apply_gate(const ExcitationOperator& op, double theta, const mps::MpsState& s,
                         const mps::TruncationPolicy& policy, mps::TruncationLog* log) {
  if (theta == 0.0) return s;
  auto gate = mps::qeb_exponential_mpo(op, theta, s.n_qubits());
  return mps::normalized(mps::apply_mpo_zipup(gate, s, policy, log));
}

/// Adds 2 <lambda_k| T_k |psi_k> to grad[k], where lambda is H|psi_N>
/// pulled back through the later gates.
void sv_backprop(const sparse::CsrMatrix& m, std::span<const sv::SvState* const> states,
                 std::span<const AnsatzElement> ansatz, std::vector<double>& grad, unsigned workers) {
  const std::size_t n = ansatz.size();
  const sv::SvState& last = *states[n];
  sv::SvState lambda{last.basis, sparse::spmspv(m, last.vec, 0.0, workers)};
  for (std::size_t k = n; k-- > 0;) {
    auto t_psi = sv::apply_generator(ansatz[k].op, *states[k + 1]);
    grad[k] += 2.0 * sparse::dot(lambda.vec, t_psi.vec);
    if (k > 0) lambda = sv::apply_qeb_exponential(ansatz[k].op, -ansatz[k].theta, lambda);
  }
}

mps::MpsState apply_sum(std::span<const mps::Mpo* const> parts, const mps::MpsState& s,
                        const mps::TruncationPolicy& policy) {
  mps::MpsState acc = mps::apply_mpo_zipup(*parts[0], s, policy);
  for (std::size_t p = 1; p < parts.size(); ++p)
    acc = mps::tt_round(mps::add(acc, mps::apply_mpo_zipup(*parts[p], s, policy)), policy);
  return acc;
}

void mps_backprop(std::span<const mps::Mpo* const> parts, std::span<const mps::MpsState* const> states,
                  std::span<const AnsatzElement> ansatz, const mps::TruncationPolicy& policy,
                  std::vector<double>& grad) {
  if (parts.empty()) return;
  const std::size_t n = ansatz.size();
  const int n_qubits = states[0]->n_qubits();
  mps::MpsState lambda = apply_sum(parts, *states[n], policy);
  for (std::size_t k = n; k-- > 0;) {
    auto t = mps::qeb_generator_mpo(ansatz[k].op, n_qubits);
    grad[k] += 2.0 * mps::sandwich(lambda, t, *states[k + 1]);
    if (k > 0 && ansatz[k].theta != 0.0)
      lambda = mps::apply_mpo_zipup(mps::qeb_exponential_mpo(ansatz[k].op, -ansatz[k].theta, n_qubits), lambda,
                                    policy);
  }
}

std::vector<double> screen_with_images(std::span<const mps::MpsState> images, const mps::MpsState& s,
                                       std::span<const ExcitationOperator> pool, unsigned workers) {
  std::vector<double> out(pool.size(), 0.0);
  parallel_blocks(pool.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) out[k] = partition::mps_gradient_from_images(images, s, pool[k]);
  });
  return out;
}

/// H|psi> images for screening. Their truncation goes into `log` under the
/// log's current iteration tag (the committed state they were built from).
std::vector<mps::MpsState> images_of(std::span<const mps::Mpo* const> parts, const mps::MpsState& s,
                                     const mps::TruncationPolicy& policy, unsigned workers,
                                     mps::TruncationLog& log) {
  std::vector<mps::MpsState> images(parts.size());
  std::vector<mps::TruncationLog> logs(parts.size());
  parallel_blocks(parts.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      logs[i].set_iteration(log.iteration());
      images[i] = mps::apply_mpo_zipup(*parts[i], s, policy, &logs[i]);
    }
  });
  for (const auto& l : logs) log.merge(l);
  return images;
}

void check_ansatz(std::span<const AnsatzElement> ansatz, int n_qubits) {
  for (const auto& e : ansatz)
    if (e.op.max_qubit() >= n_qubits) throw ContractError("ansatz operator " + e.op.to_string() + " exceeds the register");
}

}  // namespace

// --- SvEngine ---------------------------------------------------------------

SvEngine::SvEngine(const Problem& problem, const EngineOptions& options)
    : SvEngine(problem, sv::assemble_subspace_hamiltonian(problem.hamiltonian, problem.basis, options.workers),
               options) {}

SvEngine::SvEngine(const Problem& problem, sparse::CsrMatrix hamiltonian, const EngineOptions& options)
    : problem_(&problem), options_(options), h_(std::move(hamiltonian)) {
  if (h_.n_rows != problem.basis.size()) throw ContractError("SvEngine: matrix does not match the basis");
  states_.push_back(sv::SvState::from_configuration(problem.basis, problem.reference));
  committed_ = states_[0];
}

const sv::SvState& SvEngine::prepare(std::span<const AnsatzElement> ansatz) {
  check_ansatz(ansatz, problem_->n_qubits());
  return extend_prefix(keys_, states_, ansatz, [](const AnsatzElement& e, const sv::SvState& s) {
    return sv::apply_qeb_exponential(e.op, e.theta, s);
  });
}

double SvEngine::energy(std::span<const AnsatzElement> ansatz) {
  return sv::expectation(h_, prepare(ansatz), options_.workers);
}

double SvEngine::energy_gradient(std::span<const AnsatzElement> ansatz, std::vector<double>& grad) {
  const double e = energy(ansatz);
  grad.assign(ansatz.size(), 0.0);
  if (ansatz.empty()) return e;
  std::vector<const sv::SvState*> ptrs;
  for (const auto& s : states_) ptrs.push_back(&s);
  sv_backprop(h_, ptrs, ansatz, grad, options_.workers);
  return e;
}

double SvEngine::commit(std::span<const AnsatzElement> ansatz, int) {
  committed_ = prepare(ansatz);
  return sv::expectation(h_, committed_, options_.workers);
}

std::vector<double> SvEngine::screen(std::span<const ExcitationOperator> pool) {
  return sv::pool_gradients(h_, committed_, pool, options_.workers);
}

// --- MpsEngine --------------------------------------------------------------

MpsEngine::MpsEngine(const Problem& problem, const EngineOptions& options)
    : problem_(&problem),
      options_(options),
      policy_(state_policy(options)),
      h_(mps::mpo_from_pauli_sum(problem.hamiltonian)) {
  if (options.delta < 0) throw ContractError("MpsEngine: delta must be >= 0");
  states_.push_back(mps::from_configuration(problem.reference));
  committed_ = states_[0];
}

const mps::MpsState& MpsEngine::prepare(std::span<const AnsatzElement> ansatz) {
  check_ansatz(ansatz, problem_->n_qubits());
  return extend_prefix(keys_, states_, ansatz, [&](const AnsatzElement& e, const mps::MpsState& s) {
    return apply_gate(e.op, e.theta, s, policy_, nullptr);
  });
}

double MpsEngine::energy(std::span<const AnsatzElement> ansatz) {
  return mps::expectation(h_, prepare(ansatz), options_.workers);
}

double MpsEngine::energy_gradient(std::span<const AnsatzElement> ansatz, std::vector<double>& grad) {
  const double e = energy(ansatz);
  grad.assign(ansatz.size(), 0.0);
  if (ansatz.empty()) return e;
  std::vector<const mps::MpsState*> ptrs;
  for (const auto& s : states_) ptrs.push_back(&s);
  std::vector<const mps::Mpo*> parts;
  for (const auto& p : h_.parts) parts.push_back(&p);
  mps_backprop(parts, ptrs, ansatz, uncapped(policy_), grad);
  return e;
}

double MpsEngine::commit(std::span<const AnsatzElement> ansatz, int iteration) {
  check_ansatz(ansatz, problem_->n_qubits());
  log_.set_iteration(iteration);
  mps::MpsState s = mps::from_configuration(problem_->reference);
  for (const auto& e : ansatz) s = apply_gate(e.op, e.theta, s, policy_, &log_);
  committed_ = std::move(s);
  return mps::expectation(h_, committed_, options_.workers);
}

std::vector<double> MpsEngine::screen(std::span<const ExcitationOperator> pool) {
  std::vector<const mps::Mpo*> parts;
  for (const auto& p : h_.parts) parts.push_back(&p);
  auto images = images_of(parts, committed_, uncapped(policy_), options_.workers, log_);
  return screen_with_images(images, committed_, pool, options_.workers);
}

std::size_t MpsEngine::nnz() const {
  std::size_t total = 0;
  for (const auto& c : committed_.cores) total += static_cast<std::size_t>(c.data.size());
  return total;
}

// --- PartitionedEngine ------------------------------------------------------

PartitionedEngine::PartitionedEngine(const Problem& problem, const EngineOptions& options)
    : problem_(&problem), options_(options), policy_(state_policy(options)) {
  if (options.delta < 0) throw ContractError("PartitionedEngine: delta must be >= 0");
  partition::PartitionOptions popt;
  popt.basis = &problem.basis;
  popt.workers = options.workers;
  ph_ = partition::partition(problem.hamiltonian, options.eta, problem.n_qubits(), popt);
  for (const auto& [key, g] : ph_.boundary_groups)
    for (const auto& p : g.mpo.parts) boundary_.push_back(&p);
  states_.push_back(partition::dual_from_configuration(problem.basis, problem.reference));
  committed_ = states_[0];
}

const partition::DualState& PartitionedEngine::prepare(std::span<const AnsatzElement> ansatz) {
  check_ansatz(ansatz, problem_->n_qubits());
  return extend_prefix(keys_, states_, ansatz, [&](const AnsatzElement& e, const partition::DualState& d) {
    return partition::apply_ansatz_dual(e.op, e.theta, d, policy_, nullptr);
  });
}

double PartitionedEngine::energy(std::span<const AnsatzElement> ansatz) {
  return partition::expectation_partitioned(ph_, prepare(ansatz), options_.workers);
}

double PartitionedEngine::energy_gradient(std::span<const AnsatzElement> ansatz, std::vector<double>& grad) {
  const double e = energy(ansatz);
  grad.assign(ansatz.size(), 0.0);
  if (ansatz.empty()) return e;
  std::vector<const sv::SvState*> sv_ptrs;
  std::vector<const mps::MpsState*> mps_ptrs;
  for (const auto& d : states_) {
    sv_ptrs.push_back(&d.sv);
    mps_ptrs.push_back(&d.mps);
  }
  sv_backprop(ph_.local_csr, sv_ptrs, ansatz, grad, options_.workers);
  mps_backprop(boundary_, mps_ptrs, ansatz, uncapped(policy_), grad);
  return e;
}

double PartitionedEngine::commit(std::span<const AnsatzElement> ansatz, int iteration) {
  check_ansatz(ansatz, problem_->n_qubits());
  log_.set_iteration(iteration);
  auto d = partition::dual_from_configuration(problem_->basis, problem_->reference);
  for (const auto& e : ansatz) d = partition::apply_ansatz_dual(e.op, e.theta, d, policy_, &log_);
  committed_ = std::move(d);
  return partition::expectation_partitioned(ph_, committed_, options_.workers);
}

std::vector<double> PartitionedEngine::screen(std::span<const ExcitationOperator> pool) {
  auto out = sv::pool_gradients(ph_.local_csr, committed_.sv, pool, options_.workers);
  auto images = images_of(boundary_, committed_.mps, uncapped(policy_), options_.workers, log_);
  auto boundary = screen_with_images(images, committed_.mps, pool, options_.workers);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += boundary[k];
  return out;
}

}  // namespace hyperion::adapt
