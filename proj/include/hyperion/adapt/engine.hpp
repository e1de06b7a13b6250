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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hyperion/adapt/problem.hpp"
#include "hyperion/mps/mpo.hpp"
#include "hyperion/partition/partition.hpp"
#include "hyperion/sv/sv_engine.hpp"

namespace hyperion::adapt {

using sv::AnsatzElement;
using sv::ExcitationOperator;

enum class EngineKind { kSv, kMps, kPartitioned };

std::string to_string(EngineKind kind);
EngineKind parse_engine_kind(const std::string& text);

struct EngineOptions {
  /// MPS truncation (absolute per-bond tail) and bond cap.
  double delta = 1e-5;
  mps::TruncationPolicy::Mode truncation_mode = mps::TruncationPolicy::Mode::kAbsolute;
  Eigen::Index bond_cap = 256;
  int eta = 1;
  unsigned workers = 0;
};

/// Energy model used by the ADAPT loop. Trial evaluations reuse states for
/// the longest unchanged ansatz prefix. Truncation is recorded by commit()
/// and by the H|psi> contractions of screen().
class Engine {
 public:
  virtual ~Engine() = default;

  virtual EngineKind kind() const = 0;
  /// <HF| U(ansatz)^T H U(ansatz) |HF>.
  virtual double energy(std::span<const AnsatzElement> ansatz) = 0;
  /// Energy plus dE/dtheta_k for every element.
  virtual double energy_gradient(std::span<const AnsatzElement> ansatz, std::vector<double>& grad) = 0;
  /// Prepares the ansatz state from scratch, logging truncation under
  /// `iteration`, and keeps it for screening. Returns its energy.
  virtual double commit(std::span<const AnsatzElement> ansatz, int iteration) = 0;
  /// dE/dtheta at theta = 0 for appending each pool op to the committed state.
  virtual std::vector<double> screen(std::span<const ExcitationOperator> pool) = 0;
  /// Stored amplitudes (SV) or tensor entries (MPS) of the committed state.
  virtual std::size_t nnz() const = 0;
  virtual const mps::TruncationLog* truncation_log() const { return nullptr; }
};

std::unique_ptr<Engine> make_engine(EngineKind kind, const Problem& problem, const EngineOptions& options);

/// Exact sparse state vector on the full subspace Hamiltonian.
class SvEngine final : public Engine {
 public:
  SvEngine(const Problem& problem, const EngineOptions& options);
  SvEngine(const Problem& problem, sparse::CsrMatrix hamiltonian, const EngineOptions& options);

  EngineKind kind() const override { return EngineKind::kSv; }
  double energy(std::span<const AnsatzElement> ansatz) override;
  double energy_gradient(std::span<const AnsatzElement> ansatz, std::vector<double>& grad) override;
  double commit(std::span<const AnsatzElement> ansatz, int iteration) override;
  std::vector<double> screen(std::span<const ExcitationOperator> pool) override;
  std::size_t nnz() const override { return committed_.nnz(); }

  const sparse::CsrMatrix& matrix() const { return h_; }
  const sv::SvState& state() const { return committed_; }

 private:
  const sv::SvState& prepare(std::span<const AnsatzElement> ansatz);

  const Problem* problem_;
  EngineOptions options_;
  sparse::CsrMatrix h_;
  std::vector<AnsatzElement> keys_;
  std::vector<sv::SvState> states_;  // states_[k] after k elements
  sv::SvState committed_;
};

/// Pure MPS: every gate applied by zip-up at delta, then renormalised.
class MpsEngine final : public Engine {
 public:
  MpsEngine(const Problem& problem, const EngineOptions& options);

  EngineKind kind() const override { return EngineKind::kMps; }
  double energy(std::span<const AnsatzElement> ansatz) override;
  double energy_gradient(std::span<const AnsatzElement> ansatz, std::vector<double>& grad) override;
  double commit(std::span<const AnsatzElement> ansatz, int iteration) override;
  std::vector<double> screen(std::span<const ExcitationOperator> pool) override;
  std::size_t nnz() const override;
  const mps::TruncationLog* truncation_log() const override { return &log_; }

  const mps::MpoBatch& hamiltonian() const { return h_; }
  const mps::MpsState& state() const { return committed_; }

 private:
  const mps::MpsState& prepare(std::span<const AnsatzElement> ansatz);

  const Problem* problem_;
  EngineOptions options_;
  mps::TruncationPolicy policy_;
  mps::MpoBatch h_;
  std::vector<AnsatzElement> keys_;
  std::vector<mps::MpsState> states_;
  mps::MpsState committed_;
  mps::TruncationLog log_;
};

/// Dual representation: block-local terms on the exact sparse state,
/// boundary groups on the MPS.
class PartitionedEngine final : public Engine {
 public:
  PartitionedEngine(const Problem& problem, const EngineOptions& options);

  EngineKind kind() const override { return EngineKind::kPartitioned; }
  double energy(std::span<const AnsatzElement> ansatz) override;
  double energy_gradient(std::span<const AnsatzElement> ansatz, std::vector<double>& grad) override;
  double commit(std::span<const AnsatzElement> ansatz, int iteration) override;
  std::vector<double> screen(std::span<const ExcitationOperator> pool) override;
  std::size_t nnz() const override { return committed_.sv.nnz(); }
  const mps::TruncationLog* truncation_log() const override { return &log_; }

  const partition::PartitionedHamiltonian& hamiltonian() const { return ph_; }
  const partition::DualState& state() const { return committed_; }

 private:
  const partition::DualState& prepare(std::span<const AnsatzElement> ansatz);

  const Problem* problem_;
  EngineOptions options_;
  mps::TruncationPolicy policy_;
  partition::PartitionedHamiltonian ph_;
  std::vector<const mps::Mpo*> boundary_;
  std::vector<AnsatzElement> keys_;
  std::vector<partition::DualState> states_;
  partition::DualState committed_;
  mps::TruncationLog log_;
};

}  // namespace hyperion::adapt
