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

#include "hyperion/mps/mpo.hpp"

#include <algorithm>
#include <cmath>

namespace hyperion::mps {

namespace {

Core identity_core(Eigen::Index bond, double scale = 1.0) {
  Core c(bond, 4, bond);
  for (Eigen::Index b = 0; b < bond; ++b) {
    c(b, 0, b) = scale;
    c(b, 3, b) = scale;
  }
  return c;
}

// Real single-qubit factor; Y is replaced by -iY = [[0, -1], [1, 0]].
Core letter_core(chem::Pauli p, double scale) {
  Core c(1, 4, 1);
  auto set = [&](int out, int in, double v) { c(0, out + 2 * in, 0) = v * scale; };
  switch (p) {
    case chem::Pauli::I: set(0, 0, 1); set(1, 1, 1); break;
    case chem::Pauli::X: set(1, 0, 1); set(0, 1, 1); break;
    case chem::Pauli::Y: set(1, 0, 1); set(0, 1, -1); break;
    case chem::Pauli::Z: set(0, 0, 1); set(1, 1, -1); break;
  }
  return c;
}

Train round_uncapped(Train t, double delta) {
  TruncationPolicy p;
  p.delta = delta;
  p.bond_cap = 0;
  round(t, p);
  return t;
}

// Splits a dense operator on k consecutive local sites (local bit j is site
// j) into k cores with physical index out + 2 * in.
Train split_local_operator(const Eigen::MatrixXd& u, int k) {
  const Eigen::Index dim = Eigen::Index{1} << k;
  Eigen::VectorXd v(dim * dim);
  for (Eigen::Index out = 0; out < dim; ++out)
    for (Eigen::Index in = 0; in < dim; ++in) {
      Eigen::Index p = 0;
      for (int j = 0; j < k; ++j) {
        Eigen::Index pj = ((out >> j) & 1) + 2 * ((in >> j) & 1);
        p += pj << (2 * j);
      }
      v(p) = u(out, in);
    }
  Train t;
  Eigen::MatrixXd rest = v.transpose();
  Eigen::Index left = 1;
  for (int j = 0; j + 1 < k; ++j) {
    Eigen::Map<Eigen::MatrixXd> m(rest.data(), left * 4, rest.size() / (left * 4));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    auto [keep, tail] = choose_rank(svd.singularValues(), 0.0);
    (void)tail;
    t.push_back(Core::from_left_unfolding(svd.matrixU().leftCols(keep), left, 4));
    Eigen::MatrixXd next = svd.singularValues().head(keep).asDiagonal() * svd.matrixV().leftCols(keep).transpose();
    rest = std::move(next);
    left = keep;
  }
  t.push_back(Core::from_left_unfolding(Eigen::Map<Eigen::MatrixXd>(rest.data(), left * 4, 1), left, 4));
  return t;
}

std::vector<int> support_qubits(const sv::ExcitationOperator& op) {
  std::vector<int> q;
  for (Bits m = op.support(); m; m &= m - 1) q.push_back(__builtin_ctzll(m));
  return q;
}

// Places local cores on the support qubits, identity elsewhere.
Mpo embed(const Train& local, const std::vector<int>& support, int n_qubits) {
  Mpo out;
  out.cores.reserve(static_cast<std::size_t>(n_qubits));
  std::size_t next = 0;
  Eigen::Index bond = 1;
  for (int q = 0; q < n_qubits; ++q) {
    if (next < support.size() && support[next] == q) {
      out.cores.push_back(local[next]);
      bond = local[next].right;
      ++next;
    } else {
      out.cores.push_back(identity_core(bond));
    }
  }
  return out;
}

Mpo local_gate_mpo(const sv::ExcitationOperator& op, int n_qubits, double c_identity, double c_t, double c_t2) {
  if (op.max_qubit() >= n_qubits) throw ContractError("gate MPO: operator index beyond qubit count");
  auto support = support_qubits(op);
  const int k = static_cast<int>(support.size());
  const Eigen::Index dim = Eigen::Index{1} << k;
  // Generator on the compressed support register.
  sv::ExcitationOperator local = op.rank() == 1 ? sv::ExcitationOperator::single(0, 1) : op;
  auto to_local = [&](int q) {
    return static_cast<int>(std::find(support.begin(), support.end(), q) - support.begin());
  };
  if (op.rank() == 1) {
    local = sv::ExcitationOperator::single(to_local(op.from()[0]), to_local(op.to()[0]));
  } else {
    local = sv::ExcitationOperator::double_(to_local(op.from()[0]), to_local(op.from()[1]), to_local(op.to()[0]),
                                            to_local(op.to()[1]));
  }
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    auto act = sv::apply_generator(local, static_cast<Bits>(x));
    if (act.sign != 0) t(static_cast<Eigen::Index>(act.target), x) = act.sign;
  }
  Eigen::MatrixXd u = c_identity * Eigen::MatrixXd::Identity(dim, dim) + c_t * t + c_t2 * (t * t);
  return embed(split_local_operator(u, k), support, n_qubits);
}

}  // namespace

Eigen::Index MpoBatch::max_bond() const {
  Eigen::Index out = 1;
  for (const auto& p : parts) out = std::max(out, p.max_bond());
  return out;
}

Mpo identity_mpo(int n_qubits, double scale) {
  if (n_qubits <= 0) throw ContractError("identity_mpo: no qubits");
  Mpo m;
  for (int k = 0; k < n_qubits; ++k) m.cores.push_back(identity_core(1, k == 0 ? scale : 1.0));
  return m;
}

Mpo mpo_from_word(const chem::PauliWord& word, double coefficient) {
  const int ny = word.y_count();
  if (ny % 2 != 0) throw ContractError("mpo_from_word: odd number of Y letters gives an imaginary operator");
  if (word.n_qubits() <= 0) throw ContractError("mpo_from_word: no qubits");
  double scale = (ny / 2) % 2 == 0 ? coefficient : -coefficient;
  Mpo m;
  for (int k = 0; k < word.n_qubits(); ++k) m.cores.push_back(letter_core(word.letter(k), k == 0 ? scale : 1.0));
  return m;
}

Mpo mpo_add(const Mpo& a, const Mpo& b) { return {direct_sum(a.cores, b.cores)}; }

Mpo mpo_round(const Mpo& m, const TruncationPolicy& policy) {
  validate(m.cores, 4);
  Mpo out = m;
  round(out.cores, policy);
  return out;
}

MpoBatch mpo_from_pauli_sum(const chem::PauliSum& h, double delta, Eigen::Index cap) {
  if (h.empty()) throw ContractError("mpo_from_pauli_sum: empty Hamiltonian");
  if (cap < 1) throw ContractError("mpo_from_pauli_sum: cap must be >= 1");
  constexpr std::size_t kChunk = 32;
  MpoBatch batch;
  batch.cap = cap;
  Train current;
  auto fits = [cap](const Train& t) { return max_bond(t) <= cap; };
  auto word_train = [](const chem::PauliTerm& t) { return mpo_from_word(t.word, t.coefficient).cores; };

  const auto& terms = h.terms();
  for (std::size_t begin = 0; begin < terms.size(); begin += kChunk) {
    const std::size_t end = std::min(terms.size(), begin + kChunk);
    Train chunk = word_train(terms[begin]);
    for (std::size_t i = begin + 1; i < end; ++i) chunk = direct_sum(chunk, word_train(terms[i]));
    chunk = round_uncapped(std::move(chunk), delta);
    Train candidate = current.empty() ? chunk : round_uncapped(direct_sum(current, chunk), delta);
    if (fits(candidate)) {
      current = std::move(candidate);
      continue;
    }
    for (std::size_t i = begin; i < end; ++i) {
      Train term = word_train(terms[i]);
      Train one = current.empty() ? term : round_uncapped(direct_sum(current, term), delta);
      if (fits(one)) {
        current = std::move(one);
      } else {
        batch.parts.push_back({std::move(current)});
        current = std::move(term);
      }
    }
  }
  if (!current.empty()) batch.parts.push_back({std::move(current)});
  return batch;
}

Mpo qeb_exponential_mpo(const sv::ExcitationOperator& op, double theta, int n_qubits) {
  return local_gate_mpo(op, n_qubits, 1.0, std::sin(theta), 1.0 - std::cos(theta));
}

Mpo qeb_generator_mpo(const sv::ExcitationOperator& op, int n_qubits) {
  return local_gate_mpo(op, n_qubits, 0.0, 1.0, 0.0);
}

namespace {

bool is_identity_site(const Core& w) {
  return w.left == 1 && w.right == 1 && w.data[0] == 1.0 && w.data[1] == 0.0 && w.data[2] == 0.0 && w.data[3] == 1.0;
}

}  // namespace

MpsState apply_mpo_zipup(const Mpo& m, const MpsState& s, const TruncationPolicy& policy, TruncationLog* log) {
  const int n = s.n_qubits();
  if (m.n_qubits() != n) throw ContractError("apply_mpo_zipup: qubit counts differ");
  // Only the window [lo, hi] of non-identity MPO sites is touched; the
  // state is brought to centre lo first so that the cores outside the
  // window stay orthonormal and need no update.
  int lo = 0, hi = n - 1;
  while (lo < hi && is_identity_site(m.cores[static_cast<std::size_t>(lo)])) ++lo;
  while (hi > lo && is_identity_site(m.cores[static_cast<std::size_t>(hi)])) --hi;

  MpsState out;
  out.cores = s.cores;
  Train& psi = out.cores;
  move_center(psi, s.canonical_center, static_cast<std::size_t>(lo));
  double threshold = policy.delta;
  if (policy.mode == TruncationPolicy::Mode::kRelative && n > 1)
    threshold = policy.delta * psi[static_cast<std::size_t>(lo)].data.norm() / std::sqrt(static_cast<double>(n - 1));

  Eigen::Index r_new = psi[static_cast<std::size_t>(lo)].left;
  // r_new x (Rs * Rw), column s + Rs * w.
  Eigen::MatrixXd carry = Eigen::MatrixXd::Identity(r_new, r_new);
  for (int k = lo; k <= hi; ++k) {
    const Core& w = m.cores[static_cast<std::size_t>(k)];
    const Core a = psi[static_cast<std::size_t>(k)];
    const Eigen::Index rs_l = a.left, rs_r = a.right, rw_l = w.left, rw_r = w.right;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(r_new * 2, rs_r * rw_r);
    for (Eigen::Index wl = 0; wl < rw_l; ++wl) {
      auto cw = carry.middleCols(rs_l * wl, rs_l);
      for (Eigen::Index in = 0; in < 2; ++in) {
        bool any = false;
        for (Eigen::Index o = 0; o < 2 && !any; ++o)
          for (Eigen::Index wr = 0; wr < rw_r && !any; ++wr) any = w(wl, o + 2 * in, wr) != 0.0;
        if (!any) continue;
        Eigen::MatrixXd d = cw * a.slice(in);
        for (Eigen::Index o = 0; o < 2; ++o)
          for (Eigen::Index wr = 0; wr < rw_r; ++wr) {
            double c = w(wl, o + 2 * in, wr);
            if (c != 0.0) t.block(r_new * o, rs_r * wr, r_new, rs_r).noalias() += c * d;
          }
      }
    }
    if (k == hi) {
      // The MPO bond closes here (rw_r == 1): the block is the new core.
      psi[static_cast<std::size_t>(k)] = Core::from_left_unfolding(t, r_new, 2);
      break;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
    auto [keep, tail] = choose_rank(svd.singularValues(), threshold);
    if (policy.bond_cap > 0 && keep > policy.bond_cap)
      throw BondCapExceeded("zip-up: bond " + std::to_string(k) + " needs rank " + std::to_string(keep) +
                            " above the cap of " + std::to_string(policy.bond_cap));
    if (log) log->record(k, tail);
    psi[static_cast<std::size_t>(k)] = Core::from_left_unfolding(svd.matrixU().leftCols(keep), r_new, 2);
    carry = svd.singularValues().head(keep).asDiagonal() * svd.matrixV().leftCols(keep).transpose();
    r_new = keep;
  }
  for (int k = hi; k > lo; --k) right_orthogonalize(psi, static_cast<std::size_t>(k));
  out.canonical_center = lo;
  return out;
}

double sandwich(const MpsState& a, const Mpo& m, const MpsState& b) {
  const std::size_t n = a.cores.size();
  if (b.cores.size() != n || m.cores.size() != n) throw ContractError("sandwich: qubit counts differ");
  // Environment E(x, y, w) stored column-major as (ra * rb) x R: column w is
  // the ra x rb block E_w. Each site does
  //   X_{w,t} = E_w B_t,  Y_{s,w'} = sum_{w,t} W(w, s + 2t, w') X_{w,t},
  //   E'_{w'} = sum_s A_s^T Y_{s,w'},
  // with the middle step a single matrix product.
  Eigen::MatrixXd env = Eigen::MatrixXd::Ones(1, 1);
  Eigen::MatrixXd x, y, wmat;
  for (std::size_t k = 0; k < n; ++k) {
    const Core& ca = a.cores[k];
    const Core& cw = m.cores[k];
    const Core& cb = b.cores[k];
    const Eigen::Index ra = ca.left, rb = cb.left, rb2 = cb.right, ra2 = ca.right;
    const Eigen::Index rw = cw.left, rw2 = cw.right;
    x.resize(ra * rb2, rw * 2);
    for (Eigen::Index w = 0; w < rw; ++w) {
      Eigen::Map<const Eigen::MatrixXd> e_w(env.col(w).data(), ra, rb);
      for (Eigen::Index t = 0; t < 2; ++t) {
        Eigen::Map<Eigen::MatrixXd> out(x.col(w * 2 + t).data(), ra, rb2);
        out.noalias() = e_w * cb.slice(t);
      }
    }
    wmat.resize(rw * 2, 2 * rw2);  // row w * 2 + t, column s * rw2 + w'
    for (Eigen::Index wr = 0; wr < rw2; ++wr)
      for (Eigen::Index s = 0; s < 2; ++s)
        for (Eigen::Index w = 0; w < rw; ++w)
          for (Eigen::Index t = 0; t < 2; ++t) wmat(w * 2 + t, s * rw2 + wr) = cw(w, s + 2 * t, wr);
    y.noalias() = x * wmat;
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(ra2 * rb2, rw2);
    Eigen::Map<Eigen::MatrixXd> next_flat(next.data(), ra2, rb2 * rw2);
    for (Eigen::Index s = 0; s < 2; ++s) {
      Eigen::Map<const Eigen::MatrixXd> y_s(y.col(s * rw2).data(), ra, rb2 * rw2);
      next_flat.noalias() += ca.slice(s).transpose() * y_s;
    }
    env = std::move(next);
  }
  return env(0, 0);
}

double expectation(const Mpo& m, const MpsState& s) { return sandwich(s, m, s); }

double expectation(const MpoBatch& h, const MpsState& s, unsigned workers) {
  std::vector<double> parts(h.parts.size(), 0.0);
  parallel_blocks(h.parts.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) parts[i] = sandwich(s, h.parts[i], s);
  });
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

}  // namespace hyperion::mps
