// Copyright 2026 The nmpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmpt/process_tensor.hpp"

namespace nmpt {

ProcessTensor::ProcessTensor(std::vector<SlotBasis> slots, int out_dim, CMatrix matrix,
                             std::vector<CMatrix> states)
    : slots_(std::move(slots)),
      out_dim_(out_dim),
      matrix_(std::move(matrix)),
      states_(std::move(states)) {}

std::size_t ProcessTensor::flat_index(const std::vector<int>& multi) const {
  if (multi.size() != slots_.size()) throw DimensionError("flat_index: wrong arity");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    const int n = slots_[j].size();
    if (multi[j] < 0 || multi[j] >= n) throw DimensionError("flat_index: index out of range");
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(multi[j]);
  }
  return idx;
}

namespace {

// Σ_μ Δ_level^{μ ᵀ} ⊗ (inner tensor for prefix·n + μ), built from the last slot
// outwards so each level only touches matrices of its own size.
CMatrix build_level(const std::vector<SlotBasis>& slots, const std::vector<CMatrix>& states,
                    std::size_t level, std::size_t prefix) {
  if (level == slots.size()) return states[prefix];
  const auto& slot = slots[level];
  const std::size_t n = static_cast<std::size_t>(slot.size());
  CMatrix acc;
  for (std::size_t mu = 0; mu < n; ++mu) {
    const CMatrix inner = build_level(slots, states, level + 1, prefix * n + mu);
    const CMatrix term = kron(slot.duals.duals[mu].transpose(), inner);
    if (mu == 0) {
      acc = term;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace

ProcessTensor assemble(std::vector<SlotBasis> slots, std::vector<CMatrix> states,
                       int out_dim) {
  if (slots.empty()) throw ConfigError("assemble: no slots");
  std::size_t combos = 1;
  for (const auto& s : slots) {
    if (s.size() == 0 || static_cast<int>(s.duals.duals.size()) != s.size())
      throw ConfigError("assemble: slot without basis or duals");
    combos *= static_cast<std::size_t>(s.size());
  }
  if (states.size() != combos)
    throw ConfigError("assemble: expected " + std::to_string(combos) + " states, got " +
                      std::to_string(states.size()));
  for (const auto& st : states)
    if (st.rows() != out_dim || st.cols() != out_dim)
      throw DimensionError("assemble: state dimension mismatch");
  CMatrix m = build_level(slots, states, 0, 0);
  return ProcessTensor(std::move(slots), out_dim, std::move(m), std::move(states));
}

CMatrix contract(const ProcessTensor& pt, const std::vector<CMatrix>& choi_states) {
  if (choi_states.size() != pt.slots().size())
    throw DimensionError("contract: " + std::to_string(choi_states.size()) +
                         " controls for " + std::to_string(pt.slots().size()) + " slots");
  CMatrix t = pt.matrix();
  for (std::size_t j = 0; j < choi_states.size(); ++j) {
    const CMatrix& ctl = choi_states[j];
    const Eigen::Index m = pt.slots()[j].dim();
    if (ctl.rows() != m || ctl.cols() != m) throw DimensionError("contract: control dimension mismatch");
    const Eigen::Index rest = t.rows() / m;
    CMatrix next = CMatrix::Zero(rest, rest);
    // tr_j[(Aᵀ ⊗ I) T] = Σ_ab A(a,b) T_ab
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b)
        if (ctl(a, b) != Complex(0.0)) next += ctl(a, b) * t.block(a * rest, b * rest, rest, rest);
    t = std::move(next);
  }
  return t;
}

CMatrix contract(const ProcessTensor& pt, const ControlSequence& seq) {
  std::vector<CMatrix> chois;
  chois.reserve(seq.size());
  for (const auto& s : seq) chois.push_back(s.channel.choi_state());
  return contract(pt, chois);
}

std::vector<Complex> expansion_coefficients(const SlotBasis& slot, const CMatrix& choi_state) {
  std::vector<Complex> out;
  out.reserve(slot.duals.duals.size());
  for (const auto& d : slot.duals.duals) out.push_back((choi_state * d).trace());
  return out;
}

CMatrix contract_by_expansion(const ProcessTensor& pt, const std::vector<CMatrix>& choi_states) {
  if (choi_states.size() != pt.slots().size()) throw DimensionError("contract: slot mismatch");
  std::vector<std::vector<Complex>> alpha;
  for (std::size_t j = 0; j < choi_states.size(); ++j)
    alpha.push_back(expansion_coefficients(pt.slots()[j], choi_states[j]));
  CMatrix out = CMatrix::Zero(pt.out_dim(), pt.out_dim());
  const std::size_t k = alpha.size();
  std::vector<int> idx(k, 0);
  for (std::size_t flat = 0; flat < pt.states().size(); ++flat) {
    Complex w(1.0);
    for (std::size_t j = 0; j < k; ++j) w *= alpha[j][static_cast<std::size_t>(idx[j])];
    out += w * pt.states()[flat];
    for (std::size_t j = k; j-- > 0;) {
      if (++idx[j] < pt.slots()[j].size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

CMatrix SpanDecomposition::choi_state() const {
  CMatrix c = CMatrix::Zero(4, 4);
  for (std::size_t i = 0; i < unitaries.size(); ++i)
    c += weights[i] * unitary_choi_state(unitaries[i]);
  return c;
}

const SpanDecomposition& depolarizing_in_span() {
  static const SpanDecomposition r = [] {
    SpanDecomposition s;
    std::vector<CMatrix> kraus;
    for (int p = 0; p < 4; ++p) {
      s.unitaries.push_back(pauli(p));
      s.weights.push_back(0.25);
      kraus.push_back(0.5 * pauli(p));
    }
    s.channel = QuantumChannel::from_kraus(kraus);
    return s;
  }();
  return r;
}

}  // namespace nmpt
