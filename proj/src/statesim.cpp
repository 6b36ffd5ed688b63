// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/statesim.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qfilter {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxSimQubits)
    throw std::invalid_argument("statevector limited to 12 qubits");
  amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amps_[0] = 1.0;
}

void StateVector::apply_h(int q) {
  const std::size_t bit = std::size_t{1} << q;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const auto a0 = amps_[i];
    const auto a1 = amps_[i | bit];
    amps_[i] = (a0 + a1) * inv_sqrt2;
    amps_[i | bit] = (a0 - a1) * inv_sqrt2;
  }
}

void StateVector::apply_x(int q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
}

void StateVector::apply_z(int q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & bit) amps_[i] = -amps_[i];
}

void StateVector::apply_y(int q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const auto a0 = amps_[i];
    const auto a1 = amps_[i | bit];
    amps_[i] = -kI * a1;
    amps_[i | bit] = kI * a0;
  }
}

void StateVector::apply_cx(int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
}

void StateVector::apply_cz(int a, int b) {
  const std::size_t abit = std::size_t{1} << a;
  const std::size_t bbit = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & abit) && (i & bbit)) amps_[i] = -amps_[i];
}

void StateVector::apply_pauli(int q, unsigned pattern) {
  switch (pattern) {
    case 1: apply_x(q); break;
    case 2: apply_z(q); break;
    case 3: apply_y(q); break;
    default: throw std::invalid_argument("bad single-qubit Pauli pattern");
  }
}

void StateVector::apply_pauli_masks(const BitVector& x_mask,
                                    const BitVector& z_mask) {
  const std::uint64_t x = x_mask.low64();
  const std::uint64_t z = z_mask.low64();
  std::vector<std::complex<double>> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const int sign = std::popcount(i & z) & 1 ? -1 : 1;
    out[i ^ x] = static_cast<double>(sign) * amps_[i];
  }
  amps_ = std::move(out);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::complex<double> StateVector::inner(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("inner product of unequal registers");
  std::complex<double> s{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i)
    s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

double StateVector::x_expectation(int q) const {
  const std::size_t bit = std::size_t{1} << q;
  double s = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    s += (std::conj(amps_[i]) * amps_[i ^ bit]).real();
  return s;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol) {
  if (a.n_qubits() != b.n_qubits()) return false;
  return std::abs(a.inner(b)) >= 1.0 - tol;
}

StateVector reference_codeword(const CodeSpec& spec) {
  if (spec.n > static_cast<std::size_t>(kMaxSimQubits))
    throw std::invalid_argument("reference_codeword limited to 12 qubits");
  const auto words = codewords(spec);
  StateVector state(static_cast<int>(spec.n));
  state.amplitude(0) = 0.0;
  const double amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
  for (const auto& w : words)
    state.amplitude(static_cast<std::size_t>(w.low64())) = amp;
  return state;
}

RunStateResult run_state(const Circuit& c, const FaultAssignment& faults,
                         const StateVector* ancilla_in) {
  if (c.n_qubits() > kMaxSimQubits)
    throw std::invalid_argument("circuit exceeds the 12-qubit simulator limit");

  StateVector state(c.n_qubits());
  if (ancilla_in != nullptr) {
    if (ancilla_in->n_qubits() != c.n_ancilla)
      throw std::invalid_argument("ancilla input register size mismatch");
    state.amplitude(0) = 0.0;
    for (std::size_t i = 0; i < ancilla_in->amplitudes().size(); ++i)
      state.amplitude(i) = ancilla_in->amplitudes()[i];
  }

  const auto locs = locations(c);
  // Faults grouped by location, validated up front.
  std::vector<unsigned> pattern_at(locs.size(), 0);
  for (const auto& f : faults) {
    if (f.location < 0 || f.location >= static_cast<int>(locs.size()))
      throw std::invalid_argument("fault references an invalid location");
    const auto& loc = locs[f.location];
    if (f.pattern < 1 ||
        f.pattern > static_cast<unsigned>(loc.arity == 2 ? 15 : 3) ||
        (loc.cls == LocationClass::Measurement && f.pattern != 1))
      throw std::invalid_argument("fault pattern out of range");
    if (pattern_at[f.location] != 0)
      throw std::invalid_argument("duplicate fault location");
    pattern_at[f.location] = f.pattern;
  }

  std::vector<bool> meas_flip(c.n_verifier, false);

  for (int t = 0; t <= c.duration; ++t) {
    for (const auto& g : c.gates) {
      if (g.time != t) continue;
      switch (g.kind) {
        case GateKind::PrepZero:
          break;  // fresh qubits start in |0>
        case GateKind::PrepPlus:
          state.apply_h(g.q0);
          break;
        case GateKind::CX:
          state.apply_cx(g.q0, g.q1);
          break;
        case GateKind::CZ:
          state.apply_cz(g.q0, g.q1);
          break;
        case GateKind::MeasX:
          break;  // reported at the end, never collapsed
      }
    }
    for (const auto& loc : locs) {
      if (loc.time != t || pattern_at[loc.index] == 0) continue;
      const unsigned p = pattern_at[loc.index];
      if (loc.cls == LocationClass::Measurement) {
        meas_flip[loc.qubits[0] - c.n_ancilla] = true;
        continue;
      }
      if (unsigned p0 = p & 3u) state.apply_pauli(loc.qubits[0], p0);
      if (loc.arity == 2)
        if (unsigned p1 = (p >> 2) & 3u) state.apply_pauli(loc.qubits[1], p1);
    }
  }

  RunStateResult result{std::move(state), {}};
  result.readings.resize(c.n_verifier);
  for (int i = 0; i < c.n_verifier; ++i) {
    double x = result.state.x_expectation(c.n_ancilla + i);
    if (meas_flip[i]) x = -x;
    VerifierReading& r = result.readings[i];
    r.x_expectation = x;
    r.deterministic = std::abs(std::abs(x) - 1.0) <= kPhaseTol;
    r.parity = x >= 0.0 ? 1 : -1;
  }
  return result;
}

}  // namespace qfilter
