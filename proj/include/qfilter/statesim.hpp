// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense statevector simulator for small circuits (<= 12 qubits). Serves as
// the ground-truth oracle for circuit semantics, codeword preparation,
// degeneracy, and Pauli-frame cross-checks. Measurement outcomes are
// reported (as expectations), never sampled, so results are deterministic.

#ifndef QFILTER_STATESIM_HPP_
#define QFILTER_STATESIM_HPP_

#include <complex>
#include <vector>

#include "qfilter/circuit.hpp"
#include "qfilter/codes.hpp"
#include "qfilter/gf2.hpp"

namespace qfilter {

inline constexpr int kMaxSimQubits = 12;
inline constexpr double kPhaseTol = 1e-8;
inline constexpr double kNormTol = 1e-10;

// Qubit q is bit q of the amplitude index (qubit 0 = least significant bit).
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>

  int n_qubits() const { return n_qubits_; }
  const std::vector<std::complex<double>>& amplitudes() const {
    return amps_;
  }
  std::complex<double>& amplitude(std::size_t index) { return amps_[index]; }

  void apply_h(int q);
  void apply_x(int q);
  void apply_z(int q);
  void apply_y(int q);
  void apply_cx(int control, int target);
  void apply_cz(int a, int b);
  // pattern: 1 = X, 2 = Z, 3 = Y.
  void apply_pauli(int q, unsigned pattern);
  // Applies X^x Z^z as (-1)^(u.z) |u ^ x>; equals the per-qubit Pauli product
  // up to global phase.
  void apply_pauli_masks(const BitVector& x_mask, const BitVector& z_mask);

  double norm() const;
  std::complex<double> inner(const StateVector& other) const;
  double x_expectation(int q) const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

// True iff a = e^{i theta} b for some theta, within tol.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol = kPhaseTol);

// Uniform-amplitude superposition over all codewords of the code.
StateVector reference_codeword(const CodeSpec& spec);

struct VerifierReading {
  double x_expectation = 1.0;  // of the reported outcome (flip faults folded in)
  bool deterministic = true;   // |<X>| = 1 within tolerance
  int parity = 1;              // +1 / -1; sign of x_expectation
};

struct RunStateResult {
  StateVector state;  // final pre-measurement state; MeasX does not collapse
  std::vector<VerifierReading> readings;  // one per verifier, in order
};

// Applies gates in time order with the given fault Paulis inserted after the
// gate (or at the idle slot) of their location; measurement-location faults
// flip the reported outcome classically. If ancilla_in is given it replaces
// |0...0> on the ancilla register. Throws if the circuit exceeds
// kMaxSimQubits or a fault references an invalid location/pattern.
RunStateResult run_state(const Circuit& c, const FaultAssignment& faults = {},
                         const StateVector* ancilla_in = nullptr);

}  // namespace qfilter

#endif  // QFILTER_STATESIM_HPP_
