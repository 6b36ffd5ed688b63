// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Timed quantum-circuit representation over an ancilla register and a
// verification register, with emitters for the preparation (G) network, the
// scheduled standard-form verification (H) network, and a deliberately naive
// verification network used for comparison.

#ifndef QFILTER_CIRCUIT_HPP_
#define QFILTER_CIRCUIT_HPP_

#include <array>
#include <string>
#include <vector>

#include "qfilter/codes.hpp"
#include "qfilter/gf2.hpp"
#include "qfilter/schedule.hpp"

namespace qfilter {

enum class GateKind {
  PrepZero,  // reset/prepare |0> (single qubit, time 0)
  PrepPlus,  // prepare |+> (single qubit, time 0)
  CX,        // controlled-X, q0 = control, q1 = target
  CZ,        // controlled-Z, symmetric; emitted as (verifier, ancilla)
  MeasX,     // X-basis measurement; occupies t_meas steps starting at `time`
};

struct Gate {
  int time = 0;
  GateKind kind = GateKind::PrepZero;
  int q0 = 0;
  int q1 = -1;  // -1 for single-qubit gates

  bool two_qubit() const {
    return kind == GateKind::CX || kind == GateKind::CZ;
  }
};

// Qubits 0..n_ancilla-1 are ancilla (codeword) qubits; qubits
// n_ancilla..n_ancilla+n_verifier-1 are verification qubits. Preparations sit
// at time 0; all other gates occupy times 1..duration, and a MeasX occupies
// [time, time + t_meas - 1] and is the final event on its qubit.
struct Circuit {
  int n_ancilla = 0;
  int n_verifier = 0;
  int t_meas = 1;
  int duration = 0;
  std::vector<Gate> gates;
  // Original code-column index carried by each ancilla qubit. Emitters that
  // work on column-permuted matrices record the permutation here so reports
  // can refer to the caller's qubit labels. Identity by default.
  std::vector<int> ancilla_labels;

  int n_qubits() const { return n_ancilla + n_verifier; }
  bool is_verifier(int q) const { return q >= n_ancilla; }
};

enum class LocationClass {
  Preparation,  // a PrepZero/PrepPlus gate
  Gate,         // a CX/CZ gate
  Idle,         // a resting (qubit, time) slot
  Measurement,  // a MeasX gate; a fault here flips the classical outcome
};

// A fault site: every gate event plus every idle slot. Idle slots are
// first-class sites because resting qubits are charged per time step.
struct Location {
  int index = 0;
  int time = 0;
  LocationClass cls = LocationClass::Idle;
  int gate_index = -1;  // into Circuit::gates, or -1 for idles
  std::array<int, 2> qubits{-1, -1};
  int arity = 1;
};

// Number of distinct non-identity fault patterns at a location: 15 for
// two-qubit gates, 3 (X, Z, Y) for single-qubit gates and idles, and 1
// (outcome flip) for measurements.
int pattern_count(const Location& loc);

// A non-identity Pauli pattern at one location. For single-qubit locations
// the pattern is 1 = X, 2 = Z, 3 = Y. For two-qubit locations bits 0/1 are
// the X/Z components on qubits[0] and bits 2/3 those on qubits[1], giving
// codes 1..15. For measurement locations the only pattern is 1 (flip).
struct Fault {
  int location = 0;
  unsigned pattern = 1;
};

using FaultAssignment = std::vector<Fault>;

// Builds the verification network for a code whose check matrix is literally
// (A|I): r verifiers prepared |+> at time 0, CZ(verifier_i, ancilla_j) at the
// scheduled time for every nonzero A entry, simultaneous CZs onto the
// identity block at time N+1, and MeasX on every verifier, for a total
// duration of N + 1 + t_meas. A code with r = 0 yields an empty network.
// Throws std::invalid_argument if H is not in standard form or the schedule
// does not match A.
Circuit emit_verification(const CodeSpec& spec, const Schedule& sched,
                          int t_meas);

// Builds the preparation network: the pivot qubit of each generator is
// prepared |+>, the rest |0>, and CX gates fan each generator out to its
// non-pivot support, scheduled to depth w_max(B). Throws
// std::invalid_argument for rank-deficient generators.
Circuit emit_preparation(const CodeSpec& spec);

// Builds a naive verification network directly from H as given: one verifier
// per row, CZ gates applied sequentially in column order, rows packed
// greedily subject to qubit-disjointness, each verifier measured right after
// its last CZ.
Circuit emit_naive_verification(const BitMatrix& h, int t_meas);

// Deterministic enumeration of all fault sites: per time step, gate events in
// emission order followed by idle slots in qubit order. A qubit exists from
// time 0 if it is explicitly prepared, else from time 1, and until the end of
// its measurement if it has one, else until `duration`.
std::vector<Location> locations(const Circuit& c);

// True iff no qubit participates in two events at one time step (measurement
// windows included).
bool check_no_collisions(const Circuit& c);

// Structured text serialization; parse(serialize(c)) is byte-stable.
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

// Standard-form pipeline bundle: the column permutation, the permuted code
// with H replaced by its literal (A|I) form, the latin-rectangle schedule of
// A, and the emitted verification circuit (ancilla_labels = original column
// of each qubit).
struct StandardPlan {
  StandardForm form;
  CodeSpec code;
  Schedule sched;
  Circuit circuit;
};

StandardPlan plan_standard_verification(const CodeSpec& spec, int t_meas);

}  // namespace qfilter

#endif  // QFILTER_CIRCUIT_HPP_
