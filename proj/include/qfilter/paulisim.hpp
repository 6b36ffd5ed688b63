// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pauli-frame fault propagation through circuits, exhaustive k-fault
// scanning, Monte Carlo sampling under a configurable noise model, and
// scaling-exponent fits. Frames compose additively through Clifford gates,
// so the effect of a fault set is the XOR of precomputed single-fault
// effects.

#ifndef QFILTER_PAULISIM_HPP_
#define QFILTER_PAULISIM_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "qfilter/circuit.hpp"
#include "qfilter/codes.hpp"
#include "qfilter/cosets.hpp"
#include "qfilter/gf2.hpp"

namespace qfilter {

// Accumulated X and Z error components per qubit (ancilla register first,
// then verifiers); composition is mask addition mod 2.
struct PauliFrame {
  BitVector x;
  BitVector z;
};

struct PropagateResult {
  BitVector flips;      // one bit per verifier: measurement outcome flipped
  PauliFrame residual;  // final frame over all qubits
};

// Advances a Pauli frame through the circuit time step by time step.
// Conjugation rules: CX maps X_control -> X_control X_target and
// Z_target -> Z_control Z_target; CZ maps X_a -> X_a Z_b and X_b -> Z_a X_b.
// Fault Paulis apply after their location's gate; measurement-location
// faults flip the classical outcome only. `injected_x`, if given, is an
// input X-error on the ancilla register.
PropagateResult propagate(const Circuit& c, const FaultAssignment& faults,
                          const BitVector* injected_x = nullptr);

enum class InjectMode {
  None,
  // Every trial injects a uniformly random nonzero input X-error on the
  // ancilla, modeling the worst case that one preparation failure leaves an
  // error of arbitrary nonzero weight.
  AlwaysRandomNonzero,
};

struct NoiseModel {
  double epsilon = 0.0;
  // Enabled location classes.
  bool gates = true;
  bool idles = true;
  bool preparations = true;
  bool measurements = true;
  // Pauli distribution per class arity: {X, Z, Y} for single-qubit
  // locations, pattern codes 1..15 for two-qubit locations. Must sum to 1.
  std::array<double, 3> dist_1q{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::array<double, 15> dist_2q{1.0 / 15, 1.0 / 15, 1.0 / 15, 1.0 / 15,
                                 1.0 / 15, 1.0 / 15, 1.0 / 15, 1.0 / 15,
                                 1.0 / 15, 1.0 / 15, 1.0 / 15, 1.0 / 15,
                                 1.0 / 15, 1.0 / 15, 1.0 / 15};
  InjectMode inject = InjectMode::None;

  // Depolarizing noise on every location class, no injection.
  static NoiseModel uniform(double eps);
  // The filtering campaign model: failures on preparations, idles and
  // measurements plus a worst-case input error every trial. Two-qubit gate
  // failures are excluded here because their ancilla-side X component acts
  // as a fresh input error, a channel the unconditional injection already
  // covers worst-case.
  static NoiseModel worst_case_filtering(double eps);

  bool class_enabled(LocationClass cls) const;
  double pattern_probability(const Location& loc, unsigned pattern) const;
};

// One flagged event from the exhaustive scan.
struct ScanEvent {
  FaultAssignment faults;
  BitVector injected;  // input x-error, possibly zero
  BitVector residual;  // ancilla x-mask at the output
  int k = 0;           // circuit fault count (injection not included)
  int effective_weight = 0;
  int syndrome_weight = 0;  // weight of H * residual
};

// Aggregate results for all assignments with exactly k circuit faults.
// Three violation conventions are reported rather than choosing one:
//   violations:        effective weight > total failures, counting a nonzero
//                      injection as one failure (the primary convention);
//   excess_events:     effective weight > circuit faults alone, treating the
//                      injected error as free;
//   coset_violations:  effective weight > the weight of the residual's own
//                      syndrome, i.e. the accepted error lands in a coset
//                      whose leader outweighs its syndrome. Impossible for
//                      standard-form networks; the dynamic witness of a bad
//                      check set.
struct ScanResult {
  int k = 0;
  std::uint64_t assignments = 0;  // (fault set, injection) events enumerated
  std::uint64_t accepted = 0;
  std::vector<std::uint64_t> accepted_by_weight;  // index = effective weight
  // Sum of per-assignment pattern probabilities of accepted events under the
  // scan's noise model, split by injected == 0 / != 0; together with the
  // trial-level (1-eps) factors these give the epsilon^k coefficients of the
  // acceptance probability, used to cross-check Monte Carlo estimates.
  std::vector<double> accepted_coeff_plain;
  std::vector<double> accepted_coeff_injected;
  std::vector<ScanEvent> violations;
  std::vector<ScanEvent> excess_events;
  std::vector<ScanEvent> coset_violations;
  std::uint64_t violation_count = 0;
  std::uint64_t excess_count = 0;
  std::uint64_t coset_violation_count = 0;
};

inline constexpr std::uint64_t kScanBound = 100000000;  // 1e8 events
inline constexpr std::size_t kScanEventCap = 64;        // stored per list

// Enumerates every fault assignment with k <= k_max faults over the model's
// enabled locations (all locations and uniform patterns if model is null);
// if inject_arbitrary is set, additionally sweeps every input x-error.
// `spec` must describe the code in the circuit's qubit order. Throws
// FeasibilityError if the event count would exceed kScanBound.
std::vector<ScanResult> exhaustive_scan(const Circuit& c, const CodeSpec& spec,
                                        int k_max, bool inject_arbitrary,
                                        const NoiseModel* model = nullptr);

struct McCounts {
  std::uint64_t trials = 0;
  std::uint64_t rejected = 0;
  std::vector<std::uint64_t> accepted_by_weight;  // index = effective weight

  std::uint64_t accepted() const {
    std::uint64_t s = 0;
    for (auto v : accepted_by_weight) s += v;
    return s;
  }
};

// Independent trials; each enabled location fails with probability epsilon,
// drawing its Pauli from the class distribution. Deterministic for fixed
// (seed, trials): per-trial streams are derived from the seed and the trial
// index alone.
McCounts monte_carlo(const Circuit& c, const CodeSpec& spec,
                     const NoiseModel& model, std::uint64_t trials,
                     std::uint64_t seed);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval for a binomial proportion (default 95%).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

struct ScalePoint {
  double epsilon = 0.0;
  double probability = 0.0;
  int weight = 0;
};

struct WeightFit {
  int weight = 0;
  int n_points = 0;         // points with nonzero probability used in the fit
  bool determinate = false; // false when fewer than 2 usable epsilons
  double slope = 0.0;       // fitted exponent s
  double prefactor = 0.0;   // fitted a_e
};

struct ScalingReport {
  std::vector<WeightFit> fits;  // ordered by weight
};

// Per-weight log-log least-squares fit of probability against epsilon,
// using only points with nonzero probability.
ScalingReport fit_scaling(const std::vector<ScalePoint>& points);

}  // namespace qfilter

#endif  // QFILTER_PAULISIM_HPP_
