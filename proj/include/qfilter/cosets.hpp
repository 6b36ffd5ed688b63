// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force syndrome/coset analysis: coset-leader tables, the
// fault-tolerance condition (every syndrome of weight <= t reachable by an
// error of no larger weight), and the effective weight of an error modulo
// the codeword stabilizer.

#ifndef QFILTER_COSETS_HPP
#define QFILTER_COSETS_HPP

#include <climits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qfilter/codes.hpp"
#include "qfilter/gf2.hpp"

namespace qfilter {

/// Thrown when an enumeration would exceed its feasibility bound; carries the
/// number of items the request would have required.
class FeasibilityError : public std::runtime_error {
 public:
  FeasibilityError(const std::string& what, double required)
      : std::runtime_error(what), required_(required) {}
  double required() const { return required_; }

 private:
  double required_ = 0;
};

struct CosetEntry {
  BitVector leader;
  int weight = 0;
};

/// Minimal-weight representatives for every syndrome reachable by an error of
/// weight <= w_max. Syndromes not reachable within the bound are absent;
/// absence means "leader weight > w_max". Ties at equal weight are broken by
/// lexicographic order of the error vector.
struct CosetTable {
  BitMatrix h;
  int w_max = 0;
  std::unordered_map<BitVector, CosetEntry, BitVectorHash> entries;

  const CosetEntry* find(const BitVector& syn) const {
    auto it = entries.find(syn);
    return it == entries.end() ? nullptr : &it->second;
  }
};

/// Enumeration bound: sum over w <= w_max of C(n, w) must stay below 1e7.
CosetTable build_coset_table(const BitMatrix& h, int w_max);

/// Leader weight recorded for a syndrome that no enumerated error produced.
inline constexpr int kLeaderUnreachable = INT_MAX;

struct FtViolation {
  BitVector syndrome;
  int syndrome_weight = 0;
  int leader_weight = 0;  // kLeaderUnreachable if no error produces it
};

struct FtReport {
  int t = 0;
  bool pass = false;
  std::vector<FtViolation> violations;  // weight-then-lex order
};

/// Checks that every syndrome of weight <= t has a coset leader of weight at
/// most the syndrome weight. The enumeration extends past t if needed to pin
/// down leader weights for the report.
FtReport check_ft_condition(const BitMatrix& h, int t);

/// Minimal weight of e + c over codewords c of C_w: the weight of the error's
/// action on the codeword state, accounting for degeneracy.
int effective_weight(const BitVector& e, const CodeSpec& spec);

}  // namespace qfilter

#endif  // QFILTER_COSETS_HPP
