// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Latin-rectangle gate scheduling. The nonzero positions of A are filled
// with time steps 1..N such that no step repeats within a row or a column,
// with N equal to the largest row or column weight. This is a minimal edge
// coloring of the bipartite row/column incidence graph.

#ifndef QFILTER_SCHEDULE_HPP
#define QFILTER_SCHEDULE_HPP

#include <string>
#include <vector>

#include "qfilter/gf2.hpp"

namespace qfilter {

struct ScheduleEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int time = 0;  // 1-based
};

struct Schedule {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int n_steps = 0;  // alphabet size N
  std::vector<ScheduleEntry> entries;  // row-major over the nonzeros of A

  /// Time assigned to (row, col), or 0 if that position carries no entry.
  int time_at(std::size_t row, std::size_t col) const;
};

/// Largest row or column weight of A.
int w_max(const BitMatrix& a);

/// Edge coloring with color-swap augmenting chains; always achieves
/// N = w_max(A) and is deterministic for a given A.
Schedule schedule(const BitMatrix& a);

/// True iff the schedule covers exactly the nonzeros of A, repeats no time
/// step within a row or column, keeps all times in [1, N], and N = w_max(A).
bool validate(const Schedule& sched, const BitMatrix& a);

/// Integer-rectangle rendering with blanks where A is zero.
std::string render_schedule(const Schedule& sched);

}  // namespace qfilter

#endif  // QFILTER_SCHEDULE_HPP
