// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/schedule.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace qfilter {

int Schedule::time_at(std::size_t row, std::size_t col) const {
  for (const auto& e : entries)
    if (e.row == row && e.col == col) return e.time;
  return 0;
}

int w_max(const BitMatrix& a) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    best = std::max(best, a.row_weight(i));
  for (std::size_t j = 0; j < a.cols(); ++j)
    best = std::max(best, a.col_weight(j));
  return static_cast<int>(best);
}

Schedule schedule(const BitMatrix& a) {
  Schedule sched;
  sched.rows = a.rows();
  sched.cols = a.cols();
  sched.n_steps = w_max(a);
  const int n = sched.n_steps;
  if (n == 0) return sched;

  // row_color[i][c] / col_color[j][c]: index into sched.entries of the edge
  // at row i / column j carrying color c (1-based), or -1.
  std::vector<std::vector<int>> row_color(a.rows(), std::vector<int>(n + 1, -1));
  std::vector<std::vector<int>> col_color(a.cols(), std::vector<int>(n + 1, -1));

  auto first_free = [n](const std::vector<int>& used) {
    for (int c = 1; c <= n; ++c)
      if (used[c] < 0) return c;
    return 0;
  };

  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;

      int assigned = 0;
      for (int c = 1; c <= n; ++c)
        if (row_color[i][c] < 0 && col_color[j][c] < 0) {
          assigned = c;
          break;
        }
      if (!assigned) {
        // alpha is free at the row, beta at the column. The alpha/beta
        // alternating chain from the column ends before reaching row i;
        // swapping its colors frees alpha at both endpoints.
        int alpha = first_free(row_color[i]);
        int beta = first_free(col_color[j]);
        assert(alpha && beta && alpha != beta);

        std::vector<int> chain;
        bool at_col = true;
        std::size_t node = j;
        int want = alpha;
        while (true) {
          int e = at_col ? col_color[node][want] : row_color[node][want];
          if (e < 0) break;
          chain.push_back(e);
          node = at_col ? sched.entries[e].row : sched.entries[e].col;
          at_col = !at_col;
          want = want == alpha ? beta : alpha;
        }
        assert(!(at_col == false && node == i));

        for (int e : chain) {
          const ScheduleEntry& en = sched.entries[e];
          row_color[en.row][en.time] = -1;
          col_color[en.col][en.time] = -1;
        }
        for (int e : chain) {
          ScheduleEntry& en = sched.entries[e];
          en.time = en.time == alpha ? beta : alpha;
          row_color[en.row][en.time] = e;
          col_color[en.col][en.time] = e;
        }
        assigned = alpha;
      }

      int edge_idx = static_cast<int>(sched.entries.size());
      sched.entries.push_back({i, j, assigned});
      row_color[i][assigned] = edge_idx;
      col_color[j][assigned] = edge_idx;
    }
  }
  return sched;
}

bool validate(const Schedule& sched, const BitMatrix& a) {
  if (sched.rows != a.rows() || sched.cols != a.cols()) return false;
  if (sched.n_steps != w_max(a)) return false;

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::set<std::pair<std::size_t, int>> row_used, col_used;
  for (const auto& e : sched.entries) {
    if (e.row >= a.rows() || e.col >= a.cols()) return false;
    if (!a.get(e.row, e.col)) return false;
    if (e.time < 1 || e.time > sched.n_steps) return false;
    if (!seen.insert({e.row, e.col}).second) return false;
    if (!row_used.insert({e.row, e.time}).second) return false;
    if (!col_used.insert({e.col, e.time}).second) return false;
  }

  std::size_t nonzeros = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) nonzeros += a.row_weight(i);
  return sched.entries.size() == nonzeros;
}

std::string render_schedule(const Schedule& sched) {
  std::size_t width = 1;
  for (int v = sched.n_steps; v >= 10; v /= 10) ++width;

  std::string out;
  for (std::size_t i = 0; i < sched.rows; ++i) {
    std::string line;
    for (std::size_t j = 0; j < sched.cols; ++j) {
      if (j) line += ' ';
      int t = sched.time_at(i, j);
      std::string cell = t ? std::to_string(t) : std::string();
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace qfilter
