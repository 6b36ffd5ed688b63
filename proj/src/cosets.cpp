// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/cosets.hpp"

#include <algorithm>

namespace qfilter {

namespace {

constexpr double kEnumBound = 1e7;

double enumeration_size(std::size_t n, int w_max) {
  double total = 0, c = 1;
  for (int w = 0; w <= w_max && w <= static_cast<int>(n); ++w) {
    total += c;
    c = c * (static_cast<double>(n) - w) / (w + 1);
  }
  return total;
}

// Calls fn(error, weight) for every vector of length n and weight in
// [0, w_max], in increasing weight order.
template <typename Fn>
void for_each_error(std::size_t n, int w_max, Fn&& fn) {
  fn(BitVector(n), 0);
  for (int w = 1; w <= w_max && w <= static_cast<int>(n); ++w) {
    std::vector<std::size_t> idx(w);
    for (int i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      BitVector e(n);
      for (auto i : idx) e.set(i);
      fn(e, w);
      // next combination
      int k = w - 1;
      while (k >= 0 && idx[k] == n - w + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

CosetTable build_coset_table(const BitMatrix& h, int w_max) {
  double required = enumeration_size(h.cols(), w_max);
  if (required > kEnumBound)
    throw FeasibilityError("coset enumeration infeasible", required);

  CosetTable table;
  table.h = h;
  table.w_max = w_max;
  for_each_error(h.cols(), w_max, [&](const BitVector& e, int w) {
    BitVector syn = syndrome(h, e);
    auto it = table.entries.find(syn);
    if (it == table.entries.end()) {
      table.entries.emplace(std::move(syn), CosetEntry{e, w});
    } else if (w == it->second.weight && e.lex_less(it->second.leader)) {
      it->second.leader = e;
    }
  });
  return table;
}

FtReport check_ft_condition(const BitMatrix& h, int t) {
  FtReport report;
  report.t = t;

  // Extend the enumeration until every syndrome of weight <= t has a leader
  // (or the error weight is exhausted), so violations carry real weights.
  int w_max = t;
  CosetTable table = build_coset_table(h, w_max);
  auto all_covered = [&]() {
    bool covered = true;
    for_each_error(h.rows(), t, [&](const BitVector& syn, int) {
      if (covered && !table.find(syn)) covered = false;
    });
    return covered;
  };
  while (!all_covered() && w_max < static_cast<int>(h.cols())) {
    ++w_max;
    if (enumeration_size(h.cols(), w_max) > kEnumBound) break;
    table = build_coset_table(h, w_max);
  }

  for_each_error(h.rows(), t, [&](const BitVector& syn, int ws) {
    const CosetEntry* entry = table.find(syn);
    int lw = entry ? entry->weight : kLeaderUnreachable;
    if (lw > ws)
      report.violations.push_back(FtViolation{syn, ws, lw});
  });
  report.pass = report.violations.empty();
  return report;
}

int effective_weight(const BitVector& e, const CodeSpec& spec) {
  auto words = codewords(spec);  // enforces the k_w bound
  std::size_t best = e.size() + 1;
  for (const auto& c : words)
    best = std::min(best, (e ^ c).weight());
  return static_cast<int>(best);
}

}  // namespace qfilter
