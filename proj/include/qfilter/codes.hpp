// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Codeword-state specifications: the classical code C_w whose equal
// superposition forms the logical zero state, together with its full check
// matrix H and the target correctable weight t.

#ifndef QFILTER_CODES_HPP
#define QFILTER_CODES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qfilter/gf2.hpp"

namespace qfilter {

/// A codeword-state specification.
///
/// `gw` generates the classical code C_w (k_w x n); `h` is a full check
/// matrix for it (r x n, kernel exactly C_w), so k_w + r = n and
/// gw . h^T = 0.
struct CodeSpec {
  std::string name;
  std::size_t n = 0;
  BitMatrix gw;
  BitMatrix h;
  int t = 0;

  std::size_t kw() const { return gw.rows(); }
  std::size_t r() const { return h.rows(); }
};

/// Built-in specs: "rep5" (|00000> + |11111>, t = 2, H given as the natural
/// two-neighbour parity chain) and "steane7" (the [7,3] dual-Hamming code
/// underlying the [[7,1,3]] logical zero, t = 1).
CodeSpec builtin_code(const std::string& name);
std::vector<std::string> builtin_code_names();

/// Validates all CodeSpec invariants; throws std::invalid_argument with a
/// description on failure. With allow_redundant, dependent rows of G or H
/// are dropped instead of rejected.
CodeSpec validate_code(CodeSpec spec, bool allow_redundant = false);

// Code file format: header lines `name <string>` and `t <int>`, then a `G:`
// block and an `H:` block of matrix rows. '#' comments and blank lines are
// ignored throughout.
CodeSpec load_code(const std::string& path, bool allow_redundant = false);
CodeSpec parse_code(std::istream& in, bool allow_redundant = false);
std::string format_code(const CodeSpec& spec);

/// All 2^{k_w} words of C_w (enumeration bound k_w <= 20).
std::vector<BitVector> codewords(const CodeSpec& spec);

/// Applies a column permutation (original column c -> position perm[c]) to
/// both G and H, relabeling the qubits of the code.
CodeSpec permute_code_columns(const CodeSpec& spec,
                              const std::vector<std::size_t>& perm);

}  // namespace qfilter

#endif  // QFILTER_CODES_HPP
