// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense GF(2) vectors and matrices with the linear-algebra kernels the rest
// of the pipeline is built on: rank, reduced row echelon form, the
// standard-form transformation H -> (A|I) with column-permutation tracking,
// syndrome computation and nullspace bases. All types are plain values;
// dimensions up to 256 bits are supported.

#ifndef QFILTER_GF2_HPP
#define QFILTER_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qfilter {

inline constexpr std::size_t kMaxBits = 256;

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length)
      : len_(length), words_((length + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters, e.g. "10011".
  static BitVector from_string(std::string_view bits);
  /// Builds a vector of `length` bits from the low bits of `mask`.
  static BitVector from_mask(std::uint64_t mask, std::size_t length);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    if (v)
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool any() const;
  /// GF(2) inner product: parity of the AND of the two vectors.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }
  bool operator==(const BitVector&) const = default;

  /// Lexicographic order on the bit string b0 b1 ... b_{n-1}.
  bool lex_less(const BitVector& other) const;

  /// Low 64 bits (bit i of the result is element i). Only meaningful for
  /// vectors of at most 64 bits.
  std::uint64_t low64() const { return words_.empty() ? 0 : words_[0]; }

  std::string str() const;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

/// Dense binary matrix stored as a list of equal-length rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Rows given as strings of '0'/'1', all the same length.
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_data_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) {
    rows_data_[r].set(c, v);
  }
  const BitVector& row(std::size_t r) const { return rows_data_[r]; }
  BitVector& row(std::size_t r) { return rows_data_[r]; }
  void append_row(BitVector row);

  std::size_t row_weight(std::size_t r) const { return rows_data_[r].weight(); }
  std::size_t col_weight(std::size_t c) const;

  /// Matrix-vector product M . v over GF(2); v must have cols() bits.
  BitVector multiply(const BitVector& v) const;

  BitMatrix transposed() const;
  /// Returns the matrix with columns moved so that original column c lands at
  /// position perm[c]; perm must be a bijection on {0..cols-1}.
  BitMatrix permute_cols(const std::vector<std::size_t>& perm) const;
  /// Horizontal concatenation (this | right); row counts must match.
  BitMatrix concat_cols(const BitMatrix& right) const;

  bool operator==(const BitMatrix&) const = default;

  std::string str() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_data_;
};

/// Reduced row echelon form with zero rows dropped; pivots are strictly
/// increasing column indices, one per remaining row.
struct RrefResult {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Result of bringing a check matrix to the standard form (A | I_r).
///
/// Pivot columns are chosen scanning right-to-left, so the identity block
/// stays in place (perm = identity) whenever the last r columns of the input
/// are linearly independent -- in particular for inputs already of shape
/// (A|I). The permutation maps original column c to position perm[c] in the
/// (A|I) layout.
struct StandardForm {
  BitMatrix a;                      // r x (n - r)
  std::vector<std::size_t> perm;    // original column -> standard-form position
  std::size_t r = 0;
  std::size_t n = 0;
  bool rank_deficient = false;      // input rows were not independent

  /// The standard-form matrix (A | I_r) itself.
  BitMatrix matrix() const;
  /// Inverse map: standard-form position -> original column.
  std::vector<std::size_t> inverse_perm() const;
};

std::size_t gf2_rank(const BitMatrix& m);
RrefResult rref(const BitMatrix& m);
StandardForm to_standard_form(const BitMatrix& h);

/// H . e over GF(2). Throws std::invalid_argument on a length mismatch.
BitVector syndrome(const BitMatrix& h, const BitVector& e);

/// Basis of { v : H . v = 0 }, of size cols - rank.
std::vector<BitVector> nullspace(const BitMatrix& h);

/// True iff v lies in the row space of m.
bool in_row_space(const BitMatrix& m, const BitVector& v);

// Shared matrix text format: one row per line of '0'/'1' characters;
// whitespace inside a row is ignored, blank lines and '#' comments skipped.
BitMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const BitMatrix& m);

}  // namespace qfilter

#endif  // QFILTER_GF2_HPP
