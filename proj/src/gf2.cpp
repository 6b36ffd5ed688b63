// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qfilter {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string must contain only '0'/'1'");
  }
  return v;
}

BitVector BitVector::from_mask(std::uint64_t mask, std::size_t length) {
  if (length > 64) throw std::invalid_argument("from_mask limited to 64 bits");
  BitVector v(length);
  if (!v.words_.empty())
    v.words_[0] = length == 64 ? mask : (mask & ((std::uint64_t{1} << length) - 1));
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += std::popcount(word);
  return w;
}

bool BitVector::any() const {
  for (auto word : words_)
    if (word) return true;
  return false;
}

bool BitVector::dot(const BitVector& other) const {
  if (len_ != other.len_)
    throw std::invalid_argument("dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1u;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (len_ != other.len_)
    throw std::invalid_argument("xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::lex_less(const BitVector& other) const {
  if (len_ != other.len_)
    throw std::invalid_argument("lex_less: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff) {
      // The lowest differing bit is the earliest position in the string.
      return !(words_[i] >> std::countr_zero(diff) & 1u);
    }
  }
  return false;
}

std::string BitVector::str() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  // FNV-1a over the packed words plus the length.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(v.size());
  std::size_t words = (v.size() + 63) / 64;
  for (std::size_t i = 0; i < words; ++i) {
    std::uint64_t w = 0;
    for (std::size_t b = 0; b < 64 && i * 64 + b < v.size(); ++b)
      w |= std::uint64_t{v.get(i * 64 + b)} << b;
    mix(w);
  }
  return static_cast<std::size_t>(h);
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
  if (cols > kMaxBits)
    throw std::invalid_argument("matrix width exceeds 256 bits");
  rows_data_.assign(rows, BitVector(cols));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  BitMatrix m;
  for (auto r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  BitMatrix m;
  for (const auto& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (rows_data_.empty()) {
    cols_ = row.size();
    if (cols_ > kMaxBits)
      throw std::invalid_argument("matrix width exceeds 256 bits");
  } else if (row.size() != cols_) {
    throw std::invalid_argument("matrix rows must all have the same length");
  }
  rows_data_.push_back(std::move(row));
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (const auto& r : rows_data_) w += r.get(c);
  return w;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("multiply: dimension mismatch");
  BitVector out(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    if (rows_data_[i].dot(v)) out.set(i);
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

BitMatrix BitMatrix::permute_cols(const std::vector<std::size_t>& perm) const {
  if (perm.size() != cols_)
    throw std::invalid_argument("permute_cols: permutation size mismatch");
  BitMatrix out(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) out.set(i, perm[j]);
  return out;
}

BitMatrix BitMatrix::concat_cols(const BitMatrix& right) const {
  if (rows() != right.rows())
    throw std::invalid_argument("concat_cols: row count mismatch");
  BitMatrix out(rows(), cols_ + right.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) out.set(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j)
      if (right.get(i, j)) out.set(i, cols_ + j);
  }
  return out;
}

std::string BitMatrix::str() const {
  std::string s;
  for (const auto& r : rows_data_) {
    s += r.str();
    s += '\n';
  }
  return s;
}

std::size_t gf2_rank(const BitMatrix& m) { return rref(m).pivots.size(); }

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < rows.size(); ++col) {
    std::size_t sel = pr;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != pr && rows[i].get(col)) rows[i] ^= rows[pr];
    pivots.push_back(col);
    ++pr;
  }

  RrefResult out;
  out.pivots = std::move(pivots);
  for (std::size_t i = 0; i < out.pivots.size(); ++i)
    out.reduced.append_row(std::move(rows[i]));
  if (out.reduced.rows() == 0) out.reduced = BitMatrix(0, m.cols());
  return out;
}

StandardForm to_standard_form(const BitMatrix& h) {
  const std::size_t n = h.cols();
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) rows.push_back(h.row(i));

  // Pivot columns are picked right-to-left so that the identity block lands
  // in the rightmost independent columns; this keeps the permutation equal to
  // identity for inputs already shaped (A|I).
  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> piv;  // (col, row)
  for (std::size_t c = n; c-- > 0 && piv.size() < rows.size();) {
    std::size_t sel = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && rows[i].get(c)) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    used[sel] = true;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != sel && rows[i].get(c)) rows[i] ^= rows[sel];
    piv.emplace_back(c, sel);
  }
  std::sort(piv.begin(), piv.end());

  StandardForm sf;
  sf.n = n;
  sf.r = piv.size();
  sf.rank_deficient = piv.size() < h.rows();

  std::vector<bool> is_pivot(n, false);
  for (auto [c, _] : piv) is_pivot[c] = true;
  std::vector<std::size_t> nonpivots;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) nonpivots.push_back(c);

  sf.a = BitMatrix(sf.r, nonpivots.size());
  for (std::size_t i = 0; i < sf.r; ++i)
    for (std::size_t j = 0; j < nonpivots.size(); ++j)
      if (rows[piv[i].second].get(nonpivots[j])) sf.a.set(i, j);

  sf.perm.assign(n, 0);
  for (std::size_t j = 0; j < nonpivots.size(); ++j) sf.perm[nonpivots[j]] = j;
  for (std::size_t i = 0; i < sf.r; ++i)
    sf.perm[piv[i].first] = nonpivots.size() + i;
  return sf;
}

BitMatrix StandardForm::matrix() const {
  return a.concat_cols(BitMatrix::identity(r));
}

std::vector<std::size_t> StandardForm::inverse_perm() const {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) inv[perm[c]] = c;
  return inv;
}

BitVector syndrome(const BitMatrix& h, const BitVector& e) {
  if (e.size() != h.cols())
    throw std::invalid_argument("syndrome: error length does not match H");
  return h.multiply(e);
}

std::vector<BitVector> nullspace(const BitMatrix& h) {
  RrefResult rr = rref(h);
  const std::size_t n = h.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    BitVector v(n);
    v.set(j);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      if (rr.reduced.get(i, j)) v.set(rr.pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
  // Eliminate v against the rref rows; v is in the span iff it reduces to 0.
  RrefResult rr = rref(m);
  BitVector res = v;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    if (res.get(rr.pivots[i])) res ^= rr.reduced.row(i);
  return !res.any();
}

BitMatrix parse_matrix_text(std::string_view text) {
  BitMatrix m;
  std::string row;
  auto flush = [&]() {
    if (!row.empty()) {
      m.append_row(BitVector::from_string(row));
      row.clear();
    }
  };
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      in_comment = false;
    } else if (in_comment) {
      continue;
    } else if (ch == '#') {
      in_comment = true;
    } else if (ch == '0' || ch == '1') {
      row += ch;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      continue;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch +
                                  "' in matrix text");
    }
  }
  flush();
  if (m.rows() == 0) throw std::invalid_argument("matrix text has no rows");
  return m;
}

std::string format_matrix_text(const BitMatrix& m) { return m.str(); }

}  // namespace qfilter
