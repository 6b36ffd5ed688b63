// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/codes.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qfilter {

namespace {

CodeSpec make_rep5() {
  CodeSpec spec;
  spec.name = "rep5";
  spec.n = 5;
  spec.gw = BitMatrix::from_strings({"11111"});
  // Natural chain of two-neighbour parity checks. Brought to standard form
  // before a verification network is built; used as-is by the naive emitter.
  spec.h = BitMatrix::from_strings({"11000", "01100", "00110", "00011"});
  spec.t = 2;
  return spec;
}

CodeSpec make_steane7() {
  CodeSpec spec;
  spec.name = "steane7";
  spec.n = 7;
  // C_w is the dual of the [7,4] Hamming code: its generator is the Hamming
  // check matrix with column j equal to the binary representation of j+1.
  spec.gw = BitMatrix::from_strings({"0001111", "0110011", "1010101"});
  // Full check matrix: a generator of the [7,4] Hamming code itself.
  spec.h = BitMatrix::from_strings(
      {"1000011", "0100101", "0010110", "0001111"});
  spec.t = 1;
  return spec;
}

}  // namespace

CodeSpec builtin_code(const std::string& name) {
  if (name == "rep5") return make_rep5();
  if (name == "steane7") return make_steane7();
  throw std::invalid_argument("unknown builtin code '" + name + "'");
}

std::vector<std::string> builtin_code_names() { return {"rep5", "steane7"}; }

CodeSpec validate_code(CodeSpec spec, bool allow_redundant) {
  if (spec.gw.rows() > 0 && spec.gw.cols() != spec.n)
    throw std::invalid_argument("G width does not match n");
  if (spec.h.rows() > 0 && spec.h.cols() != spec.n)
    throw std::invalid_argument("H width does not match n");

  std::size_t rank_g = gf2_rank(spec.gw);
  if (rank_g < spec.gw.rows()) {
    if (!allow_redundant)
      throw std::invalid_argument("redundant generators: rank(G) < rows(G)");
    spec.gw = rref(spec.gw).reduced;
  }
  std::size_t rank_h = gf2_rank(spec.h);
  if (rank_h < spec.h.rows()) {
    if (!allow_redundant)
      throw std::invalid_argument("redundant checks: rank(H) < rows(H)");
    RrefResult rr = rref(spec.h);
    spec.h = rr.reduced;
  }

  for (std::size_t i = 0; i < spec.gw.rows(); ++i)
    for (std::size_t j = 0; j < spec.h.rows(); ++j)
      if (spec.gw.row(i).dot(spec.h.row(j)))
        throw std::invalid_argument("inconsistent code: G . H^T != 0");

  if (spec.kw() + spec.r() != spec.n)
    throw std::invalid_argument(
        "H is not a full check matrix for G: k_w + r != n");
  if (spec.t < 0) throw std::invalid_argument("t must be non-negative");
  return spec;
}

CodeSpec parse_code(std::istream& in, bool allow_redundant) {
  CodeSpec spec;
  bool have_name = false, have_t = false;
  std::vector<std::string> g_rows, h_rows;
  int block = 0;  // 0 = header, 1 = G, 2 = H

  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;

    if (tok == "name") {
      if (!(ls >> spec.name))
        throw std::invalid_argument("code file: missing name value");
      have_name = true;
    } else if (tok == "t") {
      if (!(ls >> spec.t))
        throw std::invalid_argument("code file: missing t value");
      have_t = true;
    } else if (tok == "G:") {
      block = 1;
    } else if (tok == "H:") {
      block = 2;
    } else if (block == 1) {
      g_rows.push_back(tok);
    } else if (block == 2) {
      h_rows.push_back(tok);
    } else {
      throw std::invalid_argument("code file: unexpected token '" + tok + "'");
    }
  }

  if (!have_name || !have_t || g_rows.empty() || h_rows.empty())
    throw std::invalid_argument(
        "code file: expected name, t, a G: block and an H: block");
  spec.gw = BitMatrix::from_strings(g_rows);
  spec.h = BitMatrix::from_strings(h_rows);
  spec.n = spec.h.cols();
  return validate_code(std::move(spec), allow_redundant);
}

CodeSpec load_code(const std::string& path, bool allow_redundant) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file '" + path + "'");
  return parse_code(in, allow_redundant);
}

std::string format_code(const CodeSpec& spec) {
  std::string out;
  out += "name " + spec.name + "\n";
  out += "t " + std::to_string(spec.t) + "\n";
  out += "G:\n" + format_matrix_text(spec.gw);
  out += "H:\n" + format_matrix_text(spec.h);
  return out;
}

std::vector<BitVector> codewords(const CodeSpec& spec) {
  if (spec.kw() > 20)
    throw std::invalid_argument("codeword enumeration limited to k_w <= 20");
  std::vector<BitVector> words;
  words.reserve(std::size_t{1} << spec.kw());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << spec.kw()); ++m) {
    BitVector w(spec.n);
    for (std::size_t i = 0; i < spec.kw(); ++i)
      if ((m >> i) & 1u) w ^= spec.gw.row(i);
    words.push_back(std::move(w));
  }
  return words;
}

CodeSpec permute_code_columns(const CodeSpec& spec,
                              const std::vector<std::size_t>& perm) {
  CodeSpec out = spec;
  out.gw = spec.gw.permute_cols(perm);
  out.h = spec.h.permute_cols(perm);
  return out;
}

}  // namespace qfilter
