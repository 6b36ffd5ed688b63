// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: loads codes, checks the fault-tolerance
// condition, schedules and emits circuits, runs exhaustive fault scans and
// Monte Carlo scaling campaigns. Output is a list of line-oriented records,
// printed either raw (machine format, versioned header) or rendered for
// humans; both come from the same records, so the two modes never disagree.

#ifndef QFILTER_CLI_HPP_
#define QFILTER_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qfilter {

enum class OutputFormat {
  kText,     // human-readable rendering
  kRecords,  // `qfilter-report 1 <command>` header + raw records
};

struct RunConfig {
  std::string command;    // analyze | emit | scan | mc
  std::string code_name;  // builtin code, exclusive with code_file
  std::string code_file;  // code description file
  bool naive = false;     // use H as given / the naive network

  int t = -1;       // analyze: condition weight; -1 means the code's own t
  int t_meas = 1;   // measurement duration in time steps
  int k_max = 1;    // scan: maximum simultaneous fault count
  bool inject = false;  // scan: sweep all nonzero injected input errors

  std::vector<double> epsilons{3e-3, 1e-2, 3e-2};  // mc: error rates
  std::uint64_t trials = 1000000;                  // mc: trials per epsilon
  std::uint64_t seed = 0;                          // mc: RNG seed

  std::string out_dir = ".";  // emit: output directory
  OutputFormat format = OutputFormat::kText;
};

// Exit codes, shared by all commands: 0 = success (condition holds / no
// violations), 2 = the analyzed property is violated, 1 = input or
// feasibility error (message on `err`).
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_emit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_mc(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qfilter

#endif  // QFILTER_CLI_HPP_
