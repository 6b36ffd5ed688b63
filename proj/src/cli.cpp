// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfilter/circuit.hpp"
#include "qfilter/codes.hpp"
#include "qfilter/cosets.hpp"
#include "qfilter/gf2.hpp"
#include "qfilter/paulisim.hpp"
#include "qfilter/schedule.hpp"

namespace qfilter {
namespace {

using Record = std::vector<std::string>;

std::string real_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string int_str(long long v) { return std::to_string(v); }
std::string uint_str(unsigned long long v) { return std::to_string(v); }

struct Report {
  std::vector<Record> records;

  void add(Record r) { records.push_back(std::move(r)); }
};

void write_records(const Report& report, const std::string& command,
                   std::ostream& out) {
  out << "qfilter-report 1 " << command << "\n";
  for (const auto& rec : report.records) {
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i) out << ' ';
      out << rec[i];
    }
    out << "\n";
  }
}

// Value of the token following `key`, or fallback when absent.
std::string field(const Record& rec, const std::string& key,
                  const std::string& fallback = "") {
  for (std::size_t i = 1; i + 1 < rec.size(); ++i)
    if (rec[i] == key) return rec[i + 1];
  return fallback;
}

void render_schedule_rows(const std::vector<Record>& rows, int n_steps,
                          std::ostream& out) {
  int width = 1;
  for (int v = n_steps; v >= 10; v /= 10) ++width;
  for (const auto& rec : rows) {
    std::string line;
    std::stringstream cells(rec[2]);
    std::string cell;
    bool first = true;
    while (std::getline(cells, cell, ',')) {
      if (!first) line += ' ';
      first = false;
      const std::string shown = cell == "0" ? "" : cell;
      line += std::string(width - shown.size(), ' ') + shown;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << "  " << line << "\n";
  }
}

void render_event(const Record& rec, const char* label, std::ostream& out) {
  out << "  " << label << " at k=" << field(rec, "k")
      << ": residual " << field(rec, "residual") << " (effective weight "
      << field(rec, "weight") << ", syndrome weight "
      << field(rec, "syndrome-weight") << "), injected "
      << field(rec, "injected") << ", faults " << field(rec, "faults")
      << "\n";
}

void write_text(const Report& report, std::ostream& out) {
  int n_steps = 1;
  for (const auto& rec : report.records)
    if (rec[0] == "schedule") n_steps = std::stoi(field(rec, "steps", "1"));

  std::string prev;
  std::vector<Record> schedule_rows;
  for (const auto& rec : report.records) {
    const std::string& tag = rec[0];
    if (tag != "schedule-row" && !schedule_rows.empty()) {
      render_schedule_rows(schedule_rows, n_steps, out);
      schedule_rows.clear();
    }
    if (tag == "code") {
      out << "Code " << field(rec, "name") << ": n=" << field(rec, "n")
          << ", k_w=" << field(rec, "kw") << ", checks=" << field(rec, "r")
          << ", t=" << field(rec, "t") << "\n";
    } else if (tag == "network") {
      out << "Network: " << rec[2] << "\n";
    } else if (tag == "columns") {
      out << "Qubit order (original columns):";
      for (std::size_t i = 1; i < rec.size(); ++i) out << ' ' << rec[i];
      out << "\n";
    } else if (tag == "a-row" || tag == "h-row") {
      if (prev != tag)
        out << (tag == "a-row" ? "Standard-form A:\n" : "Check matrix H:\n");
      out << "  " << rec[2] << "\n";
    } else if (tag == "ft") {
      out << "Condition at t=" << field(rec, "t") << ": "
          << (field(rec, "result") == "pass" ? "PASS" : "FAIL") << " ("
          << field(rec, "violations") << " violating syndromes)\n";
    } else if (tag == "ft-violation") {
      out << "  syndrome " << field(rec, "syndrome") << " (weight "
          << field(rec, "syndrome-weight") << ") needs error weight "
          << field(rec, "leader-weight") << "\n";
    } else if (tag == "schedule") {
      out << "Schedule with N=" << field(rec, "steps") << " steps:\n";
    } else if (tag == "schedule-row") {
      schedule_rows.push_back(rec);
    } else if (tag == "verification") {
      const std::string steps = field(rec, "steps", "-");
      out << "Verification network: duration " << field(rec, "duration");
      if (steps != "-") out << " (N=" << steps << " scheduled steps + 1 + T_m)";
      out << "\n";
    } else if (tag == "preparation") {
      out << "Preparation network: duration " << field(rec, "duration")
          << "\n";
    } else if (tag == "wrote") {
      out << "Wrote " << field(rec, "kind") << ": " << field(rec, "path")
          << "\n";
    } else if (tag == "warning") {
      out << "Warning: " << rec[1] << "\n";
    } else if (tag == "scan") {
      out << "Scan up to k=" << field(rec, "kmax") << " faults, injection "
          << field(rec, "inject") << ", " << field(rec, "locations")
          << " fault locations\n";
    } else if (tag == "assignments") {
      out << "k=" << field(rec, "k") << ": " << field(rec, "count")
          << " assignments, " << field(rec, "accepted") << " accepted\n";
    } else if (tag == "accepted") {
      out << "  k=" << field(rec, "k") << " effective weight "
          << field(rec, "weight") << ": " << field(rec, "count")
          << " accepted events\n";
    } else if (tag == "counts") {
      out << "  k=" << field(rec, "k") << " violations: strict "
          << field(rec, "strict") << ", excess " << field(rec, "excess")
          << ", coset " << field(rec, "coset") << "\n";
    } else if (tag == "strict-violation") {
      render_event(rec, "STRICT VIOLATION", out);
    } else if (tag == "excess-event") {
      render_event(rec, "excess event", out);
    } else if (tag == "coset-violation") {
      render_event(rec, "COSET VIOLATION", out);
    } else if (tag == "result") {
      out << "Result: " << (field(rec, "verdict") == "pass" ? "PASS" : "FAIL")
          << " (strict " << field(rec, "strict") << ", excess "
          << field(rec, "excess") << ", coset " << field(rec, "coset")
          << ")\n";
    } else if (tag == "mc") {
      out << "Monte Carlo: " << field(rec, "trials") << " trials per epsilon"
          << ", seed " << field(rec, "seed") << ", T_m "
          << field(rec, "tmeas") << "\n";
    } else if (tag == "epsilons") {
      out << "Error rates:";
      for (std::size_t i = 1; i < rec.size(); ++i) out << ' ' << rec[i];
      out << "\n";
    } else if (tag == "sample") {
      out << "epsilon=" << field(rec, "epsilon") << ": "
          << field(rec, "accepted") << " accepted, " << field(rec, "rejected")
          << " rejected\n";
    } else if (tag == "weight-count") {
      out << "  epsilon=" << field(rec, "epsilon") << " weight "
          << field(rec, "weight") << ": count " << field(rec, "count")
          << ", probability " << field(rec, "probability") << " (95% CI ["
          << field(rec, "ci-low") << ", " << field(rec, "ci-high") << "])\n";
    } else if (tag == "fit") {
      out << "Fit weight " << field(rec, "weight") << ": ";
      if (field(rec, "slope") == "-")
        out << "indeterminate (" << field(rec, "points") << " usable points)";
      else
        out << "slope " << field(rec, "slope") << ", prefactor "
            << field(rec, "prefactor") << " (" << field(rec, "points")
            << " points)";
      out << "\n";
    } else if (tag == "notice") {
      out << "Notice: " << rec[1] << "\n";
    } else {
      for (std::size_t i = 0; i < rec.size(); ++i)
        out << (i ? " " : "") << rec[i];
      out << "\n";
    }
    prev = tag;
  }
  if (!schedule_rows.empty()) render_schedule_rows(schedule_rows, n_steps, out);
}

void flush_report(const Report& report, const RunConfig& config,
                  std::ostream& out) {
  if (config.format == OutputFormat::kRecords)
    write_records(report, config.command, out);
  else
    write_text(report, out);
}

CodeSpec load_spec(const RunConfig& config) {
  const bool have_name = !config.code_name.empty();
  const bool have_file = !config.code_file.empty();
  if (have_name == have_file)
    throw std::invalid_argument(
        "exactly one of a builtin code name and a code file is required");
  return have_name ? builtin_code(config.code_name)
                   : load_code(config.code_file);
}

void add_code_record(Report& report, const CodeSpec& spec) {
  report.add({"code", "name", spec.name, "n", uint_str(spec.n), "kw",
              uint_str(spec.kw()), "r", uint_str(spec.r()), "t",
              int_str(spec.t)});
}

std::string bits_or_dash(const BitVector& v) {
  return v.any() ? v.str() : (v.size() ? std::string(v.size(), '0') : "-");
}

std::string faults_str(const FaultAssignment& faults) {
  if (faults.empty()) return "-";
  std::string s;
  for (const auto& f : faults) {
    if (!s.empty()) s += ',';
    s += std::to_string(f.location) + ':' + std::to_string(f.pattern);
  }
  return s;
}

void add_event_record(Report& report, const char* tag, const ScanEvent& ev) {
  report.add({tag, "k", int_str(ev.k), "weight", int_str(ev.effective_weight),
              "syndrome-weight", int_str(ev.syndrome_weight), "injected",
              ev.injected.any() ? ev.injected.str() : "-", "residual",
              bits_or_dash(ev.residual), "faults", faults_str(ev.faults)});
}

void add_columns_record(Report& report, const Circuit& c) {
  Record rec{"columns"};
  for (int label : c.ancilla_labels) rec.push_back(int_str(label));
  report.add(std::move(rec));
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  (void)err;
  const CodeSpec spec = load_spec(config);
  const int t = config.t >= 0 ? config.t : spec.t;

  Report report;
  add_code_record(report, spec);
  report.add({"network", "kind", config.naive ? "naive" : "standard"});

  BitMatrix target;
  if (config.naive) {
    target = spec.h;
    for (std::size_t i = 0; i < target.rows(); ++i)
      report.add({"h-row", uint_str(i), target.row(i).str()});
  } else {
    const StandardForm form = to_standard_form(spec.h);
    if (form.rank_deficient)
      throw std::invalid_argument("check matrix rows are not independent");
    target = form.matrix();
    Record cols{"columns"};
    for (std::size_t pos : form.inverse_perm())
      cols.push_back(uint_str(pos));
    report.add(std::move(cols));
    for (std::size_t i = 0; i < form.a.rows(); ++i)
      report.add({"a-row", uint_str(i), form.a.row(i).str()});
  }

  const FtReport ft = check_ft_condition(target, t);
  report.add({"ft", "t", int_str(t), "result", ft.pass ? "pass" : "fail",
              "violations", uint_str(ft.violations.size())});
  for (const auto& v : ft.violations)
    report.add({"ft-violation", "syndrome", v.syndrome.str(),
                "syndrome-weight", int_str(v.syndrome_weight), "leader-weight",
                v.leader_weight == kLeaderUnreachable
                    ? "unreachable"
                    : int_str(v.leader_weight)});

  flush_report(report, config, out);
  return ft.pass ? 0 : 2;
}

int cmd_emit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  (void)err;
  const CodeSpec spec = load_spec(config);

  Report report;
  add_code_record(report, spec);
  report.add({"network", "kind", config.naive ? "naive" : "standard"});

  Circuit verify;
  if (config.naive) {
    verify = emit_naive_verification(spec.h, config.t_meas);
    report.add({"verification", "steps", "-", "duration",
                int_str(verify.duration)});
  } else {
    const StandardPlan plan = plan_standard_verification(spec, config.t_meas);
    verify = plan.circuit;
    add_columns_record(report, verify);
    report.add({"schedule", "steps", int_str(plan.sched.n_steps)});
    for (std::size_t i = 0; i < plan.sched.rows; ++i) {
      std::string csv;
      for (std::size_t j = 0; j < plan.sched.cols; ++j) {
        if (j) csv += ',';
        csv += int_str(plan.sched.time_at(i, j));
      }
      report.add({"schedule-row", uint_str(i), csv});
    }
    report.add({"verification", "steps", int_str(plan.sched.n_steps),
                "duration", int_str(verify.duration)});
  }
  if (verify.n_verifier == 0) report.add({"warning", "empty-verification"});

  const Circuit prep = emit_preparation(spec);
  report.add({"preparation", "duration", int_str(prep.duration)});

  const std::filesystem::path dir(config.out_dir);
  const auto write_file = [&](const std::string& kind,
                              const std::filesystem::path& path,
                              const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << body;
    if (!f.good()) throw std::runtime_error("short write to " + path.string());
    report.add({"wrote", "kind", kind, "path", path.string()});
  };
  write_file("preparation", dir / (spec.name + "-prep.qc"),
             serialize_circuit(prep));
  write_file("verification",
             dir / (spec.name + (config.naive ? "-verify-naive.qc"
                                              : "-verify.qc")),
             serialize_circuit(verify));

  flush_report(report, config, out);
  return 0;
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  (void)err;
  const CodeSpec spec = load_spec(config);

  Circuit circuit;
  CodeSpec frame;  // code in circuit qubit order, for residual weights
  if (config.naive) {
    circuit = emit_naive_verification(spec.h, config.t_meas);
    frame = spec;
  } else {
    StandardPlan plan = plan_standard_verification(spec, config.t_meas);
    circuit = std::move(plan.circuit);
    frame = std::move(plan.code);
  }

  Report report;
  add_code_record(report, spec);
  report.add({"network", "kind", config.naive ? "naive" : "standard"});
  if (!config.naive) add_columns_record(report, circuit);
  report.add({"scan", "kmax", int_str(config.k_max), "inject",
              config.inject ? "on" : "off", "locations",
              uint_str(locations(circuit).size())});

  const auto results =
      exhaustive_scan(circuit, frame, config.k_max, config.inject);

  std::uint64_t strict = 0, excess = 0, coset = 0;
  for (const auto& rk : results) {
    report.add({"assignments", "k", int_str(rk.k), "count",
                uint_str(rk.assignments), "accepted", uint_str(rk.accepted)});
    for (std::size_t w = 0; w < rk.accepted_by_weight.size(); ++w)
      if (rk.accepted_by_weight[w])
        report.add({"accepted", "k", int_str(rk.k), "weight", uint_str(w),
                    "count", uint_str(rk.accepted_by_weight[w])});
    report.add({"counts", "k", int_str(rk.k), "strict",
                uint_str(rk.violation_count), "excess",
                uint_str(rk.excess_count), "coset",
                uint_str(rk.coset_violation_count)});
    for (const auto& ev : rk.violations)
      add_event_record(report, "strict-violation", ev);
    for (const auto& ev : rk.excess_events)
      add_event_record(report, "excess-event", ev);
    for (const auto& ev : rk.coset_violations)
      add_event_record(report, "coset-violation", ev);
    strict += rk.violation_count;
    excess += rk.excess_count;
    coset += rk.coset_violation_count;
  }

  // Accepted events whose residual outweighs either the fault budget or its
  // own syndrome make the filter unsound; excess events alone do not (an
  // injected error consumed the budget) and are reported but not failed.
  const bool fail = strict + coset > 0;
  report.add({"result", "verdict", fail ? "fail" : "pass", "strict",
              uint_str(strict), "excess", uint_str(excess), "coset",
              uint_str(coset)});

  flush_report(report, config, out);
  return fail ? 2 : 0;
}

int cmd_mc(const RunConfig& config, std::ostream& out, std::ostream& err) {
  (void)err;
  const CodeSpec spec = load_spec(config);
  if (config.epsilons.empty())
    throw std::invalid_argument("at least one epsilon is required");
  for (double eps : config.epsilons)
    if (!(eps > 0.0) || eps > 1.0)
      throw std::invalid_argument("epsilon values must lie in (0, 1]");

  Circuit circuit;
  CodeSpec frame;
  if (config.naive) {
    circuit = emit_naive_verification(spec.h, config.t_meas);
    frame = spec;
  } else {
    StandardPlan plan = plan_standard_verification(spec, config.t_meas);
    circuit = std::move(plan.circuit);
    frame = std::move(plan.code);
  }

  Report report;
  add_code_record(report, spec);
  report.add({"network", "kind", config.naive ? "naive" : "standard"});
  report.add({"mc", "trials", uint_str(config.trials), "seed",
              uint_str(config.seed), "tmeas", int_str(config.t_meas)});
  Record eps_rec{"epsilons"};
  for (double eps : config.epsilons) eps_rec.push_back(real_str(eps));
  report.add(std::move(eps_rec));

  std::vector<ScalePoint> points;
  for (double eps : config.epsilons) {
    const NoiseModel model = NoiseModel::worst_case_filtering(eps);
    const McCounts counts =
        monte_carlo(circuit, frame, model, config.trials, config.seed);
    report.add({"sample", "epsilon", real_str(eps), "accepted",
                uint_str(counts.accepted()), "rejected",
                uint_str(counts.rejected)});
    for (std::size_t w = 0; w < counts.accepted_by_weight.size(); ++w) {
      const std::uint64_t n = counts.accepted_by_weight[w];
      if (n == 0) continue;
      const double p = static_cast<double>(n) /
                       static_cast<double>(counts.trials);
      const Interval ci = wilson_interval(n, counts.trials);
      report.add({"weight-count", "epsilon", real_str(eps), "weight",
                  uint_str(w), "count", uint_str(n), "probability",
                  real_str(p), "ci-low", real_str(ci.low), "ci-high",
                  real_str(ci.high)});
      if (w >= 1)
        points.push_back(
            {eps, p, static_cast<int>(w)});
    }
  }

  if (config.epsilons.size() < 2) {
    report.add({"notice", "fit-skipped-single-epsilon"});
  } else {
    const ScalingReport fits = fit_scaling(points);
    for (const auto& fit : fits.fits) {
      if (fit.determinate)
        report.add({"fit", "weight", int_str(fit.weight), "points",
                    int_str(fit.n_points), "slope", real_str(fit.slope),
                    "prefactor", real_str(fit.prefactor)});
      else
        report.add({"fit", "weight", int_str(fit.weight), "points",
                    int_str(fit.n_points), "slope", "-", "prefactor", "-"});
    }
  }

  flush_report(report, config, out);
  return 0;
}

int run_command(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    if (config.command == "analyze") return cmd_analyze(config, out, err);
    if (config.command == "emit") return cmd_emit(config, out, err);
    if (config.command == "scan") return cmd_scan(config, out, err);
    if (config.command == "mc") return cmd_mc(config, out, err);
    throw std::invalid_argument("unknown command: " + config.command);
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << " (required " << real_str(e.required())
        << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qfilter
