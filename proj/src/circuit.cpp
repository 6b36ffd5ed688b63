// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qfilter {
namespace {

// Times covered by a gate event: preparations sit at time 0, CX/CZ at their
// step, and a measurement blocks its whole window.
std::pair<int, int> gate_span(const Gate& g, int t_meas) {
  if (g.kind == GateKind::MeasX) return {g.time, g.time + t_meas - 1};
  return {g.time, g.time};
}

struct QubitWindow {
  int begin = 1;
  int end = 0;  // inclusive; end < begin means the qubit never rests
};

// A qubit exists from time 0 if explicitly prepared (else from time 1, as a
// live input), and until the end of its measurement if it has one (else until
// the end of the circuit).
std::vector<QubitWindow> alive_windows(const Circuit& c) {
  std::vector<QubitWindow> win(c.n_qubits());
  for (auto& w : win) {
    w.begin = 1;
    w.end = c.duration;
  }
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::PrepZero || g.kind == GateKind::PrepPlus)
      win[g.q0].begin = std::min(win[g.q0].begin, g.time);
    if (g.kind == GateKind::MeasX)
      win[g.q0].end = g.time + c.t_meas - 1;
  }
  return win;
}

const char* kind_token(GateKind k) {
  switch (k) {
    case GateKind::PrepZero: return "prep0";
    case GateKind::PrepPlus: return "prep+";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::MeasX: return "mx";
  }
  throw std::logic_error("unknown gate kind");
}

GateKind parse_kind(const std::string& token) {
  if (token == "prep0") return GateKind::PrepZero;
  if (token == "prep+") return GateKind::PrepPlus;
  if (token == "cx") return GateKind::CX;
  if (token == "cz") return GateKind::CZ;
  if (token == "mx") return GateKind::MeasX;
  throw std::invalid_argument("circuit parse: unknown gate kind '" + token +
                              "'");
}

std::vector<int> identity_labels(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

}  // namespace

int pattern_count(const Location& loc) {
  switch (loc.cls) {
    case LocationClass::Measurement: return 1;
    case LocationClass::Gate: return loc.arity == 2 ? 15 : 3;
    case LocationClass::Preparation:
    case LocationClass::Idle: return 3;
  }
  throw std::logic_error("unknown location class");
}

Circuit emit_verification(const CodeSpec& spec, const Schedule& sched,
                          int t_meas) {
  if (t_meas < 1) throw std::invalid_argument("t_meas must be >= 1");
  const std::size_t n = spec.n;
  const std::size_t r = spec.r();

  Circuit c;
  c.n_ancilla = static_cast<int>(n);
  c.t_meas = t_meas;
  c.ancilla_labels = identity_labels(static_cast<int>(n));
  if (r == 0) return c;  // nothing to verify

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (spec.h.get(i, n - r + j) != (i == j))
        throw std::invalid_argument(
            "emit_verification requires H in standard form (A|I)");

  BitMatrix a(r, n - r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j + r < n; ++j)
      if (spec.h.get(i, j)) a.set(i, j, true);
  if (!validate(sched, a))
    throw std::invalid_argument("schedule does not match the A block");

  const int big_n = sched.n_steps;
  c.n_verifier = static_cast<int>(r);
  c.duration = big_n + 1 + t_meas;
  const auto verifier = [&](std::size_t i) {
    return static_cast<int>(n + i);
  };

  for (std::size_t i = 0; i < r; ++i)
    c.gates.push_back({0, GateKind::PrepPlus, verifier(i)});

  std::vector<ScheduleEntry> ordered = sched.entries;
  std::sort(ordered.begin(), ordered.end(),
            [](const ScheduleEntry& x, const ScheduleEntry& y) {
              return std::tie(x.time, x.row, x.col) <
                     std::tie(y.time, y.row, y.col);
            });
  for (const auto& e : ordered)
    c.gates.push_back({e.time, GateKind::CZ, verifier(e.row),
                       static_cast<int>(e.col)});

  // The identity block couples verifier i to ancilla (n-r)+i; these gates are
  // pairwise disjoint and run simultaneously.
  for (std::size_t i = 0; i < r; ++i)
    c.gates.push_back({big_n + 1, GateKind::CZ, verifier(i),
                       static_cast<int>(n - r + i)});

  for (std::size_t i = 0; i < r; ++i)
    c.gates.push_back({big_n + 2, GateKind::MeasX, verifier(i)});
  return c;
}

Circuit emit_preparation(const CodeSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t k = spec.kw();

  Circuit c;
  c.n_ancilla = static_cast<int>(n);
  c.ancilla_labels = identity_labels(static_cast<int>(n));

  RrefResult rr = rref(spec.gw);
  if (rr.reduced.rows() < k)
    throw std::invalid_argument("emit_preparation: rank-deficient generators");

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> nonpivots;
  for (std::size_t q = 0; q < n; ++q)
    if (!is_pivot[q]) nonpivots.push_back(q);

  for (std::size_t q = 0; q < n; ++q)
    c.gates.push_back(
        {0, is_pivot[q] ? GateKind::PrepPlus : GateKind::PrepZero,
         static_cast<int>(q)});
  if (k == 0) return c;

  BitMatrix b(k, nonpivots.size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < nonpivots.size(); ++j)
      if (rr.reduced.get(i, nonpivots[j])) b.set(i, j, true);

  Schedule sched = schedule(b);
  c.duration = sched.n_steps;

  std::vector<ScheduleEntry> ordered = sched.entries;
  std::sort(ordered.begin(), ordered.end(),
            [](const ScheduleEntry& x, const ScheduleEntry& y) {
              return std::tie(x.time, x.row, x.col) <
                     std::tie(y.time, y.row, y.col);
            });
  for (const auto& e : ordered)
    c.gates.push_back({e.time, GateKind::CX,
                       static_cast<int>(rr.pivots[e.row]),
                       static_cast<int>(nonpivots[e.col])});
  return c;
}

Circuit emit_naive_verification(const BitMatrix& h, int t_meas) {
  if (t_meas < 1) throw std::invalid_argument("t_meas must be >= 1");
  const std::size_t n = h.cols();
  const std::size_t rows = h.rows();

  Circuit c;
  c.n_ancilla = static_cast<int>(n);
  c.n_verifier = static_cast<int>(rows);
  c.t_meas = t_meas;
  c.ancilla_labels = identity_labels(static_cast<int>(n));
  if (rows == 0) return c;

  // busy[q] holds the occupied time steps of ancilla qubit q so far.
  std::vector<std::vector<bool>> busy(n);
  auto is_busy = [&](std::size_t q, int t) {
    return t < static_cast<int>(busy[q].size()) && busy[q][t];
  };
  auto mark = [&](std::size_t q, int t) {
    if (t >= static_cast<int>(busy[q].size())) busy[q].resize(t + 1, false);
    busy[q][t] = true;
  };

  int duration = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const int v = static_cast<int>(n + i);
    c.gates.push_back({0, GateKind::PrepPlus, v});
    int prev = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!h.get(i, j)) continue;
      int t = prev + 1;
      while (is_busy(j, t)) ++t;
      mark(j, t);
      c.gates.push_back({t, GateKind::CZ, v, static_cast<int>(j)});
      prev = t;
    }
    c.gates.push_back({prev + 1, GateKind::MeasX, v});
    duration = std::max(duration, prev + t_meas);
  }
  c.duration = duration;

  // Keep the gate list in time order for readable serializations.
  std::stable_sort(c.gates.begin(), c.gates.end(),
                   [](const Gate& x, const Gate& y) { return x.time < y.time; });
  return c;
}

std::vector<Location> locations(const Circuit& c) {
  std::vector<Location> locs;
  const auto win = alive_windows(c);

  // covered[q] = times at which a gate acts on q (shifted by nothing; index
  // by time directly, duration is small).
  std::vector<std::vector<bool>> covered(c.n_qubits(),
                                         std::vector<bool>(c.duration + 1,
                                                           false));
  for (const auto& g : c.gates) {
    auto [lo, hi] = gate_span(g, c.t_meas);
    for (int t = lo; t <= hi && t <= c.duration; ++t) {
      covered[g.q0][t] = true;
      if (g.two_qubit()) covered[g.q1][t] = true;
    }
  }

  for (int t = 0; t <= c.duration; ++t) {
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
      const Gate& g = c.gates[gi];
      if (g.time != t) continue;
      Location loc;
      loc.index = static_cast<int>(locs.size());
      loc.time = t;
      loc.gate_index = static_cast<int>(gi);
      loc.qubits = {g.q0, g.q1};
      loc.arity = g.two_qubit() ? 2 : 1;
      switch (g.kind) {
        case GateKind::PrepZero:
        case GateKind::PrepPlus:
          loc.cls = LocationClass::Preparation;
          break;
        case GateKind::CX:
        case GateKind::CZ:
          loc.cls = LocationClass::Gate;
          break;
        case GateKind::MeasX:
          loc.cls = LocationClass::Measurement;
          break;
      }
      locs.push_back(loc);
    }
    for (int q = 0; q < c.n_qubits(); ++q) {
      if (t < win[q].begin || t > win[q].end || covered[q][t]) continue;
      Location loc;
      loc.index = static_cast<int>(locs.size());
      loc.time = t;
      loc.cls = LocationClass::Idle;
      loc.qubits = {q, -1};
      loc.arity = 1;
      locs.push_back(loc);
    }
  }
  return locs;
}

bool check_no_collisions(const Circuit& c) {
  std::map<std::pair<int, int>, int> uses;  // (qubit, time) -> count
  for (const auto& g : c.gates) {
    auto [lo, hi] = gate_span(g, c.t_meas);
    for (int t = lo; t <= hi; ++t) {
      if (++uses[{g.q0, t}] > 1) return false;
      if (g.two_qubit() && ++uses[{g.q1, t}] > 1) return false;
    }
  }
  return true;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qfilter-circuit 1\n";
  out << "ancilla " << c.n_ancilla << "\n";
  out << "verifier " << c.n_verifier << "\n";
  out << "tmeas " << c.t_meas << "\n";
  out << "duration " << c.duration << "\n";
  out << "labels";
  for (int l : c.ancilla_labels) out << ' ' << l;
  out << "\n";
  for (const auto& g : c.gates) {
    out << "gate " << g.time << ' ' << kind_token(g.kind) << ' ' << g.q0;
    if (g.two_qubit()) out << ' ' << g.q1;
    out << "\n";
  }
  return out.str();
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Circuit c;
  c.ancilla_labels.clear();
  bool have_header = false;

  auto fail = [](const std::string& why) {
    throw std::invalid_argument("circuit parse: " + why);
  };

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (!have_header) {
      int version = 0;
      if (key != "qfilter-circuit" || !(ls >> version) || version != 1)
        fail("missing or unsupported header");
      have_header = true;
      continue;
    }
    if (key == "ancilla") {
      if (!(ls >> c.n_ancilla)) fail("bad ancilla line");
    } else if (key == "verifier") {
      if (!(ls >> c.n_verifier)) fail("bad verifier line");
    } else if (key == "tmeas") {
      if (!(ls >> c.t_meas)) fail("bad tmeas line");
    } else if (key == "duration") {
      if (!(ls >> c.duration)) fail("bad duration line");
    } else if (key == "labels") {
      int l;
      while (ls >> l) c.ancilla_labels.push_back(l);
    } else if (key == "gate") {
      Gate g;
      std::string kind;
      if (!(ls >> g.time >> kind >> g.q0)) fail("bad gate line");
      g.kind = parse_kind(kind);
      if (g.two_qubit() && !(ls >> g.q1)) fail("missing second qubit");
      if (g.q0 < 0 || g.q0 >= c.n_qubits() ||
          (g.two_qubit() && (g.q1 < 0 || g.q1 >= c.n_qubits() ||
                             g.q1 == g.q0)))
        fail("gate qubit out of range");
      c.gates.push_back(g);
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  if (!have_header) fail("empty input");
  if (static_cast<int>(c.ancilla_labels.size()) != c.n_ancilla)
    fail("labels line does not match ancilla count");
  return c;
}

StandardPlan plan_standard_verification(const CodeSpec& spec, int t_meas) {
  StandardPlan plan;
  plan.form = to_standard_form(spec.h);
  if (plan.form.rank_deficient)
    throw std::invalid_argument(
        "plan_standard_verification: check matrix has dependent rows");
  plan.code = permute_code_columns(spec, plan.form.perm);
  plan.code.h = plan.form.matrix();
  plan.sched = schedule(plan.form.a);
  plan.circuit = emit_verification(plan.code, plan.sched, t_meas);
  const auto inv = plan.form.inverse_perm();
  plan.circuit.ancilla_labels.assign(inv.begin(), inv.end());
  return plan;
}

}  // namespace qfilter
