// Copyright 2026 The qfilter Authors
// SPDX-License-Identifier: Apache-2.0

#include "qfilter/paulisim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qfilter {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    return mix64(z);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Unbiased uniform draw in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= bound);
    return x % n;
  }
};

// The per-trial stream depends only on (seed, trial index).
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 rng;
  rng.state =
      mix64(seed ^ mix64(trial * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
  return rng;
}

void apply_pattern_to_frame(const Location& loc, unsigned pattern,
                            BitVector& x, BitVector& z, BitVector& flips,
                            int n_ancilla) {
  if (loc.cls == LocationClass::Measurement) {
    flips.flip(loc.qubits[0] - n_ancilla);
    return;
  }
  if (pattern & 1u) x.flip(loc.qubits[0]);
  if (pattern & 2u) z.flip(loc.qubits[0]);
  if (loc.arity == 2) {
    if (pattern & 4u) x.flip(loc.qubits[1]);
    if (pattern & 8u) z.flip(loc.qubits[1]);
  }
}

}  // namespace

PropagateResult propagate(const Circuit& c, const FaultAssignment& faults,
                          const BitVector* injected_x) {
  const int nq = c.n_qubits();
  BitVector x(nq), z(nq);
  BitVector flips(c.n_verifier);

  if (injected_x != nullptr) {
    if (injected_x->size() != static_cast<std::size_t>(c.n_ancilla))
      throw std::invalid_argument("injected error size mismatch");
    for (std::size_t i = 0; i < injected_x->size(); ++i)
      if (injected_x->get(i)) x.flip(i);
  }

  const auto locs = locations(c);
  std::vector<unsigned> pattern_at(locs.size(), 0);
  for (const auto& f : faults) {
    if (f.location < 0 || f.location >= static_cast<int>(locs.size()))
      throw std::invalid_argument("fault references an invalid location");
    const auto& loc = locs[f.location];
    if (f.pattern < 1 ||
        f.pattern > static_cast<unsigned>(pattern_count(loc)))
      throw std::invalid_argument("fault pattern out of range");
    if (pattern_at[f.location] != 0)
      throw std::invalid_argument("duplicate fault location");
    pattern_at[f.location] = f.pattern;
  }

  for (int t = 0; t <= c.duration; ++t) {
    for (const auto& g : c.gates) {
      if (g.time != t) continue;
      switch (g.kind) {
        case GateKind::PrepZero:
        case GateKind::PrepPlus:
          break;  // fresh qubits carry no frame
        case GateKind::CX:
          // X_c -> X_c X_t, Z_t -> Z_c Z_t.
          if (x.get(g.q0)) x.flip(g.q1);
          if (z.get(g.q1)) z.flip(g.q0);
          break;
        case GateKind::CZ:
          // X_a -> X_a Z_b, X_b -> Z_a X_b.
          if (x.get(g.q0)) z.flip(g.q1);
          if (x.get(g.q1)) z.flip(g.q0);
          break;
        case GateKind::MeasX:
          // Outcome flips iff the frame holds a Z component here. No gate
          // can touch this qubit inside the measurement window, so reading
          // at the start is exact.
          if (z.get(g.q0)) flips.flip(g.q0 - c.n_ancilla);
          break;
      }
    }
    for (const auto& loc : locs) {
      if (loc.time != t || pattern_at[loc.index] == 0) continue;
      apply_pattern_to_frame(loc, pattern_at[loc.index], x, z, flips,
                             c.n_ancilla);
    }
  }
  return {flips, {x, z}};
}

NoiseModel NoiseModel::uniform(double eps) {
  NoiseModel m;
  m.epsilon = eps;
  return m;
}

NoiseModel NoiseModel::worst_case_filtering(double eps) {
  NoiseModel m;
  m.epsilon = eps;
  m.gates = false;
  m.inject = InjectMode::AlwaysRandomNonzero;
  return m;
}

bool NoiseModel::class_enabled(LocationClass cls) const {
  switch (cls) {
    case LocationClass::Preparation: return preparations;
    case LocationClass::Gate: return gates;
    case LocationClass::Idle: return idles;
    case LocationClass::Measurement: return measurements;
  }
  return false;
}

double NoiseModel::pattern_probability(const Location& loc,
                                       unsigned pattern) const {
  if (loc.cls == LocationClass::Measurement) return pattern == 1 ? 1.0 : 0.0;
  if (loc.arity == 2) return dist_2q[pattern - 1];
  return dist_1q[pattern - 1];
}

namespace {

// Single-fault effect in packed form (scan path; at most 64 qubits).
struct Effect {
  std::uint64_t flips = 0;
  std::uint64_t rx = 0;
  std::uint64_t rz = 0;
};

struct ScanSite {
  int location = 0;
  std::vector<unsigned> patterns;
  std::vector<double> probs;
  std::vector<Effect> effects;
};

Effect packed_effect(const Circuit& c, int location, unsigned pattern) {
  PropagateResult pr = propagate(c, {{location, pattern}});
  return {pr.flips.low64(), pr.residual.x.low64(), pr.residual.z.low64()};
}

}  // namespace

std::vector<ScanResult> exhaustive_scan(const Circuit& c, const CodeSpec& spec,
                                        int k_max, bool inject_arbitrary,
                                        const NoiseModel* model) {
  if (c.n_qubits() > 64)
    throw std::invalid_argument("exhaustive_scan supports at most 64 qubits");
  if (static_cast<std::size_t>(c.n_ancilla) != spec.n)
    throw std::invalid_argument("code does not match the circuit");
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");

  const std::size_t n = spec.n;
  const auto locs = locations(c);

  std::vector<ScanSite> sites;
  for (const auto& loc : locs) {
    if (model != nullptr && !model->class_enabled(loc.cls)) continue;
    ScanSite site;
    site.location = loc.index;
    const int count = pattern_count(loc);
    for (unsigned p = 1; p <= static_cast<unsigned>(count); ++p) {
      const double prob =
          model != nullptr ? model->pattern_probability(loc, p) : 1.0 / count;
      if (prob <= 0.0) continue;
      site.patterns.push_back(p);
      site.probs.push_back(prob);
      site.effects.push_back(packed_effect(c, loc.index, p));
    }
    if (!site.patterns.empty()) sites.push_back(std::move(site));
  }

  // Number of k-fault assignments (pattern choices included) via the
  // generating polynomial prod(1 + p_site * y).
  const double inject_factor =
      inject_arbitrary ? std::ldexp(1.0, static_cast<int>(n)) : 1.0;
  {
    std::vector<double> poly{1.0};
    for (const auto& site : sites) {
      const double p = static_cast<double>(site.patterns.size());
      poly.resize(std::min<std::size_t>(poly.size() + 1, k_max + 1), 0.0);
      for (std::size_t k = poly.size(); k-- > 1;) poly[k] += poly[k - 1] * p;
    }
    double total = 0.0;
    for (double v : poly) total += v;
    if (total * inject_factor > static_cast<double>(kScanBound))
      throw FeasibilityError("exhaustive_scan: fault combinations exceed bound",
                             total * inject_factor);
  }

  // Syndromes of all single input-bit errors, then of every input error by
  // subset XOR.
  std::vector<std::uint64_t> bit_flips(n);
  for (std::size_t b = 0; b < n; ++b) {
    BitVector e(n);
    e.set(b);
    bit_flips[b] = propagate(c, {}, &e).flips.low64();
  }
  std::vector<std::uint64_t> inj_flips;
  if (inject_arbitrary) {
    inj_flips.assign(std::size_t{1} << n, 0);
    for (std::uint64_t e = 1; e < inj_flips.size(); ++e)
      inj_flips[e] =
          inj_flips[e & (e - 1)] ^ bit_flips[std::countr_zero(e)];
  }

  const std::uint64_t ancilla_mask =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<ScanResult> results(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    ScanResult& rk = results[k];
    rk.k = k;
    rk.accepted_by_weight.assign(n + 1, 0);
    rk.accepted_coeff_plain.assign(n + 1, 0.0);
    rk.accepted_coeff_injected.assign(n + 1, 0.0);
  }

  // Records one (fault set, injection) event.
  const auto record = [&](ScanResult& rk, const std::vector<int>& combo,
                          const std::vector<std::size_t>& pick,
                          const Effect& base, double prob,
                          std::uint64_t injected) {
    ++rk.assignments;
    const std::uint64_t flips =
        base.flips ^ (injected ? inj_flips[injected] : 0);
    if (flips != 0) return;  // some check fired: ancilla discarded

    ++rk.accepted;
    const std::uint64_t residual = (base.rx & ancilla_mask) ^ injected;
    const BitVector residual_bits = BitVector::from_mask(residual, n);
    const int w = effective_weight(residual_bits, spec);
    const int sw = static_cast<int>(syndrome(spec.h, residual_bits).weight());
    rk.accepted_by_weight[w] += 1;
    (injected ? rk.accepted_coeff_injected : rk.accepted_coeff_plain)[w] +=
        prob;

    const int total = rk.k + (injected ? 1 : 0);
    const bool rule_total = w > total;
    const bool rule_excess = w > rk.k;
    const bool rule_coset = w > sw;
    if (!rule_total && !rule_excess && !rule_coset) return;

    ScanEvent ev;
    for (std::size_t i = 0; i < combo.size(); ++i)
      ev.faults.push_back({sites[combo[i]].location,
                           sites[combo[i]].patterns[pick[i]]});
    ev.injected = BitVector::from_mask(injected, n);
    ev.residual = residual_bits;
    ev.k = rk.k;
    ev.effective_weight = w;
    ev.syndrome_weight = sw;
    if (rule_total) {
      ++rk.violation_count;
      if (rk.violations.size() < kScanEventCap) rk.violations.push_back(ev);
    }
    if (rule_excess) {
      ++rk.excess_count;
      if (rk.excess_events.size() < kScanEventCap)
        rk.excess_events.push_back(ev);
    }
    if (rule_coset) {
      ++rk.coset_violation_count;
      if (rk.coset_violations.size() < kScanEventCap)
        rk.coset_violations.push_back(ev);
    }
  };

  const auto sweep = [&](ScanResult& rk, const std::vector<int>& combo,
                         const std::vector<std::size_t>& pick,
                         const Effect& base, double prob) {
    record(rk, combo, pick, base, prob, 0);
    if (!inject_arbitrary) return;
    for (std::uint64_t e = 1; e < inj_flips.size(); ++e)
      record(rk, combo, pick, base, prob, e);
  };

  for (int k = 0; k <= k_max; ++k) {
    ScanResult& rk = results[k];
    if (k > static_cast<int>(sites.size())) continue;
    if (k == 0) {
      sweep(rk, {}, {}, Effect{}, 1.0);
      continue;
    }

    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      // All pattern choices for this location combination.
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        Effect base;
        double prob = 1.0;
        for (int i = 0; i < k; ++i) {
          const auto& site = sites[combo[i]];
          base.flips ^= site.effects[pick[i]].flips;
          base.rx ^= site.effects[pick[i]].rx;
          base.rz ^= site.effects[pick[i]].rz;
          prob *= site.probs[pick[i]];
        }
        sweep(rk, combo, pick, base, prob);

        int d = k - 1;
        while (d >= 0 && pick[d] + 1 == sites[combo[d]].patterns.size())
          pick[d--] = 0;
        if (d < 0) break;
        ++pick[d];
      }

      // Next location combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && combo[i] == static_cast<int>(sites.size()) - k + i)
        --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return results;
}

McCounts monte_carlo(const Circuit& c, const CodeSpec& spec,
                     const NoiseModel& model, std::uint64_t trials,
                     std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (static_cast<std::size_t>(c.n_ancilla) != spec.n)
    throw std::invalid_argument("code does not match the circuit");
  if (model.inject == InjectMode::AlwaysRandomNonzero && spec.n > 64)
    throw std::invalid_argument("injection sampling supports at most 64 bits");

  const std::size_t n = spec.n;
  const auto locs = locations(c);

  struct McSite {
    int location;
    std::vector<double> cumulative;
    std::vector<PropagateResult> effects;
  };
  std::vector<McSite> sites;
  for (const auto& loc : locs) {
    if (!model.class_enabled(loc.cls)) continue;
    McSite site;
    site.location = loc.index;
    double cum = 0.0;
    const int count = pattern_count(loc);
    for (unsigned p = 1; p <= static_cast<unsigned>(count); ++p) {
      const double prob = model.pattern_probability(loc, p);
      if (prob <= 0.0) continue;
      cum += prob;
      site.cumulative.push_back(cum);
      site.effects.push_back(propagate(c, {{loc.index, p}}));
    }
    if (!site.effects.empty()) sites.push_back(std::move(site));
  }

  std::vector<PropagateResult> bit_effects;
  if (model.inject == InjectMode::AlwaysRandomNonzero) {
    for (std::size_t b = 0; b < n; ++b) {
      BitVector e(n);
      e.set(b);
      bit_effects.push_back(propagate(c, {}, &e));
    }
  }

  const std::uint64_t nonzero_mask =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const auto codeword_list = codewords(spec);

  McCounts counts;
  counts.trials = trials;
  counts.accepted_by_weight.assign(n + 1, 0);

  BitVector flips(c.n_verifier), rx(c.n_qubits());
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = trial_stream(seed, trial);
    for (std::size_t i = 0; i < flips.size(); ++i) flips.set(i, false);
    for (std::size_t i = 0; i < rx.size(); ++i) rx.set(i, false);
    std::uint64_t injected = 0;

    if (model.inject == InjectMode::AlwaysRandomNonzero) {
      do {
        injected = rng.next() & nonzero_mask;
      } while (injected == 0);
      for (std::uint64_t rest = injected; rest;) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        flips ^= bit_effects[b].flips;
      }
    }

    for (const auto& site : sites) {
      if (rng.uniform() >= model.epsilon) continue;
      const double u = rng.uniform() * site.cumulative.back();
      std::size_t pick = 0;
      while (u >= site.cumulative[pick] &&
             pick + 1 < site.cumulative.size())
        ++pick;
      flips ^= site.effects[pick].flips;
      rx ^= site.effects[pick].residual.x;
    }

    if (flips.any()) {
      ++counts.rejected;
      continue;
    }
    BitVector residual(n);
    for (std::size_t i = 0; i < n; ++i)
      residual.set(i, rx.get(i) ^ ((injected >> i) & 1));
    int best = static_cast<int>(residual.weight());
    for (const auto& cw : codeword_list)
      best = std::min(best, static_cast<int>((residual ^ cw).weight()));
    counts.accepted_by_weight[best] += 1;
  }
  return counts;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z) {
  if (trials == 0) return {0.0, 1.0};
  const double nd = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nd;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nd;
  const double center = (p + z2 / (2.0 * nd)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ScalingReport fit_scaling(const std::vector<ScalePoint>& points) {
  std::map<int, std::vector<std::pair<double, double>>> usable;  // w -> (x, y)
  std::map<int, bool> seen;
  for (const auto& pt : points) {
    seen[pt.weight] = true;
    if (pt.probability > 0.0 && pt.epsilon > 0.0)
      usable[pt.weight].push_back(
          {std::log(pt.epsilon), std::log(pt.probability)});
  }

  ScalingReport report;
  for (const auto& [w, _] : seen) {
    WeightFit fit;
    fit.weight = w;
    const auto it = usable.find(w);
    if (it != usable.end()) {
      fit.n_points = static_cast<int>(it->second.size());
      std::vector<double> xs;
      for (const auto& [x, y] : it->second)
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      if (xs.size() >= 2) {
        double mx = 0.0, my = 0.0;
        for (const auto& [x, y] : it->second) {
          mx += x;
          my += y;
        }
        mx /= fit.n_points;
        my /= fit.n_points;
        double num = 0.0, den = 0.0;
        for (const auto& [x, y] : it->second) {
          num += (x - mx) * (y - my);
          den += (x - mx) * (x - mx);
        }
        fit.determinate = true;
        fit.slope = num / den;
        fit.prefactor = std::exp(my - fit.slope * mx);
      }
    }
    report.fits.push_back(fit);
  }
  return report;
}

}  // namespace qfilter
