#include "hqt/threshold.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "hqt/loss.hpp"
#include "hqt/steane.hpp"

namespace hqt::threshold {

GateErrorTable GateErrorTable::from_physical(double eta, double alpha,
                                             Strategy s) {
  // merge-based generation feeds sqrt2-amplitude carriers through the
  // channel, fusion-based generation plain-amplitude ones
  const double mem_alpha =
      s == Strategy::GAlpha ? std::sqrt(2.0) * alpha : alpha;
  const double p = loss::memory_error_rate(eta, mem_alpha);
  const double pf = lossy_failure_probability(alpha, eta);
  GateErrorTable t;
  t.memory = {0.0, p, 0.0};
  t.prep_plus = {0.0, p, 0.0};
  t.hadamard = {pf, p, p};
  t.cz_per_side = {pf, 1.0 - (1.0 - p) * (1.0 - p), 0.0};
  t.measure_x = {0.0, 0.0, 0.0};
  return t;
}

GateErrorTable GateErrorTable::uniform(double loc, double unloc, double z_loc,
                                       double x_loc) {
  // Located (heralded) round failures feed the teleported gates of the next
  // level; preparation is verified offline and memory / readout locations are
  // not teleportations, so they inherit only the silent rates -- the same
  // shape as the physical table.
  GateErrorTable t;
  const GateErrors silent{0.0, unloc, unloc};
  const GateErrors teleported{loc, unloc, unloc, z_loc, x_loc};
  t.memory = silent;
  t.prep_plus = silent;
  t.hadamard = teleported;
  t.cz_per_side = teleported;
  t.measure_x = silent;
  return t;
}

namespace {

struct Q {
  bool x = false, z = false;
  bool loc = false;          // full located failure (erased in both bases)
  bool xloc = false, zloc = false;  // known-location single-basis coin flips
};

// Every location consumes a fixed number of uniforms so trial streams stay
// aligned across parameter values (monotone coupling for the bisection).
void apply_errors(const GateErrors& g, Q& q, Rng& rng) {
  const double uloc = rng.uniform();
  const double uz = rng.uniform();
  const double ux = rng.uniform();
  const double urx = rng.uniform();
  const double urz = rng.uniform();
  const double uzl = rng.uniform();
  const double uxl = rng.uniform();
  const double uzlc = rng.uniform();
  const double uxlc = rng.uniform();
  if (uloc < g.fail_loc) {
    q.loc = true;
    q.x = urx < 0.5;
    q.z = urz < 0.5;
  }
  if (uzl < g.z_loc) {
    q.zloc = true;
    if (uzlc < 0.5) q.z = !q.z;
  }
  if (uxl < g.x_loc) {
    q.xloc = true;
    if (uxlc < 0.5) q.x = !q.x;
  }
  if (uz < g.z_unloc) q.z = !q.z;
  if (ux < g.x_unloc) q.x = !q.x;
}

void hadamard(const GateErrors& g, Q& q, Rng& rng) {
  std::swap(q.x, q.z);
  std::swap(q.xloc, q.zloc);
  apply_errors(g, q, rng);
}

// Teleported controlled-phase: a located failure on one side also strips the
// partner of its correction, i.e. a coin-flip Z there.  The coin flip sits at
// a known location (the failure itself is heralded), so the partner is
// phase-erased rather than silently dephased.
void cz(const GateErrors& g, Q& a, Q& b, Rng& rng) {
  // a partner whose X content is already unknown (located earlier) hands the
  // qubit a phase flip at a known location, not a silent one
  const bool a_unknown_x = a.loc || a.xloc;
  const bool b_unknown_x = b.loc || b.xloc;
  a.z ^= b.x;
  b.z ^= a.x;
  a.zloc = a.zloc || b_unknown_x;
  b.zloc = b.zloc || a_unknown_x;
  for (Q* side : {&a, &b}) {
    Q* other = side == &a ? &b : &a;
    const double uloc = rng.uniform();
    const double uz = rng.uniform();
    const double urx = rng.uniform();
    const double urz = rng.uniform();
    const double upart = rng.uniform();
    const double uzl = rng.uniform();
    const double uxl = rng.uniform();
    const double uzlc = rng.uniform();
    const double uxlc = rng.uniform();
    if (uloc < g.fail_loc) {
      side->loc = true;
      side->x = urx < 0.5;
      side->z = urz < 0.5;
      other->zloc = true;
      if (upart < 0.5) other->z = !other->z;
    }
    if (uzl < g.z_loc) {
      side->zloc = true;
      if (uzlc < 0.5) side->z = !side->z;
    }
    if (uxl < g.x_loc) {
      side->xloc = true;
      if (uxlc < 0.5) side->x = !side->x;
    }
    if (uz < g.z_unloc) side->z = !side->z;
  }
}

struct BlockMasks {
  uint8_t err = 0, loc = 0;
};

}  // namespace

RoundOutcome run_telecorrection_round(const GateErrorTable& t, Rng& rng) {
  Q D[7], A1[7], A2[7];
  for (int i = 0; i < 7; ++i) apply_errors(t.prep_plus, A1[i], rng);
  for (int i = 0; i < 7; ++i) apply_errors(t.prep_plus, A2[i], rng);
  for (int i = 0; i < 7; ++i) hadamard(t.hadamard, A2[i], rng);
  for (int i = 0; i < 7; ++i) cz(t.cz_per_side, A1[i], A2[i], rng);
  for (int i = 0; i < 7; ++i) apply_errors(t.memory, D[i], rng);
  for (int i = 0; i < 7; ++i) cz(t.cz_per_side, D[i], A1[i], rng);
  for (int i = 0; i < 7; ++i) hadamard(t.hadamard, D[i], rng);

  BlockMasks mD, mA1;
  for (int i = 0; i < 7; ++i) {
    apply_errors(t.measure_x, D[i], rng);
    apply_errors(t.measure_x, A1[i], rng);
    if (D[i].z) mD.err |= uint8_t(1u << i);
    if (D[i].loc || D[i].zloc) mD.loc |= uint8_t(1u << i);
    if (A1[i].z) mA1.err |= uint8_t(1u << i);
    if (A1[i].loc || A1[i].zloc) mA1.loc |= uint8_t(1u << i);
  }

  RoundOutcome out;
  auto fold = [&out](steane::DecodeResult d, bool* logical, bool* erased) {
    if (d.heralded_failure)
      *erased = true;
    else if (d.logical_error)
      *logical = !*logical;
  };
  // data-block X measurement fixes the output Z frame; ancilla A1 fixes X
  fold(steane::decode_with_erasures(mD.err, mD.loc), &out.logical_z,
       &out.z_erased);
  fold(steane::decode_with_erasures(mA1.err, mA1.loc), &out.logical_x,
       &out.x_erased);

  // residual errors left on the output block, judged by an ideal decoder
  BlockMasks oX, oZ;
  for (int i = 0; i < 7; ++i) {
    if (A2[i].x) oX.err |= uint8_t(1u << i);
    if (A2[i].z) oZ.err |= uint8_t(1u << i);
    if (A2[i].loc || A2[i].xloc) oX.loc |= uint8_t(1u << i);
    if (A2[i].loc || A2[i].zloc) oZ.loc |= uint8_t(1u << i);
  }
  fold(steane::decode_with_erasures(oX.err, oX.loc), &out.logical_x,
       &out.x_erased);
  fold(steane::decode_with_erasures(oZ.err, oZ.loc), &out.logical_z,
       &out.z_erased);
  if (out.z_erased && out.x_erased) {
    out.located_failure = true;
    out.z_erased = out.x_erased = false;
  }
  return out;
}

LevelRates estimate_level_rates(const GateErrorTable& t, long trials,
                                uint64_t master_seed, uint64_t stream_tag) {
  long n_loc = 0, n_zl = 0, n_xl = 0, n_x = 0, n_z = 0;
  for (long i = 0; i < trials; ++i) {
    Rng rng = Rng::stream(master_seed, stream_tag, uint64_t(i), 0);
    RoundOutcome o = run_telecorrection_round(t, rng);
    if (o.located_failure) {
      ++n_loc;
      continue;
    }
    if (o.z_erased) ++n_zl;
    else if (o.logical_z) ++n_z;
    if (o.x_erased) ++n_xl;
    else if (o.logical_x) ++n_x;
  }
  LevelRates r;
  r.located = double(n_loc) / double(trials);
  r.z_located = double(n_zl) / double(trials);
  r.x_located = double(n_xl) / double(trials);
  r.unlocated = double(std::max(n_x, n_z)) / double(trials);
  return r;
}

ConvergenceResult assess_convergence(double eta, double alpha, Strategy s,
                                     long trials, uint64_t master_seed,
                                     int max_levels) {
  ConvergenceResult res;
  GateErrorTable t = GateErrorTable::from_physical(eta, alpha, s);
  for (int lvl = 1; lvl <= max_levels; ++lvl) {
    LevelRates r =
        estimate_level_rates(t, trials, master_seed, uint64_t(lvl));
    res.levels.push_back(r);
    if (r.located + r.z_located + r.x_located > 0.75 || r.unlocated > 0.25) {
      res.below_threshold = false;
      return res;
    }
    if (r.total() < 1e-4) {
      res.below_threshold = true;
      return res;
    }
    t = GateErrorTable::uniform(r.located, r.unlocated, r.z_located,
                                r.x_located);
  }
  res.below_threshold = res.levels.back().total() < res.levels.front().total();
  return res;
}

ThresholdPoint find_threshold(double alpha, Strategy s, long trials,
                              uint64_t master_seed, double eta_hi, double tol) {
  ThresholdPoint pt;
  pt.alpha = alpha;
  auto ok = [&](double eta) {
    return assess_convergence(eta, alpha, s, trials, master_seed)
        .below_threshold;
  };
  if (!ok(0.0)) {
    pt.eta_threshold = 0.0;
    return pt;
  }
  double lo = 0.0, hi = eta_hi;
  if (ok(hi)) {
    pt.eta_threshold = hi;  // saturated the search window
    return pt;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  pt.eta_threshold = 0.5 * (lo + hi);
  return pt;
}

std::vector<ThresholdPoint> threshold_sweep(const std::vector<double>& alphas,
                                            Strategy s, long trials,
                                            uint64_t master_seed, int threads,
                                            double eta_hi, double tol) {
  std::vector<ThresholdPoint> out(alphas.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < alphas.size();
         i = next.fetch_add(1))
      out[i] = find_threshold(alphas[i], s, trials, master_seed, eta_hi, tol);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace hqt::threshold
