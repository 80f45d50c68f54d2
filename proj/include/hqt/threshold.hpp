#pragma once

#include <cstdint>
#include <vector>

#include "hqt/channels.hpp"
#include "hqt/rng.hpp"

namespace hqt::threshold {

// Error rates of one gate (or wait) location.  `fail_loc` is a located
// failure: the qubit is known lost and replaced by a depolarized one.
// `z_unloc` / `x_unloc` are silent Pauli flips.
struct GateErrors {
  double fail_loc = 0.0;
  double z_unloc = 0.0;
  double x_unloc = 0.0;
  // single-basis erasures: a coin-flip Pauli at a known location (e.g. an
  // output block whose Z frame could not be decoded last round)
  double z_loc = 0.0;
  double x_loc = 0.0;
};

struct GateErrorTable {
  GateErrors memory;
  GateErrors prep_plus;
  GateErrors hadamard;
  GateErrors cz_per_side;
  GateErrors measure_x;

  // Physical rates at the bottom level: teleported gates fail (located) with
  // the lossy teleportation failure probability; dephasing from carrier loss
  // contributes silent Z; the teleported Hadamard also converts dephasing
  // into silent X on its output.
  static GateErrorTable from_physical(double eta, double alpha, Strategy s);

  // Concatenation levels above the first: round outcomes feed the teleported
  // gates (Hadamard, CZ) of the next level; preparation is verified offline
  // and memory / readout are not teleportations, so they stay silent-only.
  static GateErrorTable uniform(double loc, double unloc, double z_loc = 0.0,
                                double x_loc = 0.0);
};

// Outcome of one simulated telecorrection round.  A decode ambiguity in one
// basis leaves that frame of the output unknown (single-basis erasure); both
// frames unknown is a full located failure.
struct RoundOutcome {
  bool located_failure = false;
  bool z_erased = false;  // output Z frame unknown
  bool x_erased = false;  // output X frame unknown
  bool logical_x = false;
  bool logical_z = false;
};

RoundOutcome run_telecorrection_round(const GateErrorTable& t, Rng& rng);

// Monte-Carlo estimate of the round's logical rates.
struct LevelRates {
  double located = 0.0;    // both frames lost
  double z_located = 0.0;  // Z frame lost only
  double x_located = 0.0;  // X frame lost only
  double unlocated = 0.0;  // max of silent logical-X and logical-Z rates

  double total() const { return located + z_located + x_located + unlocated; }
};

LevelRates estimate_level_rates(const GateErrorTable& t, long trials,
                                uint64_t master_seed, uint64_t stream_tag);

struct ConvergenceResult {
  bool below_threshold = false;
  std::vector<LevelRates> levels;  // rates after each concatenation level
};

// Iterate the two-parameter level map from the physical table and report
// whether the logical rates contract.
ConvergenceResult assess_convergence(double eta, double alpha, Strategy s,
                                     long trials, uint64_t master_seed,
                                     int max_levels = 12);

struct ThresholdPoint {
  double alpha = 0.0;
  double eta_threshold = 0.0;  // 0 when even eta=0 fails to converge
};

// Largest loss rate that still converges at this alpha, by bisection.
ThresholdPoint find_threshold(double alpha, Strategy s, long trials,
                              uint64_t master_seed, double eta_hi = 0.2,
                              double tol = 1e-4);

// Evaluate a grid of alphas, fanning points out over `threads` workers.
// Results depend only on the seed, never on the thread count or completion
// order.
std::vector<ThresholdPoint> threshold_sweep(const std::vector<double>& alphas,
                                            Strategy s, long trials,
                                            uint64_t master_seed,
                                            int threads = 1,
                                            double eta_hi = 0.2,
                                            double tol = 1e-4);

}  // namespace hqt::threshold
