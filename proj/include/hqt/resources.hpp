#pragma once

#include "hqt/channels.hpp"

namespace hqt::resources {

// Channel mix consumed by one error-correction round (7-qubit block,
// telecorrection by gate teleportation): measurement-free Hadamards need a
// |Z> channel each, controlled-phase gates a |Z'> channel each, plus a flat
// overhead for preparing the diagonal ancilla blocks.
inline constexpr int kHadamardChannelsPerRound = 98;
inline constexpr int kCzChannelsPerRound = 343;
inline constexpr int kDiagonalPrepCost = 164;

// Average entangled-pair count (two-photon + hybrid) to produce one channel,
// i.e. attempt cost divided by per-attempt success probability.
double average_channel_cost(ChannelKind target, Strategy s, double alpha);

// Average pairs per error-correction round.  Fusion-based generation is
// alpha-independent; merge-based generation decays towards its asymptote as
// alpha grows.
double total_round_cost(Strategy s, double alpha);

// Merge-based generation cost in the limit alpha -> infinity.
double merge_asymptotic_round_cost();

// Amplitude above which merge-based generation beats fusion-based generation,
// located by bisection to `tol`.
double crossover_alpha(double tol = 1e-6);

}  // namespace hqt::resources
