#pragma once

#include <vector>

#include "hqt/hybrid.hpp"

namespace hqt::loss {

// Dephasing rate of a hybrid qubit after both constituents pass a channel of
// loss probability eta:  p = (1 - (1-eta) e^{-2 eta alpha^2}) / 2.
double memory_error_rate(double eta, double alpha);

// What the channel did to the qubit, as heralded later by the measurement
// that consumes it.
enum class LossBranch {
  KeptPlus,    // photon survived, even-parity carrier branch (no error)
  KeptMinus,   // photon survived, odd-parity carrier branch (logical Z)
  LostPlus,    // photon lost, carrier projected onto a|a'> + b|-a'>
  LostMinus,   // photon lost, carrier projected onto a|a'> - b|-a'>
};

struct LossEnsembleEntry {
  LossBranch branch;
  double weight;        // exact probability for this input state
  HybridQubit state;    // surviving qubit at amplitude sqrt(1-eta)*alpha;
                        // for Lost* branches only the carrier is meaningful
};

// Exact branch decomposition of one hybrid qubit under photon loss eta on the
// single-photon part and matched amplitude damping on the carrier.  Weights
// sum to 1; Kept branches carry weight (1-eta)(1 +- e^{-2 eta alpha^2})/2
// independent of the input, Lost branches carry eta * N_+-/2 with the exact
// carrier norms N_+- = || a|a'> +- b|-a'> ||^2.
std::vector<LossEnsembleEntry> evolve_hybrid_under_loss(const HybridQubit& q,
                                                        double eta);

// Norms N_+- used in the Lost* weights; both equal 1 exactly when
// |a| = |b| or when Re(conj(a) b) = 0 scaled suitably -- exposing them keeps
// the worst-case model (N_+- := 1) honest in tests.
std::array<double, 2> lost_branch_norms(const HybridQubit& q, double eta);

}  // namespace hqt::loss
