#pragma once

#include <optional>
#include <vector>

#include "hqt/bell.hpp"
#include "hqt/hybrid.hpp"

namespace hqt {

enum class ChannelKind { PsiC, Z, Zprime };

const char* to_string(ChannelKind k);

struct PauliFrame {
  int j = 0;  // X exponent
  int k = 0;  // Z exponent
};

// Deterministic part of Fig.-style feed-forward: joint (B_alpha, B_II)
// outcome -> Pauli frame.  Throws on the one genuinely fatal combination
// (B_alpha failure with no projective information from B_II).
struct FeedforwardEntry {
  bool possible = true;   // can this combination occur at all?
  bool failure = false;   // teleportation failed (depolarize)
  PauliFrame frame;
};

const FeedforwardEntry& feedforward_entry(bell::BAlphaOutcome a,
                                          bell::BIIClass b);
PauliFrame apply_feedforward(PauliFrame f, bell::BAlphaOutcome a,
                             bell::BIIClass b);

// Closed forms ---------------------------------------------------------------

// P_f = exp(-2 alpha^2)/2: both Bell measurements must fail.
double failure_probability(double alpha);

// Published lossy failure probability with alpha' = sqrt(1-eta) alpha:
//   (1-eta) exp(-2 alpha'^2)/2 + eta * 2/(1 + exp(2 alpha'^2)).
double lossy_failure_probability(double alpha, double eta);

// Circuit-exact counterpart used by the oracle cross-check: the photon-lost
// branch fails only when both carrier detectors stay dark, giving
//   (1-eta) exp(-2 alpha'^2)/2 + eta exp(-2 alpha'^2).
double lossy_failure_probability_exact(double alpha, double eta);

// Fast-path teleportation ----------------------------------------------------

struct TeleportResult {
  bool success = true;
  bell::BAlphaOutcome outcome_alpha = bell::BAlphaOutcome::Even0;
  bell::BIIClass outcome_ii = bell::BIIClass::UpperOnly;
  PauliFrame frame;
  HybridQubit output;  // corrected output; depolarized on failure
};

// Teleport through Psi_C (identity) or |Z> (Hadamard).  Exact analytic
// branch probabilities; no Fock tensors involved.
TeleportResult teleport(const HybridQubit& in, ChannelKind channel, Rng& rng);

// CZ gate by double teleportation through |Z'>.  Output is the two-qubit
// logical amplitude vector (|00>,|01>,|10>,|11>) after feed-forward; each
// side reports its own failure flag (failed side depolarized).
struct TeleportCzResult {
  bool success_a = true, success_b = true;
  Eigen::Vector4cd output;
};
TeleportCzResult teleport_cz(const HybridQubit& a, const HybridQubit& b,
                             Rng& rng);

// Fock-oracle teleportation --------------------------------------------------

// One joint outcome of the brute-force circuit: B_alpha on the carriers, the
// fusion circuit on the photon rails, feed-forward applied to the output
// qubit, fidelity evaluated against the ideal gate action.
struct OracleOutcome {
  bell::BAlphaOutcome outcome_alpha;
  bell::BIIClass outcome_ii;
  bool failure;
  double probability;
  double fidelity;  // of the corrected output vs the ideal action (success only)
};

// Full outcome distribution of the teleportation circuit for channel PsiC or
// Z.  Deterministic; sampling reduces to a categorical draw over these rows.
std::vector<OracleOutcome> oracle_teleport_distribution(const HybridQubit& in,
                                                        ChannelKind channel);

// Oracle teleportation with a photon deleted from the input's single-photon
// modes (heralded-loss invariant check).
std::vector<OracleOutcome> oracle_teleport_photon_lost(const HybridQubit& in);

}  // namespace hqt
