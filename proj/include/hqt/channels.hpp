#pragma once

#include <map>

#include "hqt/teleport.hpp"

namespace hqt {

enum class Strategy { GI, GAlpha };

const char* to_string(Strategy s);

// Raw primitives consumed by the generation schemes.  Hybrid pairs are
// tracked per carrier-amplitude class (0: alpha, 1: sqrt2*alpha, 2: 2*alpha)
// because the merging ladder doubles amplitudes.
struct ResourceTally {
  long two_photon_pairs = 0;
  long hybrid_pairs = 0;
  std::map<int, long> hybrid_by_amplitude_class;

  long total() const { return two_photon_pairs + hybrid_pairs; }
  ResourceTally& operator+=(const ResourceTally& o);
};

// Per-attempt primitive consumption (everything is discarded on failure; no
// partial reuse across attempts).
ResourceTally attempt_cost(ChannelKind target, Strategy s);

// Per-attempt success probability.
double generation_success_probability(ChannelKind target, Strategy s,
                                      double alpha);

struct GenerationResult {
  bool success = false;
  ChannelKind target = ChannelKind::PsiC;
  ResourceTally consumed;  // primitives burned by this attempt
};

// Sample one generation attempt (offline, repeat-until-success at the caller).
GenerationResult attempt_generation(ChannelKind target, Strategy s,
                                    double alpha, Rng& rng);

// --- Fock-circuit construction (oracle checks) ------------------------------

// Run the generation circuit on the brute-force register and return the
// normalized post-correction state with mode layout
// [q1H,q1V,q1C, q2H,q2V,q2C], conditioned on overall success.
// `success_probability` receives the exact per-attempt success weight.
fock::State oracle_generate_psi_c(Strategy s, double alpha,
                                  double* success_probability = nullptr,
                                  int coh_dim = 0);
fock::State oracle_generate_z(Strategy s, double alpha,
                              double* success_probability = nullptr,
                              int coh_dim = 0);

// Analytic embeddings of the targets for fidelity comparison.
fock::State ideal_psi_c(double alpha, int coh_dim = 0);
fock::State ideal_z(double alpha, int coh_dim = 0);

}  // namespace hqt
