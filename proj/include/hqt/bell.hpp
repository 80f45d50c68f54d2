#pragma once

#include <array>
#include <string>
#include <vector>

#include "hqt/fock.hpp"
#include "hqt/hybrid.hpp"

namespace hqt::bell {

// --- B_alpha: beam splitter + two PNPDs on the coherent carriers ------------

enum class BAlphaOutcome {
  Even0,     // (even>0, vacuum)
  Odd0,      // (odd, vacuum)
  ZeroEven,  // (vacuum, even>0)
  ZeroOdd,   // (vacuum, odd)
  Failure    // (vacuum, vacuum)
};

const char* to_string(BAlphaOutcome o);

// exp(-2 alpha^2): failure weight of B_alpha, independent of the qubit pair.
double b_alpha_failure_probability(double alpha);

// Outcome distribution for B_alpha on the carriers of two independent hybrid
// qubits (a,b) and (a',b').  Derived from the exact beam-splitter expansion.
std::array<double, 5> b_alpha_outcome_probs(const HybridQubit& q1,
                                            const HybridQubit& q2);

// Apply the B_alpha circuit (beam splitter + two PNPDs) on coherent modes
// (m1, m2) of a Fock register.  Returns one branch per joint parity outcome;
// anomalous combinations (both detectors firing) are reported so tests can
// bound them.
struct BAlphaBranch {
  BAlphaOutcome outcome;
  fock::Parity p1, p2;
  double weight;
  fock::State state;
};
std::vector<BAlphaBranch> b_alpha_branches(const fock::State& s, int m1,
                                           int m2);

// --- B_II: modified type-II fusion on two dual-rail photons -----------------
//
// Circuit: half-wave plates on the second input (H -> -V, V -> H), polarizing
// beam splitter, 22.5 degree plates on each output port, four on/off
// detectors.  Identifies |HV> - |VH| on clicks (H,H)/(V,V) and |HV> + |VH> on
// (H,V)/(V,H); bunched ports herald the product outcomes instead.

enum class BIIClass {
  PsiMinus,   // one click per port, equal labels
  PsiPlus,    // one click per port, opposite labels
  UpperOnly,  // clicks confined to the upper port (projects |H> / |HH>)
  LowerOnly,  // clicks confined to the lower port (projects |V> / |VV>)
  NoClick
};

const char* to_string(BIIClass c);

// Detector pattern -> class.  Index bit order: (c+, c-, d+, d-).
BIIClass classify_bii_pattern(bool cp, bool cm, bool dp, bool dm);

struct BIIBranch {
  BIIClass cls;
  std::array<bool, 4> clicks;  // c+, c-, d+, d-
  double weight;
  fock::State state;
  int photons_detected;
};

// Run the fusion circuit on rail modes (aH,aV) x (bH,bV).
std::vector<BIIBranch> b_ii_branches(const fock::State& s, int aH, int aV,
                                     int bH, int bV);

// --- B_I: type-I fusion -----------------------------------------------------
//
// PBS, one output port measured in the rotated basis with photon-number
// discrimination, kept photon rotated H->+, V->-.  Click (H): |+><H|<H| -
// |-><V|<V| ; click (V): plus sign; zero or two photons detected: failure.

enum class BIOutcome { ClickH, ClickV, Failure };

const char* to_string(BIOutcome o);

struct BIBranch {
  BIOutcome outcome;
  int detected_photons;
  double weight;
  fock::State state;  // kept photon lives on the former (aH, aV) rails
};

std::vector<BIBranch> b_i_branches(const fock::State& s, int aH, int aV,
                                   int bH, int bV);

// --- multiphoton contamination (order-lambda branch analysis) ---------------

enum class MultiphotonFate {
  IndistinctFailure,    // looks like an ordinary fusion failure
  ContaminatingSuccess, // passes as success, contaminates the channel
  DetectedDiscard,      // number-resolved detection flags it; state discarded
  NoticedZError,        // passes as success but with an unnoticed Pauli-Z
  CleanSuccess
};

struct MultiphotonCase {
  std::string input;  // e.g. "|2H>|V>"
  std::string clicks;
  MultiphotonFate fate;
  double weight;  // relative weight among the contaminated branches
};

struct MultiphotonReport {
  std::vector<MultiphotonCase> b_i_cases;
  std::vector<MultiphotonCase> b_ii_cases;
  // Fraction of contamination-carrying success candidates that the
  // number-resolving detectors remove in B_I.
  double b_i_discarded_fraction;
  // Among contaminated B_II successes: half correct, half silent Z.
  double b_ii_correct_fraction;
  double b_ii_z_error_fraction;
};

// Enumerates the order-lambda branches for a double-pair emission feeding the
// fusion gates.  Pure case analysis; no sampling.
MultiphotonReport multiphoton_branch_analysis();

}  // namespace hqt::bell
