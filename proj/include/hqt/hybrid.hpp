#pragma once

#include <complex>

#include "hqt/fock.hpp"

namespace hqt {

using cplx = std::complex<double>;

// Logical basis: |0> = |+>|alpha>, |1> = |->|-alpha> with |+-> = (|H>+-|V>)/sqrt2.
// The two basis states are exactly orthonormal, so (a, b) is an ordinary qubit
// amplitude pair riding on the physical carrier amplitude alpha.
struct HybridQubit {
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
  double alpha = 1.0;

  void normalize();
  // Gauge fix for comparisons: global phase chosen so a is real and >= 0
  // (or b if a vanishes).
  void canonicalize();

  void pauli_x() { std::swap(a, b); }
  void pauli_z() { b = -b; }
  void hadamard();
};

double fidelity(const HybridQubit& p, const HybridQubit& q);

// Z-basis measurement of the logical qubit (probabilities |a|^2, |b|^2).
int measure_z(const HybridQubit& q, Rng& rng);

// Embed into a 3-mode Fock register [RailH, RailV, Coherent].
// coh_dim <= 0 picks default_cutoff(alpha)+1; rail_dim is normally 2 but the
// Bell-measurement circuits need 3 for bunched rails.
fock::State embed_fock(const HybridQubit& q, int rail_dim = 2, int coh_dim = 0);

// Embed a two-qubit logical amplitude vector (|00>,|01>,|10>,|11>) as a
// 6-mode register [q1H,q1V,q1C, q2H,q2V,q2C].
fock::State embed_logical_pair(const Eigen::Vector4cd& amps, double alpha,
                               int coh1 = 0, int coh2 = 0);

// Inverse of embed_fock: project a 3-mode register onto the logical basis.
// Throws if the weight outside span{|0>,|1>} exceeds `tol`.
HybridQubit extract_logical(const fock::State& s, double alpha,
                            double tol = 1e-6);

}  // namespace hqt
