#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hqt/rng.hpp"

namespace hqt::fock {

using cplx = std::complex<double>;

// What a mode physically carries.  Rail modes hold the dual-rail polarization
// photon (H rail / V rail); coherent modes hold the cat-amplitude carrier.
enum class ModeKind { Coherent, RailH, RailV };

struct Mode {
  int dim = 2;  // occupation cutoff + 1
  ModeKind kind = ModeKind::Coherent;
};

// Default truncation: cutoff = ceil(alpha^2 + 6*alpha + 10); callers pass the
// largest amplitude a mode will ever hold (e.g. sqrt(2)*alpha ahead of a
// beam-splitter merge).
int default_cutoff(double alpha);

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense state vector over a small register of truncated bosonic modes.
// Mode 0 varies slowest.  Norm lost to truncation is accumulated in
// leakage(); operations throw TruncationError once it passes the bound.
struct Branch;

class State {
 public:
  State() = default;
  explicit State(std::vector<Mode> modes, double leakage_bound = 1e-8);

  static State vacuum(std::vector<Mode> modes, double leakage_bound = 1e-8);

  int mode_count() const { return int(m_modes.size()); }
  const Mode& mode(int m) const { return m_modes[size_t(m)]; }
  Eigen::Index dim() const { return m_amp.size(); }
  const Eigen::VectorXcd& amplitudes() const { return m_amp; }
  Eigen::VectorXcd& amplitudes() { return m_amp; }

  double leakage() const { return m_leakage; }
  double leakage_bound() const { return m_leakage_bound; }
  void set_leakage_bound(double b) { m_leakage_bound = b; }

  Eigen::Index flat_index(std::span<const int> occ) const;
  cplx& at(std::initializer_list<int> occ);
  cplx at(std::initializer_list<int> occ) const;

  double norm() const { return m_amp.norm(); }
  void normalize();

  // --- mode-level linear optics --------------------------------------------
  void apply_phase(int m, double theta);  // |n> -> e^{i n theta} |n>
  // Extend a 2x2 mode transformation (columns = images of the two input
  // creation operators) to the truncated Fock space of modes (m1, m2).
  void apply_coupler(int m1, int m2, const Eigen::Matrix2cd& u);
  void apply_one_mode(int m, const Eigen::MatrixXcd& op);
  void resize_mode(int m, int new_dim);
  // Remove a mode that is exactly in occupation `n` (post-measurement).
  void remove_definite_mode(int m, int n);

  // --- composition / analysis ----------------------------------------------
  friend State tensor(const State& a, const State& b);
  cplx inner(const State& other) const;  // <this|other>
  Eigen::MatrixXcd reduced_density(std::span<const int> keep) const;
  double fidelity_with(const State& pure) const;  // <pure| rho_this |pure>

  // Project mode m onto each occupation number in turn.
  std::vector<Branch> branches_by_occupation(int m) const;

 private:
  std::vector<Mode> m_modes;
  std::vector<Eigen::Index> m_stride;
  Eigen::VectorXcd m_amp;
  double m_leakage = 0.0;
  double m_leakage_bound = 1e-8;

  void rebuild_strides();
  void check_leakage() const;
};

State tensor(const State& a, const State& b);

// One projective-measurement branch of a register.
struct Branch {
  int key = 0;  // occupation number / outcome label
  double weight = 0.0;
  State state;  // normalized
};

// Reorder modes; new_order[i] names the old index that becomes mode i.
State permute_modes(const State& s, const std::vector<int>& new_order);

// Split off modes that factor out exactly (e.g. measured carriers after a
// parity projection).  Throws if the Schmidt weight outside the principal
// component exceeds tol (relative).
State factor_out_modes(const State& s, const std::vector<int>& drop,
                       double tol = 1e-9);

// Single coherent mode |alpha>; dim defaults to default_cutoff(alpha)+1.
State coherent_state(double alpha, int dim = 0);

// Symmetric 50:50 beam splitter in the Hadamard (real) convention:
// a -> (a+b)/sqrt2, b -> (a-b)/sqrt2, so |alpha>|alpha> -> |sqrt2 alpha>|0>.
void beam_splitter_50_50(State& s, int m1, int m2);

// Photon loss with probability eta on mode m via a vacuum-ancilla beam
// splitter of transmissivity 1-eta; branches keyed by photons lost.
std::vector<Branch> loss_channel(const State& s, int m, double eta);

// --- detectors --------------------------------------------------------------

enum class Parity { Zero = 0, EvenNonzero = 1, Odd = 2 };

// PNPD: three-outcome POVM {vacuum, even>0, odd}.
std::array<double, 3> parity_probs(const State& s, int m);
struct PnpdResult {
  Parity outcome;
  State post;
};
PnpdResult measure_pnpd(const State& s, int m, Rng& rng);
State project_parity(const State& s, int m, Parity p, double* prob = nullptr);

// On/off detector: {no click, click}.
std::array<double, 2> onoff_probs(const State& s, int m);
struct OnOffResult {
  bool click;
  State post;
};
OnOffResult measure_onoff(const State& s, int m, Rng& rng);
State project_onoff(const State& s, int m, bool click, double* prob = nullptr);

}  // namespace hqt::fock
