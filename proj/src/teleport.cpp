#include "hqt/teleport.hpp"

#include <cmath>
#include <map>

namespace hqt {

const char* to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::PsiC: return "psi_c";
    case ChannelKind::Z: return "z";
    case ChannelKind::Zprime: return "z_prime";
  }
  return "?";
}

using bell::BAlphaOutcome;
using bell::BIIClass;

namespace {

struct TableKey {
  BAlphaOutcome a;
  BIIClass b;
  bool operator<(const TableKey& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

// Derived once from the exact beam-splitter expansion of the measurement
// circuit (see tests/test_teleport.cpp for the oracle re-derivation).  The
// bunched/lossy classes carry the same correction as the corresponding
// product projection, which is what makes on/off detectors sufficient.
const std::map<TableKey, FeedforwardEntry>& table() {
  static const std::map<TableKey, FeedforwardEntry> t = [] {
    std::map<TableKey, FeedforwardEntry> m;
    auto set = [&m](BAlphaOutcome a, BIIClass b, int j, int k) {
      m[{a, b}] = FeedforwardEntry{true, false, {j, k}};
    };
    auto fail = [&m](BAlphaOutcome a, BIIClass b) {
      m[{a, b}] = FeedforwardEntry{true, true, {0, 0}};
    };
    auto imp = [&m](BAlphaOutcome a, BIIClass b) {
      m[{a, b}] = FeedforwardEntry{false, false, {0, 0}};
    };

    set(BAlphaOutcome::Even0, BIIClass::UpperOnly, 0, 0);
    set(BAlphaOutcome::Even0, BIIClass::LowerOnly, 0, 0);
    set(BAlphaOutcome::Even0, BIIClass::PsiPlus, 0, 1);
    imp(BAlphaOutcome::Even0, BIIClass::PsiMinus);
    fail(BAlphaOutcome::Even0, BIIClass::NoClick);

    set(BAlphaOutcome::Odd0, BIIClass::UpperOnly, 0, 1);
    set(BAlphaOutcome::Odd0, BIIClass::LowerOnly, 0, 1);
    set(BAlphaOutcome::Odd0, BIIClass::PsiPlus, 0, 0);
    imp(BAlphaOutcome::Odd0, BIIClass::PsiMinus);
    fail(BAlphaOutcome::Odd0, BIIClass::NoClick);

    set(BAlphaOutcome::ZeroEven, BIIClass::UpperOnly, 1, 0);
    set(BAlphaOutcome::ZeroEven, BIIClass::LowerOnly, 1, 0);
    set(BAlphaOutcome::ZeroEven, BIIClass::PsiMinus, 1, 1);
    imp(BAlphaOutcome::ZeroEven, BIIClass::PsiPlus);
    fail(BAlphaOutcome::ZeroEven, BIIClass::NoClick);

    set(BAlphaOutcome::ZeroOdd, BIIClass::UpperOnly, 1, 1);
    set(BAlphaOutcome::ZeroOdd, BIIClass::LowerOnly, 1, 1);
    set(BAlphaOutcome::ZeroOdd, BIIClass::PsiMinus, 1, 0);
    imp(BAlphaOutcome::ZeroOdd, BIIClass::PsiPlus);
    fail(BAlphaOutcome::ZeroOdd, BIIClass::NoClick);

    set(BAlphaOutcome::Failure, BIIClass::PsiMinus, 1, 1);
    set(BAlphaOutcome::Failure, BIIClass::PsiPlus, 0, 1);
    fail(BAlphaOutcome::Failure, BIIClass::UpperOnly);
    fail(BAlphaOutcome::Failure, BIIClass::LowerOnly);
    fail(BAlphaOutcome::Failure, BIIClass::NoClick);
    return m;
  }();
  return t;
}

}  // namespace

const FeedforwardEntry& feedforward_entry(BAlphaOutcome a, BIIClass b) {
  return table().at({a, b});
}

PauliFrame apply_feedforward(PauliFrame f, BAlphaOutcome a, BIIClass b) {
  const auto& e = feedforward_entry(a, b);
  if (!e.possible)
    throw std::invalid_argument("outcome combination cannot occur");
  if (e.failure)
    throw std::invalid_argument("teleportation failed; no frame update");
  return {f.j ^ e.frame.j, f.k ^ e.frame.k};
}

double failure_probability(double alpha) {
  return 0.5 * std::exp(-2.0 * alpha * alpha);
}

double lossy_failure_probability(double alpha, double eta) {
  const double ap2 = (1.0 - eta) * alpha * alpha;
  return (1.0 - eta) * 0.5 * std::exp(-2.0 * ap2) +
         eta * 2.0 / (1.0 + std::exp(2.0 * ap2));
}

double lossy_failure_probability_exact(double alpha, double eta) {
  const double ap2 = (1.0 - eta) * alpha * alpha;
  return (1.0 - eta) * 0.5 * std::exp(-2.0 * ap2) +
         eta * std::exp(-2.0 * ap2);
}

namespace {

BAlphaOutcome sample_b_alpha_maximal(double alpha, Rng& rng) {
  // Channel marginal is maximally mixed, so the parity weights are 1/4 each.
  const double x = std::exp(-2.0 * alpha * alpha);
  const double probs[5] = {(1 - x) * (1 - x) / 4.0, (1 - x * x) / 4.0,
                           (1 - x) * (1 - x) / 4.0, (1 - x * x) / 4.0, x};
  return BAlphaOutcome(rng.categorical(std::span<const double>(probs, 5)));
}

BIIClass sample_b_ii(BAlphaOutcome ba, const HybridQubit& in, Rng& rng) {
  if (ba == BAlphaOutcome::Failure) {
    // photon pair is a product state; bunched weights follow the input
    const double ch = 0.5 * std::norm(in.a + in.b);
    const double cv = 0.5 * std::norm(in.b - in.a);
    const double probs[4] = {0.25, 0.25, ch / 2.0, cv / 2.0};
    switch (rng.categorical(std::span<const double>(probs, 4))) {
      case 0: return BIIClass::PsiMinus;
      case 1: return BIIClass::PsiPlus;
      case 2: return BIIClass::UpperOnly;
      default: return BIIClass::LowerOnly;
    }
  }
  // after a carrier projection the photon pair has weight 1/2 on the one
  // reachable Bell state and 1/4 on each bunched outcome
  const bool same = ba == BAlphaOutcome::Even0 || ba == BAlphaOutcome::Odd0;
  const double probs[3] = {0.5, 0.25, 0.25};
  switch (rng.categorical(std::span<const double>(probs, 3))) {
    case 0: return same ? BIIClass::PsiPlus : BIIClass::PsiMinus;
    case 1: return BIIClass::UpperOnly;
    default: return BIIClass::LowerOnly;
  }
}

}  // namespace

TeleportResult teleport(const HybridQubit& in, ChannelKind channel, Rng& rng) {
  if (channel == ChannelKind::Zprime)
    throw std::invalid_argument("use teleport_cz for the two-qubit channel");
  HybridQubit q = in;
  q.normalize();

  TeleportResult r;
  r.outcome_alpha = sample_b_alpha_maximal(q.alpha, rng);
  r.outcome_ii = sample_b_ii(r.outcome_alpha, q, rng);
  const auto& e = feedforward_entry(r.outcome_alpha, r.outcome_ii);
  if (e.failure) {
    r.success = false;
    r.output = q;
    if (channel == ChannelKind::Z) r.output.hadamard();
    // failed gate: teleported qubit depolarizes
    if (rng.bernoulli(0.5)) r.output.pauli_x();
    if (rng.bernoulli(0.5)) r.output.pauli_z();
    return r;
  }
  r.success = true;
  r.frame = e.frame;
  r.output = q;
  if (channel == ChannelKind::Z) {
    r.output.hadamard();
    r.frame = {e.frame.k, e.frame.j};  // X and Z swap through the Hadamard
  }
  r.output.alpha = q.alpha;  // carrier amplitude restored by the channel
  return r;
}

TeleportCzResult teleport_cz(const HybridQubit& a, const HybridQubit& b,
                             Rng& rng) {
  HybridQubit qa = a, qb = b;
  qa.normalize();
  qb.normalize();
  TeleportCzResult r;

  auto run_side = [&rng](const HybridQubit& q) {
    BAlphaOutcome ba = sample_b_alpha_maximal(q.alpha, rng);
    BIIClass bi = sample_b_ii(ba, q, rng);
    return !feedforward_entry(ba, bi).failure;
  };
  r.success_a = run_side(qa);
  r.success_b = run_side(qb);

  // CZ applied to the product input
  r.output << qa.a * qb.a, qa.a * qb.b, qa.b * qb.a, -qa.b * qb.b;
  auto depolarize = [&rng, &r](bool second) {
    if (rng.bernoulli(0.5)) {  // X
      if (second) {
        std::swap(r.output[0], r.output[1]);
        std::swap(r.output[2], r.output[3]);
      } else {
        std::swap(r.output[0], r.output[2]);
        std::swap(r.output[1], r.output[3]);
      }
    }
    if (rng.bernoulli(0.5)) {  // Z
      if (second) {
        r.output[1] = -r.output[1];
        r.output[3] = -r.output[3];
      } else {
        r.output[2] = -r.output[2];
        r.output[3] = -r.output[3];
      }
    }
  };
  if (!r.success_a) depolarize(false);
  if (!r.success_b) depolarize(true);
  return r;
}

// --- oracle -----------------------------------------------------------------

namespace {

using fock::Mode;
using fock::ModeKind;
using fock::State;

void apply_logical_correction(State& s, int railH, int railV, int coh,
                              PauliFrame f) {
  if (f.j) {  // X: flips |+-> (pi on the V rail) and the carrier sign
    s.apply_phase(railV, M_PI);
    s.apply_phase(coh, M_PI);
  }
  if (f.k) {  // Z: swaps the H and V rails
    Eigen::Matrix2cd swap;
    swap << 0, 1, 1, 0;
    s.apply_coupler(railH, railV, swap);
  }
}

std::vector<OracleOutcome> oracle_run(const State& input_register,
                                      const HybridQubit& ideal_output,
                                      ChannelKind channel, double alpha) {
  const int coh_meas = fock::default_cutoff(std::sqrt(2.0) * alpha) + 1;
  const int coh_out = fock::default_cutoff(alpha) + 1;

  Eigen::Vector4cd ch;
  const double r2 = 1.0 / std::sqrt(2.0);
  if (channel == ChannelKind::PsiC)
    ch << r2, 0, 0, r2;
  else
    ch << 0.5, 0.5, 0.5, -0.5;
  State channel_state = embed_logical_pair(ch, alpha, coh_meas, coh_out);

  // modes: in(H,V,C)=0..2, c1(H,V,C)=3..5, c2(H,V,C)=6..8
  State full = tensor(input_register, channel_state);

  HybridQubit target = ideal_output;
  target.canonicalize();
  State target_embed = embed_fock(target, 2, coh_out);

  std::vector<OracleOutcome> rows;
  for (auto& ba : bell::b_alpha_branches(full, 2, 5)) {
    // carriers are in a definite parity state and factor out exactly
    State small = fock::factor_out_modes(ba.state, {2, 5});
    // modes now: inH,inV=0,1  c1H,c1V=2,3  c2H,c2V,c2C=4,5,6
    for (auto& bi : bell::b_ii_branches(small, 0, 1, 2, 3)) {
      double w = ba.weight * bi.weight;
      if (w < 1e-14) continue;
      OracleOutcome row{};
      row.outcome_alpha = ba.outcome;
      row.outcome_ii = bi.cls;
      row.probability = w;
      const auto& e = feedforward_entry(ba.outcome, bi.cls);
      row.failure = e.failure;
      if (!e.failure) {
        PauliFrame f = e.frame;
        // single-click rows carry an extra Z when only one photon arrived
        // (heralded input loss): the lone lower-port click projects the
        // channel photon onto V instead of a bunched pair
        if (bi.photons_detected == 1 && bi.cls == bell::BIIClass::LowerOnly)
          f.k ^= 1;
        if (channel == ChannelKind::Z) f = {f.k, f.j};
        State corrected = bi.state;
        apply_logical_correction(corrected, 4, 5, 6, f);
        std::array<int, 3> keep{4, 5, 6};
        Eigen::MatrixXcd rho = corrected.reduced_density(
            std::span<const int>(keep.data(), keep.size()));
        // target lives on rail dim 2; corrected rails may be dim 3
        const int rd = corrected.mode(4).dim;
        Eigen::VectorXcd tvec = Eigen::VectorXcd::Zero(rho.rows());
        for (int h = 0; h < 2; ++h)
          for (int v = 0; v < 2; ++v)
            for (int n = 0; n < coh_out; ++n)
              tvec[(h * rd + v) * coh_out + n] =
                  target_embed.at({h, v, n});
        row.fidelity = std::real(tvec.dot(rho * tvec).real());
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace

std::vector<OracleOutcome> oracle_teleport_distribution(const HybridQubit& in,
                                                        ChannelKind channel) {
  HybridQubit q = in;
  q.normalize();
  const int coh_meas = fock::default_cutoff(std::sqrt(2.0) * q.alpha) + 1;
  State reg = embed_fock(q, 2, coh_meas);
  HybridQubit ideal = q;
  if (channel == ChannelKind::Z) ideal.hadamard();
  return oracle_run(reg, ideal, channel, q.alpha);
}

std::vector<OracleOutcome> oracle_teleport_photon_lost(const HybridQubit& in) {
  HybridQubit q = in;
  q.normalize();
  const int coh_meas = fock::default_cutoff(std::sqrt(2.0) * q.alpha) + 1;
  // photon deleted: rails empty, carrier kept
  State reg = State::vacuum({Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV},
                             Mode{coh_meas, ModeKind::Coherent}});
  State plus = fock::coherent_state(q.alpha, coh_meas);
  State minus = fock::coherent_state(-q.alpha, coh_meas);
  for (int n = 0; n < coh_meas; ++n)
    reg.at({0, 0, n}) =
        q.a * plus.amplitudes()[n] + q.b * minus.amplitudes()[n];
  reg.normalize();
  return oracle_run(reg, q, ChannelKind::PsiC, q.alpha);
}

}  // namespace hqt
