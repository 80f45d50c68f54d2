#include "hqt/channels.hpp"

#include <cmath>

namespace hqt {

const char* to_string(Strategy s) {
  return s == Strategy::GI ? "gi" : "galpha";
}

ResourceTally& ResourceTally::operator+=(const ResourceTally& o) {
  two_photon_pairs += o.two_photon_pairs;
  hybrid_pairs += o.hybrid_pairs;
  for (auto [k, v] : o.hybrid_by_amplitude_class)
    hybrid_by_amplitude_class[k] += v;
  return *this;
}

ResourceTally attempt_cost(ChannelKind target, Strategy s) {
  ResourceTally t;
  auto hyb = [&t](int klass, long n) {
    t.hybrid_pairs += n;
    t.hybrid_by_amplitude_class[klass] += n;
  };
  switch (target) {
    case ChannelKind::PsiC:
      if (s == Strategy::GI) {
        t.two_photon_pairs = 1;
        hyb(1, 1);
      } else {
        hyb(1, 2);
      }
      break;
    case ChannelKind::Z:
      if (s == Strategy::GI) {
        t.two_photon_pairs = 1;
        hyb(0, 2);
      } else {
        hyb(0, 2);
        hyb(1, 1);
      }
      break;
    case ChannelKind::Zprime:
      // built around an inner |Z> at sqrt2-scaled amplitude, single shot
      if (s == Strategy::GI) {
        t.two_photon_pairs = 3;
        hyb(1, 2);
      } else {
        hyb(1, 2);  // inner |Z> hybrid pairs
        hyb(2, 1);  // inner |Z> merge pair at doubled amplitude
        hyb(1, 2);  // the two extension pairs
      }
      break;
  }
  return t;
}

double generation_success_probability(ChannelKind target, Strategy s,
                                      double alpha) {
  const double x = std::exp(-2.0 * alpha * alpha);
  switch (target) {
    case ChannelKind::PsiC:
      return s == Strategy::GI ? 0.5 : (1.0 - x);
    case ChannelKind::Z:
      return s == Strategy::GI ? 0.25 : 0.5 * (1.0 - x);
    case ChannelKind::Zprime:
      return s == Strategy::GI ? 1.0 / 16.0
                               : 0.5 * (1.0 - x) * (1.0 - x) * (1.0 - x);
  }
  return 0.0;
}

GenerationResult attempt_generation(ChannelKind target, Strategy s,
                                    double alpha, Rng& rng) {
  GenerationResult r;
  r.target = target;
  r.consumed = attempt_cost(target, s);
  const double x = std::exp(-2.0 * alpha * alpha);
  auto fusion_ok = [&rng] { return rng.bernoulli(0.5); };
  auto merge_ok = [&rng, x] { return rng.bernoulli(1.0 - x); };
  switch (target) {
    case ChannelKind::PsiC:
      r.success = s == Strategy::GI ? fusion_ok() : merge_ok();
      break;
    case ChannelKind::Z:
      r.success = s == Strategy::GI ? (fusion_ok() && fusion_ok())
                                    : (fusion_ok() && merge_ok());
      break;
    case ChannelKind::Zprime:
      if (s == Strategy::GI)
        r.success = fusion_ok() && fusion_ok() && fusion_ok() && fusion_ok();
      else
        r.success = fusion_ok() && merge_ok() && merge_ok() && merge_ok();
      break;
  }
  return r;
}

// --- oracle circuits --------------------------------------------------------

namespace {

using fock::Mode;
using fock::ModeKind;
using fock::State;

// |H>|+> + |V>|->, modes [p1H,p1V,p2H,p2V]
State two_photon_pair() {
  State s({Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV},
           Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV}});
  const double h = 0.5;  // 1/sqrt2 pair weight x 1/sqrt2 rail split
  s.at({1, 0, 1, 0}) = h;
  s.at({1, 0, 0, 1}) = h;
  s.at({0, 1, 1, 0}) = h;
  s.at({0, 1, 0, 1}) = -h;
  return s;
}

// |H>|beta> + |V>|-beta>, modes [H,V,C]
State hv_hybrid_pair(double beta, int coh_dim) {
  State plus = fock::coherent_state(beta, coh_dim);
  State s({Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV},
           Mode{coh_dim, ModeKind::Coherent}});
  const double r = 1.0 / std::sqrt(2.0);
  for (int n = 0; n < coh_dim; ++n) {
    fock::cplx c = plus.at({n});
    s.at({1, 0, n}) = r * c;
    s.at({0, 1, n}) = r * (n % 2 ? -c : c);
  }
  return s;
}

// Split a sqrt2-amplitude pair into |ph>|beta>|beta> +- via a beam splitter.
// Returns modes [H,V,C1,C2].
State split_triple(double alpha, int coh_dim) {
  State pair = hv_hybrid_pair(std::sqrt(2.0) * alpha,
                              fock::default_cutoff(std::sqrt(2.0) * alpha) + 1);
  pair.resize_mode(2, coh_dim);  // headroom chosen by caller
  State s = tensor(pair, State::vacuum({Mode{coh_dim, ModeKind::Coherent}}));
  fock::beam_splitter_50_50(s, 2, 3);
  return s;
}

void rail_swap(State& s, int h, int v) {
  Eigen::Matrix2cd sw;
  sw << 0, 1, 1, 0;
  s.apply_coupler(h, v, sw);
}

// fusion circuits grow rail cutoffs to 3 for bunching; bring the register
// back to single-photon rails once the measurements are done
void shrink_rails(State& s) {
  for (int m = 0; m < s.mode_count(); ++m)
    if (s.mode(m).kind != ModeKind::Coherent && s.mode(m).dim > 2)
      s.resize_mode(m, 2);
}

void rail_hadamard(State& s, int h, int v) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd rot;
  rot << r, r, r, -r;
  s.apply_coupler(h, v, rot);
}

struct FusionPick {
  State state;
  double weight = 0.0;
};

// Run B_I on (aH,aV)x(bH,bV), fold both click outcomes together after the
// (H)-click Z fix on the kept rails, and drop the detector rails.  With
// rotate_kept=false the surviving photon is returned in the H/V
// representation instead of +- (used when the fusion doubles as a logical
// Hadamard).
FusionPick fuse_and_correct(const State& s, int aH, int aV, int bH, int bV,
                            bool rotate_kept = true) {
  FusionPick out;
  bool first = true;
  for (auto& br : bell::b_i_branches(s, aH, aV, bH, bV)) {
    if (br.outcome == bell::BIOutcome::Failure) continue;
    State st = br.state;
    // the two click branches differ by a bit flip on the kept photon
    if (br.outcome == bell::BIOutcome::ClickH) rail_swap(st, aH, aV);
    if (!rotate_kept) rail_hadamard(st, aH, aV);
    // the detected photon sits on bV for an (H) click, on bH for a (V) click
    const int occ_bH = br.outcome == bell::BIOutcome::ClickV ? 1 : 0;
    const int occ_bV = br.outcome == bell::BIOutcome::ClickH ? 1 : 0;
    if (bH > bV) {
      st.remove_definite_mode(bH, occ_bH);
      st.remove_definite_mode(bV, occ_bV);
    } else {
      st.remove_definite_mode(bV, occ_bV);
      st.remove_definite_mode(bH, occ_bH);
    }
    out.weight += br.weight;
    if (first) {
      out.state = std::move(st);
      first = false;
    } else {
      // outcomes are folded for fidelity checks only; each click is a
      // separate heralded branch in reality
      double fid = std::norm(out.state.inner(st));
      if (fid < 1.0 - 1e-9)
        throw std::runtime_error("fusion branches disagree after correction");
    }
  }
  if (first) throw std::runtime_error("fusion never succeeds");
  return out;
}

// B_alpha merge on carriers (m1,m2) with the Table-style feed-forward applied
// to the qubit identified by (corrH, corrV, corrC); detector carriers are
// factored out.  corrC < 0 means the correction target carries no coherent
// mode (X realized as a plain rail relabeling is not possible then).
struct MergePick {
  State state;
  double weight = 0.0;
};

MergePick merge_and_correct(const State& s, int m1, int m2, int corrH,
                            int corrV, int corrC) {
  MergePick out;
  bool first = true;
  for (auto& br : bell::b_alpha_branches(s, m1, m2)) {
    if (br.outcome == bell::BAlphaOutcome::Failure) continue;
    State st = br.state;
    const bool x_fix = br.outcome == bell::BAlphaOutcome::ZeroEven ||
                       br.outcome == bell::BAlphaOutcome::ZeroOdd;
    const bool z_fix = br.outcome == bell::BAlphaOutcome::Odd0 ||
                       br.outcome == bell::BAlphaOutcome::ZeroOdd;
    if (x_fix) {
      rail_swap(st, corrH, corrV);
      if (corrC >= 0) st.apply_phase(corrC, M_PI);
    }
    if (z_fix) st.apply_phase(corrV, M_PI);
    st = fock::factor_out_modes(st, {m1, m2});
    out.weight += br.weight;
    if (first) {
      out.state = std::move(st);
      first = false;
    } else {
      double fid = std::norm(out.state.inner(st));
      if (fid < 1.0 - 1e-9)
        throw std::runtime_error("merge branches disagree after correction");
    }
  }
  if (first) throw std::runtime_error("merge never succeeds");
  return out;
}

}  // namespace

State ideal_psi_c(double alpha, int coh_dim) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v;
  v << r, 0, 0, r;
  return embed_logical_pair(v, alpha, coh_dim, coh_dim);
}

State ideal_z(double alpha, int coh_dim) {
  Eigen::Vector4cd v;
  v << 0.5, 0.5, 0.5, -0.5;
  return embed_logical_pair(v, alpha, coh_dim, coh_dim);
}

State oracle_generate_psi_c(Strategy s, double alpha, double* success_probability,
                            int coh_dim) {
  if (coh_dim <= 0) coh_dim = fock::default_cutoff(std::sqrt(2.0) * alpha) + 1;
  if (s == Strategy::GI) {
    // two-photon pair + split sqrt2-pair, one type-I fusion
    State reg = tensor(two_photon_pair(), split_triple(alpha, coh_dim));
    // modes: p1(0,1) p2(2,3) t(4,5) tC1=6 tC2=7
    auto pick = fuse_and_correct(reg, 0, 1, 4, 5);
    if (success_probability) *success_probability = pick.weight;
    // modes now: p1(0,1) p2(2,3) C1=4 C2=5 -> [q1=(p1,C1), q2=(p2,C2)]
    State out = fock::permute_modes(pick.state, {0, 1, 4, 2, 3, 5});
    shrink_rails(out);
    out.normalize();
    return out;
  }
  // two split sqrt2-pairs merged by B_alpha on one carrier of each
  State reg = tensor(split_triple(alpha, coh_dim), split_triple(alpha, coh_dim));
  // modes: t1(0,1) t1C1=2 t1C2=3 t2(4,5) t2C1=6 t2C2=7
  auto pick = merge_and_correct(reg, 3, 7, 0, 1, 2);
  if (success_probability) *success_probability = pick.weight;
  // modes now: t1(0,1) t1C1=2 t2(3,4) t2C1=5 -> already channel layout
  State out = pick.state;
  // photons come out H/V-correlated with the carriers; rotate to the +/- basis
  rail_hadamard(out, 0, 1);
  rail_hadamard(out, 3, 4);
  shrink_rails(out);
  out.normalize();
  return out;
}

State oracle_generate_z(Strategy s, double alpha, double* success_probability,
                        int coh_dim) {
  if (coh_dim <= 0) coh_dim = fock::default_cutoff(alpha) + 1;
  if (s == Strategy::GI) {
    // pair + two plain hybrid pairs, two fusions; the H<->(+) asymmetry of the
    // two-photon pair is what turns the double fusion into |Z> rather than Psi_C
    State reg = tensor(two_photon_pair(),
                       tensor(hv_hybrid_pair(alpha, coh_dim),
                              hv_hybrid_pair(alpha, coh_dim)));
    // modes: p1(0,1) p2(2,3) h1(4,5) h1C=6 h2(7,8) h2C=9
    auto f1 = fuse_and_correct(reg, 0, 1, 4, 5);
    // modes: p1(0,1) p2(2,3) h1C=4 h2(5,6) h2C=7
    auto f2 = fuse_and_correct(f1.state, 2, 3, 5, 6);
    if (success_probability) *success_probability = f1.weight * f2.weight;
    // modes: p1(0,1) p2(2,3) h1C=4 h2C=5
    State out = fock::permute_modes(f2.state, {0, 1, 4, 2, 3, 5});
    shrink_rails(out);
    out.normalize();
    return out;
  }
  // split sqrt2-pair + two plain pairs; B_alpha merge onto h2's carrier, then
  // the split photon (rotated to +-) is fused with h1. The +- rotation before
  // the fusion plays the same role as the pair asymmetry in the G_I route.
  const int split_dim = fock::default_cutoff(std::sqrt(2.0) * alpha) + 1;
  State reg = tensor(tensor(split_triple(alpha, split_dim),
                            hv_hybrid_pair(alpha, coh_dim)),
                     hv_hybrid_pair(alpha, coh_dim));
  // modes: t(0,1) tC1=2 tC2=3 h1(4,5) h1C=6 h2(7,8) h2C=9
  auto merge = merge_and_correct(reg, 3, 9, 0, 1, 2);
  // modes: t(0,1) tC1=2 h1(3,4) h1C=5 h2(6,7)
  State merged = merge.state;
  rail_hadamard(merged, 0, 1);
  auto fuse = fuse_and_correct(merged, 0, 1, 3, 4);
  if (success_probability) *success_probability = merge.weight * fuse.weight;
  // modes: t(0,1) tC1=2 h1C=3 h2(4,5)
  State out = fuse.state;
  rail_hadamard(out, 4, 5);  // H/V -> +- so (h2, tC1) is a hybrid qubit
  out = fock::permute_modes(out, {0, 1, 3, 4, 5, 2});
  shrink_rails(out);
  out.normalize();
  return out;
}

}  // namespace hqt
