#include <cmath>

#include "doctest.h"
#include "hqt/bell.hpp"

using namespace hqt;
using namespace hqt::bell;

namespace {

fock::State rail_pair(cplx hv, cplx vh) {
  using fock::Mode;
  using fock::ModeKind;
  fock::State s({Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV},
                 Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV}});
  s.at({1, 0, 0, 1}) = hv;
  s.at({0, 1, 1, 0}) = vh;
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("carrier Bell measurement outcome weights") {
  const double alpha = 0.9;
  const double x = std::exp(-2.0 * alpha * alpha);
  HybridQubit q1{0.6, 0.8, alpha};
  HybridQubit q2{{0.0, 1.0}, 0.0, alpha};
  auto p = b_alpha_outcome_probs(q1, q2);
  double total = 0.0;
  for (double v : p) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  // the failure weight never depends on the qubit amplitudes
  CHECK(p[4] == doctest::Approx(x).epsilon(1e-10));
  CHECK(b_alpha_failure_probability(alpha) == doctest::Approx(x));

  // cross-check against the explicit beam-splitter circuit
  fock::State reg = tensor(embed_fock(q1), embed_fock(q2));
  auto branches = b_alpha_branches(reg, 2, 5);
  double circuit[5] = {0, 0, 0, 0, 0};
  for (auto& br : branches) circuit[int(br.outcome)] += br.weight;
  for (int i = 0; i < 5; ++i)
    CHECK(circuit[i] == doctest::Approx(p[size_t(i)]).epsilon(1e-9));
}

TEST_CASE("detector patterns map to fusion classes") {
  // one click per side, equal labels -> anti-symmetric Bell state
  CHECK(classify_bii_pattern(true, false, true, false) == BIIClass::PsiMinus);
  CHECK(classify_bii_pattern(false, true, false, true) == BIIClass::PsiMinus);
  CHECK(classify_bii_pattern(true, false, false, true) == BIIClass::PsiPlus);
  CHECK(classify_bii_pattern(false, true, true, false) == BIIClass::PsiPlus);
  CHECK(classify_bii_pattern(true, true, false, false) == BIIClass::UpperOnly);
  CHECK(classify_bii_pattern(false, false, true, true) == BIIClass::LowerOnly);
  CHECK(classify_bii_pattern(false, false, false, false) == BIIClass::NoClick);
}

TEST_CASE("fusion circuit identifies the odd Bell state") {
  fock::State psi_minus = rail_pair(1.0, -1.0);
  auto branches = b_ii_branches(psi_minus, 0, 1, 2, 3);
  double by_class[5] = {0, 0, 0, 0, 0};
  double total = 0.0;
  for (auto& br : branches) {
    by_class[int(br.cls)] += br.weight;
    total += br.weight;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  // |HV> - |VH> always produces one click in each output port
  CHECK(by_class[int(BIIClass::PsiMinus)] == doctest::Approx(1.0).epsilon(1e-9));

  fock::State psi_plus = rail_pair(1.0, 1.0);
  branches = b_ii_branches(psi_plus, 0, 1, 2, 3);
  double plus_weight = 0.0;
  for (auto& br : branches)
    if (br.cls == BIIClass::PsiPlus) plus_weight += br.weight;
  CHECK(plus_weight == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("type-I fusion succeeds half the time on independent photons") {
  // |+>|+>: the same-label halves survive the polarizing splitter, the
  // cross terms bunch into the detector and fail
  fock::State s = [] {
    using fock::Mode;
    using fock::ModeKind;
    fock::State r({Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV},
                   Mode{2, ModeKind::RailH}, Mode{2, ModeKind::RailV}});
    r.at({1, 0, 1, 0}) = 0.5;
    r.at({1, 0, 0, 1}) = 0.5;
    r.at({0, 1, 1, 0}) = 0.5;
    r.at({0, 1, 0, 1}) = 0.5;
    return r;
  }();
  auto branches = b_i_branches(s, 0, 1, 2, 3);
  double success = 0.0, total = 0.0;
  for (auto& br : branches) {
    total += br.weight;
    if (br.outcome != BIOutcome::Failure) success += br.weight;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(success == doctest::Approx(0.5).epsilon(1e-9));
}
