#include <cmath>

#include "doctest.h"
#include "hqt/fock.hpp"
#include "hqt/loss.hpp"

using namespace hqt;
using namespace hqt::loss;

TEST_CASE("dephasing rate closed form") {
  for (double eta : {0.01, 0.1, 0.3})
    for (double alpha : {0.5, 1.0, 1.5}) {
      const double want =
          0.5 * (1.0 - (1.0 - eta) *
                           std::exp(-2.0 * eta * alpha * alpha));
      CHECK(memory_error_rate(eta, alpha) ==
            doctest::Approx(want).epsilon(1e-12));
    }
  CHECK(memory_error_rate(0.0, 1.3) == doctest::Approx(0.0));
}

TEST_CASE("loss ensemble weights and states") {
  const double eta = 0.15, alpha = 1.1;
  HybridQubit q{0.6, {0.0, 0.8}, alpha};
  auto ens = evolve_hybrid_under_loss(q, eta);
  REQUIRE(ens.size() == 4);
  const double leak = std::exp(-2.0 * eta * alpha * alpha);
  CHECK(ens[0].weight ==
        doctest::Approx((1 - eta) * (1 + leak) / 2).epsilon(1e-12));
  CHECK(ens[1].weight ==
        doctest::Approx((1 - eta) * (1 - leak) / 2).epsilon(1e-12));
  double total = 0.0;
  for (auto& e : ens) total += e.weight;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  // survivors carry the damped amplitude
  CHECK(ens[0].state.alpha ==
        doctest::Approx(std::sqrt(1 - eta) * alpha).epsilon(1e-12));
  // the odd-parity branch is the dephased one
  HybridQubit flipped = ens[0].state;
  flipped.pauli_z();
  CHECK(fidelity(ens[1].state, flipped) == doctest::Approx(1.0).epsilon(1e-10));

  // the dephasing rate aggregates kept-minus plus half the lost weight
  CHECK(memory_error_rate(eta, alpha) ==
        doctest::Approx(ens[1].weight + eta / 2).epsilon(1e-12));
}

TEST_CASE("ensemble matches the explicit beam-splitter loss circuit") {
  const double eta = 0.2, alpha = 0.9;
  HybridQubit q{1.0 / std::sqrt(2.0), {0.0, 1.0 / std::sqrt(2.0)}, alpha};
  auto ens = evolve_hybrid_under_loss(q, eta);

  fock::State reg = embed_fock(q);
  double kept_plus = 0, kept_minus = 0, lost = 0;
  for (auto& rh : fock::loss_channel(reg, 0, eta))
    for (auto& rv : fock::loss_channel(rh.state, 1, eta)) {
      const bool photon_lost = rh.key + rv.key > 0;
      for (auto& car : fock::loss_channel(rv.state, 2, eta)) {
        const double w = rh.weight * rv.weight * car.weight;
        if (photon_lost)
          lost += w;
        else if (car.key % 2 == 0)
          kept_plus += w;
        else
          kept_minus += w;
      }
    }
  CHECK(ens[0].weight == doctest::Approx(kept_plus).epsilon(1e-8));
  CHECK(ens[1].weight == doctest::Approx(kept_minus).epsilon(1e-8));
  CHECK(ens[2].weight + ens[3].weight == doctest::Approx(lost).epsilon(1e-8));
}

TEST_CASE("lost-branch norms match their definition") {
  const double eta = 0.25, alpha = 0.7;
  HybridQubit q{0.8, 0.6, alpha};  // real amplitudes: maximal asymmetry
  auto norms = lost_branch_norms(q, eta);
  const double ap = std::sqrt(1 - eta) * alpha;
  const double cross = 2.0 * 0.8 * 0.6 * std::exp(-2.0 * ap * ap);
  CHECK(norms[0] == doctest::Approx(1.0 + cross).epsilon(1e-12));
  CHECK(norms[1] == doctest::Approx(1.0 - cross).epsilon(1e-12));
  // balanced phases give exactly unit norms
  HybridQubit iq{1.0 / std::sqrt(2.0), {0.0, 1.0 / std::sqrt(2.0)}, alpha};
  auto n2 = lost_branch_norms(iq, eta);
  CHECK(n2[0] == doctest::Approx(1.0));
  CHECK(n2[1] == doctest::Approx(1.0));
}
