#include <cmath>
#include <complex>

#include "doctest.h"
#include "hqt/fock.hpp"

using namespace hqt::fock;

TEST_CASE("coherent state occupation statistics") {
  const double alpha = 0.8;
  State s = coherent_state(alpha);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));

  // mean photon number alpha^2
  double mean = 0.0;
  for (int n = 0; n < s.mode(0).dim; ++n)
    mean += n * std::norm(s.amplitudes()[n]);
  CHECK(mean == doctest::Approx(alpha * alpha).epsilon(1e-8));

  // PNPD outcome weights: vacuum e^{-a^2}, odd (1-e^{-2a^2})/2
  auto p = parity_probs(s, 0);
  const double a2 = alpha * alpha;
  CHECK(p[0] == doctest::Approx(std::exp(-a2)).epsilon(1e-10));
  CHECK(p[2] ==
        doctest::Approx(0.5 * (1.0 - std::exp(-2.0 * a2))).epsilon(1e-10));
  CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("beam splitter merges equal coherent beams into one") {
  const double alpha = 0.7;
  const int dim = default_cutoff(std::sqrt(2.0) * alpha) + 1;
  State s = tensor(coherent_state(alpha, dim), coherent_state(alpha, dim));
  beam_splitter_50_50(s, 0, 1);
  State target =
      tensor(coherent_state(std::sqrt(2.0) * alpha, dim),
             State::vacuum({Mode{dim, ModeKind::Coherent}}));
  CHECK(std::abs(s.inner(target)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("couplers preserve the norm and invert cleanly") {
  State s = tensor(coherent_state(0.6), coherent_state(0.4));
  State orig = s;
  beam_splitter_50_50(s, 0, 1);
  CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-9));
  beam_splitter_50_50(s, 0, 1);  // the real 50:50 splitter is an involution
  CHECK(std::abs(s.inner(orig)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("permute and factor round-trip") {
  State a = coherent_state(0.5);
  State b = coherent_state(0.9);
  State ab = tensor(a, b);
  State ba = permute_modes(ab, {1, 0});
  CHECK(std::abs(ba.inner(tensor(b, a))) == doctest::Approx(1.0).epsilon(1e-10));
  State only_b = factor_out_modes(ba, {1});
  CHECK(std::abs(only_b.inner(b)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("loss channel branches form a distribution and damp the amplitude") {
  const double alpha = 1.0, eta = 0.3;
  State s = coherent_state(alpha);
  auto branches = loss_channel(s, 0, eta);
  double total = 0.0;
  State damped = coherent_state(std::sqrt(1.0 - eta) * alpha, s.mode(0).dim);
  for (auto& br : branches) {
    total += br.weight;
    // a lossy coherent state stays coherent at reduced amplitude in every
    // branch; skip the >8-photon branches where weights (~1e-10) sit in the
    // truncation tail
    if (br.weight < 1e-10) continue;
    CHECK(std::abs(br.state.inner(damped)) ==
          doctest::Approx(1.0).epsilon(1e-7));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  // branch 0 weight: |<a'|a>|^2-style survival e^{-eta a^2}
  CHECK(branches[0].weight ==
        doctest::Approx(std::exp(-eta * alpha * alpha)).epsilon(1e-9));
}

TEST_CASE("truncation overflow is reported, not ignored") {
  CHECK_THROWS_AS((void)coherent_state(2.5, 3), TruncationError);
}
