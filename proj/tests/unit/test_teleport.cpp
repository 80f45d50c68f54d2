#include <cmath>

#include "doctest.h"
#include "hqt/teleport.hpp"

using namespace hqt;
using bell::BAlphaOutcome;
using bell::BIIClass;

TEST_CASE("failure probability closed forms") {
  for (double alpha : {0.5, 1.0, 1.4}) {
    const double pf = std::exp(-2.0 * alpha * alpha) / 2.0;
    CHECK(failure_probability(alpha) == doctest::Approx(pf).epsilon(1e-12));
    // lossless limit: both lossy variants collapse to the same expression
    CHECK(lossy_failure_probability(alpha, 0.0) == failure_probability(alpha));
    CHECK(lossy_failure_probability_exact(alpha, 0.0) ==
          failure_probability(alpha));
  }
  // loss strictly increases the failure rate
  CHECK(lossy_failure_probability(1.0, 0.05) > failure_probability(1.0));
}

TEST_CASE("feed-forward covers exactly the realizable outcome pairs") {
  int possible = 0, failures = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const auto& e = feedforward_entry(BAlphaOutcome(a), BIIClass(b));
      if (e.possible) ++possible;
      if (e.possible && e.failure) ++failures;
    }
  // only the wrong-parity fusion class is unreachable per carrier outcome
  CHECK(possible == 21);
  // every no-click row (photon lost), plus the single-sided patterns of a
  // failed carrier measurement
  CHECK(failures == 7);
  // a failed carrier measurement rescued by a projective fusion outcome
  const auto& rescue =
      feedforward_entry(BAlphaOutcome::Failure, BIIClass::PsiMinus);
  CHECK(rescue.possible);
  CHECK_FALSE(rescue.failure);
}

TEST_CASE("fast-path teleportation reproduces the channel action") {
  HybridQubit in{0.6, {0.0, 0.8}, 1.1};
  Rng rng(5);
  long fails = 0;
  const long n = 4000;
  for (long i = 0; i < n; ++i) {
    auto r = teleport(in, ChannelKind::PsiC, rng);
    if (!r.success) {
      ++fails;
      continue;
    }
    CHECK(fidelity(r.output, in) == doctest::Approx(1.0).epsilon(1e-10));
  }
  const double pf = failure_probability(1.1);
  CHECK(std::abs(double(fails) / n - pf) <
        5.0 * std::sqrt(pf * (1 - pf) / double(n)));

  // the |Z> channel applies a logical Hadamard on success
  HybridQubit want = in;
  want.hadamard();
  for (int i = 0; i < 200;) {
    auto r = teleport(in, ChannelKind::Z, rng);
    if (!r.success) continue;
    REQUIRE(fidelity(r.output, want) == doctest::Approx(1.0).epsilon(1e-10));
    ++i;
  }
}

TEST_CASE("brute-force circuit agrees with the closed forms") {
  const double alpha = 0.7;
  HybridQubit in{0.6, {0.0, 0.8}, alpha};
  for (auto kind : {ChannelKind::PsiC, ChannelKind::Z}) {
    auto dist = oracle_teleport_distribution(in, kind);
    double total = 0.0, fail = 0.0, min_fid = 1.0;
    for (auto& row : dist) {
      total += row.probability;
      if (row.failure)
        fail += row.probability;
      else
        min_fid = std::min(min_fid, row.fidelity);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(fail == doctest::Approx(failure_probability(alpha)).epsilon(1e-8));
    CHECK(min_fid >= 1.0 - 1e-9);
  }
}

TEST_CASE("a heralded missing photon is compensated whenever the carrier "
          "measurement succeeds") {
  const double alpha = 0.8;
  HybridQubit in{0.6, 0.8, alpha};
  auto dist = oracle_teleport_photon_lost(in);
  double fail = 0.0, success = 0.0, min_fid = 1.0;
  for (auto& row : dist) {
    if (row.failure) {
      fail += row.probability;
    } else {
      success += row.probability;
      min_fid = std::min(min_fid, row.fidelity);
    }
  }
  CHECK(fail + success == doctest::Approx(1.0).epsilon(1e-8));
  // the surviving carrier state is (a|a> + b|-a>)/sqrt(N) with
  // N = 1 + 2ab e^{-2a^2}; the carrier comparison fails on its even-even
  // branch, whose weight picks up the renormalization
  const double x = std::exp(-2.0 * alpha * alpha);
  const double a = 0.6, b = 0.8;
  CHECK(fail ==
        doctest::Approx(x * (1 + 2 * a * b) / (1 + 2 * a * b * x))
            .epsilon(1e-8));
  CHECK(min_fid >= 1.0 - 1e-7);
}

TEST_CASE("doubly-teleported controlled-phase acts on the pair") {
  HybridQubit a{1.0, 0.0, 1.2};  // logical |0>
  HybridQubit b{0.6, 0.8, 1.2};
  Rng rng(17);
  for (int i = 0; i < 200;) {
    auto r = teleport_cz(a, b, rng);
    if (!r.success_a || !r.success_b) continue;
    // control |0>: the target passes through unchanged
    Eigen::Vector4cd want;
    want << a.a * b.a, a.a * b.b, a.b * b.a, -a.b * b.b;
    const cplx ip = want.adjoint() * r.output;
    CHECK(std::abs(ip) == doctest::Approx(1.0).epsilon(1e-9));
    ++i;
  }
}
