#include <cmath>

#include "doctest.h"
#include "hqt/loss.hpp"
#include "hqt/threshold.hpp"

using namespace hqt;
using namespace hqt::threshold;

TEST_CASE("physical gate-error table") {
  const double eta = 0.001, alpha = 1.0;
  auto t = GateErrorTable::from_physical(eta, alpha, Strategy::GI);
  CHECK(t.hadamard.fail_loc ==
        doctest::Approx(lossy_failure_probability(alpha, eta)).epsilon(1e-12));
  CHECK(t.memory.z_unloc ==
        doctest::Approx(loss::memory_error_rate(eta, alpha)).epsilon(1e-12));
  CHECK(t.memory.fail_loc == 0.0);
  CHECK(t.measure_x.fail_loc == 0.0);
  // merge-route channels keep doubled-amplitude carriers in flight
  auto tg = GateErrorTable::from_physical(eta, alpha, Strategy::GAlpha);
  CHECK(tg.memory.z_unloc ==
        doctest::Approx(loss::memory_error_rate(eta, std::sqrt(2.0) * alpha))
            .epsilon(1e-12));
  CHECK(tg.memory.z_unloc > t.memory.z_unloc);
}

TEST_CASE("noiseless rounds are error-free") {
  GateErrorTable t;  // all rates zero
  for (long i = 0; i < 2000; ++i) {
    Rng rng = Rng::stream(3, 1, uint64_t(i), 0);
    auto o = run_telecorrection_round(t, rng);
    CHECK_FALSE(o.located_failure);
    CHECK_FALSE(o.z_erased);
    CHECK_FALSE(o.x_erased);
    CHECK_FALSE(o.logical_x);
    CHECK_FALSE(o.logical_z);
  }
}

TEST_CASE("level-rate estimates are reproducible") {
  auto t = GateErrorTable::uniform(0.01, 0.001);
  auto a = estimate_level_rates(t, 5000, 42, 1);
  auto b = estimate_level_rates(t, 5000, 42, 1);
  CHECK(a.located == b.located);
  CHECK(a.unlocated == b.unlocated);
  CHECK(a.z_located == b.z_located);
}

TEST_CASE("convergence flips between small and large loss") {
  CHECK(assess_convergence(1e-5, 1.4, Strategy::GI, 20000, 11)
            .below_threshold);
  CHECK_FALSE(assess_convergence(0.05, 1.4, Strategy::GI, 20000, 11)
                  .below_threshold);
}

TEST_CASE("sweeps are independent of the thread count") {
  const std::vector<double> alphas{1.0, 1.4, 1.8};
  auto one = threshold_sweep(alphas, Strategy::GI, 3000, 5, 1);
  auto many = threshold_sweep(alphas, Strategy::GI, 3000, 5, 3);
  REQUIRE(one.size() == many.size());
  for (size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].alpha == many[i].alpha);
    CHECK(one[i].eta_threshold == many[i].eta_threshold);
  }
}
