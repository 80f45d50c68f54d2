#include <cmath>

#include "doctest.h"
#include "hqt/resources.hpp"

using namespace hqt;
using namespace hqt::resources;

TEST_CASE("average channel costs") {
  const double alpha = 1.0;
  const double x = std::exp(-2.0 * alpha * alpha);
  CHECK(average_channel_cost(ChannelKind::Z, Strategy::GI, alpha) ==
        doctest::Approx(12.0));
  CHECK(average_channel_cost(ChannelKind::Zprime, Strategy::GI, alpha) ==
        doctest::Approx(80.0));
  CHECK(average_channel_cost(ChannelKind::Z, Strategy::GAlpha, alpha) ==
        doctest::Approx(6.0 / (1.0 - x)).epsilon(1e-12));
  CHECK(average_channel_cost(ChannelKind::Zprime, Strategy::GAlpha, alpha) ==
        doctest::Approx(10.0 / std::pow(1.0 - x, 3)).epsilon(1e-12));
}

TEST_CASE("per-round totals and the strategy crossover") {
  // fusion-route cost is amplitude-independent
  CHECK(total_round_cost(Strategy::GI, 0.5) == doctest::Approx(28780.0));
  CHECK(total_round_cost(Strategy::GI, 2.0) == doctest::Approx(28780.0));
  CHECK(merge_asymptotic_round_cost() == doctest::Approx(4182.0));
  // merge-route cost decays monotonically towards the asymptote
  CHECK(total_round_cost(Strategy::GAlpha, 1.0) >
        total_round_cost(Strategy::GAlpha, 2.0));
  CHECK(total_round_cost(Strategy::GAlpha, 3.0) ==
        doctest::Approx(4182.0).epsilon(1e-3));
  const double cross = crossover_alpha();
  CHECK(cross > 0.55);
  CHECK(cross < 0.63);
  // the two curves really do cross there
  CHECK(total_round_cost(Strategy::GAlpha, cross - 0.02) >
        total_round_cost(Strategy::GI, cross - 0.02));
  CHECK(total_round_cost(Strategy::GAlpha, cross + 0.02) <
        total_round_cost(Strategy::GI, cross + 0.02));
}
