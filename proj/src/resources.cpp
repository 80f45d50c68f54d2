#include "hqt/resources.hpp"

#include <cmath>
#include <stdexcept>

namespace hqt::resources {

double average_channel_cost(ChannelKind target, Strategy s, double alpha) {
  const double p = generation_success_probability(target, s, alpha);
  if (p <= 0.0) throw std::domain_error("generation never succeeds");
  return double(attempt_cost(target, s).total()) / p;
}

double total_round_cost(Strategy s, double alpha) {
  return kHadamardChannelsPerRound *
             average_channel_cost(ChannelKind::Z, s, alpha) +
         kCzChannelsPerRound *
             average_channel_cost(ChannelKind::Zprime, s, alpha) +
         kDiagonalPrepCost;
}

double merge_asymptotic_round_cost() {
  // success probabilities (1-x)/2 and (1-x)^3/2 tend to 1/2
  return kHadamardChannelsPerRound * 2.0 * 3.0 +
         kCzChannelsPerRound * 2.0 * 5.0 + kDiagonalPrepCost;
}

double crossover_alpha(double tol) {
  double lo = 0.05, hi = 4.0;
  auto diff = [](double a) {
    return total_round_cost(Strategy::GAlpha, a) -
           total_round_cost(Strategy::GI, a);
  };
  if (diff(lo) < 0 || diff(hi) > 0)
    throw std::runtime_error("crossover not bracketed");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (diff(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hqt::resources
