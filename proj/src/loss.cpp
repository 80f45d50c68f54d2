#include "hqt/loss.hpp"

#include <cmath>

namespace hqt::loss {

double memory_error_rate(double eta, double alpha) {
  return 0.5 * (1.0 - (1.0 - eta) * std::exp(-2.0 * eta * alpha * alpha));
}

std::array<double, 2> lost_branch_norms(const HybridQubit& q, double eta) {
  const double ap = std::sqrt(1.0 - eta) * q.alpha;
  const double ov = std::exp(-2.0 * ap * ap);  // <a'|-a'>
  const double cross = 2.0 * std::real(std::conj(q.a) * q.b) * ov;
  return {1.0 + cross, 1.0 - cross};
}

std::vector<LossEnsembleEntry> evolve_hybrid_under_loss(const HybridQubit& q,
                                                        double eta) {
  const double ap = std::sqrt(1.0 - eta) * q.alpha;
  const double leak = std::exp(-2.0 * eta * q.alpha * q.alpha);
  auto [np, nm] = lost_branch_norms(q, eta);

  std::vector<LossEnsembleEntry> out;
  out.push_back({LossBranch::KeptPlus, 0.5 * (1.0 - eta) * (1.0 + leak),
                 HybridQubit{q.a, q.b, ap}});
  out.push_back({LossBranch::KeptMinus, 0.5 * (1.0 - eta) * (1.0 - leak),
                 HybridQubit{q.a, -q.b, ap}});
  const double rp = std::sqrt(np), rm = std::sqrt(nm);
  out.push_back({LossBranch::LostPlus, 0.5 * eta * np,
                 HybridQubit{q.a / rp, q.b / rp, ap}});
  out.push_back({LossBranch::LostMinus, 0.5 * eta * nm,
                 HybridQubit{q.a / rm, -q.b / rm, ap}});
  return out;
}

}  // namespace hqt::loss
