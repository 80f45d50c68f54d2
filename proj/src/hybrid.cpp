#include "hqt/hybrid.hpp"

#include <cmath>

namespace hqt {

void HybridQubit::normalize() {
  double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n <= 0.0) throw std::runtime_error("zero hybrid qubit");
  a /= n;
  b /= n;
}

void HybridQubit::canonicalize() {
  normalize();
  cplx ref = std::abs(a) > 1e-12 ? a : b;
  cplx ph = std::abs(ref) > 0 ? ref / std::abs(ref) : cplx(1.0);
  a /= ph;
  b /= ph;
}

void HybridQubit::hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  cplx na = r * (a + b), nb = r * (a - b);
  a = na;
  b = nb;
}

double fidelity(const HybridQubit& p, const HybridQubit& q) {
  return std::norm(std::conj(p.a) * q.a + std::conj(p.b) * q.b);
}

int measure_z(const HybridQubit& q, Rng& rng) {
  double p0 = std::norm(q.a) / (std::norm(q.a) + std::norm(q.b));
  return rng.uniform() < p0 ? 0 : 1;
}

fock::State embed_fock(const HybridQubit& q, int rail_dim, int coh_dim) {
  using namespace fock;
  if (coh_dim <= 0) coh_dim = default_cutoff(q.alpha) + 1;
  State plus = coherent_state(q.alpha, coh_dim);
  State minus = coherent_state(-q.alpha, coh_dim);

  State s({Mode{rail_dim, ModeKind::RailH}, Mode{rail_dim, ModeKind::RailV},
           Mode{coh_dim, ModeKind::Coherent}});
  const double r = 1.0 / std::sqrt(2.0);
  for (int n = 0; n < coh_dim; ++n) {
    // |+>|alpha>: photon split over H/V rails with + sign
    s.at({1, 0, n}) = r * (q.a * plus.amplitudes()[n] +
                           q.b * minus.amplitudes()[n]);
    s.at({0, 1, n}) = r * (q.a * plus.amplitudes()[n] -
                           q.b * minus.amplitudes()[n]);
  }
  return s;
}

fock::State embed_logical_pair(const Eigen::Vector4cd& amps, double alpha,
                               int coh1, int coh2) {
  using fock::State;
  State acc;
  bool first = true;
  for (int v = 0; v < 2; ++v) {
    for (int w = 0; w < 2; ++w) {
      if (std::abs(amps[2 * v + w]) < 1e-15) continue;
      HybridQubit qv{v == 0 ? 1.0 : 0.0, v == 0 ? 0.0 : 1.0, alpha};
      HybridQubit qw{w == 0 ? 1.0 : 0.0, w == 0 ? 0.0 : 1.0, alpha};
      State prod = tensor(embed_fock(qv, 2, coh1), embed_fock(qw, 2, coh2));
      prod.amplitudes() *= amps[2 * v + w];
      if (first) {
        acc = std::move(prod);
        first = false;
      } else {
        acc.amplitudes() += prod.amplitudes();
      }
    }
  }
  return acc;
}

HybridQubit extract_logical(const fock::State& s, double alpha, double tol) {
  HybridQubit basis0{1.0, 0.0, alpha}, basis1{0.0, 1.0, alpha};
  fock::State e0 = embed_fock(basis0, s.mode(0).dim, s.mode(2).dim);
  fock::State e1 = embed_fock(basis1, s.mode(0).dim, s.mode(2).dim);
  cplx a = e0.inner(s), b = e1.inner(s);
  double inside = std::norm(a) + std::norm(b);
  double total = s.norm() * s.norm();
  if (total - inside > tol)
    throw std::runtime_error("state leaves the logical subspace");
  HybridQubit q{a, b, alpha};
  q.normalize();
  return q;
}

}  // namespace hqt
