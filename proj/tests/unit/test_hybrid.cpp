#include <cmath>

#include "doctest.h"
#include "hqt/hybrid.hpp"

using namespace hqt;

TEST_CASE("logical basis embeds orthonormally") {
  for (double alpha : {0.6, 1.0, 1.5}) {
    fock::State zero = embed_fock(HybridQubit{1.0, 0.0, alpha});
    fock::State one = embed_fock(HybridQubit{0.0, 1.0, alpha});
    CHECK(zero.norm() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(one.norm() == doctest::Approx(1.0).epsilon(1e-10));
    // |+>|a> and |->|-a> are exactly orthogonal (rail overlap vanishes)
    CHECK(std::abs(zero.inner(one)) < 1e-12);
  }
}

TEST_CASE("embed and extract round-trip") {
  HybridQubit q{{0.3, 0.4}, {0.5, -0.2}, 0.9};
  q.normalize();
  fock::State s = embed_fock(q);
  HybridQubit back = extract_logical(s, 0.9);
  CHECK(fidelity(q, back) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("pauli actions on the amplitude pair") {
  HybridQubit q{0.6, 0.8, 1.0};
  HybridQubit x = q;
  x.pauli_x();
  CHECK(x.a == q.b);
  CHECK(x.b == q.a);
  HybridQubit h = q;
  h.hadamard();
  CHECK(std::abs(h.a - (q.a + q.b) / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(h.b - (q.a - q.b) / std::sqrt(2.0)) < 1e-12);
  CHECK(fidelity(q, q) == doctest::Approx(1.0));
}

TEST_CASE("z measurement follows the Born rule") {
  HybridQubit q{0.6, 0.8, 1.0};
  Rng rng(11);
  long ones = 0;
  const long n = 20000;
  for (long i = 0; i < n; ++i) ones += measure_z(q, rng);
  const double f = double(ones) / double(n);
  // |b|^2 = 0.64, 5 sigma of binomial noise
  CHECK(std::abs(f - 0.64) < 5.0 * std::sqrt(0.64 * 0.36 / double(n)));
}
