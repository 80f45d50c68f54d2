#include <vector>

#include "doctest.h"
#include "hqt/rng.hpp"

using hqt::Rng;

TEST_CASE("streams are deterministic and keyed") {
  Rng a = Rng::stream(123, 4, 5, 0);
  Rng b = Rng::stream(123, 4, 5, 0);
  Rng c = Rng::stream(123, 4, 6, 0);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    if (x != c.next()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("uniform stays in [0,1)") {
  Rng r(99);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("categorical respects weights") {
  Rng r(7);
  const std::vector<double> w{1.0, 3.0};  // need not be normalized
  long n1 = 0;
  const long n = 40000;
  for (long i = 0; i < n; ++i) n1 += r.categorical(w);
  const double f = double(n1) / double(n);
  CHECK(f == doctest::Approx(0.75).epsilon(0.02));
}
