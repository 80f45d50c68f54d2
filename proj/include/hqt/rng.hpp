#pragma once

#include <cstdint>
#include <span>

namespace hqt {

// splitmix64: stream derivation / seeding helper.
inline std::uint64_t splitmix64_next(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// xoshiro256++ with deterministic sub-stream derivation.  A stream is keyed
// by (master seed, point id, trial id) so sweeps reproduce byte-identically
// regardless of scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : m_state) w = splitmix64_next(s);
  }

  static Rng stream(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                    std::uint64_t c = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64_next(s);
    s ^= a * 0x9e3779b97f4a7c15ull;
    h ^= splitmix64_next(s);
    s ^= b * 0xc2b2ae3d27d4eb4full;
    h ^= splitmix64_next(s);
    s ^= c * 0x165667b19e3779f9ull;
    h ^= splitmix64_next(s);
    return Rng(h);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(m_state[0] + m_state[3], 23) + m_state[0];
    const std::uint64_t t = m_state[1] << 17;
    m_state[2] ^= m_state[0];
    m_state[3] ^= m_state[1];
    m_state[1] ^= m_state[2];
    m_state[0] ^= m_state[3];
    m_state[2] ^= t;
    m_state[3] = rotl(m_state[3], 45);
    return result;
  }

  // uniform in [0,1) with 53 bits; identical on every platform
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // index into cumulative-free weight list (weights need not sum to 1 if
  // `total` given)
  int categorical(std::span<const double> w) {
    double total = 0.0;
    for (double x : w) total += x;
    double r = uniform() * total;
    for (std::size_t i = 0; i < w.size(); ++i) {
      r -= w[i];
      if (r < 0.0) return int(i);
    }
    return int(w.size()) - 1;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t m_state[4];
};

}  // namespace hqt
