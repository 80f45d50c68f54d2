#include "hqt/steane.hpp"

#include <bit>
#include <cstddef>

namespace hqt::steane {

int syndrome(uint8_t error) {
  int s = 0;
  for (int r = 0; r < 3; ++r)
    s |= (std::popcount(unsigned(error & kCheckRows[size_t(r)])) & 1) << r;
  return s;
}

bool parity(uint8_t mask) { return std::popcount(unsigned(mask)) & 1; }

bool logical_flip(uint8_t error) {
  int s = syndrome(error);
  if (s) error ^= uint8_t(1u << (s - 1));
  return parity(error);
}

DecodeResult decode_with_erasures(uint8_t error, uint8_t erased) {
  const int s = syndrome(error);
  // enumerate assignments supported on the erased set
  uint8_t found = 0;
  bool any = false, mixed = false;
  for (uint8_t sub = erased;; sub = uint8_t((sub - 1) & erased)) {
    if (syndrome(sub) == s) {
      if (!any) {
        found = sub;
        any = true;
      } else if (parity(sub) != parity(found)) {
        mixed = true;
      }
    }
    if (sub == 0) break;
  }
  DecodeResult r;
  if (any) {
    if (mixed) {
      r.heralded_failure = true;  // solutions differ by a logical operator
      return r;
    }
    r.logical_error = parity(uint8_t(error ^ found));  // residual is a codeword
    return r;
  }
  if (erased == 0) {
    // no erasures: plain single-error correction
    uint8_t corr = error;
    if (s) corr ^= uint8_t(1u << (s - 1));
    r.logical_error = parity(corr);
    return r;
  }
  // Syndrome unreachable from the erased set alone, so at least one unflagged
  // error is present.  Enumerate erased-set assignments plus one outside
  // error; if the candidates disagree on the logical value, herald instead of
  // guessing (guessing here converts located + silent pairs into silent
  // logical flips).
  for (uint8_t sub = erased;; sub = uint8_t((sub - 1) & erased)) {
    for (int k = 0; k < 7; ++k) {
      if (erased & (1u << k)) continue;
      const uint8_t cand = uint8_t(sub | (1u << k));
      if (syndrome(cand) != s) continue;
      if (!any) {
        found = cand;
        any = true;
      } else if (parity(cand) != parity(found)) {
        mixed = true;
      }
    }
    if (sub == 0) break;
  }
  if (!any || mixed) {
    r.heralded_failure = true;
    return r;
  }
  r.logical_error = parity(uint8_t(error ^ found));
  return r;
}

}  // namespace hqt::steane
