#include "doctest.h"
#include "hqt/steane.hpp"

using namespace hqt::steane;

TEST_CASE("syndrome identifies every single-qubit error") {
  CHECK(syndrome(0) == 0);
  for (int q = 0; q < 7; ++q)
    CHECK(syndrome(uint8_t(1u << q)) == q + 1);
}

TEST_CASE("single errors never flip the logical value") {
  for (int q = 0; q < 7; ++q) CHECK_FALSE(logical_flip(uint8_t(1u << q)));
}

TEST_CASE("flagged errors are never decoded into a silent flip") {
  // whenever the true error is confined to the erased set, the decoder either
  // succeeds or heralds -- it never silently misdecodes
  for (int erased = 0; erased < 128; ++erased)
    for (int err = 0; err < 128; ++err) {
      if (err & ~erased) continue;
      auto r = decode_with_erasures(uint8_t(err), uint8_t(erased));
      CHECK_FALSE(r.logical_error);
    }
}

TEST_CASE("erasure pairs decode cleanly, codeword triples herald") {
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      const uint8_t erased = uint8_t((1u << i) | (1u << j));
      auto r = decode_with_erasures(uint8_t(1u << i), erased);
      CHECK_FALSE(r.heralded_failure);
      CHECK_FALSE(r.logical_error);
    }
  // qubits {0,1,2} support a logical representative: their erasure is fatal
  // but heralded
  auto r = decode_with_erasures(0x03, 0x07);
  CHECK(r.heralded_failure);
}

TEST_CASE("unflagged singles decode plainly; mixed with erasures they herald") {
  // no erasures: ordinary single-error correction
  auto r = decode_with_erasures(0x01, 0x00);
  CHECK_FALSE(r.heralded_failure);
  CHECK_FALSE(r.logical_error);
  // erased qubit 6 plus a genuine error on qubit 0: the candidates straddle a
  // logical operator, so the decoder refuses to guess
  r = decode_with_erasures(0x01, 0x40);
  CHECK(r.heralded_failure);
  CHECK_FALSE(r.logical_error);
}
