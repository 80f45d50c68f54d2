#pragma once

#include <array>
#include <cstdint>

namespace hqt::steane {

// Hamming(7,4) parity checks over the 7 block qubits; bit q of a mask is
// qubit q, whose column in the check matrix is the binary expansion of q+1.
inline constexpr std::array<uint8_t, 3> kCheckRows = {0x55, 0x66, 0x78};

int syndrome(uint8_t error);          // 0 if clean, else 1-based qubit index
bool parity(uint8_t mask);            // odd number of set bits?
bool logical_flip(uint8_t error);     // after plain syndrome correction

struct DecodeResult {
  bool heralded_failure = false;  // decoder knows it cannot pick an answer
  bool logical_error = false;     // silent logical flip after correction
};

// Decode an error pattern when the qubits in `erased` are flagged as located
// losses.  The decoder exhausts assignments supported on the erased set that
// reproduce the observed syndrome; if candidate assignments disagree on the
// logical value the round is declared failed (heralded), never silently
// wrong.  Errors outside the erased set fall back to ordinary single-error
// correction and may produce a silent logical flip.
DecodeResult decode_with_erasures(uint8_t error, uint8_t erased);

}  // namespace hqt::steane
