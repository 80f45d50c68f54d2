#pragma once

#include <array>
#include <string>
#include <vector>

#include "hqt/bell.hpp"
#include "hqt/teleport.hpp"

// Versioned on-disk copies of the discrete tables the library hardcodes
// (feed-forward rules, detector-pattern classes, parity checks, round
// schedule).  Tests diff these files against the in-code tables so a silent
// edit to either side fails loudly.

namespace hqt::tables {

// Compile-time default, overridable with the HQT_DATA_DIR environment
// variable.
std::string data_dir();

struct FeedforwardRow {
  bell::BAlphaOutcome a;
  bell::BIIClass b;
  bool possible = false;
  bool failure = false;
  int j = 0, k = 0;
};
std::vector<FeedforwardRow> load_feedforward_table();

struct ClickPatternRow {
  std::array<bool, 4> clicks;  // c+, c-, d+, d-
  bell::BIIClass cls;
};
std::vector<ClickPatternRow> load_click_patterns();

std::array<std::array<int, 7>, 3> load_check_matrix();

std::vector<std::string> load_telecorrection_schedule();

// In-code schedule of the error-correction round, one token per gate layer.
std::vector<std::string> telecorrection_schedule();

}  // namespace hqt::tables
