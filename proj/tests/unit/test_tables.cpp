#include "doctest.h"
#include "hqt/steane.hpp"
#include "hqt/tables.hpp"

using namespace hqt;

TEST_CASE("feed-forward file matches the in-code table") {
  auto rows = tables::load_feedforward_table();
  CHECK(rows.size() == 25);
  for (auto& row : rows) {
    const auto& e = feedforward_entry(row.a, row.b);
    CHECK(e.possible == row.possible);
    if (!row.possible) continue;
    CHECK(e.failure == row.failure);
    if (row.failure) continue;
    CHECK(e.frame.j == row.j);
    CHECK(e.frame.k == row.k);
  }
}

TEST_CASE("click-pattern file matches the classifier") {
  auto rows = tables::load_click_patterns();
  CHECK(rows.size() == 16);
  for (auto& row : rows)
    CHECK(bell::classify_bii_pattern(row.clicks[0], row.clicks[1],
                                     row.clicks[2], row.clicks[3]) == row.cls);
}

TEST_CASE("check-matrix file matches the in-code masks") {
  auto m = tables::load_check_matrix();
  for (int r = 0; r < 3; ++r) {
    uint8_t mask = 0;
    for (int q = 0; q < 7; ++q)
      if (m[size_t(r)][size_t(q)]) mask |= uint8_t(1u << q);
    CHECK(mask == steane::kCheckRows[size_t(r)]);
  }
}

TEST_CASE("round-schedule file matches the in-code schedule") {
  auto file = tables::load_telecorrection_schedule();
  auto code = tables::telecorrection_schedule();
  REQUIRE(file.size() == code.size());
  for (size_t i = 0; i < file.size(); ++i) CHECK(file[i] == code[i]);
}
