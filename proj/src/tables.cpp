#include "hqt/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hqt::tables {

#ifndef HQT_DATA_DIR
#define HQT_DATA_DIR "data"
#endif

std::string data_dir() {
  if (const char* env = std::getenv("HQT_DATA_DIR")) return env;
  return HQT_DATA_DIR;
}

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& name) {
  std::ifstream f(data_dir() + "/" + name);
  if (!f) throw std::runtime_error("cannot open data file: " + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw std::runtime_error("empty data file: " + name);
  return rows;
}

bell::BAlphaOutcome parse_balpha(const std::string& s) {
  using O = bell::BAlphaOutcome;
  for (O o : {O::Even0, O::Odd0, O::ZeroEven, O::ZeroOdd, O::Failure})
    if (s == bell::to_string(o)) return o;
  throw std::runtime_error("bad carrier-measurement outcome: " + s);
}

bell::BIIClass parse_bii(const std::string& s) {
  using C = bell::BIIClass;
  for (C c : {C::PsiMinus, C::PsiPlus, C::UpperOnly, C::LowerOnly, C::NoClick})
    if (s == bell::to_string(c)) return c;
  throw std::runtime_error("bad fusion click class: " + s);
}

}  // namespace

std::vector<FeedforwardRow> load_feedforward_table() {
  std::vector<FeedforwardRow> out;
  for (auto& r : read_csv("feedforward_table.csv")) {
    if (r.size() != 6) throw std::runtime_error("feedforward row width");
    FeedforwardRow row;
    row.a = parse_balpha(r[0]);
    row.b = parse_bii(r[1]);
    row.possible = r[2] == "1";
    row.failure = r[3] == "1";
    row.j = std::stoi(r[4]);
    row.k = std::stoi(r[5]);
    out.push_back(row);
  }
  return out;
}

std::vector<ClickPatternRow> load_click_patterns() {
  std::vector<ClickPatternRow> out;
  for (auto& r : read_csv("bii_click_patterns.csv")) {
    if (r.size() != 5) throw std::runtime_error("click pattern row width");
    ClickPatternRow row;
    for (int i = 0; i < 4; ++i) row.clicks[size_t(i)] = r[size_t(i)] == "1";
    row.cls = parse_bii(r[4]);
    out.push_back(row);
  }
  return out;
}

std::array<std::array<int, 7>, 3> load_check_matrix() {
  auto rows = read_csv("steane_check_matrix.csv");
  if (rows.size() != 3) throw std::runtime_error("check matrix row count");
  std::array<std::array<int, 7>, 3> m{};
  for (size_t r = 0; r < 3; ++r) {
    if (rows[r].size() != 7) throw std::runtime_error("check matrix row width");
    for (size_t c = 0; c < 7; ++c) m[r][c] = std::stoi(rows[r][c]);
  }
  return m;
}

std::vector<std::string> load_telecorrection_schedule() {
  std::vector<std::string> out;
  for (auto& r : read_csv("telecorrector_circuit.csv")) {
    std::string joined;
    for (size_t i = 0; i < r.size(); ++i)
      joined += (i ? " " : "") + r[i];
    out.push_back(joined);
  }
  return out;
}

std::vector<std::string> telecorrection_schedule() {
  return {"prep_plus A1", "prep_plus A2", "hadamard A2", "cz A1 A2",
          "memory D",     "cz D A1",      "hadamard D",  "measure_x D",
          "measure_x A1"};
}

}  // namespace hqt::tables
