#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcjt/serialize.hpp"

namespace qcjt {

struct GridPoint {
  std::uint32_t p = 7;
  unsigned e = 1;
  unsigned n = 3;
  unsigned c = 2;
  std::string label() const;
};

// (3,1..3,2,2), (7,1..3,3,2), (5,1..2,2,3) as (p, e, n, c).
std::vector<GridPoint> default_grid();

struct VerifyOptions {
  std::vector<GridPoint> grid;
  bool mutant = false;  // build modules with a non-primitive q
  std::uint64_t seed = 0;
};

struct CheckOutcome {
  std::string config;
  std::string statement;
  bool passed = true;
  bool skipped = false;
  std::string note;
  Json counterexample;  // null when passed
};

std::vector<CheckOutcome> run_property_suite(const VerifyOptions& opts);

}  // namespace qcjt
