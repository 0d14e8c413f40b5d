#pragma once

#include <string>
#include <vector>

#include "greenfn/numeric.hpp"
#include "greenfn/weyl.hpp"

namespace green::burnside {

/// Character table of W computed from class-sum structure constants.
/// All Weyl-group characters are rational, so eigenvalues are integers and
/// the whole computation is exact.
struct RawTable {
  weyl::ConjugacyClasses classes;
  std::vector<std::vector<Int>> values;  // values[ch][cl]
  std::vector<int> dims;                 // values[ch][identity class]
  std::vector<int> b_invariant;          // lowest degree of the fake-degree polynomial
  std::vector<Poly> fake_degrees;
};

RawTable compute_table(const weyl::RootSystem& rs);

}  // namespace green::burnside
