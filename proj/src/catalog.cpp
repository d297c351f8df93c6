// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/catalog.hpp"

namespace bocklift {

namespace {

ResidueMatrix binary(const std::vector<std::vector<u64>>& rows, int cols_if_empty) {
  if (rows.empty()) return ResidueMatrix(0, cols_if_empty, 1);
  return ResidueMatrix::from_rows(1, rows);
}

// Rows of the [r, 2^r - 1] Hamming-style check matrix: column j (1-based)
// holds the binary expansion of j, most significant bit in row 0.
std::vector<std::vector<u64>> hamming_rows(int r) {
  const int n = (1 << r) - 1;
  std::vector<std::vector<u64>> rows(static_cast<size_t>(r), std::vector<u64>(n, 0));
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < r; ++i) {
      rows[i][j - 1] = (static_cast<u64>(j) >> (r - 1 - i)) & 1;
    }
  }
  return rows;
}

CssCode build(const std::string& name) {
  if (name == "rep3") {
    return make_code("rep3", 3, binary({}, 3),
                     binary({{1, 1, 0}, {0, 1, 1}}, 3), 1);
  }
  if (name == "c4") {
    return make_code("c4", 4, binary({{1, 1, 1, 1}}, 4), binary({}, 4), 1);
  }
  if (name == "cdep") {
    // Third X generator is the sum of the first two; the dependence is what
    // makes refinement defects obstructable.
    return make_code("cdep", 4,
                     binary({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}}, 4),
                     binary({}, 4), 1);
  }
  if (name == "steane") {
    const auto h = hamming_rows(3);
    return make_code("steane", 7, binary(h, 7), binary(h, 7), 1);
  }
  if (name == "shor9") {
    return make_code(
        "shor9", 9,
        binary({{1, 1, 1, 1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 1, 1, 1}}, 9),
        binary({{1, 1, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, 1, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 1, 1, 0, 0, 0, 0},
                {0, 0, 0, 0, 1, 1, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 1, 1, 0},
                {0, 0, 0, 0, 0, 0, 0, 1, 1}},
               9),
        1);
  }
  if (name == "rm15") {
    // X checks: the four linear functionals on nonzero 4-bit columns.
    // Z checks: those plus the six pairwise products.
    const auto lin = hamming_rows(4);
    std::vector<std::vector<u64>> z = lin;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        std::vector<u64> prod(15, 0);
        for (int j = 0; j < 15; ++j) prod[j] = lin[a][j] & lin[b][j];
        z.push_back(std::move(prod));
      }
    }
    return make_code("rm15", 15, binary(lin, 15), binary(z, 15), 1);
  }
  fail(ErrorKind::kNotFound, "unknown catalog code: " + name);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"c4", "cdep", "rep3", "rm15", "shor9", "steane"};
}

CssCode catalog_get(const std::string& name) { return build(name); }

}  // namespace bocklift
