// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bocklift/errors.hpp"

namespace bocklift {

using u64 = std::uint64_t;

// All arithmetic in this project happens modulo 2^e with e <= kMaxExponent.
// Unsigned 64-bit wraparound is exact modulo 2^64, so products and sums of
// canonical representatives stay exact for every modulus we care about,
// including the unreduced products fed to two_adic_level (valuations are
// only ever probed up to kMaxExponent < 64).
inline constexpr int kMaxExponent = 63;

inline u64 mod_mask(int exponent) {
  return exponent >= 64 ? ~u64{0} : ((u64{1} << exponent) - 1);
}

// 2-adic valuation of a canonical representative; zero maps to `exponent`
// (the representative 0 is divisible by the full modulus).
int val2(u64 x, int exponent);

// Inverse of an odd element modulo 2^64 (hence modulo every 2^e).
u64 inverse_odd(u64 x);

// Vector with entries canonically reduced into [0, 2^exponent).
struct ResidueVector {
  int exponent = 1;
  std::vector<u64> entries;

  ResidueVector() = default;
  ResidueVector(int exponent_in, std::vector<u64> entries_in);

  int length() const { return static_cast<int>(entries.size()); }
  bool is_zero() const;

  // Re-reduces every entry into [0, 2^new_exponent).
  ResidueVector reduced(int new_exponent) const;

  bool operator==(const ResidueVector& other) const = default;
};

ResidueVector zero_vector(int exponent, int length);

// Dense row-major matrix with entries canonically reduced into
// [0, 2^exponent).  Empty shapes (0 rows and/or 0 columns) are legal and
// behave as zero maps throughout.
struct ResidueMatrix {
  int rows = 0;
  int cols = 0;
  int exponent = 1;
  std::vector<u64> data;  // rows * cols, row-major

  ResidueMatrix() = default;
  ResidueMatrix(int rows_in, int cols_in, int exponent_in);
  ResidueMatrix(int rows_in, int cols_in, int exponent_in, std::vector<u64> data_in);

  static ResidueMatrix from_rows(int exponent, const std::vector<std::vector<u64>>& rows);
  static ResidueMatrix identity(int n, int exponent);

  u64& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  u64 at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  ResidueVector row(int r) const;
  ResidueMatrix transposed() const;
  ResidueMatrix reduced(int new_exponent) const;
  bool is_zero() const;

  bool operator==(const ResidueMatrix& other) const = default;
};

// Exact product of canonical representatives, reduced modulo 2^e_out.  The
// input exponents are deliberately ignored: entries are read as the plain
// integers they canonically represent.
ResidueMatrix mat_mul_mod(const ResidueMatrix& a, const ResidueMatrix& b, int e_out);
ResidueVector mat_vec_mod(const ResidueMatrix& a, const ResidueVector& x, int e_out);

// Entrywise sum / difference modulo 2^e_out.
ResidueVector vec_add_mod(const ResidueVector& a, const ResidueVector& b, int e_out);
ResidueVector vec_sub_mod(const ResidueVector& a, const ResidueVector& b, int e_out);

// Largest k in [0, cap] such that 2^k divides every entry of m.  An empty or
// all-zero matrix reports cap.
int two_adic_level(const ResidueMatrix& m, int cap);

std::string to_string(const ResidueVector& v);

}  // namespace bocklift
