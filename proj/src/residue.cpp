// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/residue.hpp"

#include <bit>
#include <sstream>

namespace bocklift {

namespace {

void check_exponent(int exponent) {
  if (exponent < 1 || exponent > kMaxExponent) {
    fail(ErrorKind::kValidation,
         "modulus exponent must be in [1, " + std::to_string(kMaxExponent) +
             "], got " + std::to_string(exponent));
  }
}

void check_canonical(u64 x, int exponent) {
  if ((x & ~mod_mask(exponent)) != 0) {
    fail(ErrorKind::kValidation,
         "entry " + std::to_string(x) + " is not reduced modulo 2^" +
             std::to_string(exponent));
  }
}

}  // namespace

int val2(u64 x, int exponent) {
  if (x == 0) return exponent;
  int v = std::countr_zero(x);
  return v < exponent ? v : exponent;
}

u64 inverse_odd(u64 x) {
  if ((x & 1) == 0) fail(ErrorKind::kInternal, "inverse_odd of even element");
  u64 inv = x;  // correct to 3 bits already
  for (int i = 0; i < 5; ++i) inv *= 2 - x * inv;
  return inv;
}

ResidueVector::ResidueVector(int exponent_in, std::vector<u64> entries_in)
    : exponent(exponent_in), entries(std::move(entries_in)) {
  check_exponent(exponent);
  for (u64 x : entries) check_canonical(x, exponent);
}

bool ResidueVector::is_zero() const {
  for (u64 x : entries)
    if (x != 0) return false;
  return true;
}

ResidueVector ResidueVector::reduced(int new_exponent) const {
  check_exponent(new_exponent);
  ResidueVector out;
  out.exponent = new_exponent;
  out.entries.reserve(entries.size());
  const u64 mask = mod_mask(new_exponent);
  for (u64 x : entries) out.entries.push_back(x & mask);
  return out;
}

ResidueVector zero_vector(int exponent, int length) {
  return ResidueVector(exponent, std::vector<u64>(static_cast<size_t>(length), 0));
}

ResidueMatrix::ResidueMatrix(int rows_in, int cols_in, int exponent_in)
    : rows(rows_in), cols(cols_in), exponent(exponent_in),
      data(static_cast<size_t>(rows_in) * cols_in, 0) {
  check_exponent(exponent);
  if (rows < 0 || cols < 0) fail(ErrorKind::kValidation, "negative matrix shape");
}

ResidueMatrix::ResidueMatrix(int rows_in, int cols_in, int exponent_in, std::vector<u64> data_in)
    : rows(rows_in), cols(cols_in), exponent(exponent_in), data(std::move(data_in)) {
  check_exponent(exponent);
  if (rows < 0 || cols < 0) fail(ErrorKind::kValidation, "negative matrix shape");
  if (data.size() != static_cast<size_t>(rows) * cols) {
    fail(ErrorKind::kDimensionMismatch, "matrix data size does not match shape");
  }
  for (u64 x : data) check_canonical(x, exponent);
}

ResidueMatrix ResidueMatrix::from_rows(int exponent, const std::vector<std::vector<u64>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  std::vector<u64> data;
  data.reserve(static_cast<size_t>(r) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      fail(ErrorKind::kDimensionMismatch, "ragged matrix rows");
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return ResidueMatrix(r, c, exponent, std::move(data));
}

ResidueMatrix ResidueMatrix::identity(int n, int exponent) {
  ResidueMatrix m(n, n, exponent);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ResidueVector ResidueMatrix::row(int r) const {
  ResidueVector out;
  out.exponent = exponent;
  out.entries.assign(data.begin() + static_cast<size_t>(r) * cols,
                     data.begin() + static_cast<size_t>(r + 1) * cols);
  return out;
}

ResidueMatrix ResidueMatrix::transposed() const {
  ResidueMatrix out(cols, rows, exponent);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.at(c, r) = at(r, c);
  return out;
}

ResidueMatrix ResidueMatrix::reduced(int new_exponent) const {
  check_exponent(new_exponent);
  ResidueMatrix out(rows, cols, new_exponent);
  const u64 mask = mod_mask(new_exponent);
  for (size_t i = 0; i < data.size(); ++i) out.data[i] = data[i] & mask;
  return out;
}

bool ResidueMatrix::is_zero() const {
  for (u64 x : data)
    if (x != 0) return false;
  return true;
}

ResidueMatrix mat_mul_mod(const ResidueMatrix& a, const ResidueMatrix& b, int e_out) {
  if (a.cols != b.rows) {
    fail(ErrorKind::kDimensionMismatch,
         "matrix product shape mismatch: " + std::to_string(a.cols) + " vs " +
             std::to_string(b.rows));
  }
  ResidueMatrix out(a.rows, b.cols, e_out);
  const u64 mask = mod_mask(e_out);
  for (int r = 0; r < a.rows; ++r) {
    for (int k = 0; k < a.cols; ++k) {
      const u64 arx = a.at(r, k);
      if (arx == 0) continue;
      for (int c = 0; c < b.cols; ++c) {
        out.at(r, c) += arx * b.at(k, c);
      }
    }
    for (int c = 0; c < b.cols; ++c) out.at(r, c) &= mask;
  }
  return out;
}

ResidueVector mat_vec_mod(const ResidueMatrix& a, const ResidueVector& x, int e_out) {
  if (a.cols != x.length()) {
    fail(ErrorKind::kDimensionMismatch, "matrix-vector shape mismatch");
  }
  ResidueVector out = zero_vector(e_out, a.rows);
  const u64 mask = mod_mask(e_out);
  for (int r = 0; r < a.rows; ++r) {
    u64 acc = 0;
    for (int c = 0; c < a.cols; ++c) acc += a.at(r, c) * x.entries[c];
    out.entries[r] = acc & mask;
  }
  return out;
}

ResidueVector vec_add_mod(const ResidueVector& a, const ResidueVector& b, int e_out) {
  if (a.length() != b.length()) fail(ErrorKind::kDimensionMismatch, "vector length mismatch");
  ResidueVector out = zero_vector(e_out, a.length());
  const u64 mask = mod_mask(e_out);
  for (int i = 0; i < a.length(); ++i) out.entries[i] = (a.entries[i] + b.entries[i]) & mask;
  return out;
}

ResidueVector vec_sub_mod(const ResidueVector& a, const ResidueVector& b, int e_out) {
  if (a.length() != b.length()) fail(ErrorKind::kDimensionMismatch, "vector length mismatch");
  ResidueVector out = zero_vector(e_out, a.length());
  const u64 mask = mod_mask(e_out);
  for (int i = 0; i < a.length(); ++i) out.entries[i] = (a.entries[i] - b.entries[i]) & mask;
  return out;
}

int two_adic_level(const ResidueMatrix& m, int cap) {
  if (cap < 0) fail(ErrorKind::kValidation, "negative cap");
  int level = cap;
  for (u64 x : m.data) {
    level = std::min(level, val2(x, cap));
    if (level == 0) break;
  }
  return level;
}

std::string to_string(const ResidueVector& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.length(); ++i) {
    if (i) os << ',';
    os << v.entries[i];
  }
  os << ')';
  return os.str();
}

}  // namespace bocklift
