// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/ring_linalg.hpp"

#include <algorithm>

namespace bocklift {

namespace {

// Working row: the vector itself plus its coefficients over the input rows,
// so that vec = coeff * input at every step.
struct WorkRow {
  std::vector<u64> vec;
  std::vector<u64> coeff;
};

void axpy(std::vector<u64>& dst, u64 scale, const std::vector<u64>& src, u64 mask) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] = (dst[i] - scale * src[i]) & mask;
}

void scale_row(std::vector<u64>& row, u64 scale, u64 mask) {
  for (u64& x : row) x = (x * scale) & mask;
}

}  // namespace

HowellForm howell_form(const ResidueMatrix& a) {
  const int e = a.exponent;
  const u64 mask = mod_mask(e);

  std::vector<WorkRow> pool(a.rows);
  for (int r = 0; r < a.rows; ++r) {
    pool[r].vec.assign(a.data.begin() + static_cast<size_t>(r) * a.cols,
                       a.data.begin() + static_cast<size_t>(r + 1) * a.cols);
    pool[r].coeff.assign(static_cast<size_t>(a.rows), 0);
    pool[r].coeff[r] = 1;
  }

  std::vector<WorkRow> out;
  std::vector<int> pivot_cols;
  std::vector<int> pivot_vals;

  for (int col = 0; col < a.cols; ++col) {
    // Pivot: minimal 2-adic valuation in this column, lowest index on ties.
    int best = -1;
    int best_val = e + 1;
    for (size_t i = 0; i < pool.size(); ++i) {
      const u64 x = pool[i].vec[col];
      if (x == 0) continue;
      const int v = val2(x, e);
      if (v < best_val) {
        best_val = v;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) continue;

    WorkRow pivot = std::move(pool[best]);
    pool.erase(pool.begin() + best);

    const int v = best_val;
    const u64 unit = pivot.vec[col] >> v;
    if (unit != 1) {
      const u64 inv = inverse_odd(unit);
      scale_row(pivot.vec, inv, mask);
      scale_row(pivot.coeff, inv, mask);
    }

    for (WorkRow& row : pool) {
      const u64 x = row.vec[col];
      if (x == 0) continue;
      const u64 q = x >> v;  // exact: v is minimal in this column
      axpy(row.vec, q, pivot.vec, mask);
      axpy(row.coeff, q, pivot.coeff, mask);
    }

    // Annihilator closure: 2^{e-v} times the pivot row vanishes at this
    // column but may contribute further right.
    if (v > 0) {
      WorkRow ann;
      ann.vec = pivot.vec;
      ann.coeff = pivot.coeff;
      const u64 s = u64{1} << (e - v);
      scale_row(ann.vec, s, mask);
      scale_row(ann.coeff, s, mask);
      bool nonzero = false;
      for (u64 x : ann.vec) nonzero |= (x != 0);
      if (nonzero) pool.push_back(std::move(ann));
    }

    out.push_back(std::move(pivot));
    pivot_cols.push_back(col);
    pivot_vals.push_back(v);
  }

  // Reduce entries above each pivot modulo the pivot.
  for (size_t t = 0; t < out.size(); ++t) {
    const int col = pivot_cols[t];
    const int v = pivot_vals[t];
    for (size_t r = 0; r < t; ++r) {
      const u64 x = out[r].vec[col];
      const u64 q = x >> v;
      if (q == 0) continue;
      axpy(out[r].vec, q, out[t].vec, mask);
      axpy(out[r].coeff, q, out[t].coeff, mask);
    }
  }

  HowellForm result;
  const int nr = static_cast<int>(out.size());
  result.h = ResidueMatrix(nr, a.cols, e);
  result.u = ResidueMatrix(nr, a.rows, e);
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < a.cols; ++c) result.h.at(r, c) = out[r].vec[c];
    for (int c = 0; c < a.rows; ++c) result.u.at(r, c) = out[r].coeff[c];
  }
  result.pivot_cols = std::move(pivot_cols);
  result.pivot_vals = std::move(pivot_vals);
  return result;
}

std::optional<ResidueVector> solve_mod(const ResidueMatrix& a, const ResidueVector& b) {
  if (a.exponent != b.exponent) {
    fail(ErrorKind::kDimensionMismatch, "solve_mod: modulus exponents differ");
  }
  if (a.rows != b.length()) {
    fail(ErrorKind::kDimensionMismatch, "solve_mod: right-hand side length mismatch");
  }
  const int e = a.exponent;
  const u64 mask = mod_mask(e);

  // b lies in the column span of a iff it reduces to zero against the Howell
  // form of a^T, whose rows generate that span.
  const HowellForm ht = howell_form(a.transposed());

  std::vector<u64> residual = b.entries;
  std::vector<u64> t(static_cast<size_t>(ht.h.rows), 0);
  for (int i = 0; i < ht.h.rows; ++i) {
    const int col = ht.pivot_cols[i];
    const int v = ht.pivot_vals[i];
    const u64 x = residual[col];
    if (x == 0) continue;
    if (val2(x, e) < v) return std::nullopt;
    const u64 q = x >> v;
    t[i] = q;
    for (int c = 0; c < ht.h.cols; ++c) {
      residual[c] = (residual[c] - q * ht.h.at(i, c)) & mask;
    }
  }
  for (u64 x : residual) {
    if (x != 0) return std::nullopt;
  }

  ResidueVector x = zero_vector(e, a.cols);
  for (int i = 0; i < ht.u.rows; ++i) {
    if (t[i] == 0) continue;
    for (int c = 0; c < a.cols; ++c) {
      x.entries[c] = (x.entries[c] + t[i] * ht.u.at(i, c)) & mask;
    }
  }
  return x;
}

ResidueMatrix kernel_basis_mod(const ResidueMatrix& a) {
  const int e = a.exponent;
  const int n = a.cols;  // unknowns
  const int r = a.rows;

  // Rows of [a^T | I] span {(c * a^T, c)}; the Howell closure makes the rows
  // vanishing on the first block generate exactly {c : a*c = 0}.
  ResidueMatrix aug(n, r + n, e);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) aug.at(i, j) = a.at(j, i);
    aug.at(i, r + i) = 1;
  }
  const HowellForm hf = howell_form(aug);

  std::vector<std::vector<u64>> gens;
  for (int i = 0; i < hf.h.rows; ++i) {
    if (hf.pivot_cols[i] < r) continue;  // touches the first block
    std::vector<u64> g(static_cast<size_t>(n), 0);
    for (int c = 0; c < n; ++c) g[c] = hf.h.at(i, r + c);
    gens.push_back(std::move(g));
  }
  if (gens.empty()) return ResidueMatrix(0, n, e);
  return ResidueMatrix::from_rows(e, gens);
}

std::vector<int> module_invariants(const ResidueMatrix& a) {
  const int e = a.exponent;
  const u64 mask = mod_mask(e);
  ResidueMatrix m = a;

  const int steps = std::min(m.rows, m.cols);
  std::vector<int> diag_vals;
  for (int t = 0; t < steps; ++t) {
    // Global minimum valuation in the trailing submatrix.
    int best_r = -1, best_c = -1, best_val = e + 1;
    for (int r = t; r < m.rows; ++r) {
      for (int c = t; c < m.cols; ++c) {
        const u64 x = m.at(r, c);
        if (x == 0) continue;
        const int v = val2(x, e);
        if (v < best_val) {
          best_val = v;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r < 0) break;  // trailing submatrix is zero

    for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(best_r, c));
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, best_c));

    const int v = best_val;
    const u64 unit = m.at(t, t) >> v;
    if (unit != 1) {
      const u64 inv = inverse_odd(unit);
      for (int c = t; c < m.cols; ++c) m.at(t, c) = (m.at(t, c) * inv) & mask;
    }
    for (int r = t + 1; r < m.rows; ++r) {
      const u64 q = m.at(r, t) >> v;
      if (q == 0) continue;
      for (int c = t; c < m.cols; ++c) m.at(r, c) = (m.at(r, c) - q * m.at(t, c)) & mask;
    }
    for (int c = t + 1; c < m.cols; ++c) {
      const u64 q = m.at(t, c) >> v;
      if (q == 0) continue;
      for (int r = t; r < m.rows; ++r) m.at(r, c) = (m.at(r, c) - q * m.at(r, t)) & mask;
    }
    diag_vals.push_back(v);
  }

  std::vector<int> exponents;
  for (int c = 0; c < m.cols; ++c) {
    int v;
    if (c < static_cast<int>(diag_vals.size())) {
      v = diag_vals[c];
    } else {
      v = e;  // no relation touches this coordinate
    }
    if (v > 0) exponents.push_back(std::min(v, e));
  }
  std::sort(exponents.rbegin(), exponents.rend());
  return exponents;
}

int rank_mod2(const ResidueMatrix& a) {
  return howell_form(a.reduced(1)).h.rows;
}

}  // namespace bocklift
