// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/css_code.hpp"

#include <algorithm>

#include "bocklift/ring_linalg.hpp"

namespace bocklift {

namespace {

// Incremental GF(2) eliminator used to pick deterministic quotient bases.
class Gf2Basis {
 public:
  // Reduces v against the stored rows; returns the remainder.
  std::vector<u64> reduce(std::vector<u64> v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot]) {
        for (size_t i = 0; i < v.size(); ++i) v[i] ^= row[i];
      }
    }
    return v;
  }

  // Returns true (and absorbs the remainder) if v is independent.
  bool add(const std::vector<u64>& v) {
    std::vector<u64> rem = reduce(v);
    for (size_t i = 0; i < rem.size(); ++i) {
      if (rem[i]) {
        rows_.emplace_back(static_cast<int>(i), std::move(rem));
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::pair<int, std::vector<u64>>> rows_;
};

std::vector<u64> row_bits(const ResidueMatrix& m, int r) {
  std::vector<u64> out(static_cast<size_t>(m.cols));
  for (int c = 0; c < m.cols; ++c) out[c] = m.at(r, c) & 1;
  return out;
}

// k x k GF(2) inverse by Gauss-Jordan; the logical pairing is always
// nondegenerate, so failure here means an internal bug.
std::vector<std::vector<u64>> gf2_inverse(std::vector<std::vector<u64>> m) {
  const int k = static_cast<int>(m.size());
  std::vector<std::vector<u64>> inv(k, std::vector<u64>(k, 0));
  for (int i = 0; i < k; ++i) inv[i][i] = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r) {
      if (m[r][col]) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) fail(ErrorKind::kInternal, "degenerate logical pairing");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < k; ++r) {
      if (r == col || !m[r][col]) continue;
      for (int c = 0; c < k; ++c) {
        m[r][c] ^= m[col][c];
        inv[r][c] ^= inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

CssCode make_code(std::string name, int n, ResidueMatrix hx, ResidueMatrix hz,
                  int entry_exponent) {
  if (n < 0) fail(ErrorKind::kValidation, "negative qubit count");
  if (hx.cols != n || hz.cols != n) {
    fail(ErrorKind::kDimensionMismatch,
         "parity-check column count must equal n = " + std::to_string(n));
  }
  if (hx.exponent != entry_exponent || hz.exponent != entry_exponent) {
    fail(ErrorKind::kValidation, "parity-check matrices must carry the declared entry exponent");
  }
  CssCode code;
  code.name = std::move(name);
  code.n = n;
  code.hx = std::move(hx);
  code.hz = std::move(hz);
  code.entry_exponent = entry_exponent;
  return code;
}

ValidationReport validate(const CssCode& code) {
  if (code.hx.cols != code.n || code.hz.cols != code.n) {
    fail(ErrorKind::kDimensionMismatch, "parity-check column count must equal n");
  }

  const ResidueMatrix product = mat_mul_mod(code.hx, code.hz.transposed(), 1);
  for (int i = 0; i < product.rows; ++i) {
    for (int k = 0; k < product.cols; ++k) {
      if (product.at(i, k) != 0) {
        fail(ErrorKind::kValidation,
             "stabilizers do not commute modulo 2: X row " + std::to_string(i) +
                 " and Z row " + std::to_string(k) + " overlap oddly");
      }
    }
  }

  ValidationReport report;
  report.n = code.n;
  report.m_x = code.hx.rows;
  report.m_z = code.hz.rows;
  report.entry_exponent = code.entry_exponent;
  report.rank_x = rank_mod2(code.hx);
  report.rank_z = rank_mod2(code.hz);
  report.k = code.n - report.rank_x - report.rank_z;
  report.commutes_mod2 = true;
  report.x_independent = report.rank_x == code.hx.rows;
  if (report.k < 0) fail(ErrorKind::kInternal, "negative logical qubit count");
  return report;
}

int max_commutativity_level(const CssCode& code, int cap) {
  if (cap < 0) fail(ErrorKind::kValidation, "negative cap");
  const int probe = std::min(cap, kMaxExponent);
  const ResidueMatrix raw = mat_mul_mod(code.hx, code.hz.transposed(), kMaxExponent);
  const int level = two_adic_level(raw, probe);
  return level == probe ? cap : level;
}

bool x_generators_independent(const CssCode& code) {
  return rank_mod2(code.hx) == code.hx.rows;
}

DivisibilityReport divisibility_report(const CssCode& code, int cap) {
  if (code.entry_exponent != 1) {
    fail(ErrorKind::kPrecondition, "divisibility report requires a binary code");
  }
  DivisibilityReport report;
  report.cap = cap;
  report.d = cap;
  for (int r = 0; r < code.hx.rows; ++r) {
    u64 w = 0;
    for (int c = 0; c < code.hx.cols; ++c) w += code.hx.at(r, c);
    report.weights.push_back(w);
    const int v = val2(w, cap);
    report.valuations.push_back(v);
    report.d = std::min(report.d, v);
  }
  return report;
}

std::vector<int> homology_structure(const CssCode& code, int m) {
  if (m < 1 || m > kMaxExponent) fail(ErrorKind::kValidation, "level out of range");
  if (max_commutativity_level(code, m) < m) {
    fail(ErrorKind::kIllDefinedHomology,
         "homology is not defined at level " + std::to_string(m) +
             ": stabilizers do not commute modulo 2^" + std::to_string(m));
  }

  const ResidueMatrix hxm = code.hx.reduced(m);
  const ResidueMatrix hzm = code.hz.reduced(m);

  // Present the quotient: kernel generators of hx, with relations given by
  // the rows of hz (expressed in those generators) plus the syzygies among
  // the generators themselves.
  const ResidueMatrix kern = kernel_basis_mod(hxm);  // t x n
  const ResidueMatrix kern_t = kern.transposed();    // n x t

  std::vector<std::vector<u64>> relations;
  for (int r = 0; r < hzm.rows; ++r) {
    const auto coeffs = solve_mod(kern_t, hzm.row(r));
    if (!coeffs) {
      fail(ErrorKind::kInternal, "boundary row escaped the cycle module");
    }
    relations.push_back(coeffs->entries);
  }
  const ResidueMatrix syzygies = kernel_basis_mod(kern_t);
  for (int r = 0; r < syzygies.rows; ++r) relations.push_back(syzygies.row(r).entries);

  ResidueMatrix presentation = relations.empty()
                                   ? ResidueMatrix(0, kern.rows, m)
                                   : ResidueMatrix::from_rows(m, relations);
  return module_invariants(presentation);
}

LogicalBasis logical_bases(const CssCode& code) {
  const ResidueMatrix hx2 = code.hx.reduced(1);
  const ResidueMatrix hz2 = code.hz.reduced(1);

  // Cocycle classes: kernel rows of hz that stay independent modulo the row
  // span of hx; lowest-index generators win.
  const ResidueMatrix z_kernel = kernel_basis_mod(hz2);
  Gf2Basis gamma_elim;
  for (int r = 0; r < hx2.rows; ++r) gamma_elim.add(row_bits(hx2, r));
  std::vector<ResidueVector> gammas;
  for (int r = 0; r < z_kernel.rows; ++r) {
    if (gamma_elim.add(row_bits(z_kernel, r))) gammas.push_back(z_kernel.row(r));
  }

  const ResidueMatrix x_kernel = kernel_basis_mod(hx2);
  Gf2Basis theta_elim;
  for (int r = 0; r < hz2.rows; ++r) theta_elim.add(row_bits(hz2, r));
  std::vector<ResidueVector> thetas;
  for (int r = 0; r < x_kernel.rows; ++r) {
    if (theta_elim.add(row_bits(x_kernel, r))) thetas.push_back(x_kernel.row(r));
  }

  if (gammas.size() != thetas.size()) {
    fail(ErrorKind::kInternal, "cycle and cocycle class counts disagree");
  }
  const int k = static_cast<int>(gammas.size());
  if (k == 0) return {};

  // Enforce <theta_a, gamma_b> = delta_ab by applying the inverse pairing
  // matrix to the theta side.
  std::vector<std::vector<u64>> pairing(k, std::vector<u64>(k, 0));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      u64 dot = 0;
      for (int j = 0; j < code.n; ++j) dot ^= thetas[a].entries[j] & gammas[b].entries[j];
      pairing[a][b] = dot;
    }
  }
  const auto inv = gf2_inverse(pairing);
  std::vector<ResidueVector> dual_thetas;
  for (int a = 0; a < k; ++a) {
    ResidueVector t = zero_vector(1, code.n);
    for (int b = 0; b < k; ++b) {
      if (!inv[a][b]) continue;
      for (int j = 0; j < code.n; ++j) t.entries[j] ^= thetas[b].entries[j];
    }
    dual_thetas.push_back(std::move(t));
  }

  LogicalBasis basis;
  basis.gammas = std::move(gammas);
  basis.thetas = std::move(dual_thetas);
  return basis;
}

ClassWitness classes_equal(const CssCode& code, const ResidueVector& theta1,
                           const ResidueVector& theta2, int m) {
  if (theta1.length() != code.n || theta2.length() != code.n) {
    fail(ErrorKind::kDimensionMismatch, "phase vector length must equal n");
  }
  for (const ResidueVector* t : {&theta1, &theta2}) {
    if (!mat_vec_mod(code.hx, *t, m).is_zero()) {
      fail(ErrorKind::kNotACycle, "input is not a cycle at level " + std::to_string(m));
    }
  }
  const ResidueVector diff = vec_sub_mod(theta1.reduced(m), theta2.reduced(m), m);
  auto s = solve_mod(code.hz.transposed().reduced(m), diff);
  ClassWitness witness;
  witness.equal = s.has_value();
  witness.s = std::move(s);
  return witness;
}

}  // namespace bocklift
