#pragma once

// Exact matrices over Z/p^k and over Z, and the diagonal normal form
//   Q X T = diag(p^s_1, ..., p^s_m),  0 <= s_1 <= ... <= s_m <= k,
// obtained by invertible row and column operations.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "covlift/modular.hpp"

namespace covlift {

using modular::Residue;

/// The ring Z/p^k.
class PrimePower {
 public:
  /// Throws InvalidModulus if p is not prime, k < 1, or p^k overflows.
  PrimePower(std::int64_t prime, int exponent);

  std::int64_t prime() const { return prime_; }
  int exponent() const { return exponent_; }
  Residue modulus() const { return modulus_; }

  Residue reduce(std::int64_t x) const { return modular::reduce(x, modulus_); }
  /// p^e for 0 <= e <= k, reduced (so p^k == 0).
  Residue power(int e) const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::int64_t prime_;
  int exponent_;
  Residue modulus_;
};

/// d_p(lambda): largest r < k with p^r | lambda, and k for lambda == 0.
int p_degree(Residue lambda, const PrimePower& ring);
bool is_unit(Residue lambda, const PrimePower& ring);
/// Throws NotAUnit.
Residue unit_inverse(Residue lambda, const PrimePower& ring);

/// Dense integer matrix, row-major. Entries may be negative.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact integer product. Throws DimensionMismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant by fraction-free elimination on arbitrary precision
/// integers; nullopt if the value does not fit in int64. Throws
/// DimensionMismatch for a non-square matrix.
std::optional<std::int64_t> determinant(const IntMatrix& a);

/// Matrix over Z/p^k with canonical entries in [0, p^k).
class ModMatrix {
 public:
  /// Zero matrix; throws DimensionMismatch for a zero dimension.
  ModMatrix(PrimePower ring, std::size_t rows, std::size_t cols);
  /// Reduces the given integers.
  ModMatrix(PrimePower ring, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static ModMatrix identity(PrimePower ring, std::size_t n);
  /// Reduces an integer matrix mod p^k.
  static ModMatrix reduce(PrimePower ring, const IntMatrix& m);

  const PrimePower& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores x mod p^k.
  void set(std::size_t i, std::size_t j, std::int64_t x) { data_[i * cols_ + j] = ring_.reduce(x); }

  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void scale_row(std::size_t i, Residue c);
  void scale_col(std::size_t j, Residue c);
  /// row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Residue c);
  /// col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Residue c);

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  PrimePower ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Throws DimensionMismatch, ModulusMismatch.
ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);
ModMatrix mat_mul_int(const ModMatrix& a, const IntMatrix& c);
ModMatrix mat_mul_int(const IntMatrix& c, const ModMatrix& a);
/// Gauss-Jordan with unit pivots. Throws DimensionMismatch, NotInvertible.
ModMatrix mat_inverse(const ModMatrix& a);

struct NormalFormResult {
  ModMatrix q;
  ModMatrix q_inv;
  ModMatrix t;
  /// Diagonal exponents, non-decreasing, s_i = k for i >= pivot_count.
  std::vector<int> exponents;
  std::size_t pivot_count = 0;
  /// 0-based index of the first s_i > 0, or rows() if every s_i is 0.
  std::size_t first_positive = 0;
};

/// Diagonalizes X by pivoting on an entry of least p-degree at each step
/// (ties: smallest column, then smallest row), scaling the pivot row to
/// p^r, clearing the pivot column by row operations, and finally clearing
/// the remaining off-diagonal entries by column operations. The zero matrix
/// yields s = (k, ..., k) and Q = T = I.
NormalFormResult normal_form(const ModMatrix& x);

/// Q X T is diagonal with entries p^{s_i} exactly as recorded.
bool is_normal_form_of(const NormalFormResult& nf, const ModMatrix& x);

}  // namespace covlift
