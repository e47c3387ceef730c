#include "covlift/zn_matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "covlift/error.hpp"

namespace covlift {

// --- PrimePower -------------------------------------------------------------

PrimePower::PrimePower(std::int64_t prime, int exponent) : prime_(prime), exponent_(exponent) {
  if (!modular::is_prime(prime)) throw Error(ErrorCode::InvalidModulus, "modulus base is not prime");
  if (exponent < 1) throw Error(ErrorCode::InvalidModulus, "exponent must be at least 1");
  modulus_ = modular::checked_pow(prime, exponent);
  if (modulus_ < 0) throw Error(ErrorCode::InvalidModulus, "p^k does not fit in 63 bits");
}

Residue PrimePower::power(int e) const {
  if (e >= exponent_) return 0;
  return modular::checked_pow(prime_, e);
}

int p_degree(Residue lambda, const PrimePower& ring) {
  lambda = ring.reduce(lambda);
  if (lambda == 0) return ring.exponent();
  int r = 0;
  while (lambda % ring.prime() == 0) {
    lambda /= ring.prime();
    ++r;
  }
  return r;
}

bool is_unit(Residue lambda, const PrimePower& ring) { return ring.reduce(lambda) % ring.prime() != 0; }

Residue unit_inverse(Residue lambda, const PrimePower& ring) {
  if (!is_unit(lambda, ring)) throw Error(ErrorCode::NotAUnit, "residue is divisible by p");
  return modular::inverse_or_zero(ring.reduce(lambda), ring.modulus());
}

// --- IntMatrix --------------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (std::int64_t x = a(i, l))
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
  return c;
}

std::optional<std::int64_t> determinant(const IntMatrix& a) {
  using boost::multiprecision::cpp_int;
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<cpp_int> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> cpp_int& { return m[i * n + j]; };

  // Bareiss elimination.
  int sign = 1;
  cpp_int previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
      }
      at(i, k) = 0;
    }
    previous = at(k, k);
  }
  cpp_int det = at(n - 1, n - 1) * sign;
  if (det > std::numeric_limits<std::int64_t>::max() || det < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(det);
}

// --- ModMatrix --------------------------------------------------------------

ModMatrix::ModMatrix(PrimePower ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
}

ModMatrix::ModMatrix(PrimePower ring, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : ModMatrix(ring, rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (std::int64_t x : row) set(i, j++, x);
    ++i;
  }
}

ModMatrix ModMatrix::identity(PrimePower ring, std::size_t n) {
  ModMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::reduce(PrimePower ring, const IntMatrix& c) {
  ModMatrix m(ring, c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) m.set(i, j, c(i, j));
  return m;
}

bool ModMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void ModMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
}

void ModMatrix::scale_row(std::size_t i, Residue c) {
  for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = modular::mul(data_[i * cols_ + j], c, ring_.modulus());
}

void ModMatrix::scale_col(std::size_t j, Residue c) {
  for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + j] = modular::mul(data_[i * cols_ + j], c, ring_.modulus());
}

void ModMatrix::add_row_multiple(std::size_t dst, std::size_t src, Residue c) {
  const Residue m = ring_.modulus();
  c = ring_.reduce(c);
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    data_[dst * cols_ + j] = modular::add(data_[dst * cols_ + j], modular::mul(c, data_[src * cols_ + j], m), m);
  }
}

void ModMatrix::add_col_multiple(std::size_t dst, std::size_t src, Residue c) {
  const Residue m = ring_.modulus();
  c = ring_.reduce(c);
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    data_[i * cols_ + dst] = modular::add(data_[i * cols_ + dst], modular::mul(c, data_[i * cols_ + src], m), m);
  }
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::ModulusMismatch, "operands live over different rings");
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  const Residue m = a.ring().modulus();
  ModMatrix c(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Residue acc = 0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc = modular::add(acc, modular::mul(a(i, l), b(l, j), m), m);
      c.set(i, j, acc);
    }
  return c;
}

ModMatrix mat_mul_int(const ModMatrix& a, const IntMatrix& c) {
  if (a.cols() != c.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  return mat_mul(a, ModMatrix::reduce(a.ring(), c));
}

ModMatrix mat_mul_int(const IntMatrix& c, const ModMatrix& a) {
  if (c.cols() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  return mat_mul(ModMatrix::reduce(a.ring(), c), a);
}

ModMatrix mat_inverse(const ModMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const PrimePower& ring = a.ring();
  const std::size_t n = a.rows();
  ModMatrix work = a;
  ModMatrix inv = ModMatrix::identity(ring, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !is_unit(work(pivot, col), ring)) ++pivot;
    if (pivot == n) throw Error(ErrorCode::NotInvertible, "no unit pivot in some column");
    work.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    const Residue u = unit_inverse(work(col, col), ring);
    work.scale_row(col, u);
    inv.scale_row(col, u);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Residue f = modular::neg(work(r, col), ring.modulus());
      work.add_row_multiple(r, col, f);
      inv.add_row_multiple(r, col, f);
    }
  }
  return inv;
}

// --- Normal form ------------------------------------------------------------

NormalFormResult normal_form(const ModMatrix& x) {
  const PrimePower& ring = x.ring();
  const Residue modulus = ring.modulus();
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();

  ModMatrix work = x;
  NormalFormResult out{ModMatrix::identity(ring, m), ModMatrix::identity(ring, m), ModMatrix::identity(ring, n),
                       std::vector<int>(m, ring.exponent()), 0, m};

  // Row operations are mirrored on Q (left) and, inverted, on Q^{-1} (right).
  std::size_t step = 0;
  for (; step < std::min(m, n); ++step) {
    int best = ring.exponent();
    std::size_t pr = 0, pc = 0;
    for (std::size_t j = step; j < n && best > 0; ++j) {
      for (std::size_t i = step; i < m; ++i) {
        int d = p_degree(work(i, j), ring);
        if (d < best) {
          best = d;
          pr = i;
          pc = j;
          if (d == 0) break;
        }
      }
    }
    if (best == ring.exponent()) break;  // remaining block is zero

    work.swap_rows(step, pr);
    out.q.swap_rows(step, pr);
    out.q_inv.swap_cols(step, pr);
    work.swap_cols(step, pc);
    out.t.swap_cols(step, pc);

    const Residue pivot_power = ring.power(best);
    const Residue unit = work(step, step) / pivot_power;
    const Residue unit_inv = unit_inverse(unit, ring);
    work.scale_row(step, unit_inv);
    out.q.scale_row(step, unit_inv);
    out.q_inv.scale_col(step, unit);

    for (std::size_t i = step + 1; i < m; ++i) {
      if (work(i, step) == 0) continue;
      const Residue factor = work(i, step) / pivot_power;
      work.add_row_multiple(i, step, modular::neg(factor, modulus));
      out.q.add_row_multiple(i, step, modular::neg(factor, modulus));
      out.q_inv.add_col_multiple(step, i, factor);
    }
    out.exponents[step] = best;
  }
  out.pivot_count = step;

  // Every entry right of a pivot in its row is divisible by that pivot.
  for (std::size_t i = 0; i < out.pivot_count; ++i) {
    const Residue pivot_power = ring.power(out.exponents[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (work(i, j) == 0) continue;
      const Residue factor = modular::neg(work(i, j) / pivot_power, modulus);
      work.add_col_multiple(j, i, factor);
      out.t.add_col_multiple(j, i, factor);
    }
  }

  out.first_positive = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (out.exponents[i] > 0) {
      out.first_positive = i;
      break;
    }
  }
  return out;
}

bool is_normal_form_of(const NormalFormResult& nf, const ModMatrix& x) {
  const ModMatrix d = mat_mul(mat_mul(nf.q, x), nf.t);
  if (nf.exponents.size() != x.rows()) return false;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (i > 0 && nf.exponents[i] < nf.exponents[i - 1]) return false;
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const Residue expected = i == j ? x.ring().power(nf.exponents[i]) : 0;
      if (d(i, j) != expected) return false;
    }
    // Rows beyond the column count can only be zero.
    if (i >= d.cols() && nf.exponents[i] != x.ring().exponent()) return false;
  }
  return true;
}

}  // namespace covlift
