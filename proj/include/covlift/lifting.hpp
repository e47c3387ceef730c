#pragma once

// Lifting criterion: alpha lifts to the derived cover iff, for every prime
// p_gamma with normal form Q_gamma B_gamma T_gamma = diag(p^s),
//   d_p((Q_gamma S^alpha Q_gamma^{-1})_{i,j}) >= s_i - s_j  for all i > j,
// where S^alpha is the integer matrix of alpha_* on the cycle basis.

#include <optional>
#include <string>
#include <vector>

#include "covlift/graph.hpp"
#include "covlift/voltage.hpp"
#include "covlift/zn_matrix.hpp"

namespace covlift {

/// Row i is the basis expansion of alpha(L_i): alpha_*(L_i) = sum_j S_ij L_j.
/// Throws NotUnimodular if det(S) != +-1.
IntMatrix homology_matrix(const CycleBasis& cb, const Automorphism& alpha);

/// A sub-diagonal cell (row > col, 0-based) of Q S Q^{-1} whose p-degree
/// falls short of s_row - s_col.
struct ViolatedCell {
  std::size_t row = 0;
  std::size_t col = 0;
  int degree_found = 0;
  int degree_required = 0;

  friend bool operator==(const ViolatedCell&, const ViolatedCell&) = default;
};

struct PrimeVerdict {
  std::int64_t prime = 0;
  int exponent = 0;
  std::vector<int> s;
  /// Diagnostic only: 0-based index of the first s_i > 0 (t if none).
  std::size_t first_positive = 0;
  /// Q S Q^{-1} mod p^k.
  std::optional<ModMatrix> conjugated;
  bool pass = true;
  /// First violation in row-major order, absent iff pass.
  std::optional<ViolatedCell> witness;
  std::vector<ViolatedCell> violations;
};

/// Checks the criterion given an already computed normal form of B_gamma.
PrimeVerdict criterion_single_prime(const NormalFormResult& nf, const IntMatrix& s);
/// Normalizes `b` first. Throws DimensionMismatch if b.rows() != t.
PrimeVerdict criterion_single_prime(const ModMatrix& b, const IntMatrix& s);

struct LiftReport {
  std::string name;
  bool lifts = true;
  IntMatrix s;
  std::vector<PrimeVerdict> verdicts;
};

/// Normal forms of every B_gamma, computed once per fixture.
std::vector<NormalFormResult> normalize_voltage_matrices(const VoltageMatrices& vm);

LiftReport lift_check(const CycleBasis& cb, const VoltageMatrices& vm, const Automorphism& alpha,
                      std::string name = {});
/// Same with precomputed normal forms (one per vm.per_prime entry).
LiftReport lift_check(const CycleBasis& cb, const VoltageMatrices& vm, const std::vector<NormalFormResult>& forms,
                      const Automorphism& alpha, std::string name = {});

struct NamedAutomorphism {
  std::string name;
  Automorphism alpha;
};

/// Checks a batch on up to `threads` workers; output order equals input order.
std::vector<LiftReport> lift_check_batch(const CycleBasis& cb, const VoltageMatrices& vm,
                                         const std::vector<NamedAutomorphism>& batch, unsigned threads = 1);

}  // namespace covlift
