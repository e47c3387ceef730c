#include "covlift/lifting.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "covlift/error.hpp"

namespace covlift {

IntMatrix homology_matrix(const CycleBasis& cb, const Automorphism& alpha) {
  const std::size_t t = cb.rank();
  IntMatrix s(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    const std::vector<std::int64_t> row = cb.signed_cotree_incidence(alpha.apply(cb.cycles()[i]));
    for (std::size_t j = 0; j < t; ++j) s(i, j) = row[j];
  }
  const auto det = determinant(s);
  if (!det || (*det != 1 && *det != -1)) {
    throw Error(ErrorCode::NotUnimodular, "homology action matrix is not unimodular");
  }
  return s;
}

PrimeVerdict criterion_single_prime(const NormalFormResult& nf, const IntMatrix& s) {
  const PrimePower& ring = nf.q.ring();
  if (s.rows() != nf.q.rows() || s.cols() != nf.q.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "S must be t x t with t the row count of B");
  }
  PrimeVerdict verdict;
  verdict.prime = ring.prime();
  verdict.exponent = ring.exponent();
  verdict.s = nf.exponents;
  verdict.first_positive = nf.first_positive;
  const ModMatrix m = mat_mul(mat_mul_int(nf.q, s), nf.q_inv);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const int required = nf.exponents[i] - nf.exponents[j];
      const int found = p_degree(m(i, j), ring);
      if (found < required) verdict.violations.push_back({i, j, found, required});
    }
  }
  verdict.pass = verdict.violations.empty();
  if (!verdict.pass) verdict.witness = verdict.violations.front();
  verdict.conjugated = m;
  return verdict;
}

PrimeVerdict criterion_single_prime(const ModMatrix& b, const IntMatrix& s) {
  if (b.rows() != s.rows()) throw Error(ErrorCode::DimensionMismatch, "B and S disagree on t");
  return criterion_single_prime(normal_form(b), s);
}

std::vector<NormalFormResult> normalize_voltage_matrices(const VoltageMatrices& vm) {
  std::vector<NormalFormResult> forms;
  forms.reserve(vm.per_prime.size());
  for (const PrimeVoltageMatrix& pm : vm.per_prime) forms.push_back(normal_form(pm.b));
  return forms;
}

LiftReport lift_check(const CycleBasis& cb, const VoltageMatrices& vm, const std::vector<NormalFormResult>& forms,
                      const Automorphism& alpha, std::string name) {
  if (forms.size() != vm.per_prime.size()) throw Error(ErrorCode::DimensionMismatch, "one normal form per prime");
  LiftReport report;
  report.name = std::move(name);
  report.s = homology_matrix(cb, alpha);
  for (const NormalFormResult& nf : forms) {
    report.verdicts.push_back(criterion_single_prime(nf, report.s));
    report.lifts = report.lifts && report.verdicts.back().pass;
  }
  return report;
}

LiftReport lift_check(const CycleBasis& cb, const VoltageMatrices& vm, const Automorphism& alpha, std::string name) {
  return lift_check(cb, vm, normalize_voltage_matrices(vm), alpha, std::move(name));
}

std::vector<LiftReport> lift_check_batch(const CycleBasis& cb, const VoltageMatrices& vm,
                                         const std::vector<NamedAutomorphism>& batch, unsigned threads) {
  const std::vector<NormalFormResult> forms = normalize_voltage_matrices(vm);
  std::vector<std::optional<LiftReport>> slots(batch.size());
  std::vector<std::exception_ptr> errors(batch.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < batch.size(); i = next++) {
      try {
        slots[i] = lift_check(cb, vm, forms, batch[i].alpha, batch[i].name);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batch.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  std::vector<LiftReport> out;
  out.reserve(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace covlift
