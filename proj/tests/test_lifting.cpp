#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "covlift/error.hpp"
#include "covlift/generator.hpp"
#include "covlift/oracle.hpp"
#include "support.hpp"

using namespace covlift;
using namespace covlift::testing;

TEST_CASE("homology matrices of the Petersen automorphisms") {
  const PetersenFixture fx;
  for (std::size_t i = 0; i < 4; ++i) CHECK(homology_matrix(fx.basis, fx.alpha(i)) == petersen_s(i));
  CHECK(homology_matrix(fx.basis, Automorphism::identity(10)) == IntMatrix::identity(6));
}

TEST_CASE("Petersen verdicts") {
  const PetersenFixture fx;
  const std::vector<bool> expected{true, false, false, true};
  for (std::size_t i = 0; i < 4; ++i) {
    const LiftReport r = lift_check(fx.basis, fx.matrices, fx.alpha(i), "a" + std::to_string(i + 1));
    CHECK(r.lifts == expected[i]);
    REQUIRE(r.verdicts.size() == 1);
    CHECK(r.verdicts[0].s == std::vector<int>{0, 1, 1, 2, 2, 2});
    CHECK(r.verdicts[0].first_positive == 1);
    CHECK(r.verdicts[0].pass == expected[i]);
    CHECK(r.verdicts[0].witness.has_value() != expected[i]);
    CHECK(r.verdicts[0].violations.empty() == expected[i]);
  }
  const PrimeVerdict v2 = lift_check(fx.basis, fx.matrices, fx.alpha(1)).verdicts[0];
  REQUIRE(v2.witness);
  CHECK(*v2.witness == ViolatedCell{1, 0, 0, 1});
  const PrimeVerdict v3 = lift_check(fx.basis, fx.matrices, fx.alpha(2)).verdicts[0];
  REQUIRE(v3.witness);
  CHECK(v3.witness->row == 2);
  CHECK(v3.witness->col == 0);
}

TEST_CASE("criterion on small matrices") {
  const PrimePower ring(2, 2);
  // B = 0 gives s = (2,2): every S passes because s_i - s_j = 0
  const PrimeVerdict zero = criterion_single_prime(ModMatrix(ring, 2, 1), IntMatrix{{0, 1}, {1, 0}});
  CHECK(zero.pass);
  // B = (1; 0): s = (0, 2); swapping the cycles needs d_p(1) >= 2
  const PrimeVerdict swap = criterion_single_prime(ModMatrix(ring, {{1}, {0}}), IntMatrix{{0, 1}, {1, 0}});
  CHECK_FALSE(swap.pass);
  REQUIRE(swap.witness);
  CHECK(*swap.witness == ViolatedCell{1, 0, 0, 2});
  // upper-triangular S in the adapted basis lifts
  CHECK(criterion_single_prime(ModMatrix(ring, {{1}, {0}}), IntMatrix{{1, 1}, {0, 1}}).pass);
  CHECK(criterion_single_prime(ModMatrix(ring, {{1}, {0}}), IntMatrix{{1, 0}, {4, 1}}).pass);
  CHECK_THROWS_AS(criterion_single_prime(ModMatrix(ring, 3, 1), IntMatrix::identity(2)), Error);
}

TEST_CASE("homology matrices compose contravariantly and are unimodular") {
  const PetersenFixture fx;
  const auto group = enumerate_automorphisms(fx.graph);
  REQUIRE(group.size() == 120);
  std::set<std::vector<std::int64_t>> seen;
  for (const Automorphism& a : group) {
    const IntMatrix s = homology_matrix(fx.basis, a);
    const auto det = determinant(s);
    REQUIRE(det);
    CHECK((*det == 1 || *det == -1));
    std::vector<std::int64_t> flat;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j) flat.push_back(s(i, j));
    seen.insert(flat);
  }
  CHECK(seen.size() == 120);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Automorphism& a = group[static_cast<std::size_t>(uniform(rng, 0, 119))];
    const Automorphism& b = group[static_cast<std::size_t>(uniform(rng, 0, 119))];
    CHECK(homology_matrix(fx.basis, compose(b, a)) ==
          mat_mul(homology_matrix(fx.basis, a), homology_matrix(fx.basis, b)));
  }
}

TEST_CASE("verdicts do not depend on the choice of Q and T") {
  Rng rng(8);
  const PetersenFixture fx;
  const auto group = enumerate_automorphisms(fx.graph);
  const ModMatrix& b = fx.matrices.per_prime[0].b;
  const NormalFormResult nf = normal_form(b);
  for (int trial = 0; trial < 40; ++trial) {
    // Another valid pair: B V has the same normal form exponents, and
    // Q (B V) (V^{-1} T) = D.
    const ModMatrix v = random_invertible(rng, b.ring(), b.cols());
    NormalFormResult alt = normal_form(mat_mul(b, v));
    CHECK(alt.exponents == nf.exponents);
    alt.t = mat_mul(v, alt.t);
    CHECK(is_normal_form_of(alt, b));
    for (int k = 0; k < 10; ++k) {
      const Automorphism& a = group[static_cast<std::size_t>(uniform(rng, 0, 119))];
      const IntMatrix s = homology_matrix(fx.basis, a);
      CHECK(criterion_single_prime(alt, s).pass == criterion_single_prime(nf, s).pass);
    }
  }
}

TEST_CASE("liftable Petersen automorphisms form a subgroup") {
  const PetersenFixture fx;
  const auto group = enumerate_automorphisms(fx.graph);
  const auto forms = normalize_voltage_matrices(fx.matrices);
  std::vector<Automorphism> liftable;
  for (const Automorphism& a : group)
    if (lift_check(fx.basis, fx.matrices, forms, a).lifts) liftable.push_back(a);
  CHECK(std::find(liftable.begin(), liftable.end(), Automorphism::identity(10)) != liftable.end());
  CHECK(120 % liftable.size() == 0);
  for (const Automorphism& a : liftable) {
    CHECK(lift_check(fx.basis, fx.matrices, forms, a.inverse()).lifts);
    for (const Automorphism& b : liftable) CHECK(lift_check(fx.basis, fx.matrices, forms, compose(a, b)).lifts);
  }
  // agreement with brute force on the whole group
  for (const Automorphism& a : group) {
    const bool verdict = lift_check(fx.basis, fx.matrices, forms, a).lifts;
    CHECK(kernel_oracle(fx.matrices, homology_matrix(fx.basis, a)) == verdict);
  }
}

TEST_CASE("batch results are independent of thread count") {
  const PetersenFixture fx;
  const auto group = enumerate_automorphisms(fx.graph);
  std::vector<NamedAutomorphism> batch;
  for (std::size_t i = 0; i < group.size(); ++i) batch.push_back({"g" + std::to_string(i), group[i]});
  const auto one = lift_check_batch(fx.basis, fx.matrices, batch, 1);
  const auto four = lift_check_batch(fx.basis, fx.matrices, batch, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].name == batch[i].name);
    CHECK(one[i].name == four[i].name);
    CHECK(one[i].lifts == four[i].lifts);
    CHECK(one[i].s == four[i].s);
    CHECK(one[i].verdicts[0].violations == four[i].verdicts[0].violations);
  }
}
