#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covlift/error.hpp"
#include "support.hpp"

using namespace covlift;
using namespace covlift::testing;

namespace {

GroupPresentation group(std::vector<std::int64_t> orders) { return parse_group_spec(orders); }

GroupElement el(const AbelianGroupSpec& spec, std::vector<std::int64_t> values) { return spec.element(values); }

}  // namespace

TEST_CASE("parse_group_spec canonicalizes cyclic factors") {
  const auto a = group({2, 2, 4});
  REQUIRE(a.spec().prime_count() == 1);
  CHECK(a.spec().components()[0] == PrimeComponent{2, {1, 1, 2}});
  CHECK(a.spec().order() == 16);
  CHECK(a.spec().exponent() == 4);

  const auto b = group({6});
  REQUIRE(b.spec().prime_count() == 2);
  CHECK(b.spec().components()[0] == PrimeComponent{2, {1}});
  CHECK(b.spec().components()[1] == PrimeComponent{3, {1}});

  const auto c = group({12, 2});
  REQUIRE(c.spec().prime_count() == 2);
  CHECK(c.spec().components()[0] == PrimeComponent{2, {1, 2}});
  CHECK(c.spec().components()[1] == PrimeComponent{3, {1}});
  CHECK(c.spec().canonical_orders() == std::vector<std::int64_t>{2, 4, 3});

  CHECK(group({}).spec().order() == 1);
  CHECK_THROWS_AS(group({1}), Error);
  try {
    group({4, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooSmall);
  }
}

TEST_CASE("group order beyond 63 bits is rejected") {
  try {
    group({std::int64_t{1} << 40, std::int64_t{1} << 40});
    FAIL("expected GroupTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
}

TEST_CASE("parse_group_spec is idempotent on canonical orders") {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{2, 2, 4}, {12, 2}, {6, 10, 9}, {360}, {7, 49, 7}}) {
    const auto once = group(orders);
    const auto twice = group(once.spec().canonical_orders());
    CHECK(once.spec() == twice.spec());
    CHECK(twice.spec().canonical_orders() == once.spec().canonical_orders());
  }
}

TEST_CASE("element arithmetic in Z/2 x Z/2 x Z/4") {
  const AbelianGroupSpec spec = group({2, 2, 4}).spec();
  CHECK(spec.add(el(spec, {1, 1, 1}), el(spec, {1, 0, 2})) == el(spec, {0, 1, 3}));
  CHECK(spec.scale(-1, el(spec, {1, 0, 3})) == el(spec, {1, 0, 1}));
  CHECK(spec.scale(6, el(spec, {1, 1, 3})) == el(spec, {0, 0, 2}));
  const GroupElement foreign = group({6}).spec().zero();
  CHECK_THROWS_AS(spec.add(spec.zero(), foreign), Error);
}

TEST_CASE("abelian group axioms on random triples") {
  Rng rng(5);
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{2, 2, 4}, {12, 2}, {9, 27, 5}, {64}}) {
    const AbelianGroupSpec spec = group(orders).spec();
    for (int i = 0; i < 200; ++i) {
      const GroupElement x = random_element(rng, spec), y = random_element(rng, spec), z = random_element(rng, spec);
      CHECK(spec.add(spec.add(x, y), z) == spec.add(x, spec.add(y, z)));
      CHECK(spec.add(x, y) == spec.add(y, x));
      CHECK(spec.add(x, spec.zero()) == x);
      CHECK(spec.is_zero(spec.add(x, spec.neg(x))));
      CHECK(spec.element_at(spec.index_of(x)) == x);
      const std::int64_t n = uniform(rng, -50, 50);
      CHECK(spec.scale(n, spec.add(x, y)) == spec.add(spec.scale(n, x), spec.scale(n, y)));
    }
  }
}

TEST_CASE("embed is an injective homomorphism into the top cyclic factor") {
  const AbelianGroupSpec spec = group({2, 2, 4}).spec();
  CHECK(spec.embed(0, 0, 1) == 2);
  CHECK(spec.embed(0, 2, 3) == 3);
  CHECK(spec.embed(0, 1, 0) == 0);
  CHECK_THROWS_AS(spec.embed(0, 3, 0), Error);
  CHECK_THROWS_AS(spec.embed(1, 0, 0), Error);
  CHECK_THROWS_AS(spec.embed(0, 0, 2), Error);

  const AbelianGroupSpec wide = group({3, 9, 27, 8, 2}).spec();
  for (std::size_t gamma = 0; gamma < wide.prime_count(); ++gamma) {
    const Residue top = wide.top_modulus(gamma);
    for (std::size_t eta = 0; eta < wide.components()[gamma].exponents.size(); ++eta) {
      const Residue m = wide.slot_modulus(wide.slot(gamma, eta));
      for (Residue a = 0; a < m; ++a) {
        CHECK((wide.embed(gamma, eta, a) == 0) == (a == 0));
        for (Residue b = 0; b < m; ++b) {
          CHECK(wide.embed(gamma, eta, (a + b) % m) == (wide.embed(gamma, eta, a) + wide.embed(gamma, eta, b)) % top);
        }
      }
    }
  }
}

TEST_CASE("CRT presentation round-trips factor residues") {
  Rng rng(9);
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{2, 2, 4}, {12, 2}, {6, 10, 9}, {360}, {30, 4}}) {
    const auto pres = group(orders);
    for (int i = 0; i < 100; ++i) {
      std::vector<std::int64_t> residues;
      for (std::int64_t n : orders) residues.push_back(uniform(rng, 0, n - 1));
      const GroupElement x = pres.from_factors(residues);
      CHECK(pres.to_factors(x) == residues);
    }
    // from_factors is a homomorphism
    std::vector<std::int64_t> a, b, sum;
    for (std::int64_t n : orders) {
      a.push_back(uniform(rng, 0, n - 1));
      b.push_back(uniform(rng, 0, n - 1));
      sum.push_back((a.back() + b.back()) % n);
    }
    CHECK(pres.spec().add(pres.from_factors(a), pres.from_factors(b)) == pres.from_factors(sum));
  }
  // 5 in Z/6 is (1 mod 2, 2 mod 3)
  CHECK(group({6}).from_factors(std::vector<std::int64_t>{5}).residues == std::vector<Residue>{1, 2});
}
