#pragma once

// Finite abelian groups in prime-sorted form
//   A = prod_g prod_e Z/p_g^k(g,e),  primes ascending, exponents ascending,
// with a flat "slot" layout: slot order is (prime, exponent) ascending and
// is the column order of every per-prime matrix downstream.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "covlift/modular.hpp"

namespace covlift {

using modular::Residue;

struct PrimeComponent {
  std::int64_t prime = 0;
  /// k(g,1) <= ... <= k(g,a_g), all positive.
  std::vector<int> exponents;

  int top_exponent() const { return exponents.back(); }
  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

struct GroupElement {
  std::vector<Residue> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// The group order is bounded by 2^63 - 1 so every residue and every
/// element index fits in int64 exactly.
class AbelianGroupSpec {
 public:
  /// Throws SpecMismatch on unsorted / repeated primes or exponents,
  /// GroupTooLarge if the order overflows.
  static AbelianGroupSpec from_components(std::vector<PrimeComponent> components);
  /// The trivial group (no slots).
  AbelianGroupSpec() = default;

  std::span<const PrimeComponent> components() const { return components_; }
  std::size_t prime_count() const { return components_.size(); }
  std::size_t slot_count() const { return slot_moduli_.size(); }
  Residue slot_modulus(std::size_t slot) const { return slot_moduli_.at(slot); }
  /// Flat slot of component (gamma, eta), both 0-based. Throws IndexOutOfRange.
  std::size_t slot(std::size_t gamma, std::size_t eta) const;
  /// p_g^k(g, a_g), the modulus of B_g.
  Residue top_modulus(std::size_t gamma) const;

  std::int64_t order() const { return order_; }
  /// Exponent of the group: lcm of slot moduli = prod_g p_g^k(g,a_g).
  std::int64_t exponent() const { return exponent_; }
  /// p^k per slot, the canonical cyclic orders.
  std::vector<std::int64_t> canonical_orders() const { return slot_moduli_; }

  GroupElement zero() const;
  /// Reduces arbitrary integers per slot. Throws SpecMismatch on wrong length.
  GroupElement element(std::span<const std::int64_t> values) const;
  bool contains(const GroupElement& x) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement scale(std::int64_t n, const GroupElement& x) const;
  bool is_zero(const GroupElement& x) const;

  /// iota_{gamma,eta}: Z/p^k(g,e) -> Z/p^k(g,a_g), lambda -> p^(k(g,a_g)-k(g,e)) lambda.
  /// Throws IndexOutOfRange for bad indices or a residue outside its slot.
  Residue embed(std::size_t gamma, std::size_t eta, Residue lambda) const;

  /// Mixed-radix bijection between elements and [0, order).
  std::int64_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::int64_t index) const;

  std::string to_string() const;

  friend bool operator==(const AbelianGroupSpec& a, const AbelianGroupSpec& b) {
    return a.components_ == b.components_;
  }

 private:
  void check(const GroupElement& x) const;

  std::vector<PrimeComponent> components_;
  std::vector<Residue> slot_moduli_;
  std::vector<std::size_t> first_slot_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

/// A group given as a product of arbitrary cyclic factors Z/n_1 x ... x Z/n_r
/// together with the CRT isomorphism onto its canonical form.
class GroupPresentation {
 public:
  std::span<const std::int64_t> factor_orders() const { return orders_; }
  const AbelianGroupSpec& spec() const { return spec_; }

  /// Residues per input factor -> canonical element. Throws SpecMismatch.
  GroupElement from_factors(std::span<const std::int64_t> residues) const;
  /// Canonical element -> residues per input factor, each in [0, n_i).
  std::vector<std::int64_t> to_factors(const GroupElement& x) const;

 private:
  friend GroupPresentation parse_group_spec(std::span<const std::int64_t>);

  struct SlotSource {
    std::size_t factor;
    std::int64_t prime_power;
  };

  std::vector<std::int64_t> orders_;
  AbelianGroupSpec spec_;
  // canonical slot -> which factor it came from
  std::vector<SlotSource> sources_;
};

/// Factors every Z/n into prime-power cyclics, merges across factors and
/// sorts exponents ascending per prime. Throws OrderTooSmall for n < 2.
/// An empty list is the trivial group.
GroupPresentation parse_group_spec(std::span<const std::int64_t> cyclic_orders);

}  // namespace covlift
