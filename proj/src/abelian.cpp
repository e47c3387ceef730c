#include "covlift/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "covlift/error.hpp"

namespace covlift {

AbelianGroupSpec AbelianGroupSpec::from_components(std::vector<PrimeComponent> components) {
  AbelianGroupSpec spec;
  std::int64_t last_prime = 0;
  for (const PrimeComponent& c : components) {
    if (!modular::is_prime(c.prime) || c.prime <= last_prime) {
      throw Error(ErrorCode::SpecMismatch, "primes must be distinct, prime and ascending");
    }
    last_prime = c.prime;
    if (c.exponents.empty()) throw Error(ErrorCode::SpecMismatch, "empty exponent list");
    int last_exponent = 0;
    for (int e : c.exponents) {
      if (e < 1 || e < last_exponent) {
        throw Error(ErrorCode::SpecMismatch, "exponents must be positive and non-decreasing");
      }
      last_exponent = e;
    }
  }
  spec.components_ = std::move(components);
  for (const PrimeComponent& c : spec.components_) {
    spec.first_slot_.push_back(spec.slot_moduli_.size());
    for (int e : c.exponents) {
      std::int64_t m = modular::checked_pow(c.prime, e);
      if (m < 0 || !modular::checked_mul(spec.order_, m, spec.order_)) {
        throw Error(ErrorCode::GroupTooLarge, "group order exceeds 2^63 - 1");
      }
      spec.slot_moduli_.push_back(m);
    }
    spec.exponent_ *= spec.slot_moduli_.back();
  }
  return spec;
}

std::size_t AbelianGroupSpec::slot(std::size_t gamma, std::size_t eta) const {
  if (gamma >= components_.size() || eta >= components_[gamma].exponents.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "component index out of range");
  }
  return first_slot_[gamma] + eta;
}

Residue AbelianGroupSpec::top_modulus(std::size_t gamma) const {
  return slot_moduli_.at(slot(gamma, components_.at(gamma).exponents.size() - 1));
}

GroupElement AbelianGroupSpec::zero() const { return {std::vector<Residue>(slot_count(), 0)}; }

GroupElement AbelianGroupSpec::element(std::span<const std::int64_t> values) const {
  if (values.size() != slot_count()) throw Error(ErrorCode::SpecMismatch, "wrong number of residues");
  GroupElement x;
  for (std::size_t s = 0; s < values.size(); ++s) x.residues.push_back(modular::reduce(values[s], slot_moduli_[s]));
  return x;
}

bool AbelianGroupSpec::contains(const GroupElement& x) const {
  if (x.residues.size() != slot_count()) return false;
  for (std::size_t s = 0; s < slot_count(); ++s) {
    if (x.residues[s] < 0 || x.residues[s] >= slot_moduli_[s]) return false;
  }
  return true;
}

void AbelianGroupSpec::check(const GroupElement& x) const {
  if (!contains(x)) throw Error(ErrorCode::SpecMismatch, "element does not belong to the group");
}

GroupElement AbelianGroupSpec::add(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement z = x;
  for (std::size_t s = 0; s < slot_count(); ++s) z.residues[s] = modular::add(x.residues[s], y.residues[s], slot_moduli_[s]);
  return z;
}

GroupElement AbelianGroupSpec::neg(const GroupElement& x) const {
  check(x);
  GroupElement z = x;
  for (std::size_t s = 0; s < slot_count(); ++s) z.residues[s] = modular::neg(x.residues[s], slot_moduli_[s]);
  return z;
}

GroupElement AbelianGroupSpec::sub(const GroupElement& x, const GroupElement& y) const {
  return add(x, neg(y));
}

GroupElement AbelianGroupSpec::scale(std::int64_t n, const GroupElement& x) const {
  check(x);
  GroupElement z = x;
  for (std::size_t s = 0; s < slot_count(); ++s) {
    Residue m = slot_moduli_[s];
    z.residues[s] = modular::mul(modular::reduce(n, m), x.residues[s], m);
  }
  return z;
}

bool AbelianGroupSpec::is_zero(const GroupElement& x) const {
  check(x);
  return std::all_of(x.residues.begin(), x.residues.end(), [](Residue r) { return r == 0; });
}

Residue AbelianGroupSpec::embed(std::size_t gamma, std::size_t eta, Residue lambda) const {
  std::size_t s = slot(gamma, eta);
  if (lambda < 0 || lambda >= slot_moduli_[s]) throw Error(ErrorCode::IndexOutOfRange, "residue outside its slot");
  const PrimeComponent& c = components_[gamma];
  std::int64_t shift = modular::checked_pow(c.prime, c.top_exponent() - c.exponents[eta]);
  return modular::mul(shift, lambda, top_modulus(gamma));
}

std::int64_t AbelianGroupSpec::index_of(const GroupElement& x) const {
  check(x);
  std::int64_t index = 0;
  for (std::size_t s = 0; s < slot_count(); ++s) index = index * slot_moduli_[s] + x.residues[s];
  return index;
}

GroupElement AbelianGroupSpec::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
  GroupElement x = zero();
  for (std::size_t s = slot_count(); s-- > 0;) {
    x.residues[s] = index % slot_moduli_[s];
    index /= slot_moduli_[s];
  }
  return x;
}

std::string AbelianGroupSpec::to_string() const {
  if (slot_moduli_.empty()) return "trivial";
  std::ostringstream out;
  for (std::size_t s = 0; s < slot_moduli_.size(); ++s) out << (s ? " x " : "") << "Z/" << slot_moduli_[s];
  return out.str();
}

// --- GroupPresentation ------------------------------------------------------

GroupPresentation parse_group_spec(std::span<const std::int64_t> cyclic_orders) {
  struct Part {
    std::int64_t prime;
    int exponent;
    std::size_t factor;
    std::int64_t prime_power;
  };
  std::vector<Part> parts;
  for (std::size_t f = 0; f < cyclic_orders.size(); ++f) {
    std::int64_t n = cyclic_orders[f];
    if (n < 2) throw Error(ErrorCode::OrderTooSmall, "cyclic factor order must be at least 2");
    for (std::int64_t p = 2; p <= n / p; ++p) {
      if (n % p != 0) continue;
      int e = 0;
      std::int64_t pp = 1;
      while (n % p == 0) {
        n /= p;
        pp *= p;
        ++e;
      }
      parts.push_back({p, e, f, pp});
    }
    if (n > 1) parts.push_back({n, 1, f, n});
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return std::tie(a.prime, a.exponent) < std::tie(b.prime, b.exponent);
  });

  std::vector<PrimeComponent> components;
  GroupPresentation out;
  for (const Part& part : parts) {
    if (components.empty() || components.back().prime != part.prime) components.push_back({part.prime, {}});
    components.back().exponents.push_back(part.exponent);
    out.sources_.push_back({part.factor, part.prime_power});
  }
  out.orders_.assign(cyclic_orders.begin(), cyclic_orders.end());
  out.spec_ = AbelianGroupSpec::from_components(std::move(components));
  return out;
}

GroupElement GroupPresentation::from_factors(std::span<const std::int64_t> residues) const {
  if (residues.size() != orders_.size()) throw Error(ErrorCode::SpecMismatch, "wrong number of factor residues");
  GroupElement x = spec_.zero();
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    x.residues[s] = modular::reduce(residues[sources_[s].factor], sources_[s].prime_power);
  }
  return x;
}

std::vector<std::int64_t> GroupPresentation::to_factors(const GroupElement& x) const {
  if (!spec_.contains(x)) throw Error(ErrorCode::SpecMismatch, "element does not belong to the group");
  // CRT per factor: combine the slots originating from it.
  std::vector<std::int64_t> value(orders_.size(), 0);
  std::vector<std::int64_t> modulus(orders_.size(), 1);
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    const std::size_t f = sources_[s].factor;
    const std::int64_t m1 = modulus[f];
    const std::int64_t m2 = sources_[s].prime_power;
    // value + m1 * t == x (mod m2)
    const std::int64_t inv = modular::inverse_or_zero(modular::reduce(m1, m2), m2);
    const std::int64_t t = modular::mul(modular::sub(x.residues[s], modular::reduce(value[f], m2), m2), inv, m2);
    value[f] = value[f] + m1 * t;
    modulus[f] = m1 * m2;
  }
  return value;
}

}  // namespace covlift
