#pragma once

#include <optional>
#include <vector>

#include "mvw/monoid.hpp"

namespace mvw {

/// All monoids of the given order up to isomorphism, identity at index 0,
/// in a deterministic canonical order. Expected counts: 1, 2, 7, 35 for
/// orders 1 through 4.
std::vector<FiniteMonoid> enumerate_monoids(
    int order, int order_cap = limits::enumeration_order_cap);

/// An isomorphism m1 -> m2 as an element mapping, or nullopt.
std::optional<std::vector<int>> isomorphism(const FiniteMonoid& m1,
                                            const FiniteMonoid& m2);

inline bool are_isomorphic(const FiniteMonoid& m1, const FiniteMonoid& m2) {
  return isomorphism(m1, m2).has_value();
}

/// Witness that m divides n: an identity-containing closed subset S of n and
/// a surjective product-respecting map S -> m.
struct DivisionWitness {
  std::vector<int> submonoid;               // elements of n, ascending
  std::vector<std::pair<int, int>> hom_map;  // (element of n, element of m)
};

/// Searches submonoids of n ascending by size, then maps in lexicographic
/// order; returns the first witness found.
std::optional<DivisionWitness> divides(
    const FiniteMonoid& m, const FiniteMonoid& n,
    std::size_t ambient_cap = limits::division_ambient_cap);

}  // namespace mvw
