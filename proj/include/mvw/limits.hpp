#pragma once

#include <cstddef>
#include <cstdint>

namespace mvw::limits {

// Desk-scale defaults. Every search that can blow up takes one of these as a
// defaulted parameter, so callers (and the CLI) can override.
inline constexpr std::size_t product_size_cap = 4096;
inline constexpr std::size_t transformation_size_cap = 4096;
inline constexpr std::size_t division_ambient_cap = 10;
inline constexpr int enumeration_order_cap = 4;
inline constexpr std::uint64_t assignment_cap = 100'000'000;
inline constexpr std::size_t class_cap = 1'000'000;
// A quotient with more classes than this cannot materialize its full
// multiplication table in memory; reported as cap_exceeded, never truncated.
inline constexpr std::size_t quotient_table_cap = 4096;
inline constexpr int max_alphabet = 32;

}  // namespace mvw::limits
