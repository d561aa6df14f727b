#pragma once

#include "cgt/group.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cgt {

// ---- multiplication tables of small groups ------------------------------------

// element-indexed multiplication table; the element list is sorted, so index 0
// is always the identity and equal groups produce identical tables
struct MulTable {
  u64 n = 0;
  std::vector<std::uint16_t> mul; // row-major: mul[a*n+b] = index of a*b
  std::vector<std::uint16_t> inv;
  std::vector<Perm> elems;

  std::uint16_t at(size_t a, size_t b) const { return mul[a * n + b]; }
  static MulTable of(Group const &G, u64 bound = 4096);
};

// structural fingerprint: isomorphic groups agree, and most non-isomorphic
// pairs differ (order, exponent, center, derived series, element profiles)
std::string group_fingerprint(MulTable const &T);

// every isomorphism T -> U as an index map; empty when none; stops after the
// first one when all = false
std::vector<std::vector<std::uint16_t>>
table_isomorphisms(MulTable const &T, MulTable const &U, bool all);
bool tables_isomorphic(MulTable const &T, MulTable const &U);
std::vector<std::vector<std::uint16_t>> table_automorphisms(MulTable const &T);

// ---- exhaustive enumeration up to isomorphism ----------------------------------

// complete lists built by cyclic extensions N . C_p over every normal subgroup
// N of prime index (all solvable groups arise this way), plus the one
// non-solvable group in range; orders 64 and 96 are out of scope because their
// enumeration needs automorphism groups of order ~10^7
inline constexpr u64 kSmallGroupOrderMax = 100;
bool small_groups_order_supported(u64 n);

// regular representations, deterministic order; throws PreconditionError on
// unsupported orders
std::vector<Group> groups_of_order(u64 n);
// (order, groups) for every supported order <= maxn, ascending
std::vector<std::pair<u64, std::vector<Group>>> groups_up_to(u64 maxn);

// ---- abelian groups by invariants -----------------------------------------------

// all abelian groups of order n as (primary cyclic invariants, group); the
// invariants are sorted by prime then by descending exponent, e.g. order 24
// gives {8,3}, {4,2,3}, {2,2,2,3}; permutation degree = sum of the invariants
std::vector<std::pair<std::vector<u64>, Group>> abelian_groups_of_order(u64 n);
u64 abelian_group_count(u64 n); // product over p^e || n of partition counts

} // namespace cgt
