#pragma once

#include "cgt/group.hpp"

#include <optional>

namespace cgt {

// Backtrack searches over base images of a stabilizer chain.  Branches are cut
// by necessary-condition pruning (forced point pairs, orbit matching) and, in
// subgroup mode, by restricting the first base image to minimal points of
// orbits of the subgroup found so far.  Leaves are verified exactly, so the
// pruning only ever affects speed, not answers.

struct SearchLimits {
  u64 max_nodes = 50'000'000;          // throws ResourceLimit when exhausted
  u64 max_subgroup_elements = 200'000; // bound for listing K in normalizer search
  // strategy thresholds for normalizer_in: scan the whole ambient group below
  // the first, hand listable subgroups straight to the backtrack below the
  // second, and otherwise climb the characteristic ladder
  u64 brute_order = 20'000;
  u64 direct_subgroup_order = 20'000;
};

// subgroup of all g in G commuting with every t in ts
Group backtrack_centralizer(Group const &G, std::vector<Perm> const &ts,
                            SearchLimits const &lim = {});
Group backtrack_centralizer(Group const &G, Perm const &t,
                            SearchLimits const &lim = {});

// one g in G with g^-1 x g == y, if any
std::optional<Perm> backtrack_conjugator(Group const &G, Perm const &x,
                                         Perm const &y,
                                         SearchLimits const &lim = {});

// subgroup of all g in G with g^-1 K g == K; requires K small enough to list
Group backtrack_normalizer(Group const &G, Group const &K,
                           SearchLimits const &lim = {});

} // namespace cgt
