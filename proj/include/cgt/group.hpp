#pragma once

#include "cgt/numeric.hpp"
#include "cgt/perm.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace cgt {

using Rng = std::mt19937_64;

inline constexpr u64 kDefaultEnumBound = 1'000'000;
inline constexpr Point kDefaultDegreeCap = 1u << 16;

struct BuildOptions {
  std::vector<Point> base_hint;     // preferred base points, consumed in order
  std::optional<u64> known_order;   // enables randomized fill, certified by the
                                    // orbit-size product reaching this value
  bool forced_full_base = false;    // base = 0,1,...,n-1 including redundant points
  u64 seed = 0x0ddc0ffee;
  Point degree_cap = kDefaultDegreeCap;
};

// permutation group with a base and strong generating set
class Group {
public:
  struct Level {
    Point base = 0;
    std::vector<Point> orbit;        // BFS discovery order, orbit[0] == base
    std::vector<std::int32_t> pos;   // point -> index into orbit, -1 if outside
    std::vector<std::int32_t> via_gen;  // BFS tree edge label (strong gen index)
    std::vector<Point> via_from;        // BFS tree edge source
    std::vector<int> gens;           // strong gens active at this level
  };

  Group() = default;
  static Group trivial(Point degree);
  Group(Point degree, std::vector<Perm> generators, BuildOptions const &opts = {});

  Point degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return gens_; }
  std::vector<Perm> const &strong_generators() const { return sgens_; }
  std::vector<Level> const &levels() const { return levels_; }

  u64 order() const { return order_u64_; }
  Factored const &order_factored() const { return order_; }
  bool is_trivial() const { return order_u64_ == 1; }
  bool is_abelian() const;
  bool is_subgroup_of(Group const &g) const;

  bool contains(Perm const &p) const;
  // strips p through the chain; returns residue and the first level it failed at
  // (residue is identity and level == levels.size() iff p is a member)
  std::pair<Perm, size_t> sift(Perm const &p) const;

  Perm transversal(size_t level, Point pt) const; // element mapping base -> pt
  Perm random_element(Rng &rng) const;

  // enumerate all elements in a fixed deterministic order; throws BoundExceeded
  // if the order exceeds the bound
  void for_each_element(std::function<void(Perm const &)> const &fn,
                        u64 bound = kDefaultEnumBound) const;
  std::vector<Perm> elements(u64 bound = kDefaultEnumBound) const;

private:
  Point degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> sgens_;
  std::vector<Perm> sgens_inv_;
  std::vector<int> sgen_level_; // deepest level whose base prefix the gen fixes
  std::vector<Level> levels_;
  std::vector<Point> base_hint_;
  bool forced_full_base_ = false;
  Factored order_;
  u64 order_u64_ = 1;

  void rebuild_orbit(size_t i);
  void add_strong_generator(Perm g, size_t level);
  size_t ensure_level_for(Perm const &moved, size_t at);
  std::pair<Perm, size_t> strip_from(Perm const &p, size_t start) const;
  void schreier_sims();
  void randomized_fill(u64 target, u64 seed);
  void recompute_order();
  Point pick_base_point(Perm const &moved) const;
};

u64 element_order(Group const &g, Perm const &p); // requires membership

// subgroup generated inside an ambient group's symmetric group; thin wrappers
Group generated_subgroup(Point degree, std::vector<Perm> const &gens,
                         BuildOptions const &opts = {});

// orbit partition of {0..degree-1} under a generating set, each orbit sorted
// ascending and orbits ordered by smallest point
std::vector<std::vector<Point>> orbits(std::vector<Perm> const &gens,
                                       Point degree);
std::vector<Point> point_orbit(std::vector<Perm> const &gens, Point start);
bool is_transitive(Group const &g);

} // namespace cgt
