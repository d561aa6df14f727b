#pragma once

#include "cgt/backtrack.hpp"
#include "cgt/group.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

namespace cgt {

// ---- conjugacy classes -----------------------------------------------------

// full class partition from an element enumeration; class representatives are
// the lexicographically least members, classes sorted by element order, then
// size, then representative
class ClassTable {
public:
  static ClassTable compute(Group const &G, u64 max_order = kDefaultEnumBound);

  size_t count() const { return reps_.size(); }
  Perm const &rep(size_t c) const { return reps_[c]; }
  u64 size(size_t c) const { return sizes_[c]; }
  u64 element_order(size_t c) const { return orders_[c]; }
  size_t inverse_class(size_t c) const { return inv_class_[c]; }
  bool is_real(size_t c) const { return inv_class_[c] == c; }
  size_t power_class(size_t c, u64 k) const; // class of rep^k
  int class_of(Perm const &x) const;         // -1 when x is not a member
  void for_each_in_class(size_t c,
                         std::function<void(Perm const &)> const &fn) const;
  u64 group_order() const { return total_; }
  u64 exponent() const; // lcm of the element orders

private:
  std::vector<Perm> reps_;
  std::vector<u64> sizes_, orders_;
  std::vector<size_t> inv_class_;
  std::vector<Perm> elements_;
  std::vector<int> class_id_; // parallel to elements_
  std::unordered_map<u64, std::vector<int>> index_; // image-vector hash
  u64 total_ = 0;
};

u64 perm_vector_hash(Perm const &p);

// ---- elementwise subgroups --------------------------------------------------

Group center(Group const &G);
Group centralizer_in(Group const &G, Perm const &t,
                     SearchLimits const &lim = {});
Group centralizer_in(Group const &G, std::vector<Perm> const &ts,
                     SearchLimits const &lim = {});
Group normal_closure(Group const &G, std::vector<Perm> const &xs);
Group derived_subgroup(Group const &G);
std::vector<Group> derived_series(Group const &G);
bool is_solvable(Group const &G);
bool is_nilpotent(Group const &G);
bool is_perfect(Group const &G);
bool is_normal_in(Group const &G, Group const &N);

// ---- Sylow subgroups and normalizers ----------------------------------------

// a Sylow p-subgroup, grown by ascending normalizer chain from a p-element;
// deterministic for a fixed seed
Group sylow_subgroup(Group const &G, u64 p, u64 seed = 0x51109);

// normalizer via quick checks, brute scan on small groups, direct backtrack on
// listable subgroups, and otherwise a characteristic-subgroup ladder
Group normalizer_in(Group const &G, Group const &H,
                    SearchLimits const &lim = {});

// ---- quotients ---------------------------------------------------------------

class Quotient {
public:
  // requires N normal in G and index within bound
  Quotient(Group const &G, Group const &N, u64 max_index = 100'000);

  Group const &group() const { return q_; }
  size_t index() const { return reps_.size(); }
  Perm project(Perm const &g) const; // the induced permutation of cosets
  Perm const &coset_rep(size_t i) const { return reps_[i]; }

private:
  Group n_chain_;          // N with a full ordered base, for canonical reps
  std::vector<Perm> reps_; // canonical (lex-least) coset representatives
  std::unordered_map<u64, std::vector<int>> index_;
  Group q_;
  Point degree_ = 0;
  Perm canonical_rep(Perm const &g) const;
  int coset_id(Perm const &g) const;
};

// ---- element realness and p-central elements -----------------------------------

// an element t with t⁻¹xt = x⁻¹, when one exists in G
std::optional<Perm> realness_witness(Group const &G, Perm const &x,
                                     SearchLimits const &lim = {});
bool is_real_element(Group const &G, Perm const &x, SearchLimits const &lim = {});

// the lexicographically least order-p element of the center of the computed
// Sylow p-subgroup; requires p prime and p | |G|
Perm p_central_element(Group const &G, u64 p, u64 seed = 0x51109);

// ---- composition structure ----------------------------------------------------

enum class FactorFamily { cyclic, alternating, psl2, other_simple, unidentified };

// identification of one simple (sub)quotient: parameter is the prime for
// cyclic, n for alternating, q for psl2, and 0 otherwise; groups isomorphic to
// both an alternating group and a PSL(2,q) report the psl2 family
struct CompositionFactor {
  FactorFamily family = FactorFamily::unidentified;
  u64 parameter = 0;
  Factored order;
  std::string label; // table name when family is other_simple
  std::optional<Group> realization; // the subquotient itself, when computed
  std::string name() const;
};

// identification is table-driven and complete for nonabelian simple orders up
// to this ceiling; larger orders come back unidentified
constexpr u64 kSimpleOrderCeiling = 10'000'000;

// the (order, name) rows of the identification table, sorted by order
std::vector<std::pair<u64, std::string>> known_simple_orders();

// family and parameters for a simple group of the given order; never a wrong
// positive: unlisted or above-ceiling orders return unidentified, and the
// group itself is probed only to split the one ambiguous order, 20160
CompositionFactor identify_simple(Factored const &order, Group const &G);

// factors along a computed composition series, outermost first, each carrying
// its realization as an explicit group for downstream structure queries
std::vector<CompositionFactor>
composition_factors_full(Group const &G, u64 max_order = kDefaultEnumBound);
// the factor names alone
std::vector<std::string> composition_factors(Group const &G,
                                             u64 max_order = kDefaultEnumBound);
bool is_simple(Group const &G);
Group solvable_radical(Group const &G);
// every normal subgroup, as joins of conjugacy-class closures
std::vector<Group> all_normal_subgroups(Group const &G, size_t max_count = 2000);

} // namespace cgt
