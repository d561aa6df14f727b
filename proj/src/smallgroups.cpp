#include "cgt/smallgroups.hpp"

#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <unordered_map>

namespace cgt {

namespace {

int tbl_order(MulTable const &T, int a) {
  int o = 1, x = a;
  while (x != 0) {
    x = T.at(x, a);
    ++o;
  }
  return o;
}

// conjugacy class ids by orbit sweep: x^g = g^-1 * x * g
std::vector<int> tbl_class_ids(MulTable const &T) {
  size_t n = T.n;
  std::vector<int> id(n, -1);
  int next = 0;
  for (size_t x = 0; x < n; ++x) {
    if (id[x] >= 0)
      continue;
    int c = next++;
    std::vector<int> queue{int(x)};
    id[x] = c;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      for (size_t g = 0; g < n; ++g) {
        int y = T.at(T.at(T.inv[g], cur), g);
        if (id[y] < 0) {
          id[y] = c;
          queue.push_back(y);
        }
      }
    }
  }
  return id;
}

struct TableInfo {
  std::vector<std::array<int, 4>> key; // (order, class size, order(x^2), #roots)
};

TableInfo table_info(MulTable const &T) {
  size_t n = T.n;
  auto cls = tbl_class_ids(T);
  std::vector<int> cls_size(n, 0);
  for (size_t x = 0; x < n; ++x)
    cls_size[cls[x]]++;
  std::vector<int> roots(n, 0);
  for (size_t y = 0; y < n; ++y)
    roots[T.at(y, y)]++;
  TableInfo info;
  info.key.resize(n);
  for (size_t x = 0; x < n; ++x)
    info.key[x] = {tbl_order(T, int(x)), cls_size[cls[x]],
                   tbl_order(T, T.at(x, x)), roots[x]};
  return info;
}

// closure recipes for a greedy generating sequence: level l fixes the image of
// one new generator, then every recipe (e, a, b) defines e := a*b from already
// defined elements until the partial subgroup is closed
struct LevelPlan {
  int gen = 0;
  std::vector<std::array<int, 3>> recipes;
  std::vector<int> fresh;    // gen plus recipe targets, in definition order
  size_t defined_after = 0;  // closure size once this level is applied
};

std::vector<LevelPlan> make_plan(MulTable const &T) {
  size_t n = T.n;
  std::vector<LevelPlan> plan;
  std::vector<char> defined(n, 0);
  std::vector<int> defined_list{0};
  defined[0] = 1;
  while (defined_list.size() < n) {
    int g = 0;
    while (defined[g])
      ++g;
    LevelPlan lp;
    lp.gen = g;
    defined[g] = 1;
    defined_list.push_back(g);
    lp.fresh.push_back(g);
    for (size_t ai = 0; ai < defined_list.size(); ++ai)
      for (size_t bi = 0; bi < defined_list.size(); ++bi) {
        int e = T.at(defined_list[ai], defined_list[bi]);
        if (!defined[e]) {
          defined[e] = 1;
          defined_list.push_back(e);
          lp.recipes.push_back({e, defined_list[ai], defined_list[bi]});
          lp.fresh.push_back(e);
        }
      }
    lp.defined_after = defined_list.size();
    plan.push_back(std::move(lp));
  }
  return plan;
}

struct IsoSearch {
  MulTable const &T, &U;
  bool all;
  std::vector<LevelPlan> plan;
  std::vector<std::vector<int>> cands; // per level, image candidates in U
  std::vector<int> map;
  std::vector<char> used;
  std::vector<int> defined; // T-elements with images, in definition order
  std::vector<std::vector<std::uint16_t>> out;

  IsoSearch(MulTable const &t, MulTable const &u, bool a) : T(t), U(u), all(a) {}

  bool run() {
    size_t n = T.n;
    if (U.n != n)
      return false;
    auto ti = table_info(T), ui = table_info(U);
    {
      auto a = ti.key, b = ui.key;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        return false;
    }
    plan = make_plan(T);
    cands.resize(plan.size());
    for (size_t l = 0; l < plan.size(); ++l)
      for (size_t u = 0; u < n; ++u)
        if (ui.key[u] == ti.key[plan[l].gen])
          cands[l].push_back(int(u));
    map.assign(n, -1);
    used.assign(n, 0);
    map[0] = 0;
    used[0] = 1;
    defined = {0};
    return descend(0);
  }

  // returns true to stop the whole search (found one and all == false)
  bool descend(size_t level) {
    if (level == plan.size()) {
      out.emplace_back(map.begin(), map.end());
      return !all;
    }
    auto const &lp = plan[level];
    for (int u : cands[level]) {
      if (used[u])
        continue;
      size_t applied = 0;
      bool ok = true;
      map[lp.gen] = u;
      used[u] = 1;
      defined.push_back(lp.gen);
      for (; applied < lp.recipes.size(); ++applied) {
        auto const &r = lp.recipes[applied];
        int v = U.at(map[r[1]], map[r[2]]);
        if (used[v]) {
          ok = false;
          break;
        }
        map[r[0]] = v;
        used[v] = 1;
        defined.push_back(r[0]);
      }
      if (ok) // verify every product that touches a fresh element
        for (int e : lp.fresh) {
          for (int d : defined)
            if (map[T.at(e, d)] != U.at(map[e], map[d]) ||
                map[T.at(d, e)] != U.at(map[d], map[e])) {
              ok = false;
              break;
            }
          if (!ok)
            break;
        }
      bool stop = ok && descend(level + 1);
      // undo: gen plus the recipes that were applied
      for (size_t k = 0; k < applied + 1; ++k) {
        int e = defined.back();
        defined.pop_back();
        used[map[e]] = 0;
        map[e] = -1;
      }
      if (stop)
        return true;
    }
    return false;
  }
};

// automorphisms up to conjugacy; reduction engages only when the automorphism
// group is big enough for conjugate duplicates to matter
std::vector<size_t> aut_class_reps(std::vector<std::vector<std::uint16_t>> const &auts,
                                   Point deg) {
  std::vector<size_t> reps;
  if (auts.size() <= 64) {
    reps.resize(auts.size());
    for (size_t i = 0; i < auts.size(); ++i)
      reps[i] = i;
    return reps;
  }
  std::vector<Perm> perms;
  perms.reserve(auts.size());
  for (auto const &a : auts)
    perms.emplace_back(std::vector<Point>(a.begin(), a.end()));
  BuildOptions opts;
  opts.known_order = auts.size();
  Group A(deg, perms, opts);
  auto const &sg = A.strong_generators();
  std::unordered_map<u64, std::vector<int>> index;
  for (size_t i = 0; i < perms.size(); ++i)
    index[perm_vector_hash(perms[i])].push_back(int(i));
  auto lookup = [&](Perm const &q) {
    for (int j : index.at(perm_vector_hash(q)))
      if (perms[j] == q)
        return j;
    throw InternalError("automorphism conjugate left the enumerated list");
  };
  std::vector<char> seen(perms.size(), 0);
  for (size_t i = 0; i < perms.size(); ++i) {
    if (seen[i])
      continue;
    reps.push_back(i);
    std::vector<int> queue{int(i)};
    seen[i] = 1;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      for (Perm const &s : sg) {
        int j = lookup(conjugate(perms[cur], s));
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(j);
        }
      }
    }
  }
  return reps;
}

int table_index_of(MulTable const &T,
                   std::unordered_map<u64, std::vector<int>> const &index,
                   Perm const &x) {
  auto it = index.find(perm_vector_hash(x));
  if (it != index.end())
    for (int j : it->second)
      if (T.elems[j] == x)
        return j;
  throw InternalError("element is missing from its own multiplication table");
}

// all cyclic extensions of N by C_p: one group per (alpha, z) with alpha an
// automorphism class representative, alpha(z) = z and alpha^p = conjugation
// by z; every solvable group with a prime-index normal subgroup N arises
template <typename Sink>
void cyclic_extensions(Group const &N, u64 p, Sink const &sink) {
  MulTable T = MulTable::of(N);
  int m = int(T.n);
  std::unordered_map<u64, std::vector<int>> index;
  for (int i = 0; i < m; ++i)
    index[perm_vector_hash(T.elems[i])].push_back(i);
  std::vector<int> ngen;
  for (Perm const &g : N.generators())
    ngen.push_back(table_index_of(T, index, g));

  auto auts = table_automorphisms(T);
  for (size_t r : aut_class_reps(auts, Point(m))) {
    auto const &al = auts[r];
    std::vector<int> ap(m);
    for (int x = 0; x < m; ++x)
      ap[x] = x;
    for (u64 k = 0; k < p; ++k)
      for (int x = 0; x < m; ++x)
        ap[x] = al[ap[x]];
    for (int z = 0; z < m; ++z) {
      if (al[z] != z)
        continue;
      bool inner = true;
      for (int x = 0; x < m && inner; ++x)
        inner = T.at(T.at(z, x), T.inv[z]) == ap[x];
      if (!inner)
        continue;
      // group on pairs (b, j) = index j*m + b, with t = (identity, 1):
      //   t * (b, j) = (alpha(b) * z^{[j = p-1]}, j+1 mod p)
      //   g * (b, j) = (g*b, j) for g in N
      Point deg = Point(m * p);
      std::vector<Perm> gens;
      for (int gi : ngen) {
        std::vector<Point> img(deg);
        for (u64 j = 0; j < p; ++j)
          for (int b = 0; b < m; ++b)
            img[j * m + b] = Point(j * m + T.at(gi, b));
        gens.emplace_back(std::move(img));
      }
      {
        std::vector<Point> img(deg);
        for (u64 j = 0; j < p; ++j)
          for (int b = 0; b < m; ++b)
            img[j * m + b] = j + 1 < p ? Point((j + 1) * m + al[b])
                                       : Point(T.at(al[b], z));
        gens.emplace_back(std::move(img));
      }
      Group G(deg, std::move(gens));
      if (G.order() != u64(m) * p)
        throw InternalError("cyclic extension closed to the wrong order");
      sink(G);
    }
  }
}

struct DedupStore {
  std::vector<Group> groups;
  std::vector<MulTable> tables;
  std::vector<std::string> fps;

  void insert(Group const &G) {
    MulTable T = MulTable::of(G);
    std::string fp = group_fingerprint(T);
    for (size_t i = 0; i < groups.size(); ++i)
      if (fps[i] == fp && tables_isomorphic(tables[i], T))
        return;
    groups.push_back(G);
    tables.push_back(std::move(T));
    fps.push_back(std::move(fp));
  }
};

class Enumerator {
public:
  std::vector<Group> const &of(u64 n) {
    auto it = memo_.find(n);
    if (it != memo_.end())
      return it->second;
    if (!small_groups_order_supported(n))
      throw PreconditionError("group enumeration is not supported for order " +
                              std::to_string(n));
    if (n == 1) {
      memo_[1] = {Group::trivial(1)};
      return memo_[1];
    }
    DedupStore store;
    for (u64 p : Factored::of(n).primes())
      for (Group const &N : of(n / p))
        cyclic_extensions(N, p, [&](Group const &G) { store.insert(G); });
    if (n == 60) // the only non-solvable order in range
      store.insert(alternating(5));
    memo_[n] = std::move(store.groups);
    return memo_[n];
  }

private:
  std::map<u64, std::vector<Group>> memo_;
};

void partitions_of(int e, std::vector<int> &prefix, int maxpart,
                   std::vector<std::vector<int>> &out) {
  if (e == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(e, maxpart); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(e - part, prefix, part, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions_of(e, prefix, e, out);
  return out;
}

} // namespace

MulTable MulTable::of(Group const &G, u64 bound) {
  if (G.order() > bound)
    throw BoundExceeded("multiplication table bound exceeded: order " +
                        std::to_string(G.order()));
  MulTable T;
  T.elems = G.elements(bound);
  std::sort(T.elems.begin(), T.elems.end());
  T.n = T.elems.size();
  if (!T.elems[0].is_identity())
    throw InternalError("sorted element list does not start at the identity");
  std::unordered_map<u64, std::vector<int>> index;
  for (size_t i = 0; i < T.n; ++i)
    index[perm_vector_hash(T.elems[i])].push_back(int(i));
  auto lookup = [&](Perm const &x) { return table_index_of(T, index, x); };
  T.mul.resize(T.n * T.n);
  T.inv.resize(T.n);
  for (size_t a = 0; a < T.n; ++a) {
    for (size_t b = 0; b < T.n; ++b)
      T.mul[a * T.n + b] = std::uint16_t(lookup(T.elems[a] * T.elems[b]));
    T.inv[a] = std::uint16_t(lookup(T.elems[a].inverse()));
  }
  return T;
}

std::string group_fingerprint(MulTable const &T) {
  size_t n = T.n;
  auto info = table_info(T);
  auto keys = info.key;
  std::sort(keys.begin(), keys.end());

  size_t center = 0;
  for (size_t x = 0; x < n; ++x)
    if (info.key[x][1] == 1)
      ++center;

  // derived series sizes straight off the table
  std::vector<size_t> series;
  std::vector<char> in(n, 1);
  size_t cur = n;
  while (true) {
    std::vector<char> comm(n, 0);
    comm[0] = 1;
    std::vector<int> members;
    for (size_t a = 0; a < n; ++a)
      if (in[a])
        for (size_t b = 0; b < n; ++b)
          if (in[b]) {
            int c = T.at(T.at(T.at(T.inv[a], T.inv[b]), a), b);
            comm[c] = 1;
          }
    for (size_t x = 0; x < n; ++x)
      if (comm[x])
        members.push_back(int(x));
    // close under multiplication
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int c = T.at(members[i], members[j]);
        if (!comm[c]) {
          comm[c] = 1;
          members.push_back(c);
        }
      }
    size_t sz = members.size();
    if (sz == cur)
      break;
    series.push_back(sz);
    in = comm;
    cur = sz;
    if (sz == 1)
      break;
  }

  u64 exponent = 1;
  for (size_t x = 0; x < n; ++x)
    exponent = lcm_u64(exponent, u64(info.key[x][0]));

  std::ostringstream os;
  os << "n" << n << ":e" << exponent << ":z" << center << ":d";
  for (size_t s : series)
    os << s << ",";
  os << ":k";
  for (size_t i = 0; i < keys.size();) {
    size_t j = i;
    while (j < keys.size() && keys[j] == keys[i])
      ++j;
    os << "(" << keys[i][0] << "." << keys[i][1] << "." << keys[i][2] << "."
       << keys[i][3] << ")x" << (j - i) << ";";
    i = j;
  }
  return os.str();
}

std::vector<std::vector<std::uint16_t>>
table_isomorphisms(MulTable const &T, MulTable const &U, bool all) {
  IsoSearch s(T, U, all);
  s.run();
  return std::move(s.out);
}

bool tables_isomorphic(MulTable const &T, MulTable const &U) {
  return !table_isomorphisms(T, U, false).empty();
}

std::vector<std::vector<std::uint16_t>> table_automorphisms(MulTable const &T) {
  return table_isomorphisms(T, T, true);
}

bool small_groups_order_supported(u64 n) {
  return n >= 1 && n <= kSmallGroupOrderMax && n != 64 && n != 96;
}

std::vector<Group> groups_of_order(u64 n) {
  Enumerator e;
  return e.of(n);
}

std::vector<std::pair<u64, std::vector<Group>>> groups_up_to(u64 maxn) {
  Enumerator e;
  std::vector<std::pair<u64, std::vector<Group>>> out;
  for (u64 n = 1; n <= maxn; ++n)
    if (small_groups_order_supported(n))
      out.emplace_back(n, e.of(n));
  return out;
}

std::vector<std::pair<std::vector<u64>, Group>> abelian_groups_of_order(u64 n) {
  if (n == 0)
    throw PreconditionError("abelian_groups_of_order: order must be positive");
  std::vector<std::vector<std::vector<u64>>> per_prime;
  Factored const f = Factored::of(n);
  for (auto const &[p, e] : f.factors()) {
    std::vector<std::vector<u64>> lists;
    for (auto const &parts : partitions_of(e)) {
      std::vector<u64> invs;
      for (int a : parts) {
        u64 q = 1;
        for (int i = 0; i < a; ++i)
          q *= p;
        invs.push_back(q);
      }
      lists.push_back(std::move(invs));
    }
    per_prime.push_back(std::move(lists));
  }
  std::vector<std::pair<std::vector<u64>, Group>> out;
  std::vector<size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<u64> invs;
    for (size_t i = 0; i < per_prime.size(); ++i)
      for (u64 q : per_prime[i][pick[i]])
        invs.push_back(q);
    Group g = cyclic(invs.empty() ? 1 : invs[0]);
    for (size_t i = 1; i < invs.size(); ++i)
      g = direct_product(g, cyclic(invs[i]));
    out.emplace_back(std::move(invs), std::move(g));
    size_t i = 0;
    while (i < per_prime.size() && ++pick[i] == per_prime[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == per_prime.size())
      break;
  }
  return out;
}

u64 abelian_group_count(u64 n) {
  u64 count = 1;
  Factored const f = Factored::of(n);
  for (auto const &[p, e] : f.factors())
    count *= u64(partitions_of(e).size());
  return count;
}

} // namespace cgt
