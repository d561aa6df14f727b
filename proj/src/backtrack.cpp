#include "cgt/backtrack.hpp"

#include "cgt/error.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace cgt {

namespace {

constexpr Point kNone = ~Point(0);

// partial injection on points with an undo trail
struct PMap {
  std::vector<Point> fwd, bwd;
  std::vector<Point> trail;
  explicit PMap(size_t n) : fwd(n, kNone), bwd(n, kNone) {}
  bool assign(Point a, Point b) {
    if (fwd[a] != kNone)
      return fwd[a] == b;
    if (bwd[b] != kNone)
      return false;
    fwd[a] = b;
    bwd[b] = a;
    trail.push_back(a);
    return true;
  }
  size_t mark() const { return trail.size(); }
  void rollback(size_t m) {
    while (trail.size() > m) {
      Point a = trail.back();
      trail.pop_back();
      bwd[fwd[a]] = kNone;
      fwd[a] = kNone;
    }
  }
};

// assign a0 -> b0 and close under (a -> b) => (t(a) -> t(b)) for every t;
// sound for any g that commutes with every t, since g(t(a)) = t(g(a))
bool assign_with_commuting_closure(PMap &pm, std::vector<Perm> const &ts,
                                   std::vector<Perm> const &ts_other, Point a0,
                                   Point b0) {
  std::vector<std::pair<Point, Point>> queue{{a0, b0}};
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    if (pm.fwd[a] == b)
      continue;
    if (!pm.assign(a, b))
      return false;
    for (size_t i = 0; i < ts.size(); ++i)
      queue.emplace_back(ts[i][a], ts_other[i][b]);
  }
  return true;
}

struct Hooks {
  // extend the node state with base(level) -> delta; false prunes the branch;
  // the engine calls exit(level) afterwards in either case
  std::function<bool(size_t level, Point delta)> enter;
  std::function<void(size_t level)> exit;
  std::function<bool(Perm const &g)> leaf; // true stops the whole search
};

void run_search(Group const &G, Hooks &hooks, u64 &budget, bool &stop,
                size_t level, Perm const &h) {
  if (stop)
    return;
  if (level == G.levels().size()) {
    if (hooks.leaf(h))
      stop = true;
    return;
  }
  for (Point gamma : G.levels()[level].orbit) {
    if (stop)
      return;
    if (budget == 0)
      throw ResourceLimit("backtrack search exceeded its node budget");
    --budget;
    Point delta = h[gamma];
    bool ok = hooks.enter(level, delta);
    if (ok)
      run_search(G, hooks, budget, stop, level + 1,
                 gamma == G.levels()[level].base
                     ? h
                     : compose(h, G.transversal(level, gamma)));
    hooks.exit(level);
  }
}

Perm identity_perm(Point degree) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i)
    img[i] = i;
  return Perm(std::move(img));
}

std::vector<Point> orbit_minima(Group const &H) {
  std::vector<Point> mn(H.degree());
  for (auto const &orb : orbits(H.generators(), H.degree())) {
    Point m = orb.front(); // orbits are sorted ascending
    for (Point x : orb)
      mn[x] = m;
  }
  return mn;
}

// generic subgroup-mode driver: collects all g in G passing `exact` into a
// group, restarting whenever the found subgroup grows (the first-level
// minimal-orbit-point filter depends on it)
Group subgroup_mode(Group const &G, std::vector<Perm> seed_gens,
                    std::function<bool(Perm const &)> const &exact,
                    std::function<bool(size_t, Point)> const &enter,
                    std::function<void(size_t)> const &exit, u64 &budget) {
  Group H(G.degree(), std::move(seed_gens));
  for (;;) {
    auto hmin = orbit_minima(H);
    bool grew = false;
    bool stop = false;
    Hooks hooks;
    hooks.enter = [&](size_t level, Point delta) {
      if (level == 0 && hmin[delta] != delta)
        return false; // some coset member has a smaller first base image
      return enter(level, delta);
    };
    hooks.exit = exit;
    hooks.leaf = [&](Perm const &g) {
      if (g.is_identity() || !exact(g) || H.contains(g))
        return false;
      auto gens = H.generators();
      gens.push_back(g);
      H = Group(G.degree(), std::move(gens));
      grew = true;
      return true; // restart with the larger subgroup
    };
    run_search(G, hooks, budget, stop, 0, identity_perm(G.degree()));
    if (!grew)
      return H;
  }
}

} // namespace

Group backtrack_centralizer(Group const &G, std::vector<Perm> const &ts,
                            SearchLimits const &lim) {
  for (auto const &t : ts)
    if (t.degree() != G.degree())
      throw DegreeMismatch("centralizer target degree");
  // seed with the targets themselves where legal: t must lie in G and commute
  // with every other target
  std::vector<Perm> seeds;
  for (auto const &t : ts) {
    if (!G.contains(t))
      continue;
    bool commutes = true;
    for (auto const &s : ts)
      if (compose(s, t) != compose(t, s)) {
        commutes = false;
        break;
      }
    if (commutes)
      seeds.push_back(t);
  }
  PMap pm(G.degree());
  std::vector<size_t> marks(G.levels().size() + 1, 0);
  auto enter = [&](size_t level, Point delta) {
    marks[level] = pm.mark();
    return assign_with_commuting_closure(pm, ts, ts,
                                         G.levels()[level].base, delta);
  };
  auto exit = [&](size_t level) { pm.rollback(marks[level]); };
  auto exact = [&](Perm const &g) {
    for (auto const &t : ts)
      if (compose(g, t) != compose(t, g))
        return false;
    return true;
  };
  u64 budget = lim.max_nodes;
  return subgroup_mode(G, std::move(seeds), exact, enter, exit, budget);
}

Group backtrack_centralizer(Group const &G, Perm const &t,
                            SearchLimits const &lim) {
  return backtrack_centralizer(G, std::vector<Perm>{t}, lim);
}

std::optional<Perm> backtrack_conjugator(Group const &G, Perm const &x,
                                         Perm const &y,
                                         SearchLimits const &lim) {
  if (x.degree() != G.degree() || y.degree() != G.degree())
    throw DegreeMismatch("conjugator target degree");
  // cycle types must match for conjugate permutations
  auto type = [](Perm const &p) {
    std::vector<size_t> t;
    for (auto const &c : cycle_decomposition(p))
      t.push_back(c.size());
    std::sort(t.begin(), t.end());
    return t;
  };
  if (type(x) != type(y))
    return std::nullopt;
  PMap pm(G.degree());
  std::vector<size_t> marks(G.levels().size() + 1, 0);
  // g^-1 x g = y rearranges to x(g(a)) = g(y(a)), so a pair (a -> b) in g's
  // graph forces the pair (y(a) -> x(b)): sources advance by y, images by x
  std::vector<Perm> srcs{y}, imgs{x};
  std::optional<Perm> found;
  Hooks hooks;
  hooks.enter = [&](size_t level, Point delta) {
    marks[level] = pm.mark();
    return assign_with_commuting_closure(pm, srcs, imgs,
                                         G.levels()[level].base, delta);
  };
  hooks.exit = [&](size_t level) { pm.rollback(marks[level]); };
  hooks.leaf = [&](Perm const &g) {
    if (conjugate(x, g) == y) {
      found = g;
      return true;
    }
    return false;
  };
  bool stop = false;
  u64 budget = lim.max_nodes;
  run_search(G, hooks, budget, stop, 0, identity_perm(G.degree()));
  return found;
}

Group backtrack_normalizer(Group const &G, Group const &K,
                           SearchLimits const &lim) {
  if (K.degree() != G.degree())
    throw DegreeMismatch("normalizer target degree");
  // quick exit: every generator of G already normalizes K
  auto normalizes = [&](Perm const &g) {
    for (auto const &k : K.generators())
      if (!K.contains(conjugate(k, g)))
        return false;
    return true;
  };
  bool all = true;
  std::vector<Perm> seeds = K.generators();
  for (auto const &g : G.generators()) {
    if (normalizes(g))
      seeds.push_back(g);
    else
      all = false;
  }
  if (all)
    return G;
  if (K.order() > lim.max_subgroup_elements)
    throw BoundExceeded("normalizer search needs to list the subgroup: order " +
                        std::to_string(K.order()) + " exceeds " +
                        std::to_string(lim.max_subgroup_elements));
  auto kelements = K.elements(lim.max_subgroup_elements);

  // orbit structure of K: a normalizing element permutes K-orbits
  auto korbs = orbits(K.generators(), K.degree());
  std::vector<Point> orbit_id(G.degree());
  std::vector<Point> orbit_size(korbs.size());
  for (size_t i = 0; i < korbs.size(); ++i) {
    orbit_size[i] = static_cast<Point>(korbs[i].size());
    for (Point x : korbs[i])
      orbit_id[x] = static_cast<Point>(i);
  }

  PMap pm(G.degree());      // partial graph of g on points
  PMap om(korbs.size());    // induced partial map on K-orbits
  // per K-generator surviving candidates for g*k*g^-1, filtered incrementally
  std::vector<Perm> const &kgens = K.generators();
  std::vector<Perm> kgens_inv;
  for (auto const &k : kgens)
    kgens_inv.push_back(k.inverse());
  std::vector<std::vector<int>> surviving(kgens.size());
  std::vector<std::vector<std::pair<size_t, int>>> removed_stack(
      G.levels().size() + 1);
  std::vector<size_t> pmarks(G.levels().size() + 1, 0);
  std::vector<size_t> omarks(G.levels().size() + 1, 0);
  auto reset_surviving = [&]() {
    for (size_t j = 0; j < kgens.size(); ++j) {
      surviving[j].clear();
      for (int e = 0; e < static_cast<int>(kelements.size()); ++e)
        surviving[j].push_back(e);
    }
  };
  auto filter = [&](size_t level, size_t j,
                    std::function<bool(Perm const &)> const &keep) {
    auto &s = surviving[j];
    for (size_t i = 0; i < s.size();) {
      if (keep(kelements[static_cast<size_t>(s[i])])) {
        ++i;
      } else {
        removed_stack[level].emplace_back(j, s[i]);
        s[i] = s.back();
        s.pop_back();
      }
    }
    return !s.empty();
  };
  auto enter = [&](size_t level, Point delta) {
    pmarks[level] = pm.mark();
    omarks[level] = om.mark();
    Point a = G.levels()[level].base;
    if (!pm.assign(a, delta))
      return false;
    Point oa = orbit_id[a], ob = orbit_id[delta];
    if (orbit_size[oa] != orbit_size[ob] || !om.assign(oa, ob))
      return false;
    // incremental candidate filtering: for surviving k' (a candidate for
    // g k g^-1) and any two assigned pairs (u->v), (k(u)->w): k'(v) == w
    for (size_t j = 0; j < kgens.size(); ++j) {
      Point c = kgens[j][a];
      if (pm.fwd[c] != kNone) {
        Point d = pm.fwd[c];
        if (!filter(level, j, [&](Perm const &kp) { return kp[delta] == d; }))
          return false;
      }
      Point e = kgens_inv[j][a];
      if (pm.fwd[e] != kNone) {
        Point f = pm.fwd[e];
        if (!filter(level, j, [&](Perm const &kp) { return kp[f] == delta; }))
          return false;
      }
    }
    return true;
  };
  auto exit = [&](size_t level) {
    pm.rollback(pmarks[level]);
    om.rollback(omarks[level]);
    for (auto it = removed_stack[level].rbegin();
         it != removed_stack[level].rend(); ++it)
      surviving[it->first].push_back(it->second);
    removed_stack[level].clear();
  };
  u64 budget = lim.max_nodes;
  // enter/exit nest strictly, so each completed pass leaves the filter state
  // pristine; one initial fill is enough even across subgroup-mode restarts
  reset_surviving();
  return subgroup_mode(G, std::move(seeds), normalizes, enter, exit, budget);
}

} // namespace cgt
