#include "cgt/structure.hpp"

#include "cgt/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cgt {

namespace {

Perm identity_perm(Point degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Perm(std::move(img));
}

Perm perm_power(Perm const &p, u64 k) {
  Perm r = identity_perm(p.degree());
  Perm base = p;
  while (k) {
    if (k & 1)
      r = compose(r, base);
    base = compose(base, base);
    k >>= 1;
  }
  return r;
}

// rebuild a group's chain with a preferred base order; cheap because the order
// is already known, so the randomized fill applies
Group rebased(Group const &G, std::vector<Point> base_hint) {
  BuildOptions opts;
  opts.base_hint = std::move(base_hint);
  opts.known_order = G.order();
  return Group(G.degree(), G.generators(), opts);
}

std::vector<Point> cycle_adapted_hint(Perm const &t) {
  std::vector<Point> hint;
  for (auto const &cyc : cycle_decomposition(t))
    for (Point x : cyc)
      hint.push_back(x);
  return hint;
}

} // namespace

u64 perm_vector_hash(Perm const &p) {
  u64 h = 1469598103934665603ull; // FNV-1a
  for (Point i = 0; i < p.degree(); ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// ---- ClassTable -------------------------------------------------------------

ClassTable ClassTable::compute(Group const &G, u64 max_order) {
  if (G.order() > max_order)
    throw BoundExceeded("conjugacy classes need an element enumeration: order " +
                        std::to_string(G.order()) + " exceeds " +
                        std::to_string(max_order));
  if (G.order() * G.degree() > 60'000'000)
    throw BoundExceeded("conjugacy class enumeration would need too much memory");
  ClassTable ct;
  ct.total_ = G.order();
  ct.elements_ = G.elements(max_order);
  size_t n = ct.elements_.size();
  for (size_t i = 0; i < n; ++i)
    ct.index_[perm_vector_hash(ct.elements_[i])].push_back(static_cast<int>(i));
  auto lookup = [&](Perm const &p) -> int {
    auto it = ct.index_.find(perm_vector_hash(p));
    if (it == ct.index_.end())
      return -1;
    for (int i : it->second)
      if (ct.elements_[static_cast<size_t>(i)] == p)
        return i;
    return -1;
  };
  ct.class_id_.assign(n, -1);
  std::vector<int> first_of_class; // element index of discovery seed
  for (size_t i = 0; i < n; ++i) {
    if (ct.class_id_[i] >= 0)
      continue;
    int cid = static_cast<int>(first_of_class.size());
    first_of_class.push_back(static_cast<int>(i));
    // conjugation orbit under the generators
    std::deque<int> queue{static_cast<int>(i)};
    ct.class_id_[i] = cid;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (auto const &g : G.generators()) {
        Perm c = conjugate(ct.elements_[static_cast<size_t>(cur)], g);
        int j = lookup(c);
        if (j < 0)
          throw InternalError("conjugate escaped the element enumeration");
        if (ct.class_id_[static_cast<size_t>(j)] < 0) {
          ct.class_id_[static_cast<size_t>(j)] = cid;
          queue.push_back(j);
        }
      }
    }
  }
  size_t k = first_of_class.size();
  // representatives: lexicographically least member of each class
  std::vector<Perm> reps(k);
  std::vector<u64> sizes(k, 0);
  for (size_t i = 0; i < n; ++i) {
    auto cid = static_cast<size_t>(ct.class_id_[i]);
    ++sizes[cid];
    if (sizes[cid] == 1 || ct.elements_[i] < reps[cid])
      reps[cid] = ct.elements_[i];
  }
  // sort classes by element order, then size, then representative
  std::vector<size_t> perm_idx(k);
  std::iota(perm_idx.begin(), perm_idx.end(), size_t{0});
  std::vector<u64> orders(k);
  for (size_t c = 0; c < k; ++c)
    orders[c] = perm_order(reps[c]);
  std::sort(perm_idx.begin(), perm_idx.end(), [&](size_t a, size_t b) {
    if (orders[a] != orders[b])
      return orders[a] < orders[b];
    if (sizes[a] != sizes[b])
      return sizes[a] < sizes[b];
    return reps[a] < reps[b];
  });
  std::vector<int> remap(k);
  for (size_t newc = 0; newc < k; ++newc) {
    remap[perm_idx[newc]] = static_cast<int>(newc);
    ct.reps_.push_back(reps[perm_idx[newc]]);
    ct.sizes_.push_back(sizes[perm_idx[newc]]);
    ct.orders_.push_back(orders[perm_idx[newc]]);
  }
  for (size_t i = 0; i < n; ++i)
    ct.class_id_[i] = remap[static_cast<size_t>(ct.class_id_[i])];
  ct.inv_class_.resize(k);
  for (size_t c = 0; c < k; ++c) {
    int ic = ct.class_of(ct.reps_[c].inverse());
    if (ic < 0)
      throw InternalError("inverse escaped the class partition");
    ct.inv_class_[c] = static_cast<size_t>(ic);
  }
  return ct;
}

int ClassTable::class_of(Perm const &x) const {
  auto it = index_.find(perm_vector_hash(x));
  if (it == index_.end())
    return -1;
  for (int i : it->second)
    if (elements_[static_cast<size_t>(i)] == x)
      return class_id_[static_cast<size_t>(i)];
  return -1;
}

void ClassTable::for_each_in_class(
    size_t c, std::function<void(Perm const &)> const &fn) const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (class_id_[i] == static_cast<int>(c))
      fn(elements_[i]);
}

size_t ClassTable::power_class(size_t c, u64 k) const {
  int r = class_of(perm_power(reps_[c], k % orders_[c]));
  if (r < 0)
    throw InternalError("power escaped the class partition");
  return static_cast<size_t>(r);
}

u64 ClassTable::exponent() const {
  u64 e = 1;
  for (u64 o : orders_)
    e = lcm_u64(e, o);
  return e;
}

// ---- elementwise subgroups ----------------------------------------------------

Group centralizer_in(Group const &G, std::vector<Perm> const &ts,
                     SearchLimits const &lim) {
  if (ts.empty() || G.is_trivial())
    return G;
  // adapt the base to the first target's cycles so that the pair propagation
  // determines whole cycles from single choices
  return backtrack_centralizer(rebased(G, cycle_adapted_hint(ts.front())), ts,
                               lim);
}

Group centralizer_in(Group const &G, Perm const &t, SearchLimits const &lim) {
  return centralizer_in(G, std::vector<Perm>{t}, lim);
}

Group center(Group const &G) {
  if (G.is_abelian())
    return G;
  return centralizer_in(G, G.generators());
}

std::optional<Perm> realness_witness(Group const &G, Perm const &x,
                                     SearchLimits const &lim) {
  if (!G.contains(x))
    throw PreconditionError("realness_witness: element is not in the group");
  Perm inv = x.inverse();
  if (x == inv)
    return identity_perm(G.degree());
  return backtrack_conjugator(rebased(G, cycle_adapted_hint(x)), x, inv, lim);
}

bool is_real_element(Group const &G, Perm const &x, SearchLimits const &lim) {
  return realness_witness(G, x, lim).has_value();
}

Perm p_central_element(Group const &G, u64 p, u64 seed) {
  if (!is_prime(p))
    throw PreconditionError("p_central_element: " + std::to_string(p) +
                            " is not prime");
  if (G.order_factored().exponent(p) == 0)
    throw PreconditionError("p_central_element: p does not divide |G|");
  Group Z = center(sylow_subgroup(G, p, seed));
  std::optional<Perm> best;
  Z.for_each_element([&](Perm const &z) {
    if (perm_order(z) == p && (!best || z < *best))
      best = z;
  });
  return *best; // Z is a nontrivial p-group, so an order-p element exists
}

Group normal_closure(Group const &G, std::vector<Perm> const &xs) {
  std::vector<Perm> gens;
  for (auto const &x : xs)
    if (!x.is_identity())
      gens.push_back(x);
  Group H(G.degree(), gens);
  for (;;) {
    bool grown = false;
    for (auto const &h : std::vector<Perm>(gens)) {
      for (auto const &g : G.generators()) {
        Perm c = conjugate(h, g);
        if (!H.contains(c)) {
          gens.push_back(c);
          H = Group(G.degree(), gens);
          grown = true;
        }
      }
    }
    if (!grown)
      return H;
  }
}

Group derived_subgroup(Group const &G) {
  std::vector<Perm> comms;
  auto const &gs = G.generators();
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j)
      comms.push_back(compose(compose(gs[i].inverse(), gs[j].inverse()),
                              compose(gs[i], gs[j])));
  return normal_closure(G, comms);
}

std::vector<Group> derived_series(Group const &G) {
  std::vector<Group> series{G};
  for (;;) {
    Group d = derived_subgroup(series.back());
    if (d.order() == series.back().order())
      return series;
    series.push_back(std::move(d));
  }
}

bool is_solvable(Group const &G) {
  return derived_series(G).back().is_trivial();
}

bool is_perfect(Group const &G) {
  return derived_subgroup(G).order() == G.order();
}

bool is_nilpotent(Group const &G) {
  // nilpotent iff every Sylow subgroup is normal
  for (u64 p : G.order_factored().primes()) {
    Group P = sylow_subgroup(G, p);
    if (!is_normal_in(G, P))
      return false;
  }
  return true;
}

bool is_normal_in(Group const &G, Group const &N) {
  for (auto const &n : N.generators())
    for (auto const &g : G.generators())
      if (!N.contains(conjugate(n, g)))
        return false;
  return true;
}

// ---- Sylow -------------------------------------------------------------------

Group sylow_subgroup(Group const &G, u64 p, u64 seed) {
  if (!is_prime(p))
    throw PreconditionError("sylow_subgroup: " + std::to_string(p) +
                            " is not prime");
  int e = G.order_factored().exponent(p);
  if (e == 0)
    return Group::trivial(G.degree());
  u64 target = G.order_factored().p_part(p);
  Rng rng(seed);
  auto p_power_part = [&](Perm const &g) -> std::optional<Perm> {
    u64 m = perm_order(g);
    u64 mp = 1;
    while (m % p == 0) {
      m /= p;
      mp *= p;
    }
    if (mp == 1)
      return std::nullopt;
    return perm_power(g, m); // order exactly mp
  };
  // a first p-element
  std::optional<Perm> y;
  for (int tries = 0; tries < 200'000 && !y; ++tries)
    y = p_power_part(G.random_element(rng));
  if (!y)
    throw ResourceLimit("sylow_subgroup: no p-element found by sampling");
  Group P(G.degree(), {*y});
  while (P.order() < target) {
    Group N = normalizer_in(G, P);
    // P is proper in a Sylow subgroup, so its normalizer exceeds it p-locally
    if (N.order_factored().exponent(p) <= P.order_factored().exponent(p))
      throw InternalError("sylow_subgroup: normalizer gained no p-part");
    bool grew = false;
    for (int tries = 0; tries < 200'000 && !grew; ++tries) {
      auto z = p_power_part(N.random_element(rng));
      if (z && !P.contains(*z)) {
        auto gens = P.generators();
        gens.push_back(*z);
        P = Group(G.degree(), gens); // a p-group: P is normal in N
        grew = true;
      }
    }
    if (!grew)
      throw ResourceLimit("sylow_subgroup: sampling failed to grow the p-group");
  }
  return P;
}

// ---- normalizer ladder ---------------------------------------------------------

namespace {

// the subgroup generated by the central elements of order dividing p
Group omega1_center(Group const &H, u64 p) {
  Group Z = H.is_abelian() ? H : backtrack_centralizer(H, H.generators());
  if (Z.order() > 50'000)
    throw ResourceLimit("omega1: the center is unexpectedly large");
  std::vector<Perm> gens;
  Z.for_each_element([&](Perm const &z) {
    if (!z.is_identity() && perm_power(z, p).is_identity())
      gens.push_back(z);
  });
  return Group(H.degree(), gens);
}

std::vector<Point> subgroup_adapted_hint(Group const &K) {
  // points grouped by K-orbit, nontrivial orbits first
  auto orbs = orbits(K.generators(), K.degree());
  std::stable_sort(orbs.begin(), orbs.end(),
                   [](auto const &a, auto const &b) {
                     return (a.size() > 1) > (b.size() > 1);
                   });
  std::vector<Point> hint;
  for (auto const &orb : orbs)
    for (Point x : orb)
      hint.push_back(x);
  return hint;
}

} // namespace

Group normalizer_in(Group const &G, Group const &H, SearchLimits const &lim) {
  if (!H.is_subgroup_of(G))
    throw PreconditionError("normalizer_in: not a subgroup");
  if (H.is_trivial() || H.order() == G.order())
    return G;
  if (is_normal_in(G, H))
    return G;
  if (G.order() <= lim.brute_order) {
    // small ambient group: scan every element
    std::vector<Perm> found;
    G.for_each_element([&](Perm const &g) {
      for (auto const &h : H.generators())
        if (!H.contains(conjugate(h, g)))
          return;
      found.push_back(g);
    });
    BuildOptions opts;
    opts.known_order = found.size();
    return Group(G.degree(), found, opts);
  }
  if (H.order() <= lim.direct_subgroup_order)
    return backtrack_normalizer(rebased(G, subgroup_adapted_hint(H)), H, lim);
  // characteristic ladder: W = Omega_1(Z(H)) for p-groups, Z(H) otherwise, is
  // characteristic in H, so the normalizer of H sits inside that of W
  auto primes = H.order_factored().primes();
  Group W = primes.size() == 1 ? omega1_center(H, primes[0])
                               : (H.is_abelian() ? H : backtrack_centralizer(
                                                           H, H.generators()));
  if (W.is_trivial() || W.order() == H.order())
    return backtrack_normalizer(rebased(G, subgroup_adapted_hint(H)), H, lim);
  Group M = normalizer_in(G, W, lim);
  if (M.order() < G.order())
    return normalizer_in(M, H, lim);
  // W is normal in all of G: pass to the quotient by W
  Quotient q(G, W);
  std::vector<Perm> himg;
  for (auto const &h : H.generators())
    himg.push_back(q.project(h));
  BuildOptions hopts;
  hopts.known_order = H.order() / W.order();
  Group HQ(q.group().degree(), himg, hopts);
  Group NQ = normalizer_in(q.group(), HQ, lim);
  // lift: the identity coset sits at point 0, so a quotient element's lift is
  // the representative of wherever it sends that coset
  std::vector<Perm> gens = W.generators();
  for (auto const &ng : NQ.generators())
    gens.push_back(q.coset_rep(ng[0]));
  BuildOptions opts;
  opts.known_order = NQ.order() * W.order();
  return Group(G.degree(), gens, opts);
}

// ---- quotient -------------------------------------------------------------------

Quotient::Quotient(Group const &G, Group const &N, u64 max_index) {
  if (N.degree() != G.degree())
    throw DegreeMismatch("quotient by a subgroup of different degree");
  if (!is_normal_in(G, N) || !N.is_subgroup_of(G))
    throw PreconditionError("quotient requires a normal subgroup");
  degree_ = G.degree();
  u64 index = G.order() / N.order();
  if (index > max_index || index * G.degree() > 50'000'000)
    throw BoundExceeded("quotient index " + std::to_string(index) +
                        " is out of reach");
  BuildOptions nopts;
  nopts.forced_full_base = true;
  nopts.known_order = N.order();
  n_chain_ = Group(G.degree(), N.generators(), nopts);
  // enumerate cosets by closing the generator action over canonical reps
  reps_.push_back(canonical_rep(identity_perm(degree_)));
  index_[perm_vector_hash(reps_[0])].push_back(0);
  for (size_t i = 0; i < reps_.size(); ++i)
    for (auto const &a : G.generators()) {
      Perm r = canonical_rep(compose(a, reps_[i]));
      if (coset_id(r) < 0) {
        index_[perm_vector_hash(r)].push_back(static_cast<int>(reps_.size()));
        reps_.push_back(std::move(r));
      }
    }
  if (reps_.size() != index)
    throw InternalError("coset enumeration found " +
                        std::to_string(reps_.size()) + " of " +
                        std::to_string(index) + " cosets");
  // sort reps for a stable point numbering (identity coset lands at 0)
  std::vector<Perm> sorted = reps_;
  std::sort(sorted.begin(), sorted.end());
  reps_ = std::move(sorted);
  index_.clear();
  for (size_t i = 0; i < reps_.size(); ++i)
    index_[perm_vector_hash(reps_[i])].push_back(static_cast<int>(i));
  std::vector<Perm> qgens;
  for (auto const &a : G.generators())
    qgens.push_back(project(a));
  BuildOptions qopts;
  qopts.known_order = index;
  qopts.degree_cap = static_cast<Point>(std::max<u64>(index, 1));
  q_ = Group(static_cast<Point>(index), qgens, qopts);
}

Perm Quotient::canonical_rep(Perm const &g) const {
  // lexicographically least element of gN, walked down N's full ordered base:
  // at level m the reachable images of m form the level orbit, pick the one
  // minimizing the image under the accumulated product
  Perm r = g;
  for (size_t m = 0; m < n_chain_.levels().size(); ++m) {
    auto const &lv = n_chain_.levels()[m];
    if (lv.orbit.size() == 1)
      continue;
    Point best = lv.base;
    for (Point d : lv.orbit)
      if (r[d] < r[best])
        best = d;
    if (best != lv.base)
      r = compose(r, n_chain_.transversal(m, best));
  }
  return r;
}

int Quotient::coset_id(Perm const &canon) const {
  auto it = index_.find(perm_vector_hash(canon));
  if (it == index_.end())
    return -1;
  for (int i : it->second)
    if (reps_[static_cast<size_t>(i)] == canon)
      return i;
  return -1;
}

Perm Quotient::project(Perm const &g) const {
  if (g.degree() != degree_)
    throw DegreeMismatch("projecting an element of the wrong degree");
  std::vector<Point> img(reps_.size());
  for (size_t i = 0; i < reps_.size(); ++i) {
    int j = coset_id(canonical_rep(compose(g, reps_[i])));
    if (j < 0)
      throw PreconditionError("projected element does not permute the cosets");
    img[i] = static_cast<Point>(j);
  }
  return Perm(std::move(img));
}

} // namespace cgt
