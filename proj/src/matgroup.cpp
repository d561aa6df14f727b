#include "cgt/matgroup.hpp"

#include "cgt/error.hpp"

#include <memory>
#include <unordered_map>
#include <utility>

namespace cgt {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

Mat mat_mul(FiniteField const &F, Mat const &A, Mat const &B) {
  Mat C(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int k = 0; k < A.n; ++k) {
      u64 aik = A.at(i, k);
      if (aik == 0)
        continue;
      for (int j = 0; j < A.n; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

u64 mat_det(FiniteField const &F, Mat A) {
  u64 det = 1;
  for (int c = 0; c < A.n; ++c) {
    int pivot = -1;
    for (int r = c; r < A.n; ++r)
      if (A.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      return 0;
    if (pivot != c) {
      for (int j = 0; j < A.n; ++j)
        std::swap(A.at(pivot, j), A.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, A.at(c, c));
    u64 inv = F.inv(A.at(c, c));
    for (int r = c + 1; r < A.n; ++r) {
      u64 f = F.mul(A.at(r, c), inv);
      if (f == 0)
        continue;
      for (int j = c; j < A.n; ++j)
        A.at(r, j) = F.sub(A.at(r, j), F.mul(f, A.at(c, j)));
    }
  }
  return det;
}

// ---- order formulas ------------------------------------------------------------

namespace {

void require_dimension(int n) {
  if (n < 1)
    throw PreconditionError("matrix group: dimension must be at least 1");
}

void require_prime_power(u64 q) {
  if (q < 2 || !is_prime_power(q))
    throw PreconditionError("matrix group: " + std::to_string(q) +
                            " is not a prime power");
}

} // namespace

Factored general_linear_order(int n, u64 q, Sign eps) {
  require_dimension(n);
  require_prime_power(q);
  auto [p, k] = prime_power_of(q);
  Factored f = Factored().mul_prime_power(p, k * n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    u128 qi = 1;
    for (int j = 0; j < i; ++j) {
      qi *= q;
      if (qi > ~u64{0})
        throw BoundExceeded("matrix group order exceeds 64 bits");
    }
    u64 term = (eps == Sign::plus || i % 2 == 0) ? static_cast<u64>(qi) - 1
                                                 : static_cast<u64>(qi) + 1;
    f = f.mul(Factored::of(term));
  }
  return f;
}

Factored special_linear_order(int n, u64 q, Sign eps) {
  u64 scalars = eps == Sign::plus ? q - 1 : q + 1;
  return general_linear_order(n, q, eps).div(Factored::of(scalars));
}

Factored projective_special_linear_order(int n, u64 q, Sign eps) {
  u64 scalars = eps == Sign::plus ? q - 1 : q + 1;
  return special_linear_order(n, q, eps)
      .div(Factored::of(gcd_u64(static_cast<u64>(n), scalars)));
}

// ---- permutation actions ---------------------------------------------------------

namespace {

// column vectors encoded with coordinate 0 most significant, so numeric order
// on encodings is lexicographic order on coordinate tuples
std::vector<u64> decode_vec(u64 enc, u64 Q, int n) {
  std::vector<u64> v(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    v[static_cast<size_t>(i)] = enc % Q;
    enc /= Q;
  }
  return v;
}

u64 encode_vec(std::vector<u64> const &v, u64 Q) {
  u64 enc = 0;
  for (u64 c : v)
    enc = enc * Q + c;
  return enc;
}

std::vector<u64> mat_apply(FiniteField const &F, Mat const &M,
                           std::vector<u64> const &v) {
  std::vector<u64> w(v.size(), 0);
  for (int i = 0; i < M.n; ++i) {
    u64 s = 0;
    for (int j = 0; j < M.n; ++j)
      s = F.add(s, F.mul(M.at(i, j), v[static_cast<size_t>(j)]));
    w[static_cast<size_t>(i)] = s;
  }
  return w;
}

Perm perm_on_vectors(FiniteField const &F, Mat const &M) {
  u64 Q = F.size();
  u64 D = 1;
  for (int i = 0; i < M.n; ++i)
    D *= Q;
  std::vector<Point> img(static_cast<size_t>(D - 1));
  for (u64 enc = 1; enc < D; ++enc) {
    u64 w = encode_vec(mat_apply(F, M, decode_vec(enc, Q, M.n)), Q);
    img[static_cast<size_t>(enc - 1)] = static_cast<Point>(w - 1);
  }
  return Perm(std::move(img));
}

// projective points, each line represented by its vector with first nonzero
// coordinate 1, listed in increasing encoding order
struct ProjectiveSpace {
  u64 Q = 0;
  int n = 0;
  std::vector<u64> reps; // encodings
  std::unordered_map<u64, Point> index;

  ProjectiveSpace(u64 Q_, int n_) : Q(Q_), n(n_) {
    u64 D = 1;
    for (int i = 0; i < n; ++i)
      D *= Q;
    for (u64 enc = 1; enc < D; ++enc) {
      auto v = decode_vec(enc, Q, n);
      u64 first = 0;
      for (u64 c : v)
        if (c != 0) {
          first = c;
          break;
        }
      if (first == 1) {
        index.emplace(enc, static_cast<Point>(reps.size()));
        reps.push_back(enc);
      }
    }
  }

  Point point_of(FiniteField const &F, std::vector<u64> const &w) const {
    u64 first = 0;
    for (u64 c : w)
      if (c != 0) {
        first = c;
        break;
      }
    u64 s = F.inv(first);
    std::vector<u64> r(w.size());
    for (size_t i = 0; i < w.size(); ++i)
      r[i] = F.mul(s, w[i]);
    return index.at(encode_vec(r, Q));
  }
};

Perm perm_on_projective(FiniteField const &F, ProjectiveSpace const &ps,
                        Mat const &M) {
  std::vector<Point> img(ps.reps.size());
  for (size_t i = 0; i < ps.reps.size(); ++i)
    img[i] = ps.point_of(F, mat_apply(F, M, decode_vec(ps.reps[i], ps.Q, ps.n)));
  return Perm(std::move(img));
}

// ---- generator matrices ----------------------------------------------------------

// adjacent elementary transvections I + a E_{i,i+1}, I + a E_{i+1,i} with a
// running over an F_p-basis of the field; these generate SL_n(Q) for n >= 2
std::vector<Mat> sl_generator_mats(FiniteField const &F, int n) {
  std::vector<Mat> out;
  int k = F.degree_over_prime();
  for (int i = 0; i + 1 < n; ++i)
    for (int t = 0; t < k; ++t) {
      u64 a = F.pow(F.generator(), static_cast<u64>(t));
      Mat up = Mat::identity(n), down = Mat::identity(n);
      up.at(i, i + 1) = a;
      down.at(i + 1, i) = a;
      out.push_back(up);
      out.push_back(down);
    }
  return out;
}

u64 hermitian(FiniteField const &F, u64 q0, std::vector<u64> const &u,
              std::vector<u64> const &v) {
  u64 s = 0;
  for (size_t i = 0; i < u.size(); ++i)
    s = F.add(s, F.mul(u[i], F.pow(v[i], q0)));
  return s;
}

// a random matrix with orthonormal columns for the identity hermitian form,
// built by Gram-Schmidt with resampling on isotropic residues
Mat random_unitary(FiniteField const &F, int n, u64 q0,
                   std::vector<u64> const &norm_root, Rng &rng) {
  std::vector<std::vector<u64>> cols;
  while (static_cast<int>(cols.size()) < n) {
    bool placed = false;
    for (int attempt = 0; attempt < 4096 && !placed; ++attempt) {
      std::vector<u64> w(static_cast<size_t>(n));
      for (auto &c : w)
        c = rng() % F.size();
      for (auto const &u : cols) {
        u64 c = hermitian(F, q0, w, u);
        for (size_t i = 0; i < w.size(); ++i)
          w[i] = F.sub(w[i], F.mul(c, u[i]));
      }
      u64 c = hermitian(F, q0, w, w);
      if (c == 0)
        continue;
      u64 scale = F.inv(norm_root[c]);
      for (auto &x : w)
        x = F.mul(x, scale);
      cols.push_back(std::move(w));
      placed = true;
    }
    if (!placed)
      throw InternalError("random_unitary: no anisotropic completion found");
  }
  Mat M(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      M.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (hermitian(F, q0, cols[static_cast<size_t>(a)],
                    cols[static_cast<size_t>(b)]) != (a == b ? 1u : 0u))
        throw InternalError("random_unitary: columns not orthonormal");
  return M;
}

u64 checked_degree(u64 Q, int n, bool projective, Point cap) {
  u128 d = 0, power = 1;
  for (int i = 0; i < n; ++i) {
    if (projective)
      d += power;
    power *= Q;
    if (!projective)
      d = power - 1;
    if (d > cap)
      throw BoundExceeded("matrix group: permutation degree exceeds cap " +
                          std::to_string(cap));
  }
  return static_cast<u64>(d);
}

Group build_linear(int n, u64 q, Sign eps, Point cap, bool special,
                   bool projective) {
  require_dimension(n);
  require_prime_power(q);
  u64 Q = q;
  if (eps == Sign::minus) {
    if (q > 256)
      throw BoundExceeded("matrix group: unitary field F_{q^2} exceeds the "
                          "table limit");
    Q = q * q;
  }
  u64 degree = checked_degree(Q, n, projective, cap);
  Factored order = projective ? projective_special_linear_order(n, q, eps)
                  : special  ? special_linear_order(n, q, eps)
                             : general_linear_order(n, q, eps);

  FiniteField F(Q);
  std::unique_ptr<ProjectiveSpace> ps;
  if (projective)
    ps = std::make_unique<ProjectiveSpace>(Q, n);
  auto to_perm = [&](Mat const &M) {
    return projective ? perm_on_projective(F, *ps, M) : perm_on_vectors(F, M);
  };

  std::vector<Mat> mats;
  if (eps == Sign::plus) {
    mats = sl_generator_mats(F, n);
    if (!special && q > 2) {
      Mat D = Mat::identity(n);
      D.at(0, 0) = F.generator();
      mats.push_back(D);
    }
    std::vector<Perm> perms;
    perms.reserve(mats.size());
    for (auto const &M : mats)
      perms.push_back(to_perm(M));
    if (perms.empty())
      return Group::trivial(static_cast<Point>(degree));
    BuildOptions opts;
    opts.known_order = order.value();
    return Group(static_cast<Point>(degree), perms, opts);
  }

  // unitary side: random unitary matrices, determinant-corrected into SU, plus
  // one determinant generator for GU; certified against the order formula with
  // enlargement retries
  std::vector<u64> norm_root(F.size(), 0);
  for (u64 i = 0; i + 1 < F.size(); ++i) {
    u64 d = F.pow(F.generator(), i);
    u64 c = F.mul(d, F.pow(d, q));
    if (norm_root[c] == 0)
      norm_root[c] = d;
  }

  Rng rng(0x5ecf1e1d);
  auto random_su = [&]() {
    Mat A = random_unitary(F, n, q, norm_root, rng);
    Mat D = Mat::identity(n);
    D.at(0, 0) = F.inv(mat_det(F, A));
    return mat_mul(F, A, D);
  };

  if (n > 1)
    for (int i = 0; i < 4; ++i)
      mats.push_back(random_su());
  if (!special) {
    Mat D = Mat::identity(n);
    D.at(0, 0) = F.pow(F.generator(), q - 1); // norm-one scalar of order q+1
    mats.push_back(D);
  }

  for (int round = 0; round < 16; ++round) {
    std::vector<Perm> perms;
    perms.reserve(mats.size());
    for (auto const &M : mats)
      perms.push_back(to_perm(M));
    if (perms.empty())
      return Group::trivial(static_cast<Point>(degree));
    BuildOptions opts;
    opts.known_order = order.value();
    try {
      return Group(static_cast<Point>(degree), perms, opts);
    } catch (PreconditionError const &) {
      if (n == 1)
        throw InternalError("unitary torus generator has the wrong order");
      mats.push_back(random_su());
      mats.push_back(random_su());
    }
  }
  throw InternalError("unitary generators failed to certify against the order "
                      "formula");
}

} // namespace

Group general_linear(int n, u64 q, Sign eps, Point degree_cap) {
  return build_linear(n, q, eps, degree_cap, /*special=*/false,
                      /*projective=*/false);
}

Group special_linear(int n, u64 q, Sign eps, Point degree_cap) {
  return build_linear(n, q, eps, degree_cap, /*special=*/true,
                      /*projective=*/false);
}

Group projective_special_linear(int n, u64 q, Sign eps, Point degree_cap) {
  return build_linear(n, q, eps, degree_cap, /*special=*/true,
                      /*projective=*/true);
}

} // namespace cgt
