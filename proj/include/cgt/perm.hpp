#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

using Point = std::uint32_t;

// Permutation of {0, ..., n-1}, stored as its image vector.
//
// Composition convention, used everywhere in this library:
//   (a * b)(x) = a(b(x))      -- b acts first
// so conjugation is x^g = g^-1 * x * g and matrix-to-permutation maps
// A |-> (v |-> A.v) are homomorphisms.
class Perm {
public:
  Perm() = default; // degree 0
  explicit Perm(Point degree); // identity
  explicit Perm(std::vector<Point> images); // validates bijectivity

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point x) const { return img_[x]; }
  std::vector<Point> const &images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

private:
  std::vector<Point> img_;

  friend Perm compose(Perm const &a, Perm const &b);
  friend void compose_into(Perm const &a, Perm const &b, Perm &out);
};

Perm compose(Perm const &a, Perm const &b); // apply b, then a
void compose_into(Perm const &a, Perm const &b, Perm &out);
inline Perm operator*(Perm const &a, Perm const &b) { return compose(a, b); }
bool operator==(Perm const &a, Perm const &b);
inline bool operator!=(Perm const &a, Perm const &b) { return !(a == b); }
bool operator<(Perm const &a, Perm const &b); // lex on image vectors

Perm conjugate(Perm const &x, Perm const &g); // g^-1 * x * g
std::uint64_t perm_order(Perm const &p);      // lcm of cycle lengths
bool is_even(Perm const &p);

// cycle notation; 0-indexed by default, e.g. "(0 1 2)(3 4)", identity "()"
std::string to_cycle_string(Perm const &p, bool one_indexed = false);
Perm parse_cycles(std::string const &s, Point degree, bool one_indexed = false);

std::vector<std::vector<Point>> cycle_decomposition(Perm const &p); // nontrivial cycles, min-point first

} // namespace cgt
