#pragma once

#include "cgt/cyclotomic.hpp"
#include "cgt/group.hpp"
#include "cgt/structure.hpp"

#include <string>
#include <vector>

namespace cgt {

struct TableOptions {
  u64 max_order = 10000;
  size_t max_classes = 200;
};

// one irreducible complex character; values follow the table's class order
struct Character {
  u64 degree = 1;
  std::vector<CyclotomicValue> values;
};

// Exact complex character table computed by the class-matrix eigenvector
// method over a finite prime field, with values lifted to cyclotomic
// integers by root-of-unity multiplicity recovery. Every table is
// self-checked before it is returned: degree sum, identity column, modular
// row/column orthogonality under the construction prime AND an independent
// second prime, and exact cyclotomic row orthogonality on small tables;
// any failure throws InternalError.
class CharacterTable {
public:
  static CharacterTable compute(Group const &G, TableOptions const &opt = {});

  Group const &group() const { return g_; }
  ClassTable const &classes() const { return ct_; }
  std::vector<Character> const &irreducibles() const { return irr_; }
  u64 exponent() const { return exponent_; }
  u64 dixon_prime() const { return ell_; }
  u64 check_prime() const { return ell2_; }

  std::vector<std::string> class_labels() const; // "1a", "2a", "2b", ...
  std::string text_grid() const;
  std::string to_json() const;

private:
  CharacterTable(Group g, ClassTable ct) : g_(std::move(g)), ct_(std::move(ct)) {}

  Group g_;
  ClassTable ct_;
  std::vector<Character> irr_;
  u64 exponent_ = 1, ell_ = 0, ell2_ = 0;
};

// the irreducibles of degree not divisible by p
std::vector<Character> irr_p_prime(CharacterTable const &t, u64 p);

bool is_real_character(Character const &c);
bool is_rational_character(Character const &c);

// the normal subgroup on which the character attains its degree
Group character_kernel(Character const &c, CharacterTable const &t);

// report on the Galois automorphism that inverts p-power-order roots of
// unity and fixes p'-order roots: which p'-degree irreducibles it fixes,
// and which of those fail to be p-rational (values needing a conductor
// divisible by p). The check only reports; it asserts nothing.
struct PRationalityReport {
  u64 p = 0;
  u64 sigma = 1; // exponent k of the Galois map used, modulo the exponent
  std::vector<size_t> sigma_fixed; // indices into irreducibles()
  std::vector<size_t> violations;  // subset of sigma_fixed
};
PRationalityReport sigma_fixed_p_rational_check(CharacterTable const &t, u64 p);

} // namespace cgt
