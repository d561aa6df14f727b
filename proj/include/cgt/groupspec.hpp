#pragma once

#include "cgt/group.hpp"

#include <string>
#include <vector>

namespace cgt {

// one catalog entry: a named group given inline by generators, by a
// constructor call, or by a file reference; serialized as JSON lines
struct GroupSpec {
  std::string name;
  std::string source; // "inline-generators" | "constructor-call" | "file"
  u64 order = 0;      // stored so scans can filter without realization
  Point degree = 0;                    // inline-generators only
  std::vector<std::string> generators; // cycle or image-list notation
  std::string call;                    // constructor-call only
  std::string path;                    // file only

  static GroupSpec inline_of(std::string name, Group const &g);
  static GroupSpec call_of(std::string name, std::string call, u64 order);

  static GroupSpec from_json(std::string const &line); // throws ParseError
  std::string to_json() const;                         // one line, no newline

  Group realize() const; // builds the group and certifies the stored order
};

// constructor-call strings: C(n), S(n), A(n), D(n) of order 2n, E(p,k),
// Ab(d1,...,dk), Q8, SD16, F21, ES27, CE54, GL/SL/PSL(n,q), GU/SU/PSU(n,q);
// direct products join terms with 'x', e.g. "PSL(2,11)xC(2)"
Group realize_call(std::string const &call);

// cycle notation "(0 1 2)(3 4)" or image-list notation "[1,2,0,4,3]"
Perm parse_generator(std::string const &s, Point degree);

std::vector<GroupSpec> read_catalog(std::string const &path);
void write_catalog(std::string const &path,
                   std::vector<GroupSpec> const &specs);

// the artifact's standard catalog: the complete enumeration for every
// supported order, all abelian groups through order 200, the named families,
// and the classical-group grid (n <= 4, q <= 5) up to permutation degree 5000
std::vector<GroupSpec> standard_catalog();

} // namespace cgt
