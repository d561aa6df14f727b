#include "cgt/perm.hpp"

#include "cgt/error.hpp"
#include "cgt/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cgt {

Perm::Perm(Point degree) : img_(degree) {
  for (Point i = 0; i < degree; ++i) img_[i] = i;
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw ParseError("Perm: image list is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (Point i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm compose(Perm const &a, Perm const &b) {
  Perm r;
  compose_into(a, b, r);
  return r;
}

void compose_into(Perm const &a, Perm const &b, Perm &out) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degree mismatch");
  out.img_.resize(a.degree());
  for (Point i = 0; i < a.degree(); ++i) out.img_[i] = a.img_[b.img_[i]];
}

bool operator==(Perm const &a, Perm const &b) { return a.images() == b.images(); }

bool operator<(Perm const &a, Perm const &b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.images() < b.images();
}

Perm conjugate(Perm const &x, Perm const &g) {
  return compose(compose(g.inverse(), x), g);
}

std::uint64_t perm_order(Perm const &p) {
  std::uint64_t ord = 1;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = p[j]) { seen[j] = true; ++len; }
    ord = lcm_u64(ord, len);
  }
  return ord;
}

bool is_even(Perm const &p) {
  int transpositions = 0;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (Point j = i; !seen[j]; j = p[j]) { seen[j] = true; ++len; }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::vector<std::vector<Point>> cycle_decomposition(Perm const &p) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) { seen[i] = true; continue; }
    std::vector<Point> c;
    for (Point j = i; !seen[j]; j = p[j]) { seen[j] = true; c.push_back(j); }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::string to_cycle_string(Perm const &p, bool one_indexed) {
  auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (auto const &c : cycles) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i] + (one_indexed ? 1 : 0);
    }
    os << ')';
  }
  return os.str();
}

Perm parse_cycles(std::string const &s, Point degree, bool one_indexed) {
  std::vector<Point> img(degree);
  std::vector<bool> used(degree, false);
  for (Point i = 0; i < degree; ++i) img[i] = i;

  size_t pos = 0;
  auto fail = [&](std::string const &msg) {
    throw ParseError("parse_cycles: " + msg + " at offset " + std::to_string(pos) +
                     " in \"" + s + "\"");
  };
  auto skip_ws = [&] { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; };

  skip_ws();
  while (pos < s.size()) {
    if (s[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
      if (!std::isdigit((unsigned char)s[pos])) fail("expected point");
      unsigned long v = 0;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
        v = v * 10 + (s[pos] - '0');
        if (v > degree + 1ul) fail("point out of range");
        ++pos;
      }
      if (one_indexed) {
        if (v == 0) fail("expected 1-indexed point");
        v -= 1;
      }
      if (v >= degree) fail("point out of range");
      cycle.push_back(static_cast<Point>(v));
      skip_ws();
      if (pos < s.size() && s[pos] == ',') { ++pos; skip_ws(); }
    }
    if (pos >= s.size()) fail("unterminated cycle");
    ++pos; // ')'
    skip_ws();
    if (pos < s.size() && s[pos] == ',') { ++pos; skip_ws(); }

    for (size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (used[from]) fail("point repeated");
      used[from] = true;
      img[from] = to;
    }
  }
  return Perm(std::move(img)); // ctor re-validates bijectivity
}

} // namespace cgt
