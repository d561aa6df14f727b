#include "cgt/groupspec.hpp"

#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/matgroup.hpp"
#include "cgt/numeric.hpp"
#include "cgt/smallgroups.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace cgt {

namespace {

std::string strip_spaces(std::string const &s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += c;
  return out;
}

u64 parse_u64(std::string const &s, std::string const &what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a nonnegative integer for " + what + ", got '" +
                     s + "'");
  try {
    return std::stoull(s);
  } catch (std::out_of_range const &) {
    throw ParseError("integer out of range for " + what + ": '" + s + "'");
  }
}

std::vector<std::string> split_on(std::string const &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Group realize_term(std::string const &term) {
  std::string const t = term;
  if (t.empty())
    throw ParseError("empty term in constructor call");
  size_t const open = t.find('(');
  std::string const ident = t.substr(0, open);
  std::vector<u64> args;
  if (open != std::string::npos) {
    if (t.back() != ')')
      throw ParseError("unbalanced parentheses in term '" + t + "'");
    std::string const inner = t.substr(open + 1, t.size() - open - 2);
    if (inner.empty())
      throw ParseError("empty argument list in term '" + t + "'");
    for (auto const &a : split_on(inner, ','))
      args.push_back(parse_u64(a, "argument of " + ident));
  }

  auto arity = [&](size_t k) {
    if (args.size() != k)
      throw ParseError(ident + " takes " + std::to_string(k) +
                       " argument(s), got " + std::to_string(args.size()));
  };
  auto int_arg = [&](size_t i) {
    if (args[i] > 64)
      throw ParseError("argument " + std::to_string(args[i]) + " of " + ident +
                       " is out of range");
    return static_cast<int>(args[i]);
  };

  if (ident == "C") {
    arity(1);
    return cyclic(args[0]);
  }
  if (ident == "S") {
    arity(1);
    return symmetric(args[0]);
  }
  if (ident == "A") {
    arity(1);
    return alternating(args[0]);
  }
  if (ident == "D") {
    arity(1);
    return dihedral(args[0]);
  }
  if (ident == "E") {
    arity(2);
    return elementary_abelian(args[0], int_arg(1));
  }
  if (ident == "Ab") {
    if (args.empty())
      throw ParseError("Ab needs at least one cyclic factor");
    Group g = cyclic(args[0]);
    for (size_t i = 1; i < args.size(); ++i)
      g = direct_product(g, cyclic(args[i]));
    return g;
  }
  if (ident == "Q8") {
    arity(0);
    return quaternion8();
  }
  if (ident == "SD16") {
    arity(0);
    return semidihedral16();
  }
  if (ident == "F21") {
    arity(0);
    return frobenius21();
  }
  if (ident == "ES27") {
    arity(0);
    return extraspecial_3_exponent3();
  }
  if (ident == "CE54") {
    arity(0);
    return counterexample_54();
  }
  if (ident == "GL" || ident == "GU") {
    arity(2);
    return general_linear(int_arg(0), args[1],
                          ident == "GL" ? Sign::plus : Sign::minus);
  }
  if (ident == "SL" || ident == "SU") {
    arity(2);
    return special_linear(int_arg(0), args[1],
                          ident == "SL" ? Sign::plus : Sign::minus);
  }
  if (ident == "PSL" || ident == "PSU") {
    arity(2);
    return projective_special_linear(int_arg(0), args[1],
                                     ident == "PSL" ? Sign::plus
                                                    : Sign::minus);
  }
  throw ParseError("unknown constructor '" + ident + "'");
}

GroupSpec spec_from_parsed(nlohmann::json const &j) {
  if (!j.is_object())
    throw ParseError("group spec must be a JSON object");
  GroupSpec s;
  try {
    s.name = j.at("name").get<std::string>();
    s.source = j.at("source").get<std::string>();
    s.order = j.at("order").get<u64>();
    if (s.source == "inline-generators") {
      s.degree = j.at("degree").get<Point>();
      for (auto const &g : j.at("generators"))
        s.generators.push_back(g.get<std::string>());
    } else if (s.source == "constructor-call") {
      s.call = j.at("call").get<std::string>();
    } else if (s.source == "file") {
      s.path = j.at("path").get<std::string>();
    } else {
      throw ParseError("unknown group spec source '" + s.source + "'");
    }
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("malformed group spec: ") + e.what());
  }
  if (s.name.empty())
    throw ParseError("group spec has an empty name");
  return s;
}

} // namespace

GroupSpec GroupSpec::inline_of(std::string name, Group const &g) {
  GroupSpec s;
  s.name = std::move(name);
  s.source = "inline-generators";
  s.order = g.order();
  s.degree = g.degree();
  for (auto const &p : g.generators())
    s.generators.push_back(to_cycle_string(p));
  return s;
}

GroupSpec GroupSpec::call_of(std::string name, std::string call, u64 order) {
  GroupSpec s;
  s.name = std::move(name);
  s.source = "constructor-call";
  s.order = order;
  s.call = std::move(call);
  return s;
}

GroupSpec GroupSpec::from_json(std::string const &line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (nlohmann::json::exception const &e) {
    throw ParseError(std::string("invalid JSON group spec: ") + e.what());
  }
  return spec_from_parsed(j);
}

std::string GroupSpec::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["source"] = source;
  j["order"] = order;
  if (source == "inline-generators") {
    j["degree"] = degree;
    j["generators"] = generators;
  } else if (source == "constructor-call") {
    j["call"] = call;
  } else if (source == "file") {
    j["path"] = path;
  }
  return j.dump();
}

Group GroupSpec::realize() const {
  Group g;
  if (source == "inline-generators") {
    std::vector<Perm> gens;
    gens.reserve(generators.size());
    for (auto const &s : generators)
      gens.push_back(parse_generator(s, degree));
    g = Group(degree, gens);
  } else if (source == "constructor-call") {
    g = realize_call(call);
  } else if (source == "file") {
    std::ifstream in(path);
    if (!in)
      throw ParseError("cannot open group spec file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
    } catch (nlohmann::json::exception const &e) {
      throw ParseError("invalid JSON in group spec file '" + path +
                       "': " + e.what());
    }
    GroupSpec const inner = spec_from_parsed(j);
    if (inner.source == "file")
      throw ParseError("group spec file '" + path +
                       "' refers to another file; nesting is not allowed");
    g = inner.realize();
  } else {
    throw ParseError("unknown group spec source '" + source + "'");
  }
  if (order != 0 && g.order() != order)
    throw ParseError("group spec '" + name + "' declares order " +
                     std::to_string(order) + " but realizes order " +
                     std::to_string(g.order()));
  return g;
}

Group realize_call(std::string const &call) {
  std::string const c = strip_spaces(call);
  if (c.empty())
    throw ParseError("empty constructor call");
  auto const terms = split_on(c, 'x');
  Group g = realize_term(terms[0]);
  for (size_t i = 1; i < terms.size(); ++i)
    g = direct_product(g, realize_term(terms[i]));
  return g;
}

Perm parse_generator(std::string const &s, Point degree) {
  size_t const first = s.find_first_not_of(" \t");
  if (first == std::string::npos)
    throw ParseError("empty generator string");
  if (s[first] != '[')
    return parse_cycles(s, degree);
  size_t const last = s.rfind(']');
  if (last == std::string::npos || last < first)
    throw ParseError("unterminated image list '" + s + "'");
  std::string const inner = s.substr(first + 1, last - first - 1);
  std::vector<Point> img;
  if (!strip_spaces(inner).empty())
    for (auto const &part : split_on(strip_spaces(inner), ','))
      img.push_back(static_cast<Point>(parse_u64(part, "image-list entry")));
  if (img.size() != degree)
    throw ParseError("image list of length " + std::to_string(img.size()) +
                     " does not match degree " + std::to_string(degree));
  return Perm(std::move(img));
}

std::vector<GroupSpec> read_catalog(std::string const &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open catalog '" + path + "'");
  std::vector<GroupSpec> specs;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip_spaces(line).empty())
      continue;
    try {
      specs.push_back(GroupSpec::from_json(line));
    } catch (ParseError const &e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return specs;
}

void write_catalog(std::string const &path,
                   std::vector<GroupSpec> const &specs) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot write catalog '" + path + "'");
  for (auto const &s : specs)
    out << s.to_json() << '\n';
}

namespace {

u64 upow(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

// degree of the permutation realization each classical family uses
u64 classical_degree(std::string const &fam, int n, u64 q) {
  u64 const qn = upow(q, n);
  u64 const q2n = upow(q, 2 * n);
  if (fam == "GL" || fam == "SL")
    return qn - 1;
  if (fam == "PSL")
    return (qn - 1) / (q - 1);
  if (fam == "GU" || fam == "SU")
    return q2n - 1;
  return (q2n - 1) / (q * q - 1); // PSU
}

u64 classical_order(std::string const &fam, int n, u64 q) {
  Sign const eps =
      (fam == "GL" || fam == "SL" || fam == "PSL") ? Sign::plus : Sign::minus;
  if (fam == "GL" || fam == "GU")
    return general_linear_order(n, q, eps).value();
  if (fam == "SL" || fam == "SU")
    return special_linear_order(n, q, eps).value();
  return projective_special_linear_order(n, q, eps).value();
}

u64 factorial(u64 n) {
  u64 f = 1;
  for (u64 i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace

std::vector<GroupSpec> standard_catalog() {
  std::vector<GroupSpec> specs;
  std::set<std::string> seen;
  auto add = [&](GroupSpec s) {
    if (seen.insert(s.name).second)
      specs.push_back(std::move(s));
  };

  // the complete enumeration for every supported order
  for (u64 n = 1; n <= kSmallGroupOrderMax; ++n) {
    if (!small_groups_order_supported(n))
      continue;
    auto const &list = groups_of_order(n);
    for (size_t i = 0; i < list.size(); ++i)
      add(GroupSpec::inline_of(
          "o" + std::to_string(n) + "n" + std::to_string(i + 1), list[i]));
  }

  // abelian groups fill the orders the enumeration does not reach
  for (u64 n = 1; n <= 200; ++n) {
    if (small_groups_order_supported(n))
      continue;
    for (auto const &[invariants, g] : abelian_groups_of_order(n)) {
      (void)g;
      std::string call = "Ab(";
      for (size_t i = 0; i < invariants.size(); ++i) {
        if (i)
          call += ',';
        call += std::to_string(invariants[i]);
      }
      call += ')';
      add(GroupSpec::call_of(call, call, n));
    }
  }

  // named families
  for (u64 q : {5, 7, 9, 11, 13, 27}) {
    std::string const call = "PSL(2," + std::to_string(q) + ")";
    add(GroupSpec::call_of(call, call,
                           projective_special_linear_order(2, q, Sign::plus)
                               .value()));
  }
  for (u64 n = 5; n <= 8; ++n)
    add(GroupSpec::call_of("A(" + std::to_string(n) + ")",
                           "A(" + std::to_string(n) + ")", factorial(n) / 2));
  for (u64 n : {5, 6})
    add(GroupSpec::call_of("S(" + std::to_string(n) + ")",
                           "S(" + std::to_string(n) + ")", factorial(n)));
  add(GroupSpec::call_of("Q8", "Q8", 8));
  add(GroupSpec::call_of("SD16", "SD16", 16));
  add(GroupSpec::call_of("F21", "F21", 21));
  add(GroupSpec::call_of("ES27", "ES27", 27));
  add(GroupSpec::call_of("CE54", "CE54", 54));

  // classical grid, capped by realization degree
  for (std::string const fam : {"GL", "SL", "PSL", "GU", "SU", "PSU"})
    for (int n = 2; n <= 4; ++n)
      for (u64 q : {2, 3, 4, 5}) {
        if (classical_degree(fam, n, q) > kMatrixDegreeCap)
          continue;
        std::string const call =
            fam + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
        add(GroupSpec::call_of(call, call, classical_order(fam, n, q)));
      }

  return specs;
}

} // namespace cgt
