#include "skewbrace/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace skb {

namespace {

FiniteGroup from_rule(std::string name, int n, auto&& rule) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = rule(a, b);
  return FiniteGroup::unchecked(std::move(name), n, std::move(flat));
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error(Errc::PreconditionFails, "cyclic order must be positive", {n});
  return from_rule("Z" + std::to_string(n), n, [n](int a, int b) { return (a + b) % n; });
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw Error(Errc::PreconditionFails, "dihedral degree must be positive", {n});
  return from_rule("D" + std::to_string(n), 2 * n, [n](int x, int y) {
    int i = x % n, j = x / n, k = y % n, l = y / n;
    int r = mod(i + (j ? -k : k), n);
    return r + n * ((j + l) % 2);
  });
}

FiniteGroup dicyclic(int n) {
  if (n < 1) throw Error(Errc::PreconditionFails, "dicyclic parameter must be positive", {n});
  const int m = 2 * n;
  return from_rule("Dic" + std::to_string(n), 2 * m, [n, m](int x, int y) {
    int i = x % m, j = x / m, k = y % m, l = y / m;
    if (j == 0) return mod(i + k, m) + m * l;
    if (l == 0) return mod(i - k, m) + m;
    return mod(i - k + n, m);
  });
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int hn = h.order();
  return from_rule(g.name() + "x" + h.name(), g.order() * hn, [&](int x, int y) {
    return g.mul(x / hn, y / hn) * hn + h.mul(x % hn, y % hn);
  });
}

Perm parse_cycles(std::string_view text, int degree) {
  Perm p = identity_perm(degree);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, why + " at position " + std::to_string(i),
                {static_cast<long long>(i)});
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) fail("expected a point");
      i = static_cast<std::size_t>(ptr - text.data());
      if (v < 1 || v > degree) fail("point out of range");
      if (used[v - 1]) fail("point repeated");
      used[v - 1] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) p[cycle[c]] = cycle[(c + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    os << '(';
    bool first = true;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
    }
    os << ')';
  }
  std::string out = os.str();
  return out.empty() ? "()" : out;
}

FiniteGroup permutation_group(std::string name, int degree, const std::vector<Perm>& generators,
                              const Limits& limits) {
  for (const auto& g : generators)
    if (!is_permutation(g, degree)) throw Error(Errc::ParseError, "generator is not a permutation");
  std::set<Perm> elems{identity_perm(degree)};
  std::vector<Perm> queue{identity_perm(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      Perm y = compose(queue[i], g);
      if (elems.insert(y).second) {
        if (static_cast<int>(elems.size()) > limits.max_group_order)
          throw Error(Errc::OrderCapExceeded, "permutation group exceeds order cap",
                      {limits.max_group_order});
        queue.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> sorted(elems.begin(), elems.end());
  std::map<Perm, int> index;
  for (std::size_t k = 0; k < sorted.size(); ++k) index.emplace(sorted[k], static_cast<int>(k));
  const int n = static_cast<int>(sorted.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] = index.at(compose(sorted[a], sorted[b]));
  return FiniteGroup::unchecked(std::move(name), n, std::move(flat));
}

FiniteGroup symmetric3() { return dihedral(3).renamed("S3"); }

FiniteGroup alternating4() {
  return permutation_group("A4", 4, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)});
}

namespace {

FiniteGroup single_factor(std::string_view name) {
  auto number = [&](std::size_t prefix) {
    int v = 0;
    auto tail = name.substr(prefix);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
    if (ec != std::errc() || ptr != tail.data() + tail.size() || v < 1)
      throw Error(Errc::ParseError, "unknown group name '" + std::string(name) + "'");
    return v;
  };
  if (name == "S3") return symmetric3();
  if (name == "A4") return alternating4();
  if (name == "Q8") return quaternion8();
  if (name == "1") return cyclic(1);
  if (name.starts_with("Dic")) return dicyclic(number(3));
  if (name.starts_with("Z")) return cyclic(number(1));
  if (name.starts_with("D")) return dihedral(number(1));
  throw Error(Errc::ParseError, "unknown group name '" + std::string(name) + "'");
}

}  // namespace

FiniteGroup group_by_name(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i)
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  FiniteGroup g = single_factor(parts.front());
  for (std::size_t k = 1; k < parts.size(); ++k) g = direct_product(g, single_factor(parts[k]));
  return g.renamed(std::string(name));
}

std::vector<FiniteGroup> small_groups(int max_order) {
  static const char* const kNames[] = {
      "1",    "Z2",    "Z3",       "Z4",    "Z2xZ2", "Z5",  "Z6",     "S3",
      "Z7",   "Z8",    "Z2xZ4",    "Z2xZ2xZ2",       "D4",  "Q8",     "Z9",
      "Z3xZ3", "Z10",  "D5",       "Z11",   "Z12",   "Z2xZ6", "D6", "Dic3", "A4"};
  std::vector<FiniteGroup> out;
  for (const char* n : kNames) {
    FiniteGroup g = group_by_name(n);
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace skb
