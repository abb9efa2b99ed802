#include "skewbrace/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace skb {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

Perm inverse_perm(const Perm& f) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<int>(x);
  return out;
}

bool is_permutation(std::span<const int> images, int n) {
  if (static_cast<int>(images.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int perm_order(const Perm& f) {
  std::vector<char> seen(f.size(), 0);
  int result = 1;
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(f[x])) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup() : FiniteGroup("1", 1, {0}) {}

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> flat)
    : name_(std::move(name)), order_(order), data_(std::move(flat)) {
  inverse_.assign(static_cast<std::size_t>(order_), 0);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity) {
        inverse_[a] = b;
        break;
      }
}

namespace {

std::optional<AxiomViolation> first_latin_violation(int n, std::span<const int> t) {
  std::vector<int> seen(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int c = 0; c < n; ++c) {
      int v = t[static_cast<std::size_t>(r) * n + c];
      if (seen[v] >= 0)
        return AxiomViolation{Errc::NotLatinSquare, {r, seen[v], c},
                              "row " + std::to_string(r) + " repeats an entry"};
      seen[v] = c;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int r = 0; r < n; ++r) {
      int v = t[static_cast<std::size_t>(r) * n + c];
      if (seen[v] >= 0)
        return AxiomViolation{Errc::NotLatinSquare, {seen[v], r, c},
                              "column " + std::to_string(c) + " repeats an entry"};
      seen[v] = r;
    }
  }
  return std::nullopt;
}

std::optional<int> find_identity(int n, std::span<const int> t) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = t[static_cast<std::size_t>(e) * n + a] == a && t[static_cast<std::size_t>(a) * n + e] == a;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<AxiomViolation> first_associativity_violation(int n, std::span<const int> t) {
  auto m = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = m(a, b);
      for (int c = 0; c < n; ++c)
        if (m(ab, c) != m(a, m(b, c)))
          return AxiomViolation{Errc::NotAssociative, {a, b, c}, "(ab)c != a(bc)"};
    }
  return std::nullopt;
}

std::optional<AxiomViolation> first_inverse_violation(int n, std::span<const int> t, int e) {
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = t[static_cast<std::size_t>(a) * n + b] == e && t[static_cast<std::size_t>(b) * n + a] == e;
    if (!found) return AxiomViolation{Errc::NoInverse, {a}, "element has no two-sided inverse"};
  }
  return std::nullopt;
}

std::vector<long long> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

void check_shape(int order, std::size_t flat_size) {
  if (order < 1 || flat_size != static_cast<std::size_t>(order) * order)
    throw Error(Errc::MalformedTable, "table is not square of the declared order");
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, int order, std::vector<int> flat) {
  check_shape(order, flat.size());
  for (int v : flat)
    if (v < 0 || v >= order) throw Error(Errc::MalformedTable, "entry out of range", {v});
  if (auto v = first_latin_violation(order, flat)) throw Error(v->kind, v->message, widen(v->witness));
  auto e = find_identity(order, flat);
  if (!e) throw Error(Errc::NoIdentity, "no two-sided identity");
  if (*e != identity) throw Error(Errc::NoIdentity, "identity is not element 0", {*e});
  if (auto v = first_associativity_violation(order, flat))
    throw Error(v->kind, v->message, widen(v->witness));
  if (auto v = first_inverse_violation(order, flat, identity))
    throw Error(v->kind, v->message, widen(v->witness));
  return FiniteGroup(std::move(name), order, std::move(flat));
}

FiniteGroup FiniteGroup::from_table(std::string name, const Table& table) {
  std::vector<int> flat;
  for (const auto& row : table) {
    if (row.size() != table.size()) throw Error(Errc::MalformedTable, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_table(std::move(name), static_cast<int>(table.size()), std::move(flat));
}

FiniteGroup FiniteGroup::unchecked(std::string name, int order, std::vector<int> flat) {
  check_shape(order, flat.size());
  return FiniteGroup(std::move(name), order, std::move(flat));
}

int FiniteGroup::power(int a, long long k) const {
  int base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  int result = identity;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Table FiniteGroup::table() const {
  Table t(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a)
    t[a].assign(data_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                data_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

FiniteGroup FiniteGroup::opposite() const {
  std::vector<int> flat(data_.size());
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) flat[static_cast<std::size_t>(a) * order_ + b] = mul(b, a);
  return FiniteGroup(name_ + "^op", order_, std::move(flat));
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------------------
// verify_group

Table relabel_table(const Table& table, const Perm& relabeling) {
  const std::size_t n = table.size();
  Table out(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out[relabeling[a]][relabeling[b]] = relabeling[table[a][b]];
  return out;
}

GroupVerification verify_group(const Table& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(Errc::MalformedTable, "empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw Error(Errc::MalformedTable, "row length differs from row count", {r});
    for (int c = 0; c < n; ++c) {
      int v = table[r][c];
      if (v < 0 || v >= n) throw Error(Errc::MalformedTable, "entry out of range", {r, c, v});
      flat.push_back(v);
    }
  }

  GroupVerification report;
  if (auto v = first_latin_violation(n, flat)) report.violations.push_back(*v);
  auto e = find_identity(n, flat);
  if (!e) report.violations.push_back({Errc::NoIdentity, {}, "no two-sided identity"});
  if (auto v = first_associativity_violation(n, flat)) report.violations.push_back(*v);
  if (e) {
    if (auto v = first_inverse_violation(n, flat, *e)) report.violations.push_back(*v);
  }
  if (!report.violations.empty()) return report;

  report.relabeling = identity_perm(n);
  std::swap(report.relabeling[0], report.relabeling[*e]);
  Table normalized = relabel_table(table, report.relabeling);
  std::vector<int> nflat;
  for (const auto& row : normalized) nflat.insert(nflat.end(), row.begin(), row.end());
  report.group = FiniteGroup::unchecked(std::move(name), n, std::move(nflat));
  return report;
}

// ---------------------------------------------------------------------------
// maps and subgroups

GroupMap analyze_map(const FiniteGroup& g, Perm images) {
  const int n = g.order();
  if (static_cast<int>(images.size()) != n) throw Error(Errc::MalformedTable, "map has wrong length");
  GroupMap m;
  m.is_endomorphism = true;
  m.is_anti_homomorphism = true;
  for (int a = 0; a < n && (m.is_endomorphism || m.is_anti_homomorphism); ++a) {
    if (images[a] < 0 || images[a] >= n) throw Error(Errc::MalformedTable, "image out of range", {a});
    for (int b = 0; b < n; ++b) {
      int ab = images[g.mul(a, b)];
      if (ab != g.mul(images[a], images[b])) m.is_endomorphism = false;
      if (ab != g.mul(images[b], images[a])) m.is_anti_homomorphism = false;
    }
  }
  m.is_automorphism = m.is_endomorphism && is_permutation(images, n);
  m.images = std::move(images);
  return m;
}

std::vector<int> closure(std::span<const int> seeds, int universe,
                         const std::function<int(int, int)>& mul) {
  std::vector<char> in(static_cast<std::size_t>(universe), 0);
  std::vector<int> gens;
  for (int s : seeds)
    if (s != 0 && !in[s]) {
      in[s] = 1;
      gens.push_back(s);
    }
  std::fill(in.begin(), in.end(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    for (int s : gens) {
      int y = mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::span<const int> seeds) {
  return closure(seeds, g.order(), [&g](int a, int b) { return g.mul(a, b); });
}

bool is_subgroup(const FiniteGroup& g, std::span<const int> elements) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : elements) in[x] = 1;
  if (!in[0]) return false;
  for (int a : elements)
    for (int b : elements)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const int> elements) {
  if (!is_subgroup(g, elements)) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : elements) in[x] = 1;
  for (int h : elements)
    for (int x = 0; x < g.order(); ++x)
      if (!in[g.conjugate(x, h)]) return false;
  return true;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int a = 1; a < g.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = subgroup_closure(g, gens);
    if (static_cast<int>(span.size()) == g.order()) break;
  }
  return gens;
}

void for_each_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, bool bijective,
                           const std::function<void(const Perm&)>& visit) {
  if (bijective && src.order() != dst.order()) return;
  const auto gens = greedy_generators(src);
  std::vector<int> gen_orders;
  for (int x : gens) gen_orders.push_back(src.element_order(x));
  std::vector<int> dst_orders(static_cast<std::size_t>(dst.order()));
  for (int y = 0; y < dst.order(); ++y) dst_orders[y] = dst.element_order(y);

  std::vector<int> choice(gens.size(), 0);
  Perm images(static_cast<std::size_t>(src.order()));
  std::vector<int> queue;

  // Extends generator images along the right Cayley graph; fails on any clash.
  auto extend = [&]() -> bool {
    std::fill(images.begin(), images.end(), -1);
    images[0] = 0;
    queue.assign(1, 0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = src.mul(x, gens[k]);
        int fy = dst.mul(images[x], choice[k]);
        if (images[y] < 0) {
          images[y] = fy;
          queue.push_back(y);
        } else if (images[y] != fy) {
          return false;
        }
      }
    }
    return !bijective || is_permutation(images, dst.order());
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      if (extend()) visit(images);
      return;
    }
    for (int y = 0; y < dst.order(); ++y) {
      if (bijective ? dst_orders[y] != gen_orders[k] : gen_orders[k] % dst_orders[y] != 0) continue;
      choice[k] = y;
      rec(k + 1);
    }
  };
  rec(0);
}

std::vector<GroupMap> automorphism_group(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_group_order)
    throw Error(Errc::OrderCapExceeded, "group order exceeds automorphism cap",
                {g.order(), limits.max_group_order});
  std::vector<GroupMap> out;
  for_each_homomorphism(g, g, true, [&](const Perm& p) {
    GroupMap m;
    m.images = p;
    m.is_endomorphism = true;
    m.is_automorphism = true;
    m.is_anti_homomorphism = g.is_abelian();
    out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

namespace {

std::vector<int> commutator_subgroup(const FiniteGroup& g, std::span<const int> h) {
  std::vector<int> seeds;
  for (int a : h)
    for (int b = 0; b < g.order(); ++b) seeds.push_back(g.commutator(a, b));
  return subgroup_closure(g, seeds);
}

}  // namespace

std::vector<int> derived_subgroup(const FiniteGroup& g) {
  auto all = identity_perm(g.order());
  return commutator_subgroup(g, all);
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  std::vector<int> term = identity_perm(g.order());
  int c = 0;
  while (term.size() > 1) {
    auto next = commutator_subgroup(g, term);
    if (next == term) return std::nullopt;
    term = std::move(next);
    ++c;
  }
  return c;
}

GroupStructure structure_subgroups(const FiniteGroup& g) {
  GroupStructure s;
  s.center = center(g);
  s.derived_subgroup = derived_subgroup(g);
  std::set<Perm> seen;
  for (int x = 0; x < g.order(); ++x) {
    Perm p(static_cast<std::size_t>(g.order()));
    for (int y = 0; y < g.order(); ++y) p[y] = g.conjugate(x, y);
    if (!seen.insert(p).second) continue;
    GroupMap m;
    m.images = std::move(p);
    m.is_endomorphism = m.is_automorphism = true;
    m.is_anti_homomorphism = g.is_abelian();
    s.inner_automorphisms.push_back(std::move(m));
    s.inner_representatives.push_back(x);
  }
  return s;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found{{0}};
  std::vector<std::vector<int>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int x = 1; x < g.order(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<int> seeds = h;
        seeds.push_back(x);
        auto k = subgroup_closure(g, seeds);
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Holomorph

Holomorph Holomorph::build(const FiniteGroup& base, const Limits& limits) {
  Holomorph h;
  h.base_ = base;
  h.autos_ = automorphism_group(base, limits);
  const long long hol_order = static_cast<long long>(h.autos_.size()) * base.order();
  if (hol_order > limits.max_holomorph_order)
    throw Error(Errc::OrderCapExceeded, "holomorph order exceeds cap",
                {hol_order, limits.max_holomorph_order});
  const std::size_t m = h.autos_.size();
  h.aut_mul_.resize(m * m);
  h.aut_inv_.resize(m);
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g)
      h.aut_mul_[f * m + g] = h.aut_index(compose(h.autos_[f].images, h.autos_[g].images));
    h.aut_inv_[f] = h.aut_index(inverse_perm(h.autos_[f].images));
  }
  return h;
}

int Holomorph::aut_index(const Perm& images) const {
  GroupMap key;
  key.images = images;
  auto it = std::lower_bound(autos_.begin(), autos_.end(), key);
  if (it == autos_.end() || it->images != images)
    throw Error(Errc::NotAutomorphism, "map is not an automorphism of the base group");
  return static_cast<int>(it - autos_.begin());
}

int Holomorph::mul(int p, int q) const noexcept {
  auto [f, a] = pair_of(p);
  auto [g, b] = pair_of(q);
  return index_of(compose_auts(f, g), base_.mul(a, autos_[f].images[b]));
}

int Holomorph::inv(int p) const noexcept {
  auto [f, a] = pair_of(p);
  int fi = aut_inv_[f];
  return index_of(fi, autos_[fi].images[base_.inv(a)]);
}

FiniteGroup Holomorph::to_group() const {
  const int n = order();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) flat[static_cast<std::size_t>(p) * n + q] = mul(p, q);
  return FiniteGroup::unchecked("Hol(" + base_.name() + ")", n, std::move(flat));
}

std::vector<int> subgroup_closure(const Holomorph& h, std::span<const int> seeds) {
  return closure(seeds, h.order(), [&h](int a, int b) { return h.mul(a, b); });
}

bool is_regular_subgroup(const Holomorph& h, std::span<const int> elements) {
  std::vector<char> in(static_cast<std::size_t>(h.order()), 0);
  for (int x : elements) {
    if (x < 0 || x >= h.order()) throw Error(Errc::NotASubgroup, "index out of range", {x});
    in[x] = 1;
  }
  if (!in[0]) throw Error(Errc::NotASubgroup, "identity missing");
  for (int a : elements)
    for (int b : elements)
      if (!in[h.mul(a, b)]) throw Error(Errc::NotASubgroup, "not closed", {a, b});
  const int n = h.base().order();
  std::vector<int> unique(elements.begin(), elements.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (static_cast<int>(unique.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x : unique) {
    int second = h.pair_of(x).second;
    if (hit[second]) return false;
    hit[second] = 1;
  }
  return true;
}

}  // namespace skb
