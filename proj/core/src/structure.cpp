#include "skewbrace/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace skb {

namespace {

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

void cap(const SkewBrace& b, const Limits& limits) {
  if (b.order() > limits.max_structure_order)
    throw Error(Errc::OrderCapExceeded, "brace order above the structure cap", {b.order(), limits.max_structure_order});
}

}  // namespace

Ideal is_ideal(const SkewBrace& b, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int x : elements)
    if (x < 0 || x >= b.order()) throw Error(Errc::PreconditionFails, "element outside the carrier", {x});
  const auto& add = b.add();
  const auto& circ = b.circ();
  Ideal r;
  r.elements = elements;
  r.subgroup = is_subgroup(add, elements);
  r.lambda_invariant = r.normal_add = r.normal_circ = true;
  for (int g = 0; g < b.order(); ++g)
    for (int x : elements) {
      if (r.lambda_invariant && !contains(elements, b.lambda(g, x))) {
        r.lambda_invariant = false;
        r.lambda_witness = {g, x};
      }
      if (r.normal_add && !contains(elements, add.conjugate(g, x))) {
        r.normal_add = false;
        r.add_witness = {g, x};
      }
      if (r.normal_circ && !contains(elements, circ.conjugate(g, x))) {
        r.normal_circ = false;
        r.circ_witness = {g, x};
      }
    }
  if (!r.subgroup) r.normal_add = false;
  return r;
}

Ideal kernel_ideal(const SkewBrace& b) {
  Ideal k = is_ideal(b, b.lambda().kernel);
  ensure(k.ok(), "Ker λ is an ideal");
  std::vector<int> direct;
  for (int a = 0; a < b.order(); ++a) {
    bool all = true;
    for (int x = 0; x < b.order() && all; ++x) all = b.circ().mul(a, x) == b.add().mul(a, x);
    if (all) direct.push_back(a);
  }
  ensure(direct == k.elements, "Ker λ is the set where ∘ and · agree");
  return k;
}

std::vector<int> coset_index(const SkewBrace& b, const std::vector<int>& ideal) {
  std::vector<int> idx(b.order(), -1);
  int next = 0;
  for (int g = 0; g < b.order(); ++g) {
    if (idx[g] != -1) continue;
    for (int x : ideal) idx[b.add().mul(g, x)] = next;
    ++next;
  }
  return idx;
}

SkewBrace quotient_brace(const SkewBrace& b, const std::vector<int>& ideal) {
  Ideal id = is_ideal(b, ideal);
  if (!id.ok()) throw Error(Errc::NotAnIdeal, "subset is not an ideal");
  const auto idx = coset_index(b, id.elements);
  const int m = *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<int> rep(m, -1);
  for (int g = 0; g < b.order(); ++g)
    if (rep[idx[g]] == -1) rep[idx[g]] = g;
  for (int g = 0; g < b.order(); ++g)
    for (int x : id.elements) ensure(idx[b.circ().mul(g, x)] == idx[g], "∘-cosets equal ·-cosets", {g, x});
  std::vector<int> add(static_cast<std::size_t>(m) * m, -1), circ(add.size(), -1);
  for (int x = 0; x < b.order(); ++x)
    for (int y = 0; y < b.order(); ++y) {
      auto cell = static_cast<std::size_t>(idx[x]) * m + idx[y];
      int s = idx[b.add().mul(x, y)], t = idx[b.circ().mul(x, y)];
      ensure(add[cell] == -1 || add[cell] == s, "induced · is well defined", {x, y});
      ensure(circ[cell] == -1 || circ[cell] == t, "induced ∘ is well defined", {x, y});
      add[cell] = s;
      circ[cell] = t;
    }
  std::string suffix = "/" + std::to_string(id.elements.size());
  return SkewBrace(FiniteGroup::from_table(b.add().name() + suffix, m, std::move(add)),
                   FiniteGroup::from_table(b.circ().name() + suffix, m, std::move(circ)));
}

bool quotient_is_trivial(const SkewBrace& b, const std::vector<int>& i, const std::vector<int>& j) {
  for (int x : j)
    for (int y : j)
      if (!contains(i, b.add().mul(b.lambda(x, y), b.add().inv(y)))) return false;
  return true;
}

std::vector<std::vector<int>> all_ideals(const SkewBrace& b, const Limits& limits) {
  cap(b, limits);
  std::vector<std::vector<int>> out;
  for (auto& s : all_subgroups(b.add()))
    if (is_ideal(b, s).ok()) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::optional<TrivialityChain> triviality_step(const SkewBrace& b, const Limits& limits) {
  cap(b, limits);
  const auto ideals = all_ideals(b, limits);
  const int n = static_cast<int>(ideals.size());
  // ideals[0] = {e}, ideals[n-1] = G.
  std::vector<int> parent(n, -2);
  std::deque<int> queue{0};
  parent[0] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == n - 1) break;
    for (int v = 0; v < n; ++v) {
      if (parent[v] != -2 || ideals[v].size() <= ideals[u].size()) continue;
      if (!std::includes(ideals[v].begin(), ideals[v].end(), ideals[u].begin(), ideals[u].end())) continue;
      if (!quotient_is_trivial(b, ideals[u], ideals[v])) continue;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  if (parent[n - 1] == -2) return std::nullopt;
  TrivialityChain c;
  for (int v = n - 1; v != -1; v = parent[v]) c.chain.push_back(ideals[v]);
  std::reverse(c.chain.begin(), c.chain.end());
  c.step = static_cast<int>(c.chain.size()) - 1;
  return c;
}

NaturalityReport naturality_report(const SkewBrace& b) {
  if (!b.lambda().anti_homomorphic_on_add)
    throw Error(Errc::NotAntiHomomorphic, "λ is not an anti-homomorphism of the additive group");
  NaturalityReport r;
  r.is_natural = b.circ().same_table(b.add().opposite());
  SkewBrace q = quotient_brace(b, kernel_ideal(b).elements);
  r.quotient_natural = q.circ().same_table(q.add().opposite());
  ensure(r.is_natural || r.quotient_natural, "the brace or its quotient by Ker λ is natural");
  return r;
}

std::vector<GroupMap> brace_automorphisms(const SkewBrace& b, const Limits& limits) {
  cap(b, limits);
  std::vector<GroupMap> out;
  for (auto& f : automorphism_group(b.add(), limits)) {
    bool ok = true;
    for (int x = 0; x < b.order() && ok; ++x)
      for (int y = 0; y < b.order() && ok; ++y) ok = f.images[b.circ().mul(x, y)] == b.circ().mul(f.images[x], f.images[y]);
    if (ok) out.push_back(std::move(f));
  }
  const auto& lam = b.lambda();
  if (lam.homomorphic_on_add && lam.image_abelian)
    for (const auto& p : lam.image)
      ensure(std::any_of(out.begin(), out.end(), [&](const GroupMap& f) { return f.images == p; }),
             "every λ_a is a brace automorphism");
  return out;
}

}  // namespace skb
