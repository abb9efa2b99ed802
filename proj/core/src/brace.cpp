#include "skewbrace/brace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skb {

namespace {

bool perms_commute(const Perm& f, const Perm& g) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[g[x]] != g[f[x]]) return false;
  return true;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return false;
  return true;
}

std::vector<char> membership(int n, const std::vector<int>& elems) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int x : elems) in[x] = 1;
  return in;
}

FiniteGroup table_group(const std::string& name, int n, const std::function<int(int, int)>& op) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = op(a, b);
  return FiniteGroup::from_table(name, n, std::move(flat));
}

}  // namespace

LambdaMap lambda_of(const FiniteGroup& add, const FiniteGroup& circ) {
  const int n = add.order();
  if (circ.order() != n) throw Error(Errc::MalformedTable, "tables have different orders");
  LambdaMap lm;
  lm.maps.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    Perm p(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) p[b] = add.mul(add.inv(a), circ.mul(a, b));
    GroupMap m = analyze_map(add, std::move(p));
    if (!m.is_automorphism) throw Error(Errc::LambdaNotAutomorphism, "λ_a is not an automorphism", {a});
    lm.maps[a] = std::move(m);
  }
  for (int a = 0; a < n; ++a) {
    if (is_identity(lm.maps[a].images)) lm.kernel.push_back(a);
    for (int b = 0; b < n && (lm.homomorphic_on_add || lm.anti_homomorphic_on_add); ++b) {
      const Perm& ab = lm.maps[add.mul(a, b)].images;
      if (lm.homomorphic_on_add && ab != compose(lm.maps[a].images, lm.maps[b].images))
        lm.homomorphic_on_add = false;
      if (lm.anti_homomorphic_on_add && ab != compose(lm.maps[b].images, lm.maps[a].images))
        lm.anti_homomorphic_on_add = false;
    }
  }
  std::set<Perm> img;
  for (const auto& m : lm.maps) img.insert(m.images);
  lm.image.assign(img.begin(), img.end());
  lm.image_order = static_cast<int>(lm.image.size());
  lm.image_exponent = 1;
  lm.image_cyclic = false;
  for (const auto& p : lm.image) {
    int o = perm_order(p);
    lm.image_exponent = std::lcm(lm.image_exponent, o);
    if (o == lm.image_order) lm.image_cyclic = true;
  }
  for (std::size_t i = 0; i < lm.image.size() && lm.image_abelian; ++i)
    for (std::size_t j = i + 1; j < lm.image.size() && lm.image_abelian; ++j)
      lm.image_abelian = perms_commute(lm.image[i], lm.image[j]);
  return lm;
}

bool is_left_brace(const FiniteGroup& add, const FiniteGroup& circ) {
  const int n = add.order();
  if (circ.order() != n) return false;
  for (int a = 0; a < n; ++a) {
    const int ai = add.inv(a);
    for (int b = 0; b < n; ++b) {
      const int ab = circ.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (circ.mul(a, add.mul(b, c)) != add.mul(add.mul(ab, ai), circ.mul(a, c))) return false;
    }
  }
  return true;
}

BraceReport verify_brace(const FiniteGroup& add, const FiniteGroup& circ) {
  const int n = add.order();
  if (circ.order() != n) throw Error(Errc::MalformedTable, "tables have different orders");
  BraceReport r;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!r.left_witness &&
            circ.mul(a, add.mul(b, c)) != add.mul(add.mul(circ.mul(a, b), add.inv(a)), circ.mul(a, c)))
          r.left_witness = std::array<int, 3>{a, b, c};
        if (!r.right_witness &&
            circ.mul(add.mul(a, b), c) != add.mul(add.mul(circ.mul(a, c), add.inv(c)), circ.mul(b, c)))
          r.right_witness = std::array<int, 3>{a, b, c};
      }
  r.left_ok = !r.left_witness;
  r.right_ok = !r.right_witness;
  r.two_sided = r.left_ok && r.right_ok;
  return r;
}

SkewBrace::SkewBrace(FiniteGroup add, FiniteGroup circ) : add_(std::move(add)), circ_(std::move(circ)) {
  if (add_.order() != circ_.order()) throw Error(Errc::MalformedTable, "tables have different orders");
  const int n = add_.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (circ_.mul(a, add_.mul(b, c)) !=
            add_.mul(add_.mul(circ_.mul(a, b), add_.inv(a)), circ_.mul(a, c)))
          throw Error(Errc::NotABrace, "left brace law fails", {a, b, c});
  lambda_ = lambda_of(add_, circ_);
}

SkewBrace SkewBrace::trivial(const FiniteGroup& g) { return SkewBrace(g, g); }

Classification classify(const SkewBrace& b) {
  const auto& add = b.add();
  const auto& circ = b.circ();
  const auto& lm = b.lambda();
  const int n = b.order();
  Classification c;
  c.lambda_homomorphic = lm.homomorphic_on_add;
  c.lambda_anti_homomorphic = lm.anti_homomorphic_on_add;
  c.lambda_cyclic = lm.image_cyclic;
  c.trivial = b.is_trivial();
  c.natural = circ == add.opposite();
  c.two_sided = verify_brace(add, circ).two_sided;

  bool criterion = true;
  for (int x = 0; x < n && criterion; ++x)
    for (int y = 0; y < n && criterion; ++y)
      criterion = lm.maps[circ.mul(x, y)].images == lm.maps[add.mul(y, x)].images;
  const bool direct = is_left_brace(circ, add);
  if (criterion != direct)
    throw Error(Errc::CriterionMismatch, "symmetry criterion disagrees with direct check");
  c.symmetric = direct;
  return c;
}

SkewBrace construct_from_lambda(const FiniteGroup& g, const std::vector<Perm>& lam, LambdaMode mode) {
  const int n = g.order();
  if (static_cast<int>(lam.size()) != n) throw Error(Errc::MalformedTable, "λ must list one map per element");
  for (int a = 0; a < n; ++a)
    if (static_cast<int>(lam[a].size()) != n || !analyze_map(g, lam[a]).is_automorphism)
      throw Error(Errc::NotAutomorphism, "λ_a is not an automorphism", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Perm expect = mode == LambdaMode::Homomorphic ? compose(lam[a], lam[b]) : compose(lam[b], lam[a]);
      if (lam[g.mul(a, b)] != expect)
        throw Error(Errc::NotHomomorphism,
                    mode == LambdaMode::Homomorphic ? "λ_{ab} != λ_a λ_b" : "λ_{ab} != λ_b λ_a", {a, b});
    }
  std::vector<char> ker(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) ker[a] = is_identity(lam[a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int w = mode == LambdaMode::Homomorphic
                  ? g.mul(g.inv(b), lam[a][b])
                  : g.mul(g.mul(g.mul(a, lam[a][b]), g.inv(a)), g.inv(b));
      if (!ker[w]) throw Error(Errc::KernelConditionFails, "kernel condition fails", {a, b});
    }
  FiniteGroup circ = table_group(g.name() + "∘", n, [&](int a, int b) { return g.mul(a, lam[a][b]); });
  SkewBrace out(g, std::move(circ));
  if (mode == LambdaMode::AntiHomomorphic) ensure(classify(out).symmetric, "anti-homomorphic brace must be symmetric");
  for (int a = 0; a < n; ++a)
    ensure(out.circ_inv(a) == inverse_perm(lam[a])[g.inv(a)], "∘-inverse is λ_a^-1(a^-1)", {a});
  return out;
}

SkewBrace construct_exact_factorization(const FiniteGroup& g, const std::vector<int>& a,
                                        const std::vector<int>& b) {
  const int n = g.order();
  if (!is_subgroup(g, a) || !is_subgroup(g, b))
    throw Error(Errc::NotExactFactorization, "factors must be subgroups");
  std::vector<int> part_a(static_cast<std::size_t>(n), -1), part_b(static_cast<std::size_t>(n), -1);
  std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  for (int x : sa)
    for (int y : sb) {
      int z = g.mul(x, y);
      if (part_a[z] >= 0) throw Error(Errc::NotExactFactorization, "decomposition is not unique", {z});
      part_a[z] = x;
      part_b[z] = y;
    }
  for (int z = 0; z < n; ++z)
    if (part_a[z] < 0) throw Error(Errc::NotExactFactorization, "AB does not cover G", {z});
  FiniteGroup circ = table_group(g.name() + "∘", n, [&](int x, int y) {
    return g.mul(g.mul(part_a[x], part_a[y]), g.mul(part_b[y], part_b[x]));
  });
  SkewBrace out(g, std::move(circ));
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      ensure(out.lambda(z, y) == g.conjugate(g.inv(part_b[z]), y), "λ_z is conjugation by b", {z, y});
  if (is_normal_subgroup(g, a)) {
    const auto c = classify(out);
    ensure(c.lambda_anti_homomorphic && c.symmetric, "normal A gives an anti-homomorphic brace");
  }
  return out;
}

namespace {

std::vector<Perm> unification_lambda(const FiniteGroup& g, const Perm& f, const Table& alpha, int epsilon) {
  const int n = g.order();
  std::vector<Perm> lam(static_cast<std::size_t>(n), Perm(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    const int u = g.power(f[a], epsilon);
    for (int b = 0; b < n; ++b) lam[a][b] = g.mul(g.mul(g.mul(g.inv(u), b), u), alpha[a][b]);
  }
  return lam;
}

}  // namespace

SkewBrace construct_unification(const FiniteGroup& g, const Perm& f, const Table& alpha, int epsilon) {
  const int n = g.order();
  if (epsilon != 1 && epsilon != -1) throw Error(Errc::PreconditionFails, "epsilon must be ±1", {epsilon});
  if (static_cast<int>(f.size()) != n) throw Error(Errc::MalformedTable, "f must have one image per element");
  if (static_cast<int>(alpha.size()) != n) throw Error(Errc::MalformedTable, "alpha must be square");
  for (const auto& row : alpha)
    if (static_cast<int>(row.size()) != n) throw Error(Errc::MalformedTable, "alpha must be square");
  for (int x : f)
    if (x < 0 || x >= n) throw Error(Errc::MalformedTable, "f image out of range", {x});

  const auto z = center(g);
  const auto in_z = membership(n, z);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int v = alpha[a][b];
      if (v < 0 || v >= n || !in_z[v]) throw Error(Errc::NotBilinear, "alpha leaves the center", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (alpha[g.mul(a, b)][c] != g.mul(alpha[a][c], alpha[b][c]))
          throw Error(Errc::NotBilinear, "alpha not additive in the first argument", {a, b, c});
        if (alpha[a][g.mul(b, c)] != g.mul(alpha[a][b], alpha[a][c]))
          throw Error(Errc::NotBilinear, "alpha not additive in the second argument", {a, b, c});
      }
  for (int x : z)
    for (int a = 0; a < n; ++a)
      if (alpha[x][a] != 0 || alpha[a][x] != 0)
        throw Error(Errc::NotBilinear, "alpha must vanish on the center", {x, a});
  for (int c : derived_subgroup(g))
    for (int a = 0; a < n; ++a)
      ensure(alpha[c][a] == 0 && alpha[a][c] == 0, "alpha vanishes on the derived subgroup", {c, a});

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!in_z[g.commutator(f[a], f[b])])
        throw Error(Errc::ImageNotAbelianModCenter, "f(a), f(b) do not commute modulo the center", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!in_z[g.mul(g.inv(f[g.mul(a, b)]), g.mul(f[a], f[b]))])
        throw Error(Errc::NotEndomorphismModCenter, "f(ab) != f(a)f(b) modulo the center", {a, b});

  const auto lam = unification_lambda(g, f, alpha, epsilon);
  SkewBrace out = construct_from_lambda(g, lam, LambdaMode::Homomorphic);
  const auto c = classify(out);
  ensure(c.lambda_homomorphic && c.symmetric, "unification brace is λ-homomorphic and symmetric");

  Perm shifted(f.size());
  for (int a = 0; a < n; ++a) shifted[a] = g.mul(f[a], z[static_cast<std::size_t>(a) % z.size()]);
  ensure(unification_lambda(g, shifted, alpha, epsilon) == lam, "λ depends only on f modulo the center");
  return out;
}

SkewBrace opposite(const SkewBrace& b) { return SkewBrace(b.add().opposite(), b.circ()); }

OppositeSymmetry opposite_symmetry_check(const SkewBrace& b) {
  if (!b.lambda().homomorphic_on_add) throw Error(Errc::PreconditionFails, "brace is not λ-homomorphic");
  const auto& g = b.add();
  const int n = b.order();
  OppositeSymmetry r;
  r.opposite_symmetric = classify(opposite(b)).symmetric;
  r.inn_centralizes_lambda = true;
  for (int x = 0; x < n && r.inn_centralizes_lambda; ++x)
    for (int a = 0; a < n && r.inn_centralizes_lambda; ++a)
      for (int c = 0; c < n && r.inn_centralizes_lambda; ++c)
        r.inn_centralizes_lambda = g.conjugate(x, b.lambda(a, c)) == b.lambda(a, g.conjugate(x, c));
  r.agree = r.opposite_symmetric == r.inn_centralizes_lambda;
  return r;
}

LinkReport link_check(const SkewBrace& first, const SkewBrace& second) {
  if (!(first.add() == second.add())) throw Error(Errc::AdditiveTablesDiffer, "braces have different additive tables");
  const auto& g = first.add();
  const int n = g.order();
  const auto& l1 = first.lambda();
  const auto& l2 = second.lambda();
  LinkReport r;
  r.images_commute = true;
  for (const auto& p : l1.image)
    for (const auto& q : l2.image)
      if (!perms_commute(p, q)) r.images_commute = false;
  const auto ker1 = membership(n, l1.kernel);
  const auto ker2 = membership(n, l2.kernel);
  r.cond_i = r.cond_ii = true;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      if (!ker1[g.mul(g.inv(x), l2.apply(a, x))]) r.cond_i = false;
      if (!ker2[g.mul(g.inv(x), l1.apply(a, x))]) r.cond_ii = false;
    }
  r.is_brace = is_left_brace(first.circ(), second.circ());
  r.is_symmetric = r.is_brace && is_left_brace(second.circ(), first.circ());

  const bool kinds = l1.anti_homomorphic_on_add && l2.anti_homomorphic_on_add;
  if (!kinds) r.advisories.push_back("HypothesisNotMet: both braces must be λ-anti-homomorphic");
  if (!r.images_commute) r.advisories.push_back("HypothesisNotMet: λ images do not commute");
  r.hypotheses_met = kinds && r.images_commute;
  if (r.hypotheses_met) {
    if (r.is_brace != r.cond_i) throw Error(Errc::CriterionMismatch, "brace test disagrees with condition (i)");
    if (r.is_symmetric != (r.cond_i && r.cond_ii))
      throw Error(Errc::CriterionMismatch, "symmetry test disagrees with conditions (i) and (ii)");
  }
  return r;
}

CrossCompatibility cross_compatibility_check(const FiniteGroup& add, const FiniteGroup& circ_i,
                                             const FiniteGroup& circ_j) {
  const auto lam = lambda_of(add, circ_i);
  const auto mu = lambda_of(add, circ_j);
  const int n = add.order();
  CrossCompatibility r;
  r.condition_holds = true;
  for (int a = 0; a < n && r.condition_holds; ++a) {
    const int abar = circ_i.inv(a);
    for (int b = 0; b < n && r.condition_holds; ++b) {
      const int x = add.mul(a, mu.apply(a, b));
      const int y = lam.apply(x, abar);
      for (int c = 0; c < n && r.condition_holds; ++c) {
        const int lhs = mu.apply(a, lam.apply(b, c));
        const int rhs = add.mul(y, lam.apply(add.mul(x, y), add.mul(a, mu.apply(a, c))));
        r.condition_holds = lhs == rhs;
      }
    }
  }
  r.is_brace = is_left_brace(circ_i, circ_j);
  ensure(!r.condition_holds || r.is_brace, "compatibility condition implies a brace");
  return r;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

class RegularSearch {
 public:
  explicit RegularSearch(const Holomorph& h) : h_(h), n_(h.base().order()), in_(static_cast<std::size_t>(h.order()), 0) {}

  void run() {
    std::vector<int> start{0};
    seen_.insert(start);
    dfs(start, {});
  }

  const std::vector<std::vector<int>>& found() const { return found_; }

 private:
  // Closure of gens; empty when two elements share a second coordinate.
  std::vector<int> semiregular_closure(const std::vector<int>& gens) {
    std::vector<int> elems{0};
    std::vector<char> hit(static_cast<std::size_t>(n_), 0);
    in_[0] = 1;
    hit[0] = 1;
    bool ok = true;
    for (std::size_t i = 0; i < elems.size() && ok; ++i)
      for (int s : gens) {
        int y = h_.mul(elems[i], s);
        if (in_[y]) continue;
        int second = h_.pair_of(y).second;
        if (hit[second]) {
          ok = false;
          break;
        }
        hit[second] = 1;
        in_[y] = 1;
        elems.push_back(y);
      }
    for (int x : elems) in_[x] = 0;
    if (!ok) return {};
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  void dfs(const std::vector<int>& s, std::vector<int> gens) {
    if (static_cast<int>(s.size()) == n_) {
      found_.push_back(s);
      return;
    }
    std::vector<char> covered(static_cast<std::size_t>(n_), 0);
    for (int x : s) covered[h_.pair_of(x).second] = 1;
    int c = 0;
    while (covered[c]) ++c;
    const int m = static_cast<int>(h_.automorphisms().size());
    gens.push_back(0);
    for (int f = 0; f < m; ++f) {
      gens.back() = h_.index_of(f, c);
      auto t = semiregular_closure(gens);
      if (t.empty() || !seen_.insert(t).second) continue;
      dfs(t, gens);
    }
  }

  const Holomorph& h_;
  int n_;
  std::vector<char> in_;
  std::set<std::vector<int>> seen_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<SkewBrace> enumerate_circ_ops(const FiniteGroup& g, const Limits& limits) {
  const Holomorph h = Holomorph::build(g, limits);
  RegularSearch search(h);
  search.run();
  const int n = g.order();
  std::vector<SkewBrace> out;
  for (const auto& sub : search.found()) {
    ensure(is_regular_subgroup(h, sub), "search yields regular subgroups");
    std::vector<int> aut_of(static_cast<std::size_t>(n));
    for (int x : sub) {
      auto [f, a] = h.pair_of(x);
      aut_of[a] = f;
    }
    FiniteGroup circ = table_group(g.name() + "∘", n, [&](int a, int b) {
      return g.mul(a, h.automorphisms()[aut_of[a]].images[b]);
    });
    out.emplace_back(g, std::move(circ));
  }
  std::sort(out.begin(), out.end(), [](const SkewBrace& x, const SkewBrace& y) {
    return std::lexicographical_compare(x.circ().flat().begin(), x.circ().flat().end(),
                                        y.circ().flat().begin(), y.circ().flat().end());
  });
  return out;
}

SkewBrace relabel(const SkewBrace& b, const Perm& phi) {
  const int n = b.order();
  if (!is_permutation(phi, n) || phi[0] != 0) throw Error(Errc::PreconditionFails, "relabeling must fix 0");
  const Perm inv = inverse_perm(phi);
  auto push = [&](const FiniteGroup& g) {
    return table_group(g.name(), n, [&](int x, int y) { return phi[g.mul(inv[x], inv[y])]; });
  };
  return SkewBrace(push(b.add()), push(b.circ()));
}

std::optional<Perm> brace_isomorphic(const SkewBrace& x, const SkewBrace& y, const Limits& limits) {
  const int n = x.order();
  if (y.order() != n) return std::nullopt;
  if (n > limits.max_group_order)
    throw Error(Errc::OrderCapExceeded, "brace order exceeds cap", {n, limits.max_group_order});
  const bool both_hom = x.lambda().homomorphic_on_add && y.lambda().homomorphic_on_add;
  std::optional<Perm> best;
  for_each_homomorphism(x.add(), y.add(), true, [&](const Perm& phi) {
    if (best && !(phi < *best)) return;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (phi[x.circ().mul(a, b)] != y.circ().mul(phi[a], phi[b])) return;
    best = phi;
  });
  if (best && both_hom) {
    const Perm& phi = *best;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        ensure(phi[x.lambda(a, b)] == y.lambda(phi[a], phi[b]), "φ λ_a φ^-1 = μ_φ(a)", {a, b});
  }
  return best;
}

}  // namespace skb
