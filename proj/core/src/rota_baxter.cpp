#include "skewbrace/rota_baxter.hpp"

#include <algorithm>
#include <functional>

namespace skb {

namespace {

void require_map(const FiniteGroup& g, const Perm& b) {
  if (static_cast<int>(b.size()) != g.order())
    throw Error(Errc::PreconditionFails, "operator must be defined on every element",
                {static_cast<long long>(b.size()), g.order()});
  for (int x : b)
    if (x < 0 || x >= g.order()) throw Error(Errc::PreconditionFails, "operator value outside the group", {x});
}

void require_rb(const FiniteGroup& g, const Perm& b) {
  auto rb = is_rb(g, b);
  if (!rb.ok)
    throw Error(Errc::NotRotaBaxter, "map is not a Rota-Baxter operator", {rb.witness->first, rb.witness->second});
}

FiniteGroup table_of(const FiniteGroup& g, const std::string& name, const std::function<int(int, int)>& op) {
  const int n = g.order();
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[static_cast<std::size_t>(x) * n + y] = op(x, y);
  return FiniteGroup::from_table(name, n, std::move(flat));
}

bool central(const std::vector<int>& z, int x) { return std::binary_search(z.begin(), z.end(), x); }

}  // namespace

RbCheck is_rb(const FiniteGroup& g, const Perm& b) {
  require_map(g, b);
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.mul(b[x], b[y]) != b[g.mul(g.mul(g.mul(x, b[x]), y), g.inv(b[x]))]) return {false, std::pair{x, y}};
  return {};
}

FiniteGroup derived_group(const FiniteGroup& g, const Perm& b) {
  require_rb(g, b);
  FiniteGroup d = table_of(g, g.name() + "_B", [&](int x, int y) { return g.mul(g.mul(g.mul(x, b[x]), y), g.inv(b[x])); });
  ensure(is_rb(d, b).ok, "B is Rota-Baxter on the derived group");
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      ensure(b[d.mul(x, y)] == g.mul(b[x], b[y]), "B is a homomorphism from the derived group", {x, y});
  return d;
}

SkewBrace rb_brace(const FiniteGroup& g, const Perm& b) {
  SkewBrace br(g, derived_group(g, b));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      ensure(br.lambda(x, y) == g.conjugate(b[x], y), "λ_a is conjugation by B(a)", {x, y});
  return br;
}

RbCriterion rb_symmetry_check(const FiniteGroup& g, const Perm& b) {
  RbCriterion r;
  r.property = classify(rb_brace(g, b)).symmetric;
  const auto z = center(g);
  r.center_condition = true;
  for (int a = 0; a < g.order() && r.center_condition; ++a)
    for (int c = 0; c < g.order() && r.center_condition; ++c)
      r.center_condition = central(z, g.mul(g.mul(g.inv(b[c]), g.inv(b[a])), b[g.mul(c, a)]));
  r.agree = r.property == r.center_condition;
  ensure(r.agree, "symmetry of the Rota-Baxter brace matches the center condition");
  return r;
}

RbCriterion rb_lambda_hom_check(const FiniteGroup& g, const Perm& b) {
  RbCriterion r;
  r.property = rb_brace(g, b).lambda().homomorphic_on_add;
  const auto z = center(g);
  r.center_condition = true;
  for (int a = 0; a < g.order() && r.center_condition; ++a)
    for (int c = 0; c < g.order() && r.center_condition; ++c)
      r.center_condition = central(z, g.mul(g.mul(g.inv(b[g.mul(a, c)]), b[a]), b[c]));
  r.agree = r.property == r.center_condition;
  ensure(r.agree, "λ-homomorphy of the Rota-Baxter brace matches the center condition");
  return r;
}

bool rb_anti_hom_lemma_check(const FiniteGroup& g, const Perm& b) {
  require_rb(g, b);
  if (!analyze_map(g, b).is_anti_homomorphism)
    throw Error(Errc::PreconditionFails, "operator is not an anti-homomorphism");
  for (int a = 0; a < g.order(); ++a) {
    int u = g.mul(b[b[a]], b[a]);
    for (int x = 0; x < g.order(); ++x)
      if (g.commutator(b[x], u) != FiniteGroup::identity) return false;
  }
  return true;
}

CircExpansion circ_word_expand(const FiniteGroup& g, const Perm& b, const std::vector<CircLetter>& letters) {
  FiniteGroup d = derived_group(g, b);
  CircExpansion r;
  int head = FiniteGroup::identity, tail = FiniteGroup::identity;
  for (const auto& l : letters) {
    if (l.element < 0 || l.element >= g.order())
      throw Error(Errc::PreconditionFails, "letter outside the group", {l.element});
    r.folded = d.mul(r.folded, d.power(l.element, l.power));
    head = g.mul(head, g.power(g.mul(l.element, b[l.element]), l.power));
    tail = g.mul(g.power(b[l.element], -l.power), tail);
  }
  r.formula = g.mul(head, tail);
  ensure(r.folded == r.formula, "folded ∘-word equals its ·-expansion");
  return r;
}

SecondLevelReport rb_second_level_check(const FiniteGroup& g, const Perm& b) {
  FiniteGroup d1 = derived_group(g, b);
  FiniteGroup d2 = table_of(g, g.name() + "_B2", [&](int x, int y) {
    return d1.mul(d1.mul(d1.mul(x, b[x]), y), d1.inv(b[x]));
  });
  SecondLevelReport r;
  auto m = [&g](std::initializer_list<int> xs) {
    int acc = FiniteGroup::identity;
    for (int x : xs) acc = g.mul(acc, x);
    return acc;
  };
  for (int x = 0; x < g.order(); ++x) {
    int bx = b[x], bbx = b[b[x]];
    int ibx = g.inv(bx), ibbx = g.inv(bbx);
    for (int y = 0; y < g.order(); ++y) {
      int by = b[y], iby = g.inv(by);
      int circ2 = m({x, bx, bx, bbx, y, by, ibbx, ibx, bbx, iby, ibbx, ibx});
      int lam1 = m({bx, bbx, y, by, ibbx, ibx, bbx, iby, ibbx});
      if (circ2 != d2.mul(x, y)) r.circ2_matches = false;
      if (lam1 != d1.mul(d1.inv(x), d2.mul(x, y))) r.lambda1_matches = false;
    }
  }
  return r;
}

std::vector<Perm> find_rb_operators(const FiniteGroup& g, bool endomorphisms_only) {
  std::vector<Perm> out;
  const int n = g.order();
  if (endomorphisms_only) {
    for_each_homomorphism(g, g, false, [&](const Perm& f) {
      if (is_rb(g, f).ok) out.push_back(f);
    });
    std::sort(out.begin(), out.end());
    return out;
  }
  if (n > 7) throw Error(Errc::OrderCapExceeded, "exhaustive operator search is limited to order 7", {n});
  Perm b(n, -1);
  // Backtracking in element order; a pair is checked once B is known on x, y
  // and on the argument of the right-hand side.
  std::function<void(int)> rec = [&](int t) {
    if (t == n) {
      out.push_back(b);
      return;
    }
    for (int v = 0; v < n; ++v) {
      b[t] = v;
      bool ok = true;
      for (int x = 0; x <= t && ok; ++x)
        for (int y = 0; y <= t && ok; ++y) {
          int arg = g.mul(g.mul(g.mul(x, b[x]), y), g.inv(b[x]));
          if (arg > t) continue;
          if (x != t && y != t && arg != t) continue;
          ok = g.mul(b[x], b[y]) == b[arg];
        }
      if (ok) rec(t + 1);
    }
    b[t] = -1;
  };
  rec(0);
  return out;
}

FreeWord free_rb_example(long long m, const FreeWord& a, const FreeWord& b) {
  if (a.rank() != 2 || b.rank() != 2) throw Error(Errc::RankMismatch, "free example uses rank 2", {a.rank(), b.rank()});
  FreeWord c = FreeWord::generator(2, 1, m * a.exp_sum());
  return a * c * b * c.inverse();
}

FreeRbReport free_rb_check(long long max_m, int samples, int max_len, std::uint64_t seed) {
  if (max_m < 0) throw Error(Errc::PreconditionFails, "max_m must be non-negative", {max_m});
  FreeRbReport rep;
  WordSampler sampler(2, seed, max_len);
  auto B = [](const FreeWord& w) { return FreeWord::generator(2, 1, w.exp_sum()); };
  auto witness = [&rep](std::string msg) {
    if (rep.witnesses.size() < 5) rep.witnesses.push_back(std::move(msg));
  };
  auto inv_m = [](long long m, const FreeWord& a) {
    FreeWord c = FreeWord::generator(2, 1, m * a.exp_sum());
    return c.inverse() * a.inverse() * c;
  };
  // Derived recursion x ∘_{i+1} y = x ∘_i B(x) ∘_i y ∘_i B(x)^{∘_i(-1)}, ∘_0 = ·.
  std::function<FreeWord(int, const FreeWord&, const FreeWord&)> level = [&](int i, const FreeWord& x,
                                                                             const FreeWord& y) -> FreeWord {
    if (i == 0) return x * y;
    FreeWord bx = B(x);
    FreeWord bxi = inv_m((1LL << (i - 1)) - 1, bx);
    return level(i - 1, level(i - 1, level(i - 1, x, bx), y), bxi);
  };
  for (int s = 0; s < samples; ++s) {
    FreeWord a = sampler.next(), b = sampler.next(), c = sampler.next();
    ++rep.samples;
    std::string abc = " a=" + a.str() + " b=" + b.str() + " c=" + c.str();
    if (!(B(a) * B(b) == B(a * B(a) * b * B(a).inverse()))) {
      ++rep.rb_failures;
      witness("rota-baxter" + abc);
    }
    for (long long m = 0; m <= max_m; ++m) {
      auto add = [m](const FreeWord& x, const FreeWord& y) { return free_rb_example(m, x, y); };
      auto op = [m](const FreeWord& x, const FreeWord& y) { return free_rb_example(m + 1, x, y); };
      bool inverse_ok = add(a, inv_m(m, a)).empty();
      if (!inverse_ok || !(op(a, add(b, c)) == add(add(op(a, b), inv_m(m, a)), op(a, c)))) {
        ++rep.multibrace_failures;
        witness("multibrace m=" + std::to_string(m) + abc);
      }
    }
    for (int i = 1; i <= 3; ++i) {
      long long e = (1LL << i) - 1;
      FreeWord bi = inv_m((1LL << (i - 1)) - 1, B(a));
      bool inverse_ok = level(i - 1, B(a), bi).empty();
      if (!inverse_ok || !(level(i, a, b) == free_rb_example(e, a, b))) {
        ++rep.recursion_failures;
        witness("recursion level " + std::to_string(i) + abc);
      }
    }
  }
  return rep;
}

FreeWord free_operator_apply(const std::vector<FreeWord>& images, const FreeWord& w) {
  if (static_cast<int>(images.size()) != w.rank())
    throw Error(Errc::RankMismatch, "one image per generator is required",
                {static_cast<long long>(images.size()), w.rank()});
  FreeWord out(w.rank());
  for (const auto& s : w.syllables()) out *= images[s.gen - 1].pow(s.exp);
  return out;
}

FreeRbSample free_is_rb(const std::vector<FreeWord>& images, int samples, int max_len, std::uint64_t seed) {
  if (images.empty()) throw Error(Errc::PreconditionFails, "operator needs generator images");
  const int n = images.front().rank();
  FreeRbSample rep;
  WordSampler sampler(n, seed, max_len);
  auto B = [&](const FreeWord& w) { return free_operator_apply(images, w); };
  for (int s = 0; s < samples; ++s) {
    FreeWord g = sampler.next(), h = sampler.next();
    ++rep.samples;
    if (!(B(g) * B(h) == B(g * B(g) * h * B(g).inverse()))) {
      ++rep.failures;
      if (rep.witnesses.size() < 5) rep.witnesses.push_back("g=" + g.str() + " h=" + h.str());
    }
  }
  return rep;
}

}  // namespace skb
