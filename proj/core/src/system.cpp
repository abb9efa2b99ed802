#include "skewbrace/system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "skewbrace/rota_baxter.hpp"

namespace skb {

std::string_view kind_name(SystemKind k) {
  switch (k) {
    case SystemKind::General: return "general";
    case SystemKind::Symmetric: return "symmetric";
    case SystemKind::FullSymmetric: return "full_symmetric";
    case SystemKind::Linear: return "linear";
    case SystemKind::Rooted: return "rooted";
  }
  return "general";
}

std::string_view status_name(EdgeStatus s) { return s == EdgeStatus::Verified ? "verified" : "failed"; }

std::optional<int> BraceSystem::vertex_of_level(int level) const {
  for (auto [l, v] : levels)
    if (l == level) return v;
  return std::nullopt;
}

std::optional<EdgeStatus> BraceSystem::edge(int from, int to) const {
  for (const auto& e : edges)
    if (e.from == from && e.to == to) return e.status;
  return std::nullopt;
}

bool BraceSystem::all_pairs_verified() const {
  for (const auto& e : edges) {
    if (e.status != EdgeStatus::Verified) return false;
    if (edge(e.to, e.from) != EdgeStatus::Verified) return false;
  }
  return true;
}

namespace {

std::string level_label(int level) { return "∘_" + std::to_string(level); }

FiniteGroup operation(int n, const std::string& name, const std::function<int(int, int)>& op) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = op(a, b);
  return FiniteGroup::from_table(name, n, std::move(flat));
}

void verify_all_pairs(BraceSystem& s) {
  s.edges.clear();
  const int m = static_cast<int>(s.vertices.size());
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      if (u == v) continue;
      bool ok = is_left_brace(s.vertices[u], s.vertices[v]);
      s.edges.push_back({u, v, ok ? EdgeStatus::Verified : EdgeStatus::Failed});
    }
}

// Adds a vertex unless an equal table is present; returns its index.
int intern(BraceSystem& s, FiniteGroup g, const std::string& label) {
  for (std::size_t v = 0; v < s.vertices.size(); ++v)
    if (s.vertices[v] == g) return static_cast<int>(v);
  s.vertices.push_back(std::move(g));
  s.labels.push_back(label);
  return static_cast<int>(s.vertices.size()) - 1;
}

}  // namespace

BraceSystem build_linear_system(const FiniteGroup& g, const std::vector<Perm>& lam, std::optional<int> depth,
                                bool include_negative, const Limits& limits) {
  const int n = g.order();
  if (static_cast<int>(lam.size()) != n) throw Error(Errc::MalformedTable, "λ must list one map per element");
  for (int a = 0; a < n; ++a)
    if (static_cast<int>(lam[a].size()) != n || !analyze_map(g, lam[a]).is_automorphism)
      throw Error(Errc::PreconditionFails, "λ_a is not an automorphism", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (lam[g.mul(a, b)] != compose(lam[a], lam[b]))
        throw Error(Errc::PreconditionFails, "λ is not a homomorphism", {a, b});
      if (compose(lam[a], lam[b]) != compose(lam[b], lam[a]))
        throw Error(Errc::PreconditionFails, "λ(G) is not abelian", {a, b});
    }
  std::vector<char> ker(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) ker[a] = lam[a] == identity_perm(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!ker[g.mul(g.inv(b), lam[a][b])])
        throw Error(Errc::PreconditionFails, "[G, λ(G)] is not inside Ker λ", {a, b});

  int exponent = 1;
  for (const auto& p : lam) exponent = std::lcm(exponent, perm_order(p));
  const int d = depth.value_or(exponent);
  if (d < 0) throw Error(Errc::PreconditionFails, "depth must be non-negative", {d});
  const int total_levels = 1 + d + (include_negative ? d : 0);
  if (total_levels > limits.max_system_vertices)
    throw Error(Errc::OrderCapExceeded, "system exceeds vertex cap", {total_levels, limits.max_system_vertices});

  BraceSystem s;
  s.carrier_order = n;
  s.kind = SystemKind::Linear;
  s.lambda = lam;
  s.image_exponent = exponent;

  std::vector<Perm> inv_lam;
  for (const auto& p : lam) inv_lam.push_back(inverse_perm(p));

  auto iterate = [&](int sign) {
    FiniteGroup prev = g;
    for (int i = 1; i <= d; ++i) {
      const auto& step = sign > 0 ? lam : inv_lam;
      FiniteGroup next = operation(n, level_label(sign * i), [&](int a, int b) { return prev.mul(a, step[a][b]); });
      s.levels.emplace_back(sign * i, intern(s, next, level_label(sign * i)));
      prev = std::move(next);
    }
  };
  s.levels.emplace_back(0, intern(s, g, level_label(0)));
  iterate(1);
  if (include_negative) iterate(-1);
  verify_all_pairs(s);
  return s;
}

std::optional<int> detect_period(const BraceSystem& s) {
  auto base = s.vertex_of_level(0);
  if (!base) return std::nullopt;
  std::vector<int> positive;
  for (auto [l, v] : s.levels)
    if (l >= 1) positive.push_back(l);
  std::sort(positive.begin(), positive.end());
  for (int p : positive)
    if (s.vertex_of_level(p) == base) {
      if (s.image_exponent > 0) ensure(s.image_exponent % p == 0, "period divides the image exponent", {p});
      return p;
    }
  return std::nullopt;
}

LevelReport level_report(const BraceSystem& s) {
  LevelReport r;
  if (s.lambda.empty()) throw Error(Errc::PreconditionFails, "system was not built from λ");
  const int n = s.carrier_order;
  std::vector<std::pair<int, int>> nonneg;
  for (auto lv : s.levels)
    if (lv.first >= 0) nonneg.push_back(lv);
  std::sort(nonneg.begin(), nonneg.end());

  LambdaMap base = lambda_of(s.vertices[*s.vertex_of_level(0)], s.vertices[*s.vertex_of_level(1)]);
  for (std::size_t k = 0; k + 1 < nonneg.size(); ++k) {
    const auto& lo = s.vertices[nonneg[k].second];
    const auto& hi = s.vertices[nonneg[k + 1].second];
    LambdaMap lm = lambda_of(lo, hi);
    if (lm.kernel != base.kernel) r.kernel_same = false;
    if (lm.image != base.image) r.image_same = false;
    for (int a = 0; a < n; ++a)
      if (lm.maps[a].images != s.lambda[a]) r.image_same = false;
  }
  for (auto [l, v] : nonneg)
    for (int a = 0; a < n; ++a)
      if (!analyze_map(s.vertices[v], s.lambda[a]).is_automorphism) r.lambda_automorphism_everywhere = false;

  for (std::size_t i = 0; i < nonneg.size(); ++i)
    for (std::size_t j = i + 1; j < nonneg.size(); ++j) {
      const auto& gi = s.vertices[nonneg[i].second];
      const auto& gj = s.vertices[nonneg[j].second];
      const int steps = nonneg[j].first - nonneg[i].first;
      for (int a = 0; a < n; ++a) {
        Perm power = identity_perm(n);
        for (int t = 0; t < steps; ++t) power = compose(s.lambda[a], power);
        for (int b = 0; b < n; ++b)
          if (gj.mul(a, b) != gi.mul(a, power[b])) r.closed_form_holds = false;
      }
    }
  return r;
}

BraceSystem union_systems(const BraceSystem& first, const BraceSystem& second) {
  if (first.carrier_order != second.carrier_order)
    throw Error(Errc::CarrierMismatch, "systems live on different carriers",
                {first.carrier_order, second.carrier_order});
  auto b1 = first.vertex_of_level(0), b2 = second.vertex_of_level(0);
  if (!b1 || !b2 || !(first.vertices[*b1] == second.vertices[*b2]))
    throw Error(Errc::BaseMismatch, "systems do not share ∘_0");

  BraceSystem u;
  u.carrier_order = first.carrier_order;
  u.kind = SystemKind::General;
  std::vector<int> map1, map2;
  for (std::size_t v = 0; v < first.vertices.size(); ++v)
    map1.push_back(intern(u, first.vertices[v], first.labels[v]));
  for (std::size_t v = 0; v < second.vertices.size(); ++v)
    map2.push_back(intern(u, second.vertices[v], "★" + second.labels[v].substr(std::string("∘").size())));
  for (auto [l, v] : first.levels) u.levels.emplace_back(l, map1[v]);
  verify_all_pairs(u);

  bool hypotheses = false;
  auto f1 = first.vertex_of_level(1), s1 = second.vertex_of_level(1);
  if (f1 && s1) {
    const FiniteGroup& base = first.vertices[*b1];
    SkewBrace x(base, first.vertices[*f1]);
    SkewBrace y(base, second.vertices[*s1]);
    const auto& lx = x.lambda();
    const auto& ly = y.lambda();
    const bool homo = lx.homomorphic_on_add && lx.image_abelian && ly.homomorphic_on_add && ly.image_abelian;
    const LinkReport link = link_check(x, y);
    hypotheses = homo && link.hypotheses_met && link.cond_i && link.cond_ii;
    if (!homo) u.advisories.push_back("HypothesisNotMet: first-level braces must be λ-homomorphic with abelian image");
    for (const auto& a : link.advisories) u.advisories.push_back(a);
    if (link.hypotheses_met && !(link.cond_i && link.cond_ii))
      u.advisories.push_back("HypothesisNotMet: linking conditions (i) and (ii) do not both hold");
  } else {
    u.advisories.push_back("HypothesisNotMet: a system has no first level");
  }

  if (hypotheses) {
    for (auto [l1, v1] : first.levels)
      for (auto [l2, v2] : second.levels) {
        if (l1 < 1 || l2 < 1 || map1[v1] == map2[v2]) continue;
        ensure(u.edge(map1[v1], map2[v2]) == EdgeStatus::Verified && u.edge(map2[v2], map1[v1]) == EdgeStatus::Verified,
               "cross pair of a linked union verifies", {l1, l2});
      }
  }
  u.kind = u.all_pairs_verified() ? SystemKind::FullSymmetric : SystemKind::General;
  if (u.kind == SystemKind::General) {
    bool closed = true;
    for (const auto& e : u.edges)
      if (e.status == EdgeStatus::Verified && u.edge(e.to, e.from) != EdgeStatus::Verified) closed = false;
    if (closed) u.kind = SystemKind::Symmetric;
  }
  return u;
}

BraceSystem rooted_system(const FiniteGroup& g, const std::vector<SkewBrace>& braces) {
  BraceSystem s;
  s.carrier_order = g.order();
  s.kind = SystemKind::Rooted;
  intern(s, g, "·");
  for (std::size_t k = 0; k < braces.size(); ++k) {
    if (!(braces[k].add() == g)) throw Error(Errc::AdditiveTablesDiffer, "brace is not over the root operation");
    int v = intern(s, braces[k].circ(), "∘_H" + std::to_string(k));
    if (v == 0) continue;
    bool ok = is_left_brace(g, braces[k].circ());
    s.edges.push_back({0, v, ok ? EdgeStatus::Verified : EdgeStatus::Failed});
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

BraceSystem build_rb_multibrace(const FiniteGroup& g, const Perm& b, int k) {
  if (auto rb = is_rb(g, b); !rb.ok)
    throw Error(Errc::NotRotaBaxter, "map is not a Rota-Baxter operator",
                {rb.witness->first, rb.witness->second});
  if (k < 0) throw Error(Errc::PreconditionFails, "k must be non-negative", {k});
  const int n = g.order();
  BraceSystem s;
  s.carrier_order = n;
  s.kind = SystemKind::Linear;
  s.vertices.push_back(g);
  s.labels.push_back(level_label(0));
  s.levels.emplace_back(0, 0);
  for (int i = 1; i <= k; ++i) {
    const FiniteGroup& prev = s.vertices.back();
    FiniteGroup next = operation(n, level_label(i), [&](int x, int y) {
      return prev.mul(prev.mul(prev.mul(x, b[x]), y), prev.inv(b[x]));
    });
    s.vertices.push_back(std::move(next));
    s.labels.push_back(level_label(i));
    s.levels.emplace_back(i, i);
  }
  verify_all_pairs(s);
  for (int i = 1; i <= k; ++i)
    ensure(s.edge(i - 1, i) == EdgeStatus::Verified, "consecutive multibrace pair verifies", {i});
  return s;
}

std::string export_dot(const BraceSystem& s) {
  std::ostringstream os;
  os << "digraph brace_system {\n";
  os << "  label=\"" << kind_name(s.kind) << " brace system, carrier order " << s.carrier_order << "\";\n";
  for (std::size_t v = 0; v < s.vertices.size(); ++v) os << "  v" << v << " [label=\"" << s.labels[v] << "\"];\n";
  std::vector<SystemEdge> edges = s.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    os << "  v" << e.from << " -> v" << e.to;
    if (e.status == EdgeStatus::Failed) os << " [status=failed, style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace skb
