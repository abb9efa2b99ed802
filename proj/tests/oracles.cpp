#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

bool is_group_table(const Flat& t, int n) {
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (int b = 0; b < n; ++b) {
      if (row[t[a * n + b]] || col[t[b * n + a]]) return false;
      row[t[a * n + b]] = col[t[b * n + a]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
  return true;
}

}  // namespace

std::set<Flat> latin_square_braces(const skb::FiniteGroup& add) {
  const int n = add.order();
  std::set<Flat> out;
  Flat t(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    t[a] = a;
    t[a * n] = a;
  }
  std::vector<int> cells;
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) cells.push_back(a * n + b);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      if (!is_group_table(t, n)) return;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (t[a * n + add.mul(b, c)] != add.mul(add.mul(t[a * n + b], add.inv(a)), t[a * n + c])) return;
      out.insert(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[cells[k]] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<skb::Perm> automorphisms_by_scan(const skb::FiniteGroup& g) {
  const int n = g.order();
  skb::Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<skb::Perm> out;
  do {
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n && hom; ++b) hom = p[g.mul(a, b)] == g.mul(p[a], p[b]);
    if (hom) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::set<Flat> regular_subgroup_braces(const skb::FiniteGroup& g) {
  const int n = g.order();
  const auto autos = automorphisms_by_scan(g);
  const int m = static_cast<int>(autos.size());
  std::vector<int> comp(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      skb::Perm c(n);
      for (int x = 0; x < n; ++x) c[x] = autos[i][autos[j][x]];
      comp[i * m + j] = static_cast<int>(std::find(autos.begin(), autos.end(), c) - autos.begin());
    }
  const int id = 0;  // the identity permutation is first in lexicographic order
  std::vector<int> f(n, -1);
  std::set<Flat> out;
  auto consistent = [&]() {
    for (int a = 0; a < n; ++a) {
      if (f[a] < 0) continue;
      for (int b = 0; b < n; ++b) {
        if (f[b] < 0) continue;
        int target = g.mul(a, autos[f[a]][b]);
        if (f[target] >= 0 && f[target] != comp[f[a] * m + f[b]]) return false;
      }
    }
    return true;
  };
  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      Flat t(static_cast<std::size_t>(n) * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x * n + y] = g.mul(x, autos[f[x]][y]);
      out.insert(t);
      return;
    }
    for (int k = 0; k < m; ++k) {
      if (a == 0 && k != id) continue;
      f[a] = k;
      if (consistent()) rec(a + 1);
    }
    f[a] = -1;
  };
  rec(0);
  return out;
}

bool lambda_symmetry_criterion(const skb::FiniteGroup& add, const skb::FiniteGroup& circ) {
  const int n = add.order();
  auto lam = [&](int a, int b) { return add.mul(add.inv(a), circ.mul(a, b)); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int u = circ.mul(a, b), v = add.mul(b, a);
      for (int c = 0; c < n; ++c)
        if (lam(u, c) != lam(v, c)) return false;
    }
  return true;
}

}  // namespace oracle
