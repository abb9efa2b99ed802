#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/group.hpp"

namespace skb {

struct LambdaMap {
  /// maps[a].images[b] = λ_a(b)
  std::vector<GroupMap> maps;
  std::vector<int> kernel;
  /// Distinct λ_a, sorted.
  std::vector<Perm> image;
  int image_order = 1;
  int image_exponent = 1;
  bool homomorphic_on_add = true;
  bool anti_homomorphic_on_add = true;
  bool image_abelian = true;
  bool image_cyclic = true;

  int apply(int a, int b) const { return maps[a].images[b]; }
};

/// Computes λ_a(b) = a^-1 (a∘b). Throws LambdaNotAutomorphism(a) when some
/// λ_a is not an automorphism of the additive group.
LambdaMap lambda_of(const FiniteGroup& add, const FiniteGroup& circ);

/// Two group tables on one carrier satisfying a∘(b·c) = (a∘b)·a^-1·(a∘c).
class SkewBrace {
 public:
  /// Checks the left brace law exhaustively; throws NotABrace(a, b, c).
  SkewBrace(FiniteGroup add, FiniteGroup circ);

  static SkewBrace trivial(const FiniteGroup& g);

  int order() const noexcept { return add_.order(); }
  const FiniteGroup& add() const noexcept { return add_; }
  const FiniteGroup& circ() const noexcept { return circ_; }
  const LambdaMap& lambda() const noexcept { return lambda_; }
  int lambda(int a, int b) const { return lambda_.apply(a, b); }
  /// Inverse of a in (G, ∘).
  int circ_inv(int a) const { return circ_.inv(a); }
  bool is_trivial() const noexcept { return add_ == circ_; }

  friend bool operator==(const SkewBrace& x, const SkewBrace& y) noexcept {
    return x.add_ == y.add_ && x.circ_ == y.circ_;
  }

 private:
  FiniteGroup add_;
  FiniteGroup circ_;
  LambdaMap lambda_;
};

struct BraceReport {
  bool left_ok = true;
  bool right_ok = true;
  bool two_sided = true;
  std::optional<std::array<int, 3>> left_witness;
  std::optional<std::array<int, 3>> right_witness;
};

/// Exhaustive check of the left law a∘(b·c) = (a∘b)·a^-1·(a∘c) and the right
/// law (a·b)∘c = (a∘c)·c^-1·(b∘c).
BraceReport verify_brace(const FiniteGroup& add, const FiniteGroup& circ);
/// Left law only, stopping at the first failure.
bool is_left_brace(const FiniteGroup& add, const FiniteGroup& circ);

struct Classification {
  bool lambda_homomorphic = false;
  bool lambda_anti_homomorphic = false;
  bool symmetric = false;
  bool lambda_cyclic = false;
  bool natural = false;
  bool two_sided = false;
  bool trivial = false;
};

/// symmetric is computed from λ_{a∘b} = λ_{b·a} and independently by
/// checking (G,∘,·); disagreement throws CriterionMismatch.
Classification classify(const SkewBrace& b);

enum class LambdaMode { Homomorphic, AntiHomomorphic };

/// a∘b = a·λ_a(b). Checks that every λ_a is an automorphism, that λ is a
/// homomorphism (or anti-homomorphism) and the matching kernel condition.
SkewBrace construct_from_lambda(const FiniteGroup& g, const std::vector<Perm>& lam, LambdaMode mode);

/// (a1 b1)∘(a2 b2) = a1 a2 b2 b1 for an exact factorization G = AB.
SkewBrace construct_exact_factorization(const FiniteGroup& g, const std::vector<int>& a,
                                        const std::vector<int>& b);

/// λ_a(b) = f(a)^-ε b f(a)^ε α(a, b) with f a map into A = A'Z(G) inducing an
/// endomorphism modulo the center and α bilinear into Z(G).
SkewBrace construct_unification(const FiniteGroup& g, const Perm& f, const Table& alpha, int epsilon);

/// (G, ·^op, ∘).
SkewBrace opposite(const SkewBrace& b);

struct OppositeSymmetry {
  bool opposite_symmetric = false;
  bool inn_centralizes_lambda = false;
  bool agree = false;
};

/// Requires a λ-homomorphic brace (PreconditionFails otherwise).
OppositeSymmetry opposite_symmetry_check(const SkewBrace& b);

struct LinkReport {
  bool is_brace = false;
  bool is_symmetric = false;
  bool cond_i = false;
  bool cond_ii = false;
  bool images_commute = false;
  bool hypotheses_met = false;
  std::vector<std::string> advisories;
};

/// Studies (G, ∘, ★) for braces (G,·,∘) and (G,·,★) with a shared additive
/// table. Throws AdditiveTablesDiffer. When both braces are λ-anti-homomorphic
/// (or λ-homomorphic with abelian image) and their λ images commute, the
/// criterion equivalences are asserted (CriterionMismatch otherwise).
LinkReport link_check(const SkewBrace& first, const SkewBrace& second);

struct CrossCompatibility {
  bool is_brace = false;
  bool condition_holds = false;
};

/// λ from (G,·,∘_i), μ from (G,·,∘_j); the condition is
/// μ_a(λ_b(c)) = λ_x(ā) · λ_{x λ_x(ā)}(a μ_a(c)) with x = a μ_a(b), and it
/// implies that (G, ∘_i, ∘_j) is a brace.
CrossCompatibility cross_compatibility_check(const FiniteGroup& add, const FiniteGroup& circ_i,
                                             const FiniteGroup& circ_j);

/// One brace per regular subgroup of Hol(G), sorted by ∘ table.
std::vector<SkewBrace> enumerate_circ_ops(const FiniteGroup& g, const Limits& limits = {});

/// Returns the lexicographically smallest φ that is an isomorphism of both
/// operations, or nullopt.
std::optional<Perm> brace_isomorphic(const SkewBrace& x, const SkewBrace& y, const Limits& limits = {});

/// Push-forward of a brace along a permutation of the carrier fixing 0.
SkewBrace relabel(const SkewBrace& b, const Perm& phi);

}  // namespace skb
