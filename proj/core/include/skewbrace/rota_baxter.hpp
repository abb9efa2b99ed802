#pragma once

// Rota-Baxter operators of weight 1: B(g)B(h) = B(g B(g) h B(g)^-1).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/free_word.hpp"

namespace skb {

struct RbCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;
};

RbCheck is_rb(const FiniteGroup& g, const Perm& b);

/// g∘h = g B(g) h B(g)^-1. Asserts that B is Rota-Baxter on (G,∘) and a
/// homomorphism (G,∘) -> (G,·). Throws NotRotaBaxter.
FiniteGroup derived_group(const FiniteGroup& g, const Perm& b);

/// (G, ·, ∘) for the derived ∘; asserts λ_a(b) = B(a) b B(a)^-1.
SkewBrace rb_brace(const FiniteGroup& g, const Perm& b);

struct RbCriterion {
  bool property = false;
  bool center_condition = false;
  bool agree = false;
};

/// property = symmetric; center_condition: B(c)^-1 B(a)^-1 B(ca) central.
RbCriterion rb_symmetry_check(const FiniteGroup& g, const Perm& b);
/// property = λ-homomorphic; center_condition: B(ac)^-1 B(a) B(c) central.
RbCriterion rb_lambda_hom_check(const FiniteGroup& g, const Perm& b);

/// [B(b), B^2(a) B(a)] = 1 for all a, b. Requires B to be an anti-homomorphism.
bool rb_anti_hom_lemma_check(const FiniteGroup& g, const Perm& b);

struct CircLetter {
  int element = 0;
  long long power = 1;
};

struct CircExpansion {
  int folded = 0;
  int formula = 0;
};

/// Evaluates a_1^{∘k_1} ∘ ... ∘ a_s^{∘k_s} by folding the derived operation and by
/// (a_1 B(a_1))^{k_1} ... (a_s B(a_s))^{k_s} B(a_s)^{-k_s} ... B(a_1)^{-k_1}.
CircExpansion circ_word_expand(const FiniteGroup& g, const Perm& b, const std::vector<CircLetter>& letters);

struct SecondLevelReport {
  bool circ2_matches = true;
  bool lambda1_matches = true;
};

/// Compares the closed forms of x ∘_2 y and λ^{(1)}_x(y) in terms of · with the
/// tables obtained by iterating the derived operation.
SecondLevelReport rb_second_level_check(const FiniteGroup& g, const Perm& b);

/// Every Rota-Baxter operator among all self-maps (exhaustive) or among
/// endomorphisms only.
std::vector<Perm> find_rb_operators(const FiniteGroup& g, bool endomorphisms_only);

// Free group of rank 2 with B(x1) = B(x2) = x1, i.e. B(w) = x1^{l(w)}.

/// a ∘_m b = a x1^{m l(a)} b x1^{-m l(a)}.
FreeWord free_rb_example(long long m, const FreeWord& a, const FreeWord& b);

struct FreeRbReport {
  int samples = 0;
  int rb_failures = 0;
  int multibrace_failures = 0;
  /// Sampled check that the derived-operation recursion at level i equals
  /// a x1^{(2^i - 1) l(a)} b x1^{-(2^i - 1) l(a)}.
  int recursion_failures = 0;
  std::vector<std::string> witnesses;
};

FreeRbReport free_rb_check(long long max_m, int samples, int max_len, std::uint64_t seed);

/// B extended from generator images as a homomorphism of F_n.
FreeWord free_operator_apply(const std::vector<FreeWord>& images, const FreeWord& w);

struct FreeRbSample {
  int samples = 0;
  int failures = 0;
  std::vector<std::string> witnesses;
};

/// Sampled check of B(g)B(h) = B(g B(g) h B(g)^-1).
FreeRbSample free_is_rb(const std::vector<FreeWord>& images, int samples, int max_len, std::uint64_t seed);

}  // namespace skb
