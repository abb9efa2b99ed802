#pragma once

// Ideals, quotients, triviality chains, naturality and brace automorphisms.

#include <optional>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skb {

struct Ideal {
  std::vector<int> elements;
  bool subgroup = false;
  bool lambda_invariant = false;
  bool normal_add = false;
  bool normal_circ = false;
  /// (a, x) with λ_a(x) outside, or g, x with the conjugate outside.
  std::optional<std::pair<int, int>> lambda_witness;
  std::optional<std::pair<int, int>> add_witness;
  std::optional<std::pair<int, int>> circ_witness;

  bool ok() const noexcept { return subgroup && lambda_invariant && normal_add && normal_circ; }
};

/// `elements` need not be sorted; the result is.
Ideal is_ideal(const SkewBrace& b, std::vector<int> elements);

/// Ker λ; asserts it is an ideal on which ∘ and · agree.
Ideal kernel_ideal(const SkewBrace& b);

/// Index of the coset of each element, cosets ordered by smallest member.
std::vector<int> coset_index(const SkewBrace& b, const std::vector<int>& ideal);

/// G/I on cosets ordered by smallest member. Throws NotAnIdeal.
SkewBrace quotient_brace(const SkewBrace& b, const std::vector<int>& ideal);

/// True when J/I is a trivial brace, i.e. λ_x(y) y^-1 ∈ I for x, y ∈ J.
bool quotient_is_trivial(const SkewBrace& b, const std::vector<int>& i, const std::vector<int>& j);

/// All ideals, ordered by size and then lexicographically.
std::vector<std::vector<int>> all_ideals(const SkewBrace& b, const Limits& limits = {});

struct TrivialityChain {
  std::vector<std::vector<int>> chain;
  int step = 0;
};

/// Shortest chain {e} = I_0 < ... < I_s = G of ideals with trivial quotients.
/// The trivial group gives the one-term chain and step 0. Throws
/// OrderCapExceeded above limits.max_structure_order.
std::optional<TrivialityChain> triviality_step(const SkewBrace& b, const Limits& limits = {});

struct NaturalityReport {
  bool is_natural = false;
  bool quotient_natural = false;
};

/// Natural means ∘ = ·^op. Throws NotAntiHomomorphic.
NaturalityReport naturality_report(const SkewBrace& b);

/// Automorphisms of (G,·) that are also automorphisms of (G,∘), sorted.
std::vector<GroupMap> brace_automorphisms(const SkewBrace& b, const Limits& limits = {});

}  // namespace skb
