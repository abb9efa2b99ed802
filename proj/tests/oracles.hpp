#pragma once

// Brute-force reference computations used to cross-check the library.

#include <set>
#include <vector>

#include "skewbrace/group.hpp"

namespace oracle {

using Flat = std::vector<int>;

/// Every group table on {0..n-1} with identity 0 that satisfies
/// a∘(b·c) = (a∘b)·a^-1·(a∘c) over `add`. Scans all n^((n-1)^2) fillings.
std::set<Flat> latin_square_braces(const skb::FiniteGroup& add);

/// All automorphisms by scanning every permutation of the carrier.
std::vector<skb::Perm> automorphisms_by_scan(const skb::FiniteGroup& g);

/// ∘ tables of the regular subgroups of Hol(G), found by solving
/// f_{a f_a(b)} = f_a f_b for maps a -> f_a into Aut(G) by backtracking.
std::set<Flat> regular_subgroup_braces(const skb::FiniteGroup& g);

/// λ_{a∘b} = λ_{b·a} for all a, b.
bool lambda_symmetry_criterion(const skb::FiniteGroup& add, const skb::FiniteGroup& circ);

}  // namespace oracle
