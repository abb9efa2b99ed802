#pragma once

// Named small groups. Dihedral groups are indexed by the polygon size, so
// dihedral(4) has order 8.

#include <string>
#include <string_view>
#include <vector>

#include "skewbrace/group.hpp"

namespace skb {

FiniteGroup cyclic(int n);
/// Elements r^i s^j stored at index i + n*j.
FiniteGroup dihedral(int n);
/// Order 4n: elements a^i x^j at index i + 2n*j, x a = a^-1 x, x^2 = a^n.
FiniteGroup dicyclic(int n);
inline FiniteGroup quaternion8() { return dicyclic(2).renamed("Q8"); }
/// Pair (a, b) stored at index a*|H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup symmetric3();
FiniteGroup alternating4();

/// Parses cycle notation such as "(1 2)(3 4)" on points 1..degree.
Perm parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Perm& p);

/// Closure of the generators under composition; elements sorted
/// lexicographically as image arrays, so the identity is index 0.
/// Composition is (pq)(x) = p(q(x)).
FiniteGroup permutation_group(std::string name, int degree, const std::vector<Perm>& generators,
                              const Limits& limits = {});

/// Resolves names such as "Z4", "D4", "Q8", "Dic3", "S3", "A4", "Z2xZ4".
/// Throws ParseError for unknown names.
FiniteGroup group_by_name(std::string_view name);

/// One representative per isomorphism type for every order up to 12.
std::vector<FiniteGroup> small_groups(int max_order);

}  // namespace skb
