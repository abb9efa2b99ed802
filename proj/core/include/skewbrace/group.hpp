#pragma once

// Finite groups stored as Cayley tables on {0, ..., n-1}, identity at 0.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/error.hpp"

namespace skb {

using Perm = std::vector<int>;
using Table = std::vector<std::vector<int>>;

Perm identity_perm(int n);
/// (f * g)(x) = f(g(x)).
Perm compose(const Perm& f, const Perm& g);
Perm inverse_perm(const Perm& f);
bool is_permutation(std::span<const int> images, int n);
int perm_order(const Perm& f);

class FiniteGroup {
 public:
  static constexpr int identity = 0;

  /// The trivial group.
  FiniteGroup();

  /// Validates all group axioms and requires the identity at index 0.
  /// Throws skb::Error describing the first violated axiom.
  static FiniteGroup from_table(std::string name, int order, std::vector<int> flat);
  static FiniteGroup from_table(std::string name, const Table& table);

  /// Skips the O(n^3) axiom scan; the caller guarantees a group table with
  /// identity 0. Used for structurally correct constructions (holomorphs,
  /// direct products).
  static FiniteGroup unchecked(std::string name, int order, std::vector<int> flat);

  int order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  int mul(int a, int b) const noexcept { return data_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const noexcept { return inverse_[a]; }
  /// a^-1 b^-1 a b
  int commutator(int a, int b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  /// g x g^-1
  int conjugate(int g, int x) const noexcept { return mul(mul(g, x), inv(g)); }
  int power(int a, long long k) const;

  std::span<const int> flat() const noexcept { return data_; }
  Table table() const;
  std::span<const int> inverses() const noexcept { return inverse_; }

  bool is_abelian() const;
  int element_order(int a) const;
  int exponent() const;

  FiniteGroup opposite() const;
  FiniteGroup renamed(std::string name) const;

  /// Table equality; the name is ignored.
  bool same_table(const FiniteGroup& other) const noexcept { return data_ == other.data_; }
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.data_ == b.data_;
  }

 private:
  FiniteGroup(std::string name, int order, std::vector<int> flat);

  std::string name_;
  int order_ = 1;
  std::vector<int> data_;
  std::vector<int> inverse_;
};

struct AxiomViolation {
  Errc kind;
  std::vector<int> witness;
  std::string message;
};

struct GroupVerification {
  std::optional<FiniteGroup> group;
  /// relabeling[old label] = new label; identity moved to 0.
  Perm relabeling;
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return group.has_value(); }
};

/// Checks every group axiom on an arbitrary labeling; on success the identity
/// is moved to index 0 and the applied relabeling is reported.
/// Throws MalformedTable when the input is not a square array of in-range indices.
GroupVerification verify_group(const Table& table, std::string name = {});

/// Applies `relabeling` (old -> new) to a square table.
Table relabel_table(const Table& table, const Perm& relabeling);

struct GroupMap {
  Perm images;
  bool is_endomorphism = false;
  bool is_automorphism = false;
  bool is_anti_homomorphism = false;

  friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.images == b.images; }
  friend bool operator<(const GroupMap& a, const GroupMap& b) { return a.images < b.images; }
};

GroupMap analyze_map(const FiniteGroup& g, Perm images);

/// Subgroup generated by `seeds` under `mul`, sorted. Identity is element 0.
std::vector<int> closure(std::span<const int> seeds, int universe,
                         const std::function<int(int, int)>& mul);
std::vector<int> subgroup_closure(const FiniteGroup& g, std::span<const int> seeds);
bool is_subgroup(const FiniteGroup& g, std::span<const int> elements);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const int> elements);

/// Greedy generating set: walk elements in increasing order and keep any
/// element not already in the span of the kept ones.
std::vector<int> greedy_generators(const FiniteGroup& g);

/// Visits every homomorphism src -> dst (bijective ones only when requested),
/// found by backtracking over the images of greedy_generators(src).
void for_each_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, bool bijective,
                           const std::function<void(const Perm&)>& visit);

/// All automorphisms, sorted lexicographically on image arrays (identity
/// first). Throws OrderCapExceeded above limits.max_group_order.
std::vector<GroupMap> automorphism_group(const FiniteGroup& g, const Limits& limits = {});

struct GroupStructure {
  std::vector<int> center;
  std::vector<int> derived_subgroup;
  /// One map per coset of the center, keyed by its smallest representative.
  std::vector<GroupMap> inner_automorphisms;
  std::vector<int> inner_representatives;
};

GroupStructure structure_subgroups(const FiniteGroup& g);
std::vector<int> center(const FiniteGroup& g);
std::vector<int> derived_subgroup(const FiniteGroup& g);
/// Length of the lower central series, or nullopt when not nilpotent.
std::optional<int> nilpotency_class(const FiniteGroup& g);
/// Every subgroup as a sorted element list, in lexicographic order.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

/// Hol G = Aut G x| G with (f,a)(g,b) = (fg, a f(b)). Element (f, a) has
/// index f * |G| + a, so the identity (id, e) is index 0.
class Holomorph {
 public:
  static Holomorph build(const FiniteGroup& base, const Limits& limits = {});

  const FiniteGroup& base() const noexcept { return base_; }
  const std::vector<GroupMap>& automorphisms() const noexcept { return autos_; }
  int order() const noexcept { return static_cast<int>(autos_.size()) * base_.order(); }

  int index_of(int aut, int elem) const noexcept { return aut * base_.order() + elem; }
  std::pair<int, int> pair_of(int index) const noexcept {
    return {index / base_.order(), index % base_.order()};
  }
  int mul(int p, int q) const noexcept;
  int inv(int p) const noexcept;
  /// Index of the automorphism f∘g.
  int compose_auts(int f, int g) const noexcept {
    return aut_mul_[static_cast<std::size_t>(f) * autos_.size() + g];
  }
  int aut_index(const Perm& images) const;

  /// Full Cayley table; O(|Hol|^2) memory.
  FiniteGroup to_group() const;

 private:
  FiniteGroup base_;
  std::vector<GroupMap> autos_;
  std::vector<int> aut_mul_;
  std::vector<int> aut_inv_;
};

std::vector<int> subgroup_closure(const Holomorph& h, std::span<const int> seeds);

/// True iff S has |G| elements whose second coordinates are pairwise
/// distinct. Throws NotASubgroup when S is not closed.
bool is_regular_subgroup(const Holomorph& h, std::span<const int> elements);

}  // namespace skb
