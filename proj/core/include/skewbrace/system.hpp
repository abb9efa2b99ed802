#pragma once

// Brace systems: families of group operations on one carrier together with
// the ordered pairs (u, v) for which (G, ∘_u, ∘_v) is a skew left brace.

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skb {

enum class SystemKind { General, Symmetric, FullSymmetric, Linear, Rooted };
enum class EdgeStatus { Verified, Failed };

std::string_view kind_name(SystemKind k);
std::string_view status_name(EdgeStatus s);

struct SystemEdge {
  int from = 0;
  int to = 0;
  EdgeStatus status = EdgeStatus::Failed;

  friend bool operator<(const SystemEdge& a, const SystemEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  }
};

struct BraceSystem {
  int carrier_order = 1;
  std::vector<FiniteGroup> vertices;
  std::vector<std::string> labels;
  /// (level, vertex) for systems built by iteration; several levels may
  /// share a vertex after deduplication.
  std::vector<std::pair<int, int>> levels;
  std::vector<SystemEdge> edges;
  SystemKind kind = SystemKind::General;
  /// λ used to build a linear system, empty otherwise.
  std::vector<Perm> lambda;
  int image_exponent = 0;
  std::vector<std::string> advisories;

  std::optional<int> vertex_of_level(int level) const;
  std::optional<EdgeStatus> edge(int from, int to) const;
  /// True when every edge is verified and the edge set is closed under reversal.
  bool all_pairs_verified() const;
};

/// ∘_0 = ·, a ∘_{i+1} b = a ∘_i λ_a(b), and for negative levels
/// a ∘_{-i-1} b = a ∘_{-i} λ_a^-1(b). Requires λ a homomorphism with abelian
/// image and [G, λ(G)] ⊆ Ker λ (PreconditionFails otherwise). `depth`
/// defaults to the exponent of λ(G). Every ordered pair of distinct vertices
/// is verified.
BraceSystem build_linear_system(const FiniteGroup& g, const std::vector<Perm>& lam,
                                std::optional<int> depth = std::nullopt, bool include_negative = false,
                                const Limits& limits = {});

/// Smallest p >= 1 with ∘_p = ∘_0, if built.
std::optional<int> detect_period(const BraceSystem& s);

struct LevelReport {
  bool kernel_same = true;
  bool image_same = true;
  bool lambda_automorphism_everywhere = true;
  bool closed_form_holds = true;
};

/// Checks a linear system level by level: λ read off (∘_i, ∘_{i+1}) equals
/// the building λ, each λ_a is an automorphism of every (G, ∘_i), and
/// a ∘_j b = a ∘_i λ_a^{j-i}(b) for all built 0 <= i < j.
LevelReport level_report(const BraceSystem& s);

/// Merges two linear systems sharing ∘_0. Cross pairs are verified directly;
/// when both first-level braces meet the linking hypotheses and conditions
/// every cross pair is asserted to verify.
BraceSystem union_systems(const BraceSystem& first, const BraceSystem& second);

/// Root ∘_0 = · joined to every supplied operation.
BraceSystem rooted_system(const FiniteGroup& g, const std::vector<SkewBrace>& braces);

/// x ∘_{i+1} y = x ∘_i B(x) ∘_i y ∘_i B(x)^{∘_i(-1)}; all k+1 operations are
/// kept. Consecutive pairs must verify; other pairs are only tagged.
BraceSystem build_rb_multibrace(const FiniteGroup& g, const Perm& b, int k);

std::string export_dot(const BraceSystem& s);

}  // namespace skb
