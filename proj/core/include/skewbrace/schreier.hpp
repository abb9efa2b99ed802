#pragma once

// Schreier rewriting for the exponent-sum kernel of F_n (or its reduction
// mod m) over the transversal x_1^k, and the conjugation identities for the
// λ-cyclic braces on F_n.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/free_word.hpp"

namespace skb {

/// z_{j,k} = x_1^k x_j x_1^{-k-1}, or y_j = x_1^{m-1} x_j for modulus m.
struct SchreierGen {
  bool is_y = false;
  int j = 2;
  long long k = 0;

  std::string name() const;
  friend bool operator==(const SchreierGen&, const SchreierGen&) = default;
  friend auto operator<=>(const SchreierGen&, const SchreierGen&) = default;
};

using SchreierLetter = std::pair<SchreierGen, long long>;
using SchreierProduct = std::vector<SchreierLetter>;

std::string format_product(const SchreierProduct& p);

class SchreierRewriter {
 public:
  /// modulus nullopt means the full kernel l(w) = 0 (infinite index).
  SchreierRewriter(int rank, std::optional<long long> modulus);

  int rank() const noexcept { return rank_; }
  std::optional<long long> modulus() const noexcept { return modulus_; }

  FreeWord expand(const SchreierGen& g) const;
  FreeWord expand(const SchreierProduct& p) const;
  /// Throws NotInKernel. The round trip expand(rewrite(w)) == w is asserted.
  SchreierProduct rewrite(const FreeWord& w) const;
  /// Non-trivial Schreier generators; finite modulus only.
  std::vector<SchreierGen> generators() const;

 private:
  SchreierGen gamma(long long coset, int j) const;
  bool trivial(const SchreierGen& g) const;
  void emit(SchreierProduct& out, const SchreierGen& g, long long e) const;

  int rank_;
  std::optional<long long> modulus_;
};

/// Element (θ^p, a) of the holomorph ⟨θ⟩ ⋉ F_n.
struct HolWord {
  long long p = 0;
  FreeWord a;
};

HolWord hol_mul(const HolWord& x, const HolWord& y, const FreeAutomorphism& theta);
HolWord hol_inv(const HolWord& x, const FreeAutomorphism& theta);
/// Second coordinate of x^-1 (1, z) x.
FreeWord hol_conjugate(const HolWord& x, const FreeWord& z, const FreeAutomorphism& theta);

struct FormulaCheck {
  std::string id;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  std::string note;
};

struct CyclicReport {
  int n = 0;
  long long generator_count = 0;
  long long expected_count = 0;
  /// index * (rank - 1) + 1 with index n and rank n.
  long long nielsen_schreier = 0;
  bool theta_order_ok = false;
  bool closed_form_conjugation_ok = false;
  bool round_trip_ok = false;
  int round_trip_samples = 0;
  /// Identities as verified, after the interpretations below.
  std::vector<FormulaCheck> formulas;
  /// Formulas exactly as printed where they differ from the verified form.
  std::vector<FormulaCheck> printed_variants;
  std::vector<std::string> interpretations;

  int mismatches() const;
  bool ok() const;
};

/// θ = generator cycle of F_n, s = (θ, x_1). Requires 2 <= n <= 6.
CyclicReport verify_cyclic1(int n, std::uint64_t seed = 0);

struct T4Report {
  int n = 0;
  std::string w;
  long long m = 0;
  std::string w0;
  long long window = 0;
  int shift_checks = 0;
  int shift_failures = 0;
  int raw_checks = 0;
  int raw_failures = 0;
  bool closed_form_conjugation_ok = true;
  bool direct_product = false;
  /// Unset in the direct-product case.
  std::optional<long long> fundamental_count;
  std::optional<long long> expected_count;
  std::optional<long long> rank;
  std::optional<long long> rank_formula;
  bool rank_consistent = false;
  std::vector<long long> printed_recurrence;
  std::vector<long long> derived_recurrence;
  bool printed_recurrence_consistent = false;
  std::string recurrence_note;
  std::vector<std::string> witnesses;

  bool ok() const;
};

/// θ = inner(w), s = (θ, x_1), m = l(w), w_0 = x_1^{-m} w. Requires
/// 2 <= n <= 4, w != 1, |m| <= 5; throws WindowTooSmall if window < |m+1|.
T4Report verify_t4(int n, const FreeWord& w, long long window = 6);

/// Throws FormulaMismatch naming the first failing identity.
void require_verified(const CyclicReport& r);

}  // namespace skb
