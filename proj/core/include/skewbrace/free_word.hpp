#pragma once

// Reduced words in the free group F_n on x_1, ..., x_n, stored as syllables
// x_i^e with no zero exponents and no two adjacent syllables on one generator.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skewbrace/error.hpp"

namespace skb {

struct Syllable {
  int gen = 1;
  long long exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class FreeWord {
 public:
  explicit FreeWord(int rank = 1);
  /// Freely reduces the given syllables.
  FreeWord(int rank, const std::vector<Syllable>& syllables);

  static FreeWord generator(int rank, int i, long long exp = 1);
  /// Accepts "x1 x2^-1 x1^3", "x1x2", and "1" or "" for the identity.
  static FreeWord parse(std::string_view text, int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }
  /// Number of letters.
  long long length() const noexcept;
  /// l(w): the sum of all exponents.
  long long exp_sum() const noexcept;

  FreeWord operator*(const FreeWord& other) const;
  FreeWord& operator*=(const FreeWord& other);
  FreeWord inverse() const;
  FreeWord pow(long long k) const;
  /// Replaces every generator index i by map[i - 1] (1-based targets).
  FreeWord rename(const std::vector<int>& map) const;

  /// "1" for the identity.
  std::string str() const;

  friend bool operator==(const FreeWord& a, const FreeWord& b) noexcept {
    return a.rank_ == b.rank_ && a.syl_ == b.syl_;
  }
  friend bool operator<(const FreeWord& a, const FreeWord& b) noexcept { return a.syl_ < b.syl_; }

 private:
  void push(Syllable s);

  int rank_;
  std::vector<Syllable> syl_;
};

/// Automorphisms of F_n built from the generator cycle x_i -> x_{i+1}, inner
/// automorphisms u -> w u w^-1, powers and compositions.
class FreeAutomorphism {
 public:
  enum class Kind { GeneratorCycle, Inner, Power, Compose };

  static FreeAutomorphism identity(int rank);
  static FreeAutomorphism cycle(int rank);
  static FreeAutomorphism inner(const FreeWord& w);
  static FreeAutomorphism power(const FreeAutomorphism& base, long long k);
  /// compose({f, g})(u) = f(g(u)).
  static FreeAutomorphism compose(const std::vector<FreeAutomorphism>& parts);

  Kind kind() const noexcept;
  int rank() const noexcept;
  FreeWord apply(const FreeWord& u) const;
  /// θ^k(u), k may be negative.
  FreeWord apply_power(long long k, const FreeWord& u) const;
  FreeAutomorphism inverse() const { return power(*this, -1); }
  /// True when every generator is fixed.
  bool is_identity() const;
  std::string describe() const;

 private:
  struct Node;
  explicit FreeAutomorphism(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// a ∘ b = a θ^{l(a)}(b).
FreeWord circ_eval(const FreeWord& a, const FreeWord& b, const FreeAutomorphism& theta);
/// ∘-inverse θ^{-l(a)}(a^-1).
FreeWord circ_inverse(const FreeWord& a, const FreeAutomorphism& theta);

/// Deterministic word sampler over a minimal-standard linear congruential
/// generator: up to max_syllables syllables with exponents in [-3, 3] \ {0}.
class WordSampler {
 public:
  WordSampler(int rank, std::uint64_t seed, int max_syllables = 8);
  FreeWord next();
  /// A word with exponent sum zero.
  FreeWord next_in_kernel(long long modulus = 0);
  long long uniform(long long lo, long long hi);

 private:
  std::uint64_t step();
  int rank_;
  int max_syllables_;
  std::uint64_t state_;
};

struct SampledBraceReport {
  int samples = 0;
  int left_failures = 0;
  int symmetry_failures = 0;
  int direct_symmetric_failures = 0;
  int inverse_failures = 0;
  std::vector<std::string> witnesses;

  bool ok() const noexcept {
    return left_failures == 0 && symmetry_failures == 0 && direct_symmetric_failures == 0 && inverse_failures == 0;
  }
};

/// On sampled triples: a∘(bc) = (a∘b) a^-1 (a∘c); λ_{a∘b} = λ_{ba} on a sampled
/// argument; the symmetric law a(b∘c) = (ab)∘ā∘(ac); and a∘ā = 1.
SampledBraceReport sampled_brace_check(const FreeAutomorphism& theta, int samples, int max_len, std::uint64_t seed);

}  // namespace skb
