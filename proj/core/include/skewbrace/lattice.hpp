#pragma once

// Braces on Z^2 = <x_1, x_2> with λ_a = M^{s(a)}, s(a) = a_1 + a_2, where M
// sends x_1 to (1+p) x_1 - p x_2 and x_2 to p x_1 + (1-p) x_2.

#include <cstdint>
#include <string>
#include <vector>

#include "skewbrace/error.hpp"

namespace skb {

struct Vec2 {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  std::string str() const;
};

/// Row-major [[a, b], [c, d]]; columns are the images of x_1 and x_2.
struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  static Mat2 identity() { return {}; }
  long long det() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Vec2 operator*(const Vec2& v) const;
  /// Exact inverse; requires det = ±1.
  Mat2 inverse() const;
};

// Checked arithmetic; throws Overflow.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
Vec2 operator+(const Vec2& u, const Vec2& v);
Vec2 operator-(const Vec2& u, const Vec2& v);

long long exp_sum(const Vec2& v);

/// Asserts (M - I)^2 = 0.
Mat2 lattice_lambda(long long p);
/// M^k = I + k(M - I).
Mat2 lattice_power(long long p, long long k);
/// M^k by repeated multiplication with M or M^-1.
Mat2 matrix_power_iterated(const Mat2& m, long long k);

/// a ∘_i b = a + M^{i s(a)} b.
Vec2 lattice_circ(const Vec2& a, const Vec2& b, long long p, long long i);
/// ∘_0 = +, a ∘_{i+1} b = a ∘_i λ_a(b), unrolled.
Vec2 lattice_circ_iterated(const Vec2& a, const Vec2& b, long long p, long long i);
/// Inverse of a for ∘_i.
Vec2 lattice_circ_inverse(const Vec2& a, long long p, long long i);
/// a^{∘_i k} by repeated squaring; k may be negative.
Vec2 lattice_circ_power(const Vec2& a, long long k, long long p, long long i);

struct LatticeReport {
  long long p = 0;
  int depth = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  int power_law_failures = 0;
  int closed_form_failures = 0;
  int group_failures = 0;
  int associativity_failures = 0;
  int commutativity_failures = 0;
  int compatibility_failures = 0;
  int torsion_failures = 0;
  int generation_failures = 0;
  int lambda_hom_failures = 0;
  int kernel_condition_failures = 0;
  std::vector<std::string> witnesses;

  int failures() const;
  bool ok() const { return failures() == 0; }
};

/// Sampled checks on levels 0..depth: each ∘_i is an associative group with
/// identity 0 and the inverse above, commutative, torsion-free on samples and
/// generated by x_1, x_2 on samples; (∘_j, ∘_i) satisfies the brace law for
/// j < i; λ is a homomorphism and s(λ_a(b) - b) = 0. Requires 0 <= depth <= 8.
LatticeReport lattice_system_check(long long p, int depth, int samples, std::uint64_t seed);

}  // namespace skb
