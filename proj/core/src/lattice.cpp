#include "skewbrace/lattice.hpp"

#include <random>

namespace skb {

std::string Vec2::str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in addition", {a, b});
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer overflow in multiplication", {a, b});
  return r;
}

Vec2 operator+(const Vec2& u, const Vec2& v) { return {checked_add(u.x, v.x), checked_add(u.y, v.y)}; }
Vec2 operator-(const Vec2& u, const Vec2& v) { return {checked_add(u.x, -v.x), checked_add(u.y, -v.y)}; }

long long exp_sum(const Vec2& v) { return checked_add(v.x, v.y); }

long long Mat2::det() const { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)), checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
          checked_add(checked_mul(c, o.a), checked_mul(d, o.c)), checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

Mat2 Mat2::operator-(const Mat2& o) const {
  return {checked_add(a, -o.a), checked_add(b, -o.b), checked_add(c, -o.c), checked_add(d, -o.d)};
}

Vec2 Mat2::operator*(const Vec2& v) const {
  return {checked_add(checked_mul(a, v.x), checked_mul(b, v.y)), checked_add(checked_mul(c, v.x), checked_mul(d, v.y))};
}

Mat2 Mat2::inverse() const {
  long long dt = det();
  if (dt != 1 && dt != -1) throw Error(Errc::PreconditionFails, "matrix not invertible over the integers", {dt});
  return {d * dt, -b * dt, -c * dt, a * dt};
}

Mat2 lattice_lambda(long long p) {
  Mat2 m{checked_add(1, p), p, -p, checked_add(1, -p)};
  Mat2 n = m - Mat2::identity();
  ensure(n * n == Mat2{0, 0, 0, 0}, "(M - I)^2 = 0", {p});
  return m;
}

Mat2 lattice_power(long long p, long long k) {
  Mat2 n = lattice_lambda(p) - Mat2::identity();
  return {checked_add(1, checked_mul(k, n.a)), checked_mul(k, n.b), checked_mul(k, n.c),
          checked_add(1, checked_mul(k, n.d))};
}

Mat2 matrix_power_iterated(const Mat2& m, long long k) {
  Mat2 step = k < 0 ? m.inverse() : m;
  Mat2 r = Mat2::identity();
  for (long long t = 0; t < (k < 0 ? -k : k); ++t) r = r * step;
  return r;
}

Vec2 lattice_circ(const Vec2& a, const Vec2& b, long long p, long long i) {
  return a + lattice_power(p, checked_mul(i, exp_sum(a))) * b;
}

Vec2 lattice_circ_iterated(const Vec2& a, const Vec2& b, long long p, long long i) {
  if (i < 0) throw Error(Errc::PreconditionFails, "level must be non-negative", {i});
  Mat2 lam = lattice_power(p, exp_sum(a));
  Vec2 c = b;
  for (long long t = 0; t < i; ++t) c = lam * c;
  return a + c;
}

Vec2 lattice_circ_inverse(const Vec2& a, long long p, long long i) {
  Vec2 r = lattice_power(p, -checked_mul(i, exp_sum(a))) * a;
  return {-r.x, -r.y};
}

Vec2 lattice_circ_power(const Vec2& a, long long k, long long p, long long i) {
  Vec2 base = k < 0 ? lattice_circ_inverse(a, p, i) : a;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Vec2 r{0, 0};
  while (e) {
    if (e & 1) r = lattice_circ(r, base, p, i);
    base = lattice_circ(base, base, p, i);
    e >>= 1;
  }
  return r;
}

int LatticeReport::failures() const {
  return power_law_failures + closed_form_failures + group_failures + associativity_failures + commutativity_failures +
         compatibility_failures + torsion_failures + generation_failures + lambda_hom_failures +
         kernel_condition_failures;
}

LatticeReport lattice_system_check(long long p, int depth, int samples, std::uint64_t seed) {
  if (depth < 0 || depth > 8) throw Error(Errc::PreconditionFails, "lattice depth must lie in [0, 8]", {depth});
  LatticeReport rep;
  rep.p = p;
  rep.depth = depth;
  rep.seed = seed;
  std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed % 2147483647ULL));
  auto coord = [&rng] { return static_cast<long long>(rng() % 41) - 20; };
  auto vec = [&] { return Vec2{coord(), coord()}; };
  auto witness = [&rep](std::string msg) {
    if (rep.witnesses.size() < 5) rep.witnesses.push_back(std::move(msg));
  };

  const Mat2 m = lattice_lambda(p);
  for (long long k = -6; k <= 6; ++k)
    if (!(lattice_power(p, k) == matrix_power_iterated(m, k))) {
      ++rep.power_law_failures;
      witness("power law k=" + std::to_string(k));
    }

  const Vec2 zero{0, 0}, e1{1, 0}, e2{0, 1};
  for (int s = 0; s < samples; ++s) {
    ++rep.samples;
    Vec2 a = vec(), b = vec(), c = vec();
    std::string abc = " a=" + a.str() + " b=" + b.str() + " c=" + c.str();

    if (!(lattice_power(p, exp_sum(a) + exp_sum(b)) == lattice_power(p, exp_sum(a)) * lattice_power(p, exp_sum(b)))) {
      ++rep.lambda_hom_failures;
      witness("lambda hom" + abc);
    }
    if (exp_sum(lattice_power(p, exp_sum(a)) * b - b) != 0) {
      ++rep.kernel_condition_failures;
      witness("kernel condition" + abc);
    }

    for (int i = 0; i <= depth; ++i) {
      auto op = [&](const Vec2& u, const Vec2& v) { return lattice_circ(u, v, p, i); };
      std::string lvl = " level " + std::to_string(i);
      if (!(op(a, b) == lattice_circ_iterated(a, b, p, i))) {
        ++rep.closed_form_failures;
        witness("closed form" + lvl + abc);
      }
      Vec2 ai = lattice_circ_inverse(a, p, i);
      if (!(op(a, zero) == a) || !(op(zero, a) == a) || !(op(a, ai) == zero) || !(op(ai, a) == zero)) {
        ++rep.group_failures;
        witness("identity/inverse" + lvl + abc);
      }
      if (!(op(op(a, b), c) == op(a, op(b, c)))) {
        ++rep.associativity_failures;
        witness("associativity" + lvl + abc);
      }
      if (!(op(a, b) == op(b, a))) {
        ++rep.commutativity_failures;
        witness("commutativity" + lvl + abc);
      }
      if (!(a == zero)) {
        for (long long k = 1; k <= 6; ++k)
          if (lattice_circ_power(a, k, p, i) == zero) {
            ++rep.torsion_failures;
            witness("torsion" + lvl + abc);
            break;
          }
      }
      // Solve a = x_1^{∘u} ∘ x_2^{∘(s(a)-u)} from two probes u = 0, 1 and confirm by evaluation.
      long long sa = exp_sum(a);
      auto probe = [&](long long u) { return op(lattice_circ_power(e1, u, p, i), lattice_circ_power(e2, sa - u, p, i)); };
      Vec2 f0 = probe(0), step = probe(1) - f0, gap = a - f0;
      bool found = false;
      if (step.x != 0 && gap.x % step.x == 0) found = probe(gap.x / step.x) == a;
      else if (step.x == 0 && step.y != 0 && gap.y % step.y == 0) found = probe(gap.y / step.y) == a;
      if (!found) {
        ++rep.generation_failures;
        witness("generation" + lvl + abc);
      }
      for (int j = 0; j < i; ++j) {
        auto add = [&](const Vec2& u, const Vec2& v) { return lattice_circ(u, v, p, j); };
        Vec2 lhs = op(a, add(b, c));
        Vec2 rhs = add(add(op(a, b), lattice_circ_inverse(a, p, j)), op(a, c));
        if (!(lhs == rhs)) {
          ++rep.compatibility_failures;
          witness("brace law (" + std::to_string(j) + "," + std::to_string(i) + ")" + abc);
        }
      }
    }
  }
  return rep;
}

}  // namespace skb
