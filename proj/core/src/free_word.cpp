#include "skewbrace/free_word.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <utility>

namespace skb {

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw Error(Errc::RankMismatch, "free group rank must be positive", {rank});
}

FreeWord::FreeWord(int rank, const std::vector<Syllable>& syllables) : FreeWord(rank) {
  for (const auto& s : syllables) push(s);
}

void FreeWord::push(Syllable s) {
  if (s.gen < 1 || s.gen > rank_)
    throw Error(Errc::RankMismatch, "generator x" + std::to_string(s.gen) + " outside rank " + std::to_string(rank_),
                {s.gen, rank_});
  if (s.exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == s.gen) {
    syl_.back().exp += s.exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back(s);
}

FreeWord FreeWord::generator(int rank, int i, long long exp) { return FreeWord(rank, {{i, exp}}); }

FreeWord FreeWord::parse(std::string_view text, int rank) {
  FreeWord w(rank);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(Errc::ParseError, what + " at position " + std::to_string(i) + " in \"" + std::string(text) + "\"",
                 {static_cast<long long>(i)});
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) -> long long {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    if (!tok.empty() && tok[0] == '+') tok.remove_prefix(1);
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty()) {
      i = start;
      throw fail("expected integer");
    }
    return v;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) throw fail("unexpected input after identity");
    return w;
  }
  while (true) {
    skip();
    if (i == text.size()) break;
    if (text[i] != 'x') throw fail("expected generator 'x<i>'");
    ++i;
    long long g = read_int(false);
    long long e = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      e = read_int(true);
    }
    if (g < 1 || g > rank)
      throw Error(Errc::RankMismatch, "generator x" + std::to_string(g) + " outside rank " + std::to_string(rank),
                  {g, rank});
    w.push({static_cast<int>(g), e});
  }
  return w;
}

long long FreeWord::length() const noexcept {
  long long n = 0;
  for (const auto& s : syl_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

long long FreeWord::exp_sum() const noexcept {
  long long n = 0;
  for (const auto& s : syl_) n += s.exp;
  return n;
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  FreeWord r = *this;
  r *= other;
  return r;
}

FreeWord& FreeWord::operator*=(const FreeWord& other) {
  if (other.rank_ != rank_)
    throw Error(Errc::RankMismatch, "multiplying words of different rank", {rank_, other.rank_});
  for (const auto& s : other.syl_) push(s);
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord r(rank_);
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.push({it->gen, -it->exp});
  return r;
}

FreeWord FreeWord::pow(long long k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  FreeWord r(rank_);
  // Powers of a cyclically reduced core would be faster; plain repetition is enough here.
  for (long long j = 0; j < k; ++j) r *= base;
  return r;
}

FreeWord FreeWord::rename(const std::vector<int>& map) const {
  if (static_cast<int>(map.size()) != rank_)
    throw Error(Errc::RankMismatch, "rename map has wrong size", {static_cast<long long>(map.size()), rank_});
  FreeWord r(rank_);
  for (const auto& s : syl_) r.push({map[s.gen - 1], s.exp});
  return r;
}

std::string FreeWord::str() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

struct FreeAutomorphism::Node {
  Kind kind;
  int rank;
  FreeWord word;
  std::vector<FreeAutomorphism> parts;
  long long k = 1;
};

FreeAutomorphism FreeAutomorphism::identity(int rank) { return power(cycle(rank), 0); }

FreeAutomorphism FreeAutomorphism::cycle(int rank) {
  return FreeAutomorphism(std::make_shared<const Node>(Node{Kind::GeneratorCycle, rank, FreeWord(rank), {}, 1}));
}

FreeAutomorphism FreeAutomorphism::inner(const FreeWord& w) {
  return FreeAutomorphism(std::make_shared<const Node>(Node{Kind::Inner, w.rank(), w, {}, 1}));
}

FreeAutomorphism FreeAutomorphism::power(const FreeAutomorphism& base, long long k) {
  return FreeAutomorphism(
      std::make_shared<const Node>(Node{Kind::Power, base.rank(), FreeWord(base.rank()), {base}, k}));
}

FreeAutomorphism FreeAutomorphism::compose(const std::vector<FreeAutomorphism>& parts) {
  if (parts.empty()) throw Error(Errc::PreconditionFails, "compose needs at least one automorphism");
  for (const auto& p : parts)
    if (p.rank() != parts.front().rank())
      throw Error(Errc::RankMismatch, "composing automorphisms of different rank", {parts.front().rank(), p.rank()});
  return FreeAutomorphism(
      std::make_shared<const Node>(Node{Kind::Compose, parts.front().rank(), FreeWord(parts.front().rank()), parts, 1}));
}

FreeAutomorphism::Kind FreeAutomorphism::kind() const noexcept { return node_->kind; }
int FreeAutomorphism::rank() const noexcept { return node_->rank; }

FreeWord FreeAutomorphism::apply(const FreeWord& u) const { return apply_power(1, u); }

FreeWord FreeAutomorphism::apply_power(long long k, const FreeWord& u) const {
  if (u.rank() != node_->rank)
    throw Error(Errc::RankMismatch, "automorphism applied to word of different rank", {node_->rank, u.rank()});
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::GeneratorCycle: {
      long long r = n.rank;
      long long shift = ((k % r) + r) % r;
      std::vector<int> map(n.rank);
      for (int i = 0; i < n.rank; ++i) map[i] = static_cast<int>((i + shift) % r) + 1;
      return u.rename(map);
    }
    case Kind::Inner: {
      FreeWord wk = n.word.pow(k);
      return wk * u * wk.inverse();
    }
    case Kind::Power:
      return n.parts.front().apply_power(n.k * k, u);
    case Kind::Compose: {
      FreeWord r = u;
      long long steps = k < 0 ? -k : k;
      for (long long s = 0; s < steps; ++s) {
        if (k > 0) {
          for (auto it = n.parts.rbegin(); it != n.parts.rend(); ++it) r = it->apply(r);
        } else {
          for (const auto& p : n.parts) r = p.apply_power(-1, r);
        }
      }
      return r;
    }
  }
  return u;
}

bool FreeAutomorphism::is_identity() const {
  for (int i = 1; i <= node_->rank; ++i) {
    FreeWord x = FreeWord::generator(node_->rank, i);
    if (!(apply(x) == x)) return false;
  }
  return true;
}

std::string FreeAutomorphism::describe() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::GeneratorCycle:
      return "cycle(" + std::to_string(n.rank) + ")";
    case Kind::Inner:
      return "inner(" + n.word.str() + ")";
    case Kind::Power:
      return "(" + n.parts.front().describe() + ")^" + std::to_string(n.k);
    case Kind::Compose: {
      std::string out;
      for (const auto& p : n.parts) {
        if (!out.empty()) out += " . ";
        out += p.describe();
      }
      return out;
    }
  }
  return {};
}

FreeWord circ_eval(const FreeWord& a, const FreeWord& b, const FreeAutomorphism& theta) {
  return a * theta.apply_power(a.exp_sum(), b);
}

FreeWord circ_inverse(const FreeWord& a, const FreeAutomorphism& theta) {
  return theta.apply_power(-a.exp_sum(), a.inverse());
}

WordSampler::WordSampler(int rank, std::uint64_t seed, int max_syllables)
    : rank_(rank), max_syllables_(max_syllables), state_(seed % 2147483646ULL + 1) {
  if (rank < 1) throw Error(Errc::RankMismatch, "sampler rank must be positive", {rank});
  if (max_syllables < 0) throw Error(Errc::PreconditionFails, "max_syllables must be non-negative", {max_syllables});
}

std::uint64_t WordSampler::step() {
  state_ = state_ * 48271ULL % 2147483647ULL;
  return state_;
}

long long WordSampler::uniform(long long lo, long long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(step() % span);
}

FreeWord WordSampler::next() {
  std::vector<Syllable> syl;
  auto count = uniform(0, max_syllables_);
  for (long long i = 0; i < count; ++i) {
    int g = static_cast<int>(uniform(1, rank_));
    long long e = uniform(1, 6);
    e = e <= 3 ? e : 3 - e;
    syl.push_back({g, e});
  }
  return FreeWord(rank_, syl);
}

FreeWord WordSampler::next_in_kernel(long long modulus) {
  FreeWord w = next();
  long long l = w.exp_sum();
  if (modulus > 0) l = ((l % modulus) + modulus) % modulus;
  return w * FreeWord::generator(rank_, 1, -l);
}

SampledBraceReport sampled_brace_check(const FreeAutomorphism& theta, int samples, int max_len, std::uint64_t seed) {
  SampledBraceReport rep;
  WordSampler sampler(theta.rank(), seed, max_len);
  auto witness = [&](const std::string& law, const FreeWord& a, const FreeWord& b, const FreeWord& c) {
    if (rep.witnesses.size() < 5) rep.witnesses.push_back(law + ": a=" + a.str() + " b=" + b.str() + " c=" + c.str());
  };
  for (int s = 0; s < samples; ++s) {
    FreeWord a = sampler.next(), b = sampler.next(), c = sampler.next();
    ++rep.samples;
    if (!(circ_eval(a, b * c, theta) == circ_eval(a, b, theta) * a.inverse() * circ_eval(a, c, theta))) {
      ++rep.left_failures;
      witness("left", a, b, c);
    }
    FreeWord ab = circ_eval(a, b, theta), ba = b * a;
    if (!(ab.inverse() * circ_eval(ab, c, theta) == ba.inverse() * circ_eval(ba, c, theta))) {
      ++rep.symmetry_failures;
      witness("symmetric", a, b, c);
    }
    FreeWord abar = circ_inverse(a, theta);
    if (!(a * circ_eval(b, c, theta) == circ_eval(circ_eval(a * b, abar, theta), a * c, theta))) {
      ++rep.direct_symmetric_failures;
      witness("opposite-left", a, b, c);
    }
    if (!circ_eval(a, abar, theta).empty() || !circ_eval(abar, a, theta).empty()) {
      ++rep.inverse_failures;
      witness("inverse", a, b, c);
    }
  }
  return rep;
}

}  // namespace skb
