#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skb {

enum class Errc {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  NoInverse,
  MalformedTable,
  OrderCapExceeded,
  NotASubgroup,
  NotABrace,
  LambdaNotAutomorphism,
  CriterionMismatch,
  NotHomomorphism,
  KernelConditionFails,
  NotAutomorphism,
  NotExactFactorization,
  NotBilinear,
  NotEndomorphismModCenter,
  ImageNotAbelianModCenter,
  AdditiveTablesDiffer,
  PreconditionFails,
  CarrierMismatch,
  BaseMismatch,
  NotRotaBaxter,
  NotAnIdeal,
  NotAntiHomomorphic,
  RankMismatch,
  NotInKernel,
  WindowTooSmall,
  Overflow,
  InvariantViolation,
  ParseError,
  FormulaMismatch,
};

std::string_view errc_name(Errc code);

/// Library-wide exception. `witness` carries the offending element indices
/// (or integers) in the order the error kind documents, e.g. (a, b, c) for
/// NotAssociative.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<long long> witness = {});

  Errc code() const noexcept { return code_; }
  const std::vector<long long>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<long long> witness_;
};

/// Throws InvariantViolation when `cond` is false. Used for identities that
/// are theorems; a failure means a bug in this library.
void ensure(bool cond, std::string_view what, std::vector<long long> witness = {});

/// Default size guards. All of them are runtime configuration.
struct Limits {
  int max_group_order = 24;
  int max_holomorph_order = 10000;
  int max_structure_order = 16;
  int max_system_vertices = 64;
};

}  // namespace skb
