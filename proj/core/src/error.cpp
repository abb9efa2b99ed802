#include "skewbrace/error.hpp"

#include <sstream>

namespace skb {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoInverse: return "NoInverse";
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotABrace: return "NotABrace";
    case Errc::LambdaNotAutomorphism: return "LambdaNotAutomorphism";
    case Errc::CriterionMismatch: return "CriterionMismatch";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::KernelConditionFails: return "KernelConditionFails";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotExactFactorization: return "NotExactFactorization";
    case Errc::NotBilinear: return "NotBilinear";
    case Errc::NotEndomorphismModCenter: return "NotEndomorphismModCenter";
    case Errc::ImageNotAbelianModCenter: return "ImageNotAbelianModCenter";
    case Errc::AdditiveTablesDiffer: return "AdditiveTablesDiffer";
    case Errc::PreconditionFails: return "PreconditionFails";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotRotaBaxter: return "NotRotaBaxter";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotAntiHomomorphic: return "NotAntiHomomorphic";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::Overflow: return "Overflow";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::ParseError: return "ParseError";
    case Errc::FormulaMismatch: return "FormulaMismatch";
  }
  return "Unknown";
}

namespace {

std::string compose(Errc code, const std::string& message,
                    const std::vector<long long>& witness) {
  std::ostringstream os;
  os << errc_name(code) << ": " << message;
  if (!witness.empty()) {
    os << " [witness";
    for (auto w : witness) os << ' ' << w;
    os << ']';
  }
  return os.str();
}

}  // namespace

Error::Error(Errc code, std::string message, std::vector<long long> witness)
    : std::runtime_error(compose(code, message, witness)),
      code_(code),
      witness_(std::move(witness)) {}

void ensure(bool cond, std::string_view what, std::vector<long long> witness) {
  if (!cond) throw Error(Errc::InvariantViolation, std::string(what), std::move(witness));
}

}  // namespace skb
