#include "impactzeta/error.hpp"

namespace impactzeta {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NonUnitDenominator: return "NonUnitDenominator";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::RadiusTooSmall: return "RadiusTooSmall";
    case Errc::TruncationInsufficient: return "TruncationInsufficient";
    case Errc::UnsupportedHeight: return "UnsupportedHeight";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::PrecisionTooSmall: return "PrecisionTooSmall";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotInOrderUnit: return "NotInOrderUnit";
    case Errc::EnumerationOverflow: return "EnumerationOverflow";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::OutsideTruncation: return "OutsideTruncation";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace impactzeta
