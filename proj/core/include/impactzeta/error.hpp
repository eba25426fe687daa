#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace impactzeta {

enum class Errc {
  NotDivisible,
  NonUnitDenominator,
  InvalidArgument,
  LimitExceeded,
  UnknownVertex,
  RadiusTooSmall,
  TruncationInsufficient,
  UnsupportedHeight,
  ArityMismatch,
  UnsupportedPrime,
  PrecisionTooSmall,
  PrecisionExhausted,
  NotAUnit,
  NotInOrderUnit,
  EnumerationOverflow,
  NotAnIdeal,
  OutsideTruncation,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace impactzeta
