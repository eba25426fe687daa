#pragma once

#include <initializer_list>
#include <tuple>

#include "impactzeta/error.hpp"
#include "impactzeta/poly.hpp"

namespace testing {

// poly({{q, x, c}, ...}) builds sum c * q^q X^x.
inline impactzeta::BiPoly poly(std::initializer_list<std::tuple<unsigned, unsigned, long>> terms) {
  impactzeta::BiPoly p;
  for (const auto& [q, x, c] : terms) p += impactzeta::BiPoly::monomial(c, q, x);
  return p;
}

inline impactzeta::BiPoly xpoly(std::initializer_list<long> coeffs) {
  impactzeta::BiPoly p;
  unsigned k = 0;
  for (long c : coeffs) p += impactzeta::BiPoly::monomial(c, 0, k++);
  return p;
}

inline const impactzeta::BiPoly& Q() {
  static const impactzeta::BiPoly q = impactzeta::BiPoly::q_var();
  return q;
}

}  // namespace testing

#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const impactzeta::Error& e_) {                      \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());             \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr);     \
  } while (0)
