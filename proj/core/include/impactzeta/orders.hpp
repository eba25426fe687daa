#pragma once

#include <string_view>
#include <vector>

#include "impactzeta/building.hpp"
#include "impactzeta/poly.hpp"
#include "impactzeta/report.hpp"

namespace impactzeta::orders {

enum class CaseTag { Ramified, Unramified, Split };

std::string_view case_name(CaseTag t);
CaseTag parse_case(std::string_view s);
BasinKind basin_of(CaseTag t);

struct ExtensionCase {
  CaseTag tag;
  std::vector<unsigned> e_vec;
  std::vector<unsigned> f_vec;
  unsigned g = 1;

  static ExtensionCase make(CaseTag tag);
  std::size_t arity() const { return e_vec.size(); }
};

using TypeVec = std::vector<unsigned>;

unsigned contribution(const ExtensionCase& c, const TypeVec& omega);
// Smallest component valuation of a type vector.
unsigned eta(const TypeVec& omega);
bool is_low(const ExtensionCase& c, unsigned n, const TypeVec& omega);

struct TypeDescriptor {
  TypeVec omega;
  unsigned n = 0;
  bool is_low = false;
  bool occurs = false;
  BiPoly count_expr;
  unsigned contribution = 0;
};

BiPoly unit_index(const ExtensionCase& c, unsigned n);

TypeDescriptor classify_type(const ExtensionCase& c, unsigned n, const TypeVec& omega);

// All occurring types with contribution <= max_contribution, ordered by
// (contribution, omega).
std::vector<TypeDescriptor> occurring_types(const ExtensionCase& c, unsigned n,
                                            unsigned max_contribution);

BiPoly zeta_denominator(const ExtensionCase& c);

RationalFn principal_zeta(const ExtensionCase& c, unsigned n);

struct ZetaRecord {
  ExtensionCase ext;
  unsigned n = 0;
  RationalFn principal;
  RationalFn full;
  BiPoly numerator;
  BiPoly denominator;
};

ZetaRecord full_zeta(const ExtensionCase& c, unsigned n);

BiPoly numerator_poly(const ExtensionCase& c, unsigned n);

Report check_numerators(const ExtensionCase& c, unsigned n_max);
Report check_zeta_recurrence(const ExtensionCase& c, unsigned n_max);
Report check_main_theorem(const ExtensionCase& c, unsigned n_max);

}  // namespace impactzeta::orders
