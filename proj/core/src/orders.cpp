#include "impactzeta/orders.hpp"

#include <algorithm>
#include <numeric>

#include "impactzeta/error.hpp"
#include "impactzeta/genfun.hpp"

namespace impactzeta::orders {

std::string_view case_name(CaseTag t) {
  switch (t) {
    case CaseTag::Ramified: return "ramified";
    case CaseTag::Unramified: return "unramified";
    case CaseTag::Split: return "split";
  }
  return "?";
}

CaseTag parse_case(std::string_view s) {
  if (s == "ramified") return CaseTag::Ramified;
  if (s == "unramified") return CaseTag::Unramified;
  if (s == "split") return CaseTag::Split;
  throw Error(Errc::InvalidArgument, "unknown case '" + std::string(s) + "'");
}

BasinKind basin_of(CaseTag t) {
  switch (t) {
    case CaseTag::Ramified: return BasinKind::Ramified;
    case CaseTag::Unramified: return BasinKind::Unramified;
    case CaseTag::Split: return BasinKind::Split;
  }
  return BasinKind::Unramified;
}

ExtensionCase ExtensionCase::make(CaseTag tag) {
  switch (tag) {
    case CaseTag::Ramified: return {tag, {2}, {1}, 1};
    case CaseTag::Unramified: return {tag, {1}, {2}, 1};
    case CaseTag::Split: return {tag, {1, 1}, {1, 1}, 2};
  }
  throw Error(Errc::InvalidArgument, "bad case tag");
}

namespace {

void check_arity(const ExtensionCase& c, const TypeVec& omega) {
  if (omega.size() != c.arity())
    throw Error(Errc::ArityMismatch, "type of length " + std::to_string(omega.size()) +
                                         " for the " + std::string(case_name(c.tag)) + " case");
}

// d with omega = d * e_vec, or -1.
int multiple_of_e(const ExtensionCase& c, const TypeVec& omega) {
  if (omega[0] % c.e_vec[0] != 0) return -1;
  unsigned d = omega[0] / c.e_vec[0];
  for (std::size_t i = 1; i < omega.size(); ++i)
    if (omega[i] != d * c.e_vec[i]) return -1;
  return static_cast<int>(d);
}

}  // namespace

unsigned contribution(const ExtensionCase& c, const TypeVec& omega) {
  check_arity(c, omega);
  unsigned s = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) s += c.f_vec[i] * omega[i];
  return s;
}

unsigned eta(const TypeVec& omega) {
  return omega.empty() ? 0 : *std::min_element(omega.begin(), omega.end());
}

bool is_low(const ExtensionCase& c, unsigned n, const TypeVec& omega) {
  check_arity(c, omega);
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (omega[i] < n * c.e_vec[i]) return true;
  return false;
}

BiPoly unit_index(const ExtensionCase& c, unsigned n) {
  if (n == 0) return BiPoly::constant(1);
  const BiPoly q = BiPoly::q_var();
  const BiPoly qn1 = BiPoly::monomial(1, n - 1, 0);
  switch (c.tag) {
    case CaseTag::Ramified: return BiPoly::monomial(1, n, 0);
    case CaseTag::Unramified: return (q + BiPoly::constant(1)) * qn1;
    case CaseTag::Split: return (q - BiPoly::constant(1)) * qn1;
  }
  return {};
}

TypeDescriptor classify_type(const ExtensionCase& c, unsigned n, const TypeVec& omega) {
  check_arity(c, omega);
  TypeDescriptor t;
  t.omega = omega;
  t.n = n;
  t.contribution = contribution(c, omega);
  t.is_low = is_low(c, n, omega);
  if (!t.is_low) {
    t.occurs = true;
    t.count_expr = unit_index(c, n);
    return t;
  }
  int d = multiple_of_e(c, omega);
  t.occurs = d >= 0 && static_cast<unsigned>(d) < n;
  if (t.occurs) t.count_expr = poly_exact_div(unit_index(c, n), unit_index(c, n - d));
  return t;
}

std::vector<TypeDescriptor> occurring_types(const ExtensionCase& c, unsigned n,
                                            unsigned max_contribution) {
  std::vector<TypeDescriptor> out;
  if (c.arity() == 1) {
    for (unsigned w = 0; c.f_vec[0] * w <= max_contribution; ++w) {
      auto t = classify_type(c, n, {w});
      if (t.occurs) out.push_back(std::move(t));
    }
  } else {
    for (unsigned a = 0; a <= max_contribution; ++a)
      for (unsigned b = 0; a + b <= max_contribution; ++b) {
        auto t = classify_type(c, n, {a, b});
        if (t.occurs) out.push_back(std::move(t));
      }
  }
  std::stable_sort(out.begin(), out.end(), [](const TypeDescriptor& x, const TypeDescriptor& y) {
    if (x.contribution != y.contribution) return x.contribution < y.contribution;
    return x.omega < y.omega;
  });
  return out;
}

BiPoly zeta_denominator(const ExtensionCase& c) {
  return genfun::layer_denominator(basin_of(c.tag));
}

RationalFn principal_zeta(const ExtensionCase& c, unsigned n) {
  const BiPoly v = zeta_denominator(c);
  // Occurring low types all have contribution below 2n.
  BiPoly low;
  for (const auto& t : occurring_types(c, n, 2 * n)) {
    if (!t.is_low) continue;
    low += t.count_expr.shift_x(t.contribution);
  }
  // High types: every omega at or above the threshold, each with |X_omega| = unit_index(n);
  // summed over the threshold cone this is unit_index(n) X^{2n} / V.
  BiPoly high = unit_index(c, n).shift_x(2 * n);
  return {low * v + high, v};
}

ZetaRecord full_zeta(const ExtensionCase& c, unsigned n) {
  const BiPoly v = zeta_denominator(c);
  BiPoly num;
  RationalFn principal = principal_zeta(c, n);
  for (unsigned i = 0; i <= n; ++i) {
    RationalFn pz = i == 0 ? principal : principal_zeta(c, n - i);
    num += (pz.num() * poly_exact_div(v, pz.den())).shift_x(i);
  }
  RationalFn full(num, v);
  BiPoly numerator = poly_exact_div(full.num() * v, full.den());
  return ZetaRecord{c, n, principal, full, numerator, v};
}

BiPoly numerator_poly(const ExtensionCase& c, unsigned n) {
  auto r = [](unsigned k) {
    std::vector<Term> t;
    for (unsigned i = 0; i <= k; ++i) t.push_back(Term{i, 2 * i, 1});
    return BiPoly::from_terms(std::move(t));
  };
  switch (c.tag) {
    case CaseTag::Ramified: return r(n);
    case CaseTag::Unramified:
      if (n == 0) return BiPoly::constant(1);
      return (BiPoly::constant(1) + BiPoly::x_var()) * r(n - 1) + BiPoly::monomial(1, n, 2 * n);
    case CaseTag::Split:
      if (n == 0) return BiPoly::constant(1);
      return (BiPoly::constant(1) - BiPoly::x_var()) * r(n - 1) + BiPoly::monomial(1, n, 2 * n);
  }
  return {};
}

Report check_numerators(const ExtensionCase& c, unsigned n_max) {
  Report rep;
  const std::string prefix = "orders.numerator." + std::string(case_name(c.tag));
  for (unsigned n = 0; n <= n_max; ++n) {
    BiPoly want = numerator_poly(c, n);
    std::string detail;
    bool ok = true;
    try {
      ZetaRecord z = full_zeta(c, n);
      ok = z.numerator == want && z.full.equivalent(RationalFn(want, z.denominator));
      ok = ok && want.x_degree() == static_cast<int>(2 * n) &&
           want.x_coeff(2 * n) == BiPoly::monomial(1, n, 0);
      if (!ok) detail = "got " + z.numerator.to_string() + ", want " + want.to_string();
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    rep.add(prefix + ".n=" + std::to_string(n), ok, detail);
  }
  return rep;
}

Report check_zeta_recurrence(const ExtensionCase& c, unsigned n_max) {
  Report rep;
  const std::string prefix = "orders.recurrence." + std::string(case_name(c.tag));
  const BiPoly v = zeta_denominator(c);
  rep.add(prefix + ".base",
          principal_zeta(c, 0).equivalent(RationalFn(numerator_poly(c, 0), v)) &&
              full_zeta(c, 0).full.equivalent(principal_zeta(c, 0)));
  for (unsigned n = 1; n <= n_max; ++n) {
    RationalFn lhs(numerator_poly(c, n), v);
    RationalFn rhs = principal_zeta(c, n) + RationalFn(numerator_poly(c, n - 1).shift_x(1), v);
    rep.add(prefix + ".n=" + std::to_string(n), lhs.equivalent(rhs));
  }
  return rep;
}

Report check_main_theorem(const ExtensionCase& c, unsigned n_max) {
  Report rep;
  const std::string prefix = "orders.main_theorem." + std::string(case_name(c.tag));
  const BasinKind kind = basin_of(c.tag);
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::string at = ".n=" + std::to_string(n);
    RationalFn pz = principal_zeta(c, n);
    RationalFn layer = genfun::layer_genfun(kind, n);
    rep.add(prefix + ".principal_vs_layer" + at, pz.equivalent(layer),
            pz.to_string() + " vs " + layer.to_string());
    ZetaRecord z = full_zeta(c, n);
    rep.add(prefix + ".full_vs_basin" + at, z.full.equivalent(genfun::basin_genfun(kind, n)));
    rep.add(prefix + ".numerator" + at, z.numerator == numerator_poly(c, n),
            z.numerator.to_string());
  }
  return rep;
}

}  // namespace impactzeta::orders
