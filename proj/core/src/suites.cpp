#include "impactzeta/suites.hpp"

#include <map>

#include "impactzeta/error.hpp"
#include "impactzeta/genfun.hpp"
#include "impactzeta/ideals.hpp"

namespace impactzeta::suites {

using orders::CaseTag;
using orders::ExtensionCase;

namespace {

constexpr CaseTag kCases[] = {CaseTag::Ramified, CaseTag::Unramified, CaseTag::Split};
constexpr BasinKind kBasins[] = {BasinKind::Unramified, BasinKind::Ramified, BasinKind::Split};

BiPoly x_power_sum(unsigned step, unsigned top) {
  std::vector<Term> t;
  for (unsigned e = 0; e <= top; e += step) t.push_back(Term{0, e, 1});
  return BiPoly::from_terms(std::move(t));
}

}  // namespace

Report identities(unsigned max_n) {
  Report rep;
  for (CaseTag tag : kCases) {
    ExtensionCase c = ExtensionCase::make(tag);
    rep.append(orders::check_numerators(c, max_n));
    rep.append(orders::check_main_theorem(c, max_n));
    rep.append(orders::check_zeta_recurrence(c, max_n));
  }
  for (BasinKind k : kBasins) {
    rep.append(genfun::check_recurrence(k, max_n));
    rep.append(genfun::check_geodesic(k, max_n));
  }
  return rep;
}

Report oracle(const std::vector<unsigned>& ms, unsigned max_n, unsigned max_d) {
  Report rep;
  for (unsigned m : ms)
    for (BasinKind k : kBasins) rep.append(genfun::check_oracle(BuildingSpec(k, m), max_n, max_d));
  return rep;
}

std::vector<ArithmeticTarget> default_arithmetic_grid() {
  return {{CaseTag::Ramified, 2},   {CaseTag::Ramified, 3},   {CaseTag::Split, 2},
          {CaseTag::Split, 3},      {CaseTag::Unramified, 3}, {CaseTag::Unramified, 5}};
}

Report arithmetic(const std::vector<ArithmeticTarget>& grid, unsigned max_n,
                  unsigned max_contribution, unsigned threads) {
  Report rep;
  for (const auto& target : grid) {
    const std::string tag = "padic." + std::string(orders::case_name(target.tag)) +
                            ".p=" + std::to_string(target.p);
    try {
      auto inst = padic::CaseInstance::make(
          target.tag, target.p, padic::default_precision(max_n + 1, max_contribution));
      rep.append(padic::check_unit_indices(inst, max_n));
      for (unsigned n = 1; n <= max_n; ++n) rep.append(padic::check_slope_map(inst, n));
      for (unsigned n = 0; n <= max_n; ++n) rep.append(padic::check_unit_matrices(inst, n));
      rep.append(padic::check_embedding(inst, 2));

      padic::EnumerationOptions opts;
      opts.threads = threads;
      std::map<unsigned, std::vector<padic::IdealRecord>> records;
      for (unsigned n = 0; n <= max_n + 1; ++n)
        records[n] = padic::enumerate_ideals(inst, n, max_contribution, opts);
      for (unsigned n = 0; n <= max_n; ++n) {
        rep.append(padic::check_type_histogram(inst, n, max_contribution, records[n]));
        rep.append(padic::check_series(inst, n, max_contribution, records[n]));
        rep.append(padic::source_and_distance_check(inst, n, max_contribution, records[n]));
        rep.append(padic::check_traveling(inst, n, max_contribution, records[n], records[n + 1]));
      }
    } catch (const Error& e) {
      rep.add(tag + ".error", false, e.what());
    }
  }
  return rep;
}

Report line_fixture(unsigned max_n) {
  Report rep;
  const BuildingSpec unram = BuildingSpec::line(BasinKind::Unramified);
  const BuildingSpec ram = BuildingSpec::line(BasinKind::Ramified);
  const BiPoly w2 = BiPoly::one_minus_x(2), w1 = BiPoly::one_minus_x(1);
  for (unsigned n = 0; n <= max_n; ++n) {
    const std::string at = ".n=" + std::to_string(n);
    // zeta_{O_n} = (1 + X^{2n}) / (1 - X^2); for n = 0 the two terms merge into 1.
    BiPoly layer_num = n == 0 ? BiPoly::constant(1)
                              : BiPoly::constant(1) + BiPoly::monomial(1, 0, 2 * n);
    rep.add("line.unramified.layer" + at,
            genfun::layer_genfun(unram, n).equivalent(RationalFn(layer_num, w2)));
    rep.add("line.unramified.layer_geodesic" + at,
            genfun::geodesic_genfun(unram, n, genfun::Flavor::Layer).equivalent(RationalFn(layer_num)));
    rep.add("line.ramified.basin" + at,
            genfun::basin_genfun(ram, n).equivalent(RationalFn(x_power_sum(2, 2 * n), w1)));
    rep.add("line.unramified.basin" + at,
            genfun::basin_genfun(unram, n).equivalent(RationalFn(x_power_sum(1, 2 * n), w2)));
  }
  // The line is small enough to compare against the oracle directly.
  for (const auto& spec : {unram, ram}) {
    Report o = genfun::check_oracle(spec, max_n, 2 * max_n + 4);
    for (auto& c : o.checks) c.name = "line." + c.name;
    rep.append(o);
  }
  return rep;
}

}  // namespace impactzeta::suites
