#include <doctest.h>

#include "helpers.hpp"
#include "impactzeta/genfun.hpp"

using namespace impactzeta;
using namespace impactzeta::genfun;
using testing::poly;
using testing::xpoly;

TEST_CASE("closed reachability counts") {
  CHECK(reachable_count_closed(BuildingSpec(BasinKind::Unramified, 2), 2, 4) == 6);
  CHECK(reachable_count_closed(BuildingSpec(BasinKind::Ramified, 3), 1, 5) == 3);
  CHECK(reachable_count_closed(BuildingSpec(BasinKind::Split, 3), 1, 2) == 2);
  CHECK(reachable_count_closed(BuildingSpec(BasinKind::Unramified, 2), 2, 3) == 0);
  CHECK_ERRC(reachable_count_closed(BuildingSpec(BasinKind::Unramified, 2), 0, 2), Errc::UnsupportedHeight);
}

TEST_CASE("oracle reachability counts") {
  const BuildingSpec unr(BasinKind::Unramified, 2), ram(BasinKind::Ramified, 2), spl(BasinKind::Split, 2);
  CHECK(reachable_count_oracle(oracle_tree(unr, 2, 2), way_out_vertex(unr, 2), 2, Flavor::Layer) == 2);
  CHECK(reachable_count_oracle(oracle_tree(ram, 1, 1), way_out_vertex(ram, 1), 1, Flavor::Basin) == 1);
  CHECK(reachable_count_oracle(oracle_tree(spl, 1, 0), way_out_vertex(spl, 1), 0, Flavor::Layer) == 1);
}

TEST_CASE("split coefficients follow the oracle") {
  // The oracle settles the split regimes: m^k at d = 2k < 2n and (l+1)(m-1)m^(n-1) at d = 2n + l.
  for (unsigned m : {2u, 3u, 4u}) {
    const BuildingSpec spec(BasinKind::Split, m);
    for (unsigned n = 1; n <= 3; ++n) {
      auto t = count_table_oracle(oracle_tree(spec, n, 2 * n + 4), way_out_vertex(spec, n), 2 * n + 4);
      mpz_class mk = 1;
      for (unsigned k = 0; 2 * k < 2 * n; ++k, mk *= m) CHECK(t.r[2 * k] == mk);
      mpz_class base;
      mpz_ui_pow_ui(base.get_mpz_t(), m, n - 1);
      for (unsigned l = 0; l <= 4; ++l) CHECK(t.r[2 * n + l] == (l + 1) * (m - 1) * base);
      // The displayed l(m-1)m^(n-1) reading gives 0 at d = 2n, which the oracle rejects.
      CHECK(t.r[2 * n] != 0);
    }
  }
}

TEST_CASE("layer generating functions") {
  const auto m = BiPoly::q_var();
  CHECK(layer_genfun(BasinKind::Unramified, 1)
            .equivalent(RationalFn(BiPoly::constant(1) + m.shift_x(2), BiPoly::one_minus_x(2))));
  CHECK(layer_genfun(BasinKind::Ramified, 1)
            .equivalent(RationalFn(xpoly({1, -1}) + m.shift_x(2), BiPoly::one_minus_x(1))));
  CHECK(layer_genfun(BasinKind::Split, 1)
            .equivalent(RationalFn(xpoly({1, -2}) + m.shift_x(2), BiPoly::one_minus_x(1).pow(2))));
  CHECK(layer_genfun(BasinKind::Unramified, 0).equivalent(RationalFn(BiPoly::constant(1), BiPoly::one_minus_x(2))));
}

TEST_CASE("basin generating functions") {
  const auto m = BiPoly::q_var();
  CHECK(basin_genfun(BasinKind::Unramified, 1)
            .equivalent(RationalFn(xpoly({1, 1}) + m.shift_x(2), BiPoly::one_minus_x(2))));
  CHECK(basin_genfun(BasinKind::Ramified, 2)
            .equivalent(RationalFn(poly({{0, 0, 1}, {1, 2, 1}, {2, 4, 1}}), BiPoly::one_minus_x(1))));
  CHECK(basin_genfun(BasinKind::Split, 1)
            .equivalent(RationalFn(xpoly({1, -1}) + m.shift_x(2), BiPoly::one_minus_x(1).pow(2))));
  for (auto kind : {BasinKind::Unramified, BasinKind::Ramified, BasinKind::Split})
    for (unsigned n = 0; n <= 6; ++n) CHECK(basin_genfun(kind, n).equivalent(basin_closed_form(kind, n)));
}

TEST_CASE("geodesic generating functions") {
  const BuildingSpec line = BuildingSpec::line(BasinKind::Unramified);
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(geodesic_genfun(line, n, Flavor::Layer)
              .equivalent(RationalFn(BiPoly::constant(1) + BiPoly::monomial(1, 0, 2 * n))));

  auto g = geodesic_genfun(BasinKind::Unramified, 1, Flavor::Basin);
  CHECK(g.equivalent(RationalFn(xpoly({1, 1}) + BiPoly::q_var().shift_x(2))));
  BiPoly quotient;
  CHECK(try_exact_div(g.num(), g.den(), quotient));

  CHECK(geodesic_genfun(BasinKind::Ramified, 0, Flavor::Layer).equivalent(RationalFn(xpoly({1, 1}))));
}

TEST_CASE("identity checks") {
  CHECK(check_recurrence(BuildingSpec(BasinKind::Unramified, 2), 6).all_pass());
  CHECK(check_recurrence(BuildingSpec(BasinKind::Ramified, 5), 6).all_pass());
  CHECK(check_recurrence(BuildingSpec(BasinKind::Split, 2), 6).all_pass());
  for (auto kind : {BasinKind::Unramified, BasinKind::Ramified, BasinKind::Split}) {
    CHECK(check_recurrence(kind, 8).all_pass());
    CHECK(check_geodesic(kind, 8).all_pass());
  }
}

TEST_CASE("closed forms agree with the BFS oracle") {
  for (unsigned m : {2u, 3u})
    for (auto kind : {BasinKind::Unramified, BasinKind::Ramified, BasinKind::Split}) {
      Report r = check_oracle(BuildingSpec(kind, m), 3, 10);
      for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
    }
}

TEST_CASE("line fixture") {
  const BuildingSpec ram = BuildingSpec::line(BasinKind::Ramified);
  for (unsigned n = 0; n <= 5; ++n) {
    BiPoly sum;
    for (unsigned k = 0; k <= n; ++k) sum += BiPoly::monomial(1, 0, 2 * k);
    CHECK(basin_genfun(ram, n).equivalent(RationalFn(sum, BiPoly::one_minus_x(1))));
  }
  CHECK(check_oracle(BuildingSpec::line(BasinKind::Unramified), 4, 10).all_pass());
}
