#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "impactzeta/genfun.hpp"
#include "impactzeta/ideals.hpp"

using namespace impactzeta;
using namespace impactzeta::padic;

namespace {

std::map<TypeVec, unsigned> principal_histogram(const std::vector<IdealRecord>& recs) {
  std::map<TypeVec, unsigned> h;
  for (const auto& r : recs)
    if (r.principal) ++h[*r.type];
  return h;
}

std::map<unsigned, unsigned> contribution_counts(const std::vector<IdealRecord>& recs) {
  std::map<unsigned, unsigned> h;
  for (const auto& r : recs)
    if (r.principal) ++h[r.contribution];
  return h;
}

// Generator search over every alpha = s b0 + t b1 with 0 <= s, t < p^2.
bool principal_wide(const CaseInstance& inst, unsigned n, const LatticeHNF& ideal) {
  const unsigned p = inst.p();
  const Basis b = ideal.basis(p);
  for (unsigned s = 0; s < p * p; ++s)
    for (unsigned t = 0; t < p * p; ++t) {
      Vec2 alpha{s * b[0][0] + t * b[1][0], s * b[0][1] + t * b[1][1]};
      Vec2 w = omega_times(inst, n, alpha);
      if (alpha[0] * w[1] - w[0] * alpha[1] == 0) continue;
      if (hnf_from_generators(p, alpha, w) == ideal) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("ramified p = 3, n = 1") {
  auto inst = CaseInstance::make(CaseTag::Ramified, 3, default_precision(1, 3));
  auto recs = enumerate_ideals(inst, 1, 3);
  auto h = principal_histogram(recs);
  CHECK(h == std::map<TypeVec, unsigned>{{{0}, 1}, {{2}, 3}, {{3}, 3}});
}

TEST_CASE("split p = 3") {
  auto inst = CaseInstance::make(CaseTag::Split, 3, default_precision(1, 2));
  auto n0 = enumerate_ideals(inst, 0, 2);
  for (const auto& r : n0) CHECK(r.principal);
  CHECK(contribution_counts(n0) == std::map<unsigned, unsigned>{{0, 1}, {1, 2}, {2, 3}});

  auto n1 = enumerate_ideals(inst, 1, 2);
  CHECK(principal_histogram(n1)[TypeVec{1, 1}] == 2);
}

TEST_CASE("unramified p = 5, n = 1") {
  auto inst = CaseInstance::make(CaseTag::Unramified, 5, default_precision(1, 2));
  auto recs = enumerate_ideals(inst, 1, 2);
  CHECK(contribution_counts(recs) == std::map<unsigned, unsigned>{{0, 1}, {2, 6}});
}

TEST_CASE("maximal orders have only principal ideals") {
  for (auto tag : {CaseTag::Ramified, CaseTag::Unramified, CaseTag::Split}) {
    auto inst = CaseInstance::make(tag, 3, default_precision(0, 2));
    auto recs = enumerate_ideals(inst, 0, 2);
    auto series = series_expand(orders::full_zeta(inst.ext(), 0).full, 2);
    std::map<unsigned, unsigned> by_index;
    for (const auto& r : recs) {
      CHECK(r.principal);
      ++by_index[r.index_exponent];
    }
    for (unsigned k = 0; k <= 2; ++k)
      CHECK(mpz_class(by_index[k]) == eval_at_q(series.coeffs[k], 3).coeff(0, 0));
  }
}

TEST_CASE("principality agrees with a wider generator search") {
  for (auto tag : {CaseTag::Ramified, CaseTag::Unramified, CaseTag::Split})
    for (unsigned n = 1; n <= 2; ++n) {
      auto inst = CaseInstance::make(tag, 3, default_precision(n, 4));
      for (const auto& r : enumerate_ideals(inst, n, 4))
        CHECK_MESSAGE(r.principal == principal_wide(inst, n, r.lattice), r.lattice.to_string());
    }
}

TEST_CASE("enumeration is independent of the thread count") {
  auto inst = CaseInstance::make(CaseTag::Split, 3, default_precision(2, 5));
  auto one = enumerate_ideals(inst, 2, 5);
  EnumerationOptions opts;
  opts.threads = 3;
  auto three = enumerate_ideals(inst, 2, 5, opts);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].lattice == three[i].lattice);
    CHECK(one[i].principal == three[i].principal);
    CHECK(one[i].vertex == three[i].vertex);
  }
}

TEST_CASE("precision guard") {
  auto inst = CaseInstance::make(CaseTag::Ramified, 3, 4);
  CHECK_ERRC(enumerate_ideals(inst, 2, 6), Errc::PrecisionTooSmall);
  EnumerationOptions opts;
  opts.max_candidates = 10;
  auto big = CaseInstance::make(CaseTag::Ramified, 3, default_precision(1, 6));
  CHECK_ERRC(enumerate_ideals(big, 1, 6, opts), Errc::EnumerationOverflow);
}

TEST_CASE("traveling map") {
  auto inst = CaseInstance::make(CaseTag::Unramified, 3, 10);
  for (unsigned n = 0; n <= 2; ++n) {
    LatticeHNF t = traveling(inst, n, order_lattice(3, n));
    CHECK(t == LatticeHNF{1, n + 1, 0});
    CHECK(is_ideal(inst, n + 1, t));
    CHECK_FALSE(find_generator(inst, n + 1, t).has_value());
  }
  CHECK_ERRC(traveling(inst, 2, LatticeHNF{0, 3, 1}), Errc::NotAnIdeal);
}

TEST_CASE("ideal vertices") {
  auto inst = CaseInstance::make(CaseTag::Ramified, 3, default_precision(1, 4));
  auto tree = build_truncated(building_spec(inst), 1);
  auto recs = enumerate_ideals(inst, 1, 4);
  bool saw_odd = false;
  for (const auto& r : recs) {
    if (!r.principal) continue;
    VertexAddr v = ideal_vertex(inst, r, tree);
    CHECK(v == r.vertex);
    CHECK(v.height() == 1);
    if (r.lattice == order_lattice(3, 1)) CHECK(v == way_out_vertex(building_spec(inst), 1));
    if ((*r.type)[0] % 2 == 1) {
      saw_odd = true;
      CHECK(v.anchor == -1);
    }
  }
  CHECK(saw_odd);
}

TEST_CASE("source types and distances") {
  auto ram = CaseInstance::make(CaseTag::Ramified, 3, default_precision(1, 4));
  auto recs = enumerate_ideals(ram, 1, 4);
  for (const auto& r : recs)
    if (r.principal && r.vertex == way_out_vertex(building_spec(ram), 1) && r.contribution == 0)
      CHECK(*r.type == TypeVec{0});
  CHECK(source_and_distance_check(ram, 1, 4, recs).all_pass());

  auto unr = CaseInstance::make(CaseTag::Unramified, 3, default_precision(1, 4));
  auto urecs = enumerate_ideals(unr, 1, 4);
  std::map<VertexAddr, unsigned> min_c;
  for (const auto& r : urecs)
    if (r.principal) {
      auto it = min_c.find(r.vertex);
      if (it == min_c.end() || r.contribution < it->second) min_c[r.vertex] = r.contribution;
    }
  for (const auto& [v, c] : min_c)
    if (address_distance(v, way_out_vertex(building_spec(unr), 1)) == 2) CHECK(c == 2);
  CHECK(source_and_distance_check(unr, 1, 4, urecs).all_pass());

  auto spl = CaseInstance::make(CaseTag::Split, 3, default_precision(1, 4));
  CHECK(source_and_distance_check(spl, 1, 4).all_pass());
}

TEST_CASE("series from enumeration") {
  for (auto tag : {CaseTag::Ramified, CaseTag::Unramified, CaseTag::Split}) {
    auto inst = CaseInstance::make(tag, tag == CaseTag::Unramified ? 3 : 2, default_precision(2, 4));
    for (unsigned n = 0; n <= 2; ++n) {
      auto recs = enumerate_ideals(inst, n, 4);
      CHECK(check_type_histogram(inst, n, 4, recs).all_pass());
      CHECK(check_series(inst, n, 4, recs).all_pass());
    }
  }
}
