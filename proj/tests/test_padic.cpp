#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "impactzeta/quad.hpp"

using namespace impactzeta;
using namespace impactzeta::padic;

TEST_CASE("case instances") {
  auto ram = CaseInstance::make(CaseTag::Ramified, 3, 8);
  CHECK(ram.tau() == 0);
  CHECK(ram.delta() == 3);
  auto unr = CaseInstance::make(CaseTag::Unramified, 3, 8);
  CHECK(unr.eps() == 2);
  auto spl = CaseInstance::make(CaseTag::Split, 5, 8);
  CHECK(spl.tau() == 6);
  CHECK(spl.delta() == 5);
  CHECK(spl.mul(spl.delta_elem(), spl.delta_elem()) == spl.reduce(QuadElem{-5, 6}));

  CHECK_ERRC(CaseInstance::make(CaseTag::Ramified, 4, 8), Errc::UnsupportedPrime);
  CHECK_ERRC(CaseInstance::make(CaseTag::Unramified, 2, 8), Errc::UnsupportedPrime);
  CHECK_ERRC(CaseInstance::make(CaseTag::Split, 3, 3), Errc::PrecisionTooSmall);
}

TEST_CASE("algebra") {
  auto spl = CaseInstance::make(CaseTag::Split, 3, 8);
  CHECK(alg_op(spl, AlgOp::Mul, spl.delta_elem(), spl.delta_elem()) == spl.reduce(QuadElem{-3, 4}));
  auto ram = CaseInstance::make(CaseTag::Ramified, 3, 8);
  CHECK(alg_op(ram, AlgOp::Mul, QuadElem{1, 1}, ram.reduce(QuadElem{1, -1})) == ram.from_int(4));
  QuadElem a = ram.reduce(QuadElem{7, 5});
  CHECK(alg_op(ram, AlgOp::Mul, a, ram.one()) == a);
  CHECK(ram.mul(a, ram.inv(a)) == ram.one());
  CHECK_ERRC(ram.inv(ram.delta_elem()), Errc::NotAUnit);
  for (auto* inst : {&spl, &ram}) {
    QuadElem b = inst->reduce(QuadElem{4, 7});
    CHECK(inst->norm(inst->mul(a, b)) == inst->reduce(inst->norm(a) * inst->norm(b)));
    CHECK(inst->mul(b, inst->conj(b)) == inst->from_int(inst->norm(b)));
  }
}

TEST_CASE("element types") {
  auto spl = CaseInstance::make(CaseTag::Split, 3, 8);
  CHECK(elem_type(spl, spl.from_components(3, 9)) == TypeVec{1, 2});
  auto ram = CaseInstance::make(CaseTag::Ramified, 3, 8);
  CHECK(elem_type(ram, ram.delta_elem()) == TypeVec{1});
  auto unr = CaseInstance::make(CaseTag::Unramified, 3, 8);
  CHECK(elem_type(unr, QuadElem{3, 3}) == TypeVec{1});
  CHECK_ERRC(elem_type(unr, QuadElem{0, 0}), Errc::PrecisionExhausted);
}

TEST_CASE("slope map") {
  auto unr = CaseInstance::make(CaseTag::Unramified, 3, 8);
  CHECK(slope_map(unr, 1, unr.reduce(QuadElem{1, 6})) == 2);
  CHECK(slope_map(unr, 1, unr.one()) == 0);
  CHECK(slope_map(unr, 4, unr.one()) == 0);
  CHECK(slope_map(unr, 1, unr.reduce(QuadElem{2, 3})) == 2);
  CHECK_ERRC(slope_map(unr, 1, unr.reduce(QuadElem{1, 1})), Errc::NotInOrderUnit);
}

TEST_CASE("coset representatives") {
  auto ram = CaseInstance::make(CaseTag::Ramified, 3, 8);
  auto unr = CaseInstance::make(CaseTag::Unramified, 3, 8);
  auto spl = CaseInstance::make(CaseTag::Split, 3, 8);
  CHECK(coset_reps(ram, 2, 2).size() == 9);
  CHECK(coset_reps(unr, 1, 1).size() == 4);
  CHECK(coset_reps(spl, 1, 1).size() == 2);
  CHECK_ERRC(coset_reps(ram, 6, 6, 10), Errc::EnumerationOverflow);
}

TEST_CASE("coset representatives are units in distinct classes") {
  for (auto tag : {CaseTag::Ramified, CaseTag::Unramified, CaseTag::Split})
    for (unsigned p : {3u, 5u}) {
      auto inst = CaseInstance::make(tag, p, 8);
      for (unsigned n = 1; n <= 2; ++n) {
        auto reps = coset_reps(inst, n, n);
        std::set<std::pair<mpz_class, mpz_class>> seen;
        for (const auto& u : reps) {
          CHECK(inst.is_unit(u));
          for (const auto& w : reps)
            if (!(w == u)) CHECK_FALSE(in_order_units(inst, n, inst.mul(u, inst.inv(w))));
        }
      }
    }
}

TEST_CASE("brute-force unit indices") {
  for (unsigned p : {2u, 3u}) {
    auto ram = CaseInstance::make(CaseTag::Ramified, p, 8);
    auto spl = CaseInstance::make(CaseTag::Split, p, 8);
    for (unsigned n = 0; n <= 2; ++n) {
      mpz_class pn;
      mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
      CHECK(unit_index_bruteforce(ram, n) == pn);
      CHECK(unit_index_bruteforce(spl, n) == (n == 0 ? mpz_class(1) : (p - 1) * pn / p));
    }
  }
  auto unr = CaseInstance::make(CaseTag::Unramified, 3, 8);
  CHECK(unit_index_bruteforce(unr, 1) == 4);
  CHECK(unit_index_bruteforce(unr, 2) == 12);
}

TEST_CASE("unit matrices act as multiplication") {
  auto spl = CaseInstance::make(CaseTag::Split, 3, 8);
  QuadElem u = spl.reduce(QuadElem{2, 1});
  auto m = unit_matrix(spl, u);
  QuadElem v = spl.reduce(QuadElem{5, 4});
  QuadElem uv = spl.mul(u, v);
  CHECK(spl.reduce(m[0][0] * v.x + m[0][1] * v.y) == uv.x);
  CHECK(spl.reduce(m[1][0] * v.x + m[1][1] * v.y) == uv.y);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
