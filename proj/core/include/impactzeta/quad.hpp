#pragma once

#include <gmpxx.h>

#include <array>
#include <utility>
#include <vector>

#include "impactzeta/orders.hpp"

namespace impactzeta::padic {

using orders::CaseTag;
using orders::ExtensionCase;
using orders::TypeVec;

// Element x + y*Delta of O_L = Z_p[Delta].
struct QuadElem {
  mpz_class x;
  mpz_class y;

  bool operator==(const QuadElem& o) const { return x == o.x && y == o.y; }
};

// Working instance: Delta^2 = tau*Delta - delta, arithmetic mod p^N.
class CaseInstance {
 public:
  static constexpr unsigned kGuard = 2;

  static CaseInstance make(CaseTag tag, unsigned p, unsigned precision);

  const ExtensionCase& ext() const { return ext_; }
  CaseTag tag() const { return ext_.tag; }
  unsigned p() const { return p_; }
  unsigned precision() const { return n_; }
  const mpz_class& modulus() const { return mod_; }
  const mpz_class& tau() const { return tau_; }
  const mpz_class& delta() const { return delta_; }
  // Nonsquare unit with Delta^2 = eps (unramified only).
  const mpz_class& eps() const { return eps_; }

  mpz_class reduce(const mpz_class& v) const;
  QuadElem reduce(const QuadElem& a) const;
  // v_p of a residue; precision() when it is zero mod p^N.
  unsigned val(const mpz_class& v) const;
  // Inverse of a p-adic unit mod p^N.
  mpz_class inv_unit(const mpz_class& v) const;

  QuadElem one() const { return {1, 0}; }
  QuadElem delta_elem() const { return {0, 1}; }
  QuadElem from_int(const mpz_class& v) const { return reduce(QuadElem{v, 0}); }
  // Split case: the element with component images (c1, c2) under Delta -> (1, p).
  QuadElem from_components(const mpz_class& c1, const mpz_class& c2) const;
  std::pair<mpz_class, mpz_class> components(const QuadElem& a) const;

  QuadElem add(const QuadElem& a, const QuadElem& b) const;
  QuadElem sub(const QuadElem& a, const QuadElem& b) const;
  QuadElem mul(const QuadElem& a, const QuadElem& b) const;
  QuadElem inv(const QuadElem& a) const;
  QuadElem conj(const QuadElem& a) const;
  mpz_class norm(const QuadElem& a) const;

  bool is_unit(const QuadElem& a) const;

 private:
  CaseInstance(ExtensionCase ext, unsigned p, unsigned n)
      : ext_(std::move(ext)), p_(p), n_(n) {}
  ExtensionCase ext_;
  unsigned p_;
  unsigned n_;
  mpz_class mod_;
  mpz_class tau_;
  mpz_class delta_;
  mpz_class eps_;
};

bool is_prime(unsigned p);

enum class AlgOp { Add, Mul, Inv };
QuadElem alg_op(const CaseInstance& inst, AlgOp kind, const QuadElem& a, const QuadElem& b);

// Type vector: val_pi in the nonsplit case, component valuations in the split case.
TypeVec elem_type(const CaseInstance& inst, const QuadElem& a);

// a lies in O_n = Z_p + p^n Delta Z_p
bool in_order(const CaseInstance& inst, unsigned n, const QuadElem& a);
bool in_order_units(const CaseInstance& inst, unsigned n, const QuadElem& a);

// M_n(w + z p^n Delta) = z / w mod p.
unsigned slope_map(const CaseInstance& inst, unsigned n, const QuadElem& u);

struct UnitRep {
  unsigned level = 0;
  unsigned t = 0;
  QuadElem element;
};

// Representatives of O_i^* / O_{i+1}^*.
std::vector<UnitRep> level_reps(const CaseInstance& inst, unsigned level);

// Representatives u_alpha of O_{n-d}^* / O_n^*, products over levels n-d .. n-1.
std::vector<QuadElem> coset_reps(const CaseInstance& inst, unsigned n, unsigned d,
                                 std::size_t cap = 1'000'000);

// [O_0^* : O_n^*] by counting units of O_0 / p^n O_0 against units of Z / p^n.
mpz_class unit_index_bruteforce(const CaseInstance& inst, unsigned n);

// Matrix of multiplication by u on the basis (1, Delta): columns u, u*Delta.
std::array<std::array<mpz_class, 2>, 2> unit_matrix(const CaseInstance& inst, const QuadElem& u);

}  // namespace impactzeta::padic
