#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

#include "impactzeta/quad.hpp"

namespace impactzeta::padic {

// Integer vectors in the (1, Delta) coordinates; a lattice basis holds two columns.
using Vec2 = std::array<mpz_class, 2>;
using Basis = std::array<Vec2, 2>;

// Hermite form with columns (p^a, 0) and (c, p^b), 0 <= c < p^a.
struct LatticeHNF {
  unsigned a = 0;
  unsigned b = 0;
  mpz_class c;

  Basis basis(unsigned p) const;
  bool operator==(const LatticeHNF& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const LatticeHNF& o) const;
  std::string to_string() const;
};

unsigned p_valuation(const mpz_class& v, unsigned p);

// Z_p-span of two integer vectors (must be full rank).
LatticeHNF hnf_from_generators(unsigned p, const Vec2& g1, const Vec2& g2);
LatticeHNF hnf_from_basis(unsigned p, const Basis& b);

bool lattice_contains(unsigned p, const LatticeHNF& l, const Vec2& v);
bool lattice_contains(unsigned p, const LatticeHNF& outer, const LatticeHNF& inner);

// The order O_n = Z_p + p^n Delta Z_p as a lattice.
LatticeHNF order_lattice(unsigned p, unsigned n);

// log_p [O_n : L] for L inside O_n.
unsigned index_exponent(unsigned p, unsigned n, const LatticeHNF& l);

// omega = p^n Delta times v, as an integer vector.
Vec2 omega_times(const CaseInstance& inst, unsigned n, const Vec2& v);
Vec2 elem_times(const CaseInstance& inst, const Vec2& elem, const Vec2& v);

bool is_ideal(const CaseInstance& inst, unsigned n, const LatticeHNF& l);

// Tree distance between lattice classes from the elementary divisors of adj(A) B.
unsigned lattice_distance(unsigned p, const Basis& a, const Basis& b);
unsigned lattice_distance(const CaseInstance& inst, const LatticeHNF& a, const LatticeHNF& b);

}  // namespace impactzeta::padic
