#pragma once

#include <gmpxx.h>

#include <vector>

#include "impactzeta/building.hpp"
#include "impactzeta/poly.hpp"
#include "impactzeta/report.hpp"

namespace impactzeta::genfun {

enum class Flavor { Layer, Basin };

// r(d, O_n) for n >= 1 from the case formulas.
mpz_class reachable_count_closed(const BuildingSpec& spec, unsigned n, unsigned d);

struct CountTable {
  BuildingSpec spec;
  VertexAddr v;
  unsigned max_d = 0;
  std::vector<mpz_class> r;        // layer R_{h(v)}
  std::vector<mpz_class> p;        // ball P_{h(v)}
  std::vector<mpz_class> r_exact;  // layer vertices at distance exactly d
  std::vector<mpz_class> p_exact;  // ball vertices at distance exactly d
};

// Brute-force counts by BFS on the truncated tree, using that on a tree x is
// reachable by a walk of length d iff d >= d(x,v) and d = d(x,v) mod 2.
// Throws TruncationInsufficient if the truncation could hide a counted vertex.
CountTable count_table_oracle(const TruncatedTree& tree, const VertexAddr& v, unsigned max_d);

mpz_class reachable_count_oracle(const TruncatedTree& tree, const VertexAddr& v, unsigned d,
                                 Flavor which);

// Smallest truncation that lets the oracle probe O_n up to distance max_d.
TruncatedTree oracle_tree(const BuildingSpec& spec, unsigned n, unsigned max_d);

// Symbolic forms use q in place of m; the BuildingSpec overloads evaluate at q = m.
RationalFn layer_genfun(BasinKind kind, unsigned n);
RationalFn layer_genfun(const BuildingSpec& spec, unsigned n);

// Unrolled sum of X^i * layer_genfun(n - i), i = 0..n.
RationalFn basin_genfun(BasinKind kind, unsigned n);
RationalFn basin_genfun(const BuildingSpec& spec, unsigned n);

// Closed form with the U/R/S-shaped numerators over (1-X^2), (1-X), (1-X)^2.
RationalFn basin_closed_form(BasinKind kind, unsigned n);

// (1 - X^2) * zeta with common (1-X), (1+X) factors cancelled.
RationalFn geodesic_genfun(BasinKind kind, unsigned n, Flavor which);
RationalFn geodesic_genfun(const BuildingSpec& spec, unsigned n, Flavor which);

BiPoly layer_denominator(BasinKind kind);

struct GenFunRecord {
  BasinKind kind;
  unsigned n = 0;
  RationalFn layer;
  RationalFn basin;
  RationalFn layer_geodesic;
  RationalFn basin_geodesic;
};

GenFunRecord genfun_record(BasinKind kind, unsigned n);

// Basin recurrence zeta^P_{n+1} = zeta_{n+1} + X zeta^P_n checked on the closed
// forms for 0 <= n < n_max, plus agreement of the unrolled and closed basin forms.
Report check_recurrence(BasinKind kind, unsigned n_max);
Report check_recurrence(const BuildingSpec& spec, unsigned n_max);

// zeta = zeta~ / (1 - X^2) for both flavors, n = 0..n_max.
Report check_geodesic(BasinKind kind, unsigned n_max);

// Closed forms against the BFS oracle for n = 0..n_max, d = 0..max_d.
Report check_oracle(const BuildingSpec& spec, unsigned n_max, unsigned max_d);

}  // namespace impactzeta::genfun
