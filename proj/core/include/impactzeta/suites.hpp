#pragma once

#include <vector>

#include "impactzeta/orders.hpp"
#include "impactzeta/report.hpp"

namespace impactzeta::suites {

// Symbolic identities for every case, n <= max_n: numerators, main theorem,
// both recurrences, geodesic relation.
Report identities(unsigned max_n);

// Closed forms against the truncated-tree BFS oracle, all basins.
Report oracle(const std::vector<unsigned>& ms, unsigned max_n, unsigned max_d);

struct ArithmeticTarget {
  orders::CaseTag tag;
  unsigned p;
};

std::vector<ArithmeticTarget> default_arithmetic_grid();

// p-adic enumeration checks: unit indices, slope maps, unit matrices, embedding,
// type histograms, series, vertices and sources, traveling map.
Report arithmetic(const std::vector<ArithmeticTarget>& grid, unsigned max_n,
                  unsigned max_contribution, unsigned threads = 1);

// m = 1 line examples.
Report line_fixture(unsigned max_n);

}  // namespace impactzeta::suites
