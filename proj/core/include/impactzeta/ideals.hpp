#pragma once

#include <optional>
#include <vector>

#include "impactzeta/embedding.hpp"
#include "impactzeta/report.hpp"

namespace impactzeta::padic {

struct IdealRecord {
  LatticeHNF lattice;
  unsigned index_exponent = 0;
  bool principal = false;
  std::optional<QuadElem> generator;
  std::optional<TypeVec> type;
  unsigned contribution = 0;  // c(type) when principal
  VertexAddr vertex;
  unsigned distance_to_On = 0;
};

// Smallest precision accepted by enumerate_ideals for (n, D).
unsigned required_precision(unsigned n, unsigned max_contribution);
// Precision used when none is requested.
unsigned default_precision(unsigned n, unsigned max_contribution);

struct EnumerationOptions {
  bool principal_only = false;
  unsigned threads = 1;
  std::size_t max_candidates = 20'000'000;
};

// A generator of the O_n-ideal I, searched over the nonzero classes of I / pI.
std::optional<QuadElem> find_generator(const CaseInstance& inst, unsigned n, const LatticeHNF& ideal);

// All ideals of O_n with [O_n : I] <= p^D, from every Hermite-form sublattice.
// Output is sorted by Hermite key and independent of the thread count.
std::vector<IdealRecord> enumerate_ideals(const CaseInstance& inst, unsigned n,
                                          unsigned max_contribution,
                                          const EnumerationOptions& opts = {});

// T_n(J) = pJ, an ideal of O_{n+1}.
LatticeHNF traveling(const CaseInstance& inst, unsigned n, const LatticeHNF& j);

VertexAddr ideal_vertex(const CaseInstance& inst, const IdealRecord& rec, const TruncatedTree& building);

Report check_unit_indices(const CaseInstance& inst, unsigned n_max);
Report check_slope_map(const CaseInstance& inst, unsigned n);
Report check_unit_matrices(const CaseInstance& inst, unsigned n);
Report check_embedding(const CaseInstance& inst, unsigned radius);

Report check_type_histogram(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                            const std::vector<IdealRecord>& records);
Report check_series(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                    const std::vector<IdealRecord>& records);
Report source_and_distance_check(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                                 const std::vector<IdealRecord>& records);
Report source_and_distance_check(const CaseInstance& inst, unsigned n, unsigned max_contribution);
// records_n: ideals of O_n up to D; records_next: ideals of O_{n+1} up to D.
Report check_traveling(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                       const std::vector<IdealRecord>& records_n,
                       const std::vector<IdealRecord>& records_next);

std::string type_to_string(const TypeVec& t);

}  // namespace impactzeta::padic
