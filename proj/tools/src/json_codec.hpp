#pragma once

#include <json.hpp>

#include "impactzeta/ideals.hpp"
#include "impactzeta/poly.hpp"
#include "impactzeta/report.hpp"

namespace impactzeta::cli {

using Json = nlohmann::ordered_json;

// {"terms": [[q_exp, x_exp, "coeff"], ...]} sorted by (x_exp, q_exp).
Json poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const Json& j);

Json rational_to_json(const RationalFn& f);
RationalFn rational_from_json(const Json& j);

Json series_to_json(const SeriesPrefix& s, bool numeric);

Json checks_to_json(const Report& r);

Json record_to_json(const padic::CaseInstance& inst, unsigned n, const padic::IdealRecord& rec);

}  // namespace impactzeta::cli
