#include "json_codec.hpp"

#include "impactzeta/error.hpp"

namespace impactzeta::cli {

Json poly_to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back(Json::array({t.q_exp, t.x_exp, t.coeff.get_str()}));
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

BiPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error(Errc::InvalidArgument, "polynomial JSON needs a \"terms\" array");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3)
      throw Error(Errc::InvalidArgument, "term must be [q_exp, x_exp, coeff]");
    Term term;
    term.q_exp = t[0].get<std::uint32_t>();
    term.x_exp = t[1].get<std::uint32_t>();
    if (t[2].is_string()) {
      if (term.coeff.set_str(t[2].get<std::string>(), 10) != 0)
        throw Error(Errc::InvalidArgument, "bad coefficient " + t[2].get<std::string>());
    } else {
      term.coeff = mpz_class(std::to_string(t[2].get<long long>()));
    }
    terms.push_back(std::move(term));
  }
  return BiPoly::from_terms(std::move(terms));
}

Json rational_to_json(const RationalFn& f) {
  Json out;
  out["numerator"] = poly_to_json(f.num());
  out["denominator"] = poly_to_json(f.den());
  return out;
}

RationalFn rational_from_json(const Json& j) {
  return RationalFn(poly_from_json(j.at("numerator")), poly_from_json(j.at("denominator")));
}

Json series_to_json(const SeriesPrefix& s, bool numeric) {
  Json out = Json::array();
  for (const auto& c : s.coeffs) {
    if (numeric)
      out.push_back(c.coeff(0, 0).get_str());
    else
      out.push_back(poly_to_json(c));
  }
  return out;
}

Json checks_to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json record_to_json(const padic::CaseInstance& inst, unsigned n, const padic::IdealRecord& rec) {
  Json j;
  j["case"] = std::string(orders::case_name(inst.tag()));
  j["p"] = inst.p();
  j["n"] = n;
  j["hnf"] = Json{{"a", rec.lattice.a}, {"b", rec.lattice.b}, {"c", rec.lattice.c.get_str()}};
  j["index_exponent"] = rec.index_exponent;
  j["principal"] = rec.principal;
  if (rec.principal) {
    j["generator"] = Json::array({rec.generator->x.get_str(), rec.generator->y.get_str()});
    j["type"] = *rec.type;
    j["contribution"] = rec.contribution;
  } else {
    j["generator"] = nullptr;
    j["type"] = nullptr;
    j["contribution"] = nullptr;
  }
  j["vertex"] = vertex_to_string(orders::basin_of(inst.tag()), rec.vertex);
  j["distance"] = rec.distance_to_On;
  return j;
}

}  // namespace impactzeta::cli
