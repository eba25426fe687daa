#include "impactzeta/genfun.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "impactzeta/error.hpp"

namespace impactzeta::genfun {

namespace {

mpz_class power(unsigned base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

BiPoly q_pow(unsigned k) { return BiPoly::monomial(1, k, 0); }

// Sum_{k<n} q^k X^{2k}
BiPoly inner_layers(unsigned n) {
  std::vector<Term> t;
  for (unsigned k = 0; k < n; ++k) t.push_back(Term{k, 2 * k, 1});
  return BiPoly::from_terms(std::move(t));
}

// |R_n| as a polynomial in q (n >= 1).
BiPoly layer_size(BasinKind kind, unsigned n) {
  switch (kind) {
    case BasinKind::Unramified: return (q_pow(1) + BiPoly::constant(1)) * q_pow(n - 1);
    case BasinKind::Ramified: return q_pow(n);
    case BasinKind::Split: return (q_pow(1) - BiPoly::constant(1)) * q_pow(n - 1);
  }
  return {};
}

// sum_{k=0..n} q^k X^{2k}
BiPoly r_poly(unsigned n) { return inner_layers(n + 1); }

std::string series_mismatch(const std::vector<mpz_class>& want, const SeriesPrefix& got) {
  std::ostringstream os;
  for (std::size_t d = 0; d < want.size(); ++d) {
    mpz_class g = got.coeffs[d].coeff(0, 0);
    if (g != want[d]) {
      os << "d=" << d << " oracle=" << want[d].get_str() << " closed=" << g.get_str();
      return os.str();
    }
  }
  return {};
}

}  // namespace

mpz_class reachable_count_closed(const BuildingSpec& spec, unsigned n, unsigned d) {
  if (n == 0)
    throw Error(Errc::UnsupportedHeight, "closed r(d, O_n) needs n >= 1; use the generating function");
  const unsigned m = spec.m();
  if (d < 2 * n) return d % 2 ? mpz_class(0) : power(m, d / 2);
  switch (spec.kind()) {
    case BasinKind::Unramified:
      return d % 2 ? mpz_class(0) : mpz_class((m + 1) * power(m, n - 1));
    case BasinKind::Ramified: return power(m, n);
    case BasinKind::Split: {
      mpz_class l = d - 2 * n;
      return (l + 1) * (m - 1) * power(m, n - 1);
    }
  }
  return 0;
}

CountTable count_table_oracle(const TruncatedTree& tree, const VertexAddr& v, unsigned max_d) {
  const std::size_t vi = tree.index_of(v);
  const int h = static_cast<int>(v.height());
  const auto dist = tree.bfs_from(vi);

  for (std::size_t u = 0; u < tree.size(); ++u) {
    if (dist[u] + 1 <= static_cast<int>(max_d) && tree.missing_min_height(u) <= h)
      throw Error(Errc::TruncationInsufficient,
                  "vertex " + vertex_to_string(tree.spec().kind(), tree.vertex(u)) +
                      " has omitted neighbours within the probed distance");
  }

  CountTable t{tree.spec(), v, max_d, {}, {}, {}, {}};
  std::vector<std::size_t> layer_at(max_d + 1, 0), ball_at(max_d + 1, 0);
  for (std::size_t u = 0; u < tree.size(); ++u) {
    const int hu = static_cast<int>(tree.vertex(u).height());
    if (hu > h || dist[u] > static_cast<int>(max_d)) continue;
    ++ball_at[dist[u]];
    if (hu == h) ++layer_at[dist[u]];
  }
  for (unsigned d = 0; d <= max_d; ++d) {
    mpz_class r = 0, p = 0;
    for (unsigned e = d % 2; e <= d; e += 2) {
      r += layer_at[e];
      p += ball_at[e];
    }
    t.r.push_back(r);
    t.p.push_back(p);
    t.r_exact.emplace_back(layer_at[d]);
    t.p_exact.emplace_back(ball_at[d]);
  }
  return t;
}

mpz_class reachable_count_oracle(const TruncatedTree& tree, const VertexAddr& v, unsigned d,
                                 Flavor which) {
  auto t = count_table_oracle(tree, v, d);
  return which == Flavor::Layer ? t.r[d] : t.p[d];
}

TruncatedTree oracle_tree(const BuildingSpec& spec, unsigned n, unsigned max_d) {
  return build_truncated(spec, n, std::max(n, max_d));
}

BiPoly layer_denominator(BasinKind kind) {
  switch (kind) {
    case BasinKind::Unramified: return BiPoly::one_minus_x(2);
    case BasinKind::Ramified: return BiPoly::one_minus_x(1);
    case BasinKind::Split: return BiPoly::one_minus_x(1).pow(2);
  }
  return {};
}

RationalFn layer_genfun(BasinKind kind, unsigned n) {
  const BiPoly den = layer_denominator(kind);
  if (n == 0) return {BiPoly::constant(1), den};
  // Layers below n contribute m^k at X^{2k}; from 2n on the counts follow the tail.
  BiPoly num = inner_layers(n) * den + layer_size(kind, n).shift_x(2 * n);
  return {num, den};
}

RationalFn layer_genfun(const BuildingSpec& spec, unsigned n) {
  return layer_genfun(spec.kind(), n).eval_at_q(spec.m());
}

RationalFn basin_genfun(BasinKind kind, unsigned n) {
  const BiPoly den = layer_denominator(kind);
  BiPoly num;
  for (unsigned i = 0; i <= n; ++i) num += layer_genfun(kind, n - i).num().shift_x(i);
  return {num, den};
}

RationalFn basin_genfun(const BuildingSpec& spec, unsigned n) {
  return basin_genfun(spec.kind(), n).eval_at_q(spec.m());
}

RationalFn basin_closed_form(BasinKind kind, unsigned n) {
  const BiPoly den = layer_denominator(kind);
  if (kind == BasinKind::Ramified) return {r_poly(n), den};
  if (n == 0) return {BiPoly::constant(1), den};
  const BiPoly head = kind == BasinKind::Unramified
                          ? BiPoly::constant(1) + BiPoly::x_var()
                          : BiPoly::constant(1) - BiPoly::x_var();
  return {head * r_poly(n - 1) + BiPoly::monomial(1, n, 2 * n), den};
}

namespace {

RationalFn strip_common(RationalFn f, const BiPoly& factor) {
  BiPoly qn, qd;
  while (f.den().x_degree() > 0 && try_exact_div(f.num(), factor, qn) &&
         try_exact_div(f.den(), factor, qd))
    f = RationalFn(qn, qd);
  return f;
}

RationalFn geodesic_of(const RationalFn& zeta) {
  RationalFn g = zeta.times(BiPoly::one_minus_x(2));
  g = strip_common(g, BiPoly::one_minus_x(1));
  g = strip_common(g, BiPoly::constant(1) + BiPoly::x_var());
  return g;
}

}  // namespace

RationalFn geodesic_genfun(BasinKind kind, unsigned n, Flavor which) {
  return geodesic_of(which == Flavor::Layer ? layer_genfun(kind, n) : basin_genfun(kind, n));
}

RationalFn geodesic_genfun(const BuildingSpec& spec, unsigned n, Flavor which) {
  return geodesic_of(which == Flavor::Layer ? layer_genfun(spec, n) : basin_genfun(spec, n));
}

GenFunRecord genfun_record(BasinKind kind, unsigned n) {
  return GenFunRecord{kind,
                      n,
                      layer_genfun(kind, n),
                      basin_genfun(kind, n),
                      geodesic_genfun(kind, n, Flavor::Layer),
                      geodesic_genfun(kind, n, Flavor::Basin)};
}

namespace {

Report recurrence_report(BasinKind kind, unsigned n_max, const std::string& tag,
                         const std::function<RationalFn(const RationalFn&)>& view) {
  Report rep;
  const std::string prefix = "genfun.recurrence." + std::string(basin_name(kind)) + tag;
  for (unsigned n = 0; n <= n_max; ++n) {
    RationalFn closed = view(basin_closed_form(kind, n));
    RationalFn unrolled = view(basin_genfun(kind, n));
    rep.add(prefix + ".closed_form.n=" + std::to_string(n), closed.equivalent(unrolled),
            closed.to_string());
    if (n == 0) {
      rep.add(prefix + ".base", closed.equivalent(view(layer_genfun(kind, 0))));
      continue;
    }
    RationalFn rhs = view(layer_genfun(kind, n)) +
                     view(basin_closed_form(kind, n - 1)).times(BiPoly::x_var());
    rep.add(prefix + ".n=" + std::to_string(n), closed.equivalent(rhs));
  }
  return rep;
}

}  // namespace

Report check_recurrence(BasinKind kind, unsigned n_max) {
  return recurrence_report(kind, n_max, "", [](const RationalFn& f) { return f; });
}

Report check_recurrence(const BuildingSpec& spec, unsigned n_max) {
  const mpz_class m = spec.m();
  return recurrence_report(spec.kind(), n_max, ".m=" + std::to_string(spec.m()),
                           [m](const RationalFn& f) { return f.eval_at_q(m); });
}

Report check_geodesic(BasinKind kind, unsigned n_max) {
  Report rep;
  const std::string prefix = "genfun.geodesic." + std::string(basin_name(kind));
  const BiPoly w = BiPoly::one_minus_x(2);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (Flavor f : {Flavor::Layer, Flavor::Basin}) {
      RationalFn zeta = f == Flavor::Layer ? layer_genfun(kind, n) : basin_genfun(kind, n);
      RationalFn geo = geodesic_genfun(kind, n, f);
      bool ok = zeta.equivalent(RationalFn(geo.num(), geo.den() * w));
      // finite basins give polynomials
      if (kind != BasinKind::Split) ok = ok && geo.den() == BiPoly::constant(1);
      rep.add(prefix + (f == Flavor::Layer ? ".layer" : ".basin") + ".n=" + std::to_string(n), ok,
              geo.to_string());
    }
  }
  return rep;
}

Report check_oracle(const BuildingSpec& spec, unsigned n_max, unsigned max_d) {
  Report rep;
  const std::string prefix =
      "genfun.oracle." + std::string(basin_name(spec.kind())) + ".m=" + std::to_string(spec.m());
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::string at = ".n=" + std::to_string(n);
    std::optional<CountTable> table;
    try {
      TruncatedTree tree = oracle_tree(spec, n, max_d);
      table = count_table_oracle(tree, way_out_vertex(spec, n), max_d);
    } catch (const Error& e) {
      rep.add(prefix + at + ".truncation", false, e.what());
      continue;
    }
    const CountTable& t = *table;
    if (n >= 1) {
      std::string detail;
      for (unsigned d = 0; d <= max_d && detail.empty(); ++d) {
        mpz_class c = reachable_count_closed(spec, n, d);
        if (c != t.r[d])
          detail = "d=" + std::to_string(d) + " oracle=" + t.r[d].get_str() + " closed=" + c.get_str();
      }
      rep.add(prefix + at + ".r_closed", detail.empty(), detail);
    }
    auto layer = series_expand(layer_genfun(spec, n), max_d);
    auto basin = series_expand(basin_genfun(spec, n), max_d);
    auto layer_geo = series_expand(geodesic_genfun(spec, n, Flavor::Layer), max_d);
    auto basin_geo = series_expand(geodesic_genfun(spec, n, Flavor::Basin), max_d);
    std::string d1 = series_mismatch(t.r, layer);
    std::string d2 = series_mismatch(t.p, basin);
    std::string d3 = series_mismatch(t.r_exact, layer_geo);
    std::string d4 = series_mismatch(t.p_exact, basin_geo);
    rep.add(prefix + at + ".layer_series", d1.empty(), d1);
    rep.add(prefix + at + ".basin_series", d2.empty(), d2);
    rep.add(prefix + at + ".layer_geodesic_series", d3.empty(), d3);
    rep.add(prefix + at + ".basin_geodesic_series", d4.empty(), d4);
  }
  return rep;
}

}  // namespace impactzeta::genfun
