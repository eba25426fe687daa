#include "impactzeta/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "impactzeta/error.hpp"

namespace impactzeta::padic {

namespace {

unsigned long upow(unsigned p, unsigned e) {
  unsigned long r = 1;
  while (e--) r *= p;
  return r;
}

Vec2 combo(const mpz_class& s, const Vec2& u, const mpz_class& t, const Vec2& v) {
  return Vec2{s * u[0] + t * v[0], s * u[1] + t * v[1]};
}

unsigned search_halfwidth(unsigned n, unsigned max_contribution) { return max_contribution + n + 2; }

}  // namespace

std::string type_to_string(const TypeVec& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ";" : "") + std::to_string(t[i]);
  return s;
}

unsigned required_precision(unsigned n, unsigned max_contribution) {
  return std::max(4u, max_contribution + 2 * n + 2);
}

unsigned default_precision(unsigned n, unsigned max_contribution) {
  return std::max(8u, max_contribution + 2 * n + 4);
}

std::optional<QuadElem> find_generator(const CaseInstance& inst, unsigned n, const LatticeHNF& ideal) {
  const unsigned p = inst.p();
  const Basis b = ideal.basis(p);
  for (unsigned s = 0; s < p; ++s)
    for (unsigned t = 0; t < p; ++t) {
      if (s == 0 && t == 0) continue;
      Vec2 alpha = combo(s, b[0], t, b[1]);
      Vec2 w = omega_times(inst, n, alpha);
      if (alpha[0] * w[1] - w[0] * alpha[1] == 0) continue;
      if (hnf_from_generators(p, alpha, w) == ideal) return QuadElem{alpha[0], alpha[1]};
    }
  return std::nullopt;
}

std::vector<IdealRecord> enumerate_ideals(const CaseInstance& inst, unsigned n,
                                          unsigned max_contribution,
                                          const EnumerationOptions& opts) {
  const unsigned p = inst.p();
  const unsigned D = max_contribution;
  if (inst.precision() < required_precision(n, D))
    throw Error(Errc::PrecisionTooSmall, "precision " + std::to_string(inst.precision()) +
                                             " below the required " +
                                             std::to_string(required_precision(n, D)));
  struct Shape {
    unsigned a, b;
    unsigned long count;
  };
  std::vector<Shape> shapes;
  long double total = 0;
  for (unsigned k = 0; k <= D; ++k)
    for (unsigned b = n; b <= n + k; ++b) {
      unsigned a = n + k - b;
      total += std::pow(static_cast<long double>(p), static_cast<long double>(a));
      if (total > static_cast<long double>(opts.max_candidates))
        throw Error(Errc::EnumerationOverflow, "more than " + std::to_string(opts.max_candidates) +
                                                   " candidate sublattices");
      shapes.push_back(Shape{a, b, upow(p, a)});
    }

  const unsigned halfwidth = search_halfwidth(n, D);
  const LatticeHNF on = order_lattice(p, n);
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<std::vector<IdealRecord>> parts(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned tid) {
    try {
      for (const auto& sh : shapes)
        for (unsigned long c = tid; c < sh.count; c += threads) {
          LatticeHNF l{sh.a, sh.b, mpz_class(c)};
          if (!is_ideal(inst, n, l)) continue;
          IdealRecord rec;
          rec.lattice = l;
          rec.index_exponent = index_exponent(p, n, l);
          rec.generator = find_generator(inst, n, l);
          rec.principal = rec.generator.has_value();
          if (opts.principal_only && !rec.principal) continue;
          if (rec.principal) {
            rec.type = elem_type(inst, inst.reduce(*rec.generator));
            rec.contribution = orders::contribution(inst.ext(), *rec.type);
          }
          rec.vertex = locate_vertex(inst, l.basis(p), halfwidth);
          rec.distance_to_On = lattice_distance(inst, l, on);
          parts[tid].push_back(std::move(rec));
        }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<IdealRecord> out;
  for (auto& part : parts)
    for (auto& r : part) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(),
            [](const IdealRecord& x, const IdealRecord& y) { return x.lattice < y.lattice; });
  return out;
}

LatticeHNF traveling(const CaseInstance& inst, unsigned n, const LatticeHNF& j) {
  if (!is_ideal(inst, n, j)) throw Error(Errc::NotAnIdeal, j.to_string() + " is not an ideal of O_n");
  const unsigned p = inst.p();
  Basis b = j.basis(p);
  const mpz_class pp = p;
  return hnf_from_generators(p, Vec2{b[0][0] * pp, b[0][1] * pp}, Vec2{b[1][0] * pp, b[1][1] * pp});
}

VertexAddr ideal_vertex(const CaseInstance& inst, const IdealRecord& rec, const TruncatedTree& building) {
  if (!(building.spec() == building_spec(inst)))
    throw Error(Errc::InvalidArgument, "building does not match the case instance");
  VertexAddr v = locate_vertex(inst, rec.lattice.basis(inst.p()), building.halfwidth(),
                               building.radius());
  if (!building.contains(v)) throw Error(Errc::OutsideTruncation, "vertex outside the truncation");
  return v;
}

Report check_unit_indices(const CaseInstance& inst, unsigned n_max) {
  Report rep;
  const std::string prefix = "padic.unit_index." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p());
  const mpz_class q = inst.p();
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::string at = ".n=" + std::to_string(n);
    const mpz_class want = eval_at_q(orders::unit_index(inst.ext(), n), q).coeff(0, 0);
    const mpz_class brute = unit_index_bruteforce(inst, n);
    rep.add(prefix + at + ".bruteforce", brute == want,
            "counted " + brute.get_str() + ", formula " + want.get_str());

    for (unsigned d = 0; d <= n; ++d) {
      auto reps = coset_reps(inst, n, d);
      mpz_class expect = eval_at_q(poly_exact_div(orders::unit_index(inst.ext(), n),
                                                  orders::unit_index(inst.ext(), n - d)),
                                   q)
                             .coeff(0, 0);
      bool ok = reps.size() == expect;
      for (const auto& u : reps) ok = ok && in_order_units(inst, n - d, u);
      for (std::size_t i = 0; ok && i < reps.size(); ++i)
        for (std::size_t j = i + 1; ok && j < reps.size(); ++j)
          ok = !in_order(inst, n, inst.mul(reps[i], inst.inv(reps[j])));
      rep.add(prefix + at + ".coset_reps.d=" + std::to_string(d), ok,
              std::to_string(reps.size()) + " representatives, expected " + expect.get_str());
    }

    if (n == 0) continue;
    // Completeness: every unit of O_0 / p^n O_0 lies in exactly one coset u O_n^*.
    auto reps = coset_reps(inst, n, n);
    std::vector<QuadElem> inv;
    for (const auto& u : reps) inv.push_back(inst.inv(u));
    const unsigned long pn = upow(inst.p(), n);
    bool complete = true;
    for (unsigned long x = 0; x < pn && complete; ++x)
      for (unsigned long y = 0; y < pn && complete; ++y) {
        QuadElem w{x, y};
        if (!inst.is_unit(w)) continue;
        unsigned hits = 0;
        for (const auto& ui : inv) hits += in_order(inst, n, inst.mul(ui, w)) ? 1 : 0;
        complete = hits == 1;
      }
    rep.add(prefix + at + ".coset_reps.complete", complete);
  }
  return rep;
}

Report check_slope_map(const CaseInstance& inst, unsigned n) {
  Report rep;
  const std::string prefix = "padic.slope." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p()) + ".n=" + std::to_string(n);
  const unsigned p = inst.p();
  const unsigned long top = upow(p, n + 1), pn = upow(p, n);
  std::vector<QuadElem> units;
  for (unsigned long x = 0; x < top; ++x) {
    if (x % p == 0) continue;
    for (unsigned long z = 0; z < p; ++z) units.push_back(QuadElem{x, mpz_class(z * pn)});
  }
  bool hom = true, kernel = true, onto = true;
  std::set<unsigned> image;
  std::vector<unsigned> slope(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    slope[i] = slope_map(inst, n, units[i]);
    image.insert(slope[i]);
    kernel = kernel && ((slope[i] == 0) == in_order_units(inst, n + 1, units[i]));
  }
  for (std::size_t i = 0; i < units.size() && hom; ++i)
    for (std::size_t j = 0; j < units.size() && hom; ++j)
      hom = slope_map(inst, n, inst.mul(units[i], units[j])) == (slope[i] + slope[j]) % p;
  onto = image.size() == p;
  rep.add(prefix + ".homomorphism", hom);
  rep.add(prefix + ".kernel", kernel);
  rep.add(prefix + ".surjective", onto);
  return rep;
}

Report check_unit_matrices(const CaseInstance& inst, unsigned n) {
  Report rep;
  const std::string prefix = "padic.unit_matrix." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p()) + ".n=" + std::to_string(n);
  const unsigned p = inst.p();
  std::vector<Frame> fixed{anchor_frame(inst, 0)};
  if (inst.tag() == CaseTag::Ramified) fixed.push_back(anchor_frame(inst, -1));
  bool ok = true;
  std::string detail;
  for (const auto& r : level_reps(inst, n)) {
    auto m = unit_matrix(inst, r.element);
    mpz_class det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (mpz_divisible_ui_p(det.get_mpz_t(), p)) {
      ok = false;
      detail = "non-unit determinant for t=" + std::to_string(r.t);
    }
    Vec2 u{m[0][0], m[1][0]};
    for (const auto& f : fixed) {
      Basis image{elem_times(inst, u, f.c1), elem_times(inst, u, f.c2)};
      if (hnf_from_basis(p, image) != hnf_from_basis(p, f.basis()) ||
          lattice_distance(p, image, f.basis()) != 0) {
        ok = false;
        detail = "vertex moved by t=" + std::to_string(r.t);
      }
    }
  }
  rep.add(prefix, ok, detail);
  return rep;
}

Report check_embedding(const CaseInstance& inst, unsigned radius) {
  Report rep;
  const std::string prefix = "padic.embedding." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p());
  const BuildingSpec spec = building_spec(inst);
  TruncatedTree tree = build_truncated(spec, radius, radius);
  std::vector<Basis> frames;
  for (const auto& v : tree.vertices()) frames.push_back(vertex_frame(inst, v).basis());
  std::string iso, loc;
  for (std::size_t i = 0; i < tree.size() && iso.empty(); ++i)
    for (std::size_t j = i; j < tree.size() && iso.empty(); ++j) {
      unsigned d = lattice_distance(inst.p(), frames[i], frames[j]);
      if (d != address_distance(tree.vertex(i), tree.vertex(j)))
        iso = vertex_to_string(spec.kind(), tree.vertex(i)) + " vs " +
              vertex_to_string(spec.kind(), tree.vertex(j));
    }
  for (std::size_t i = 0; i < tree.size() && loc.empty(); ++i)
    if (!(locate_vertex(inst, frames[i], radius) == tree.vertex(i)))
      loc = vertex_to_string(spec.kind(), tree.vertex(i));
  rep.add(prefix + ".isometry", iso.empty(), iso);
  rep.add(prefix + ".locate", loc.empty(), loc);
  return rep;
}

Report check_type_histogram(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                            const std::vector<IdealRecord>& records) {
  Report rep;
  const std::string prefix = "padic.types." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p()) + ".n=" + std::to_string(n);
  std::map<TypeVec, unsigned long> hist;
  bool index_ok = true;
  for (const auto& r : records) {
    if (!r.principal) continue;
    ++hist[*r.type];
    index_ok = index_ok && r.index_exponent == r.contribution;
  }
  rep.add(prefix + ".index_equals_contribution", index_ok);
  std::ostringstream bad;
  std::set<TypeVec> predicted;
  for (const auto& t : orders::occurring_types(inst.ext(), n, max_contribution)) {
    predicted.insert(t.omega);
    mpz_class want = eval_at_q(t.count_expr, inst.p()).coeff(0, 0);
    unsigned long got = hist.count(t.omega) ? hist[t.omega] : 0;
    if (want != got)
      bad << "type " << type_to_string(t.omega) << ": " << got << " vs " << want.get_str() << "; ";
  }
  for (const auto& [t, count] : hist)
    if (!predicted.count(t)) bad << "unexpected type " << type_to_string(t) << "; ";
  rep.add(prefix + ".histogram", bad.str().empty(), bad.str());
  return rep;
}

Report check_series(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                    const std::vector<IdealRecord>& records) {
  Report rep;
  const std::string prefix = "padic.series." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p()) + ".n=" + std::to_string(n);
  std::vector<unsigned long> principal(max_contribution + 1, 0), all(max_contribution + 1, 0);
  for (const auto& r : records) {
    if (r.index_exponent > max_contribution) continue;
    ++all[r.index_exponent];
    if (r.principal) ++principal[r.index_exponent];
  }
  const mpz_class q = inst.p();
  auto ps = series_expand(orders::principal_zeta(inst.ext(), n).eval_at_q(q), max_contribution);
  auto fs = series_expand(orders::full_zeta(inst.ext(), n).full.eval_at_q(q), max_contribution);
  auto compare = [&](const std::vector<unsigned long>& got, const SeriesPrefix& want) {
    for (unsigned d = 0; d <= max_contribution; ++d) {
      mpz_class w = want.coeffs[d].coeff(0, 0);
      if (w != got[d])
        return "X^" + std::to_string(d) + ": " + std::to_string(got[d]) + " vs " + w.get_str();
    }
    return std::string();
  };
  std::string d1 = compare(principal, ps), d2 = compare(all, fs);
  rep.add(prefix + ".principal", d1.empty(), d1);
  rep.add(prefix + ".all_ideals", d2.empty(), d2);
  return rep;
}

Report source_and_distance_check(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                                 const std::vector<IdealRecord>& records) {
  Report rep;
  const std::string prefix = "padic.vertices." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p()) + ".n=" + std::to_string(n);
  const BuildingSpec spec = building_spec(inst);
  const BasinKind kind = spec.kind();
  const VertexAddr on = way_out_vertex(spec, n);
  const LatticeHNF on_lattice = order_lattice(inst.p(), n);
  const auto& e = inst.ext().e_vec;

  std::map<VertexAddr, std::vector<const IdealRecord*>> by_vertex;
  bool heights = true;
  for (const auto& r : records) {
    if (!r.principal) continue;
    by_vertex[r.vertex].push_back(&r);
    heights = heights && r.vertex.height() == n;
  }
  rep.add(prefix + ".layer", heights);

  std::ostringstream src, dist, cong;
  for (const auto& [v, recs] : by_vertex) {
    const std::string name = vertex_to_string(kind, v);
    const IdealRecord* lo = recs.front();
    for (auto* r : recs)
      if (r->contribution < lo->contribution) lo = r;
    const TypeVec& omega = *lo->type;
    std::set<TypeVec> seen;
    for (auto* r : recs) seen.insert(*r->type);
    std::set<TypeVec> expect;
    for (unsigned k = 0;; ++k) {
      TypeVec t = omega;
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += k * e[i];
      if (orders::contribution(inst.ext(), t) > max_contribution) break;
      expect.insert(t);
    }
    if (seen != expect) src << name << " ";
    unsigned dl = lattice_distance(inst, lo->lattice, on_lattice);
    if (lo->contribution != dl || dl != address_distance(v, on))
      dist << name << " (c=" << lo->contribution << ", d=" << dl << ") ";
    for (auto* r : recs) {
      const TypeVec& t = *r->type;
      bool multiple = t[0] >= omega[0] && (t[0] - omega[0]) % e[0] == 0;
      unsigned k = multiple ? (t[0] - omega[0]) / e[0] : 0;
      for (std::size_t i = 1; i < t.size() && multiple; ++i)
        multiple = t[i] == omega[i] + k * e[i];
      if (!multiple) {
        cong << name << " ";
        break;
      }
    }
  }
  rep.add(prefix + ".type_progression", src.str().empty(), src.str());
  rep.add(prefix + ".source_distance", dist.str().empty(), dist.str());
  rep.add(prefix + ".type_congruence", cong.str().empty(), cong.str());

  // Vertex set equals the layer-n vertices within distance D of O_n.
  TruncatedTree tree = build_truncated(spec, n, std::max(n, max_contribution));
  std::set<VertexAddr> want;
  for (const auto& v : tree.layer_members(n))
    if (address_distance(v, on) <= max_contribution) want.insert(v);
  std::set<VertexAddr> got;
  for (const auto& [v, recs] : by_vertex) got.insert(v);
  rep.add(prefix + ".vertex_set", got == want,
          std::to_string(got.size()) + " vertices, expected " + std::to_string(want.size()));
  return rep;
}

Report source_and_distance_check(const CaseInstance& inst, unsigned n, unsigned max_contribution) {
  EnumerationOptions opts;
  opts.principal_only = true;
  return source_and_distance_check(inst, n, max_contribution,
                                   enumerate_ideals(inst, n, max_contribution, opts));
}

Report check_traveling(const CaseInstance& inst, unsigned n, unsigned max_contribution,
                       const std::vector<IdealRecord>& records_n,
                       const std::vector<IdealRecord>& records_next) {
  Report rep;
  const std::string prefix = "padic.traveling." + std::string(orders::case_name(inst.tag())) +
                             ".p=" + std::to_string(inst.p()) + ".n=" + std::to_string(n);
  std::set<LatticeHNF> image;
  bool valid = true;
  std::size_t sources = 0;
  for (const auto& r : records_n) {
    if (r.index_exponent + 1 > max_contribution) continue;
    ++sources;
    LatticeHNF t = traveling(inst, n, r.lattice);
    valid = valid && is_ideal(inst, n + 1, t) && !find_generator(inst, n + 1, t) &&
            index_exponent(inst.p(), n + 1, t) == r.index_exponent + 1;
    image.insert(t);
  }
  std::set<LatticeHNF> nonprincipal;
  for (const auto& r : records_next)
    if (!r.principal && r.index_exponent <= max_contribution) nonprincipal.insert(r.lattice);
  rep.add(prefix + ".lands_in_nonprincipal", valid);
  rep.add(prefix + ".injective", image.size() == sources);
  rep.add(prefix + ".onto_nonprincipal", image == nonprincipal,
          std::to_string(image.size()) + " images, " + std::to_string(nonprincipal.size()) +
              " non-principal ideals");
  return rep;
}

}  // namespace impactzeta::padic
