#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "impactzeta/error.hpp"
#include "impactzeta/genfun.hpp"
#include "impactzeta/ideals.hpp"
#include "impactzeta/orders.hpp"
#include "impactzeta/suites.hpp"
#include "json_codec.hpp"

namespace impactzeta::cli {

std::string tool_version() { return "0.3.0"; }

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  Json doc;
  std::string text;  // csv / text / dot rendering when not json
  int code = kExitOk;
};

Json make_doc(const std::string& command, Json request) {
  Json doc;
  doc["tool"] = "impactzeta";
  doc["version"] = tool_version();
  doc["command"] = command;
  doc["request"] = std::move(request);
  doc["results"] = Json::object();
  doc["checks"] = Json::array();
  return doc;
}

void finish(Output& o, const Report& checks) {
  o.doc["checks"] = checks_to_json(checks);
  o.doc["status"] = checks.all_pass() ? "pass" : "fail";
  o.code = checks.all_pass() ? kExitOk : kExitFailure;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void text_checks(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
}

mpz_class parse_integer(const std::string& s, const std::string& flag) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(flag + " expects an integer, got '" + s + "'");
  return v;
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw UsageError("format '" + fmt + "' is not available for " + command);
}

// ---- zeta ---------------------------------------------------------------

struct ZetaArgs {
  std::string case_name;
  unsigned n = 0;
  std::string q;
  std::optional<unsigned> series_terms;
  std::string format = "json";
};

Output cmd_zeta(const ZetaArgs& a) {
  require_format(a.format, {"json", "text", "csv"}, "zeta");
  const auto ext = orders::ExtensionCase::make(orders::parse_case(a.case_name));
  std::optional<mpz_class> q;
  if (!a.q.empty()) q = parse_integer(a.q, "--q");

  Json req;
  req["case"] = a.case_name;
  req["n"] = a.n;
  req["q"] = q ? Json(q->get_str()) : Json(nullptr);
  req["series_terms"] = a.series_terms ? Json(*a.series_terms) : Json(nullptr);
  req["format"] = a.format;
  Output o{make_doc("zeta", req), {}, kExitOk};

  orders::ZetaRecord z = orders::full_zeta(ext, a.n);
  auto view = [&](const BiPoly& p) { return q ? eval_at_q(p, *q) : p; };
  BiPoly numerator = view(z.numerator), denominator = view(z.denominator);
  RationalFn principal(view(z.principal.num()), view(z.principal.den()));

  Report checks;
  checks.add("zeta.numerator_identity", z.numerator == orders::numerator_poly(ext, a.n),
             z.numerator.to_string());
  checks.add("zeta.recurrence",
             a.n == 0 ? z.full.equivalent(z.principal)
                      : z.full.equivalent(z.principal +
                                          orders::full_zeta(ext, a.n - 1).full.times(BiPoly::x_var())));

  Json& res = o.doc["results"];
  res["symbolic"] = !q.has_value();
  res["numerator"] = poly_to_json(numerator);
  res["denominator"] = poly_to_json(denominator);
  res["principal"] = rational_to_json(principal);
  std::optional<SeriesPrefix> series;
  if (a.series_terms) {
    series = series_expand(RationalFn(numerator, denominator), *a.series_terms);
    res["series"] = series_to_json(*series, q.has_value());
  }
  finish(o, checks);

  std::ostringstream os;
  if (a.format == "text") {
    os << "case: " << a.case_name << "  n: " << a.n << "\n";
    os << "numerator: " << numerator.to_string() << "\n";
    os << "denominator: " << denominator.to_string() << "\n";
    os << "principal: " << principal.to_string() << "\n";
    if (series) {
      os << "series:";
      for (std::size_t k = 0; k < series->coeffs.size(); ++k)
        os << (k ? ", " : " ") << series->coeffs[k].to_string();
      os << "\n";
    }
    text_checks(os, checks);
  } else if (a.format == "csv") {
    os << "part,index,q_exp,x_exp,coeff\n";
    auto rows = [&](const std::string& part, const std::string& idx, const BiPoly& p) {
      for (const auto& t : p.terms())
        os << part << "," << idx << "," << t.q_exp << "," << t.x_exp << "," << t.coeff.get_str() << "\n";
    };
    rows("numerator", "", numerator);
    rows("denominator", "", denominator);
    if (series)
      for (std::size_t k = 0; k < series->coeffs.size(); ++k) rows("series", std::to_string(k), series->coeffs[k]);
  }
  o.text = os.str();
  return o;
}

// ---- genfun -------------------------------------------------------------

struct GenfunArgs {
  std::string basin;
  unsigned n = 0;
  std::optional<unsigned> m;
  std::optional<unsigned> series_terms;
  std::string format = "json";
};

Output cmd_genfun(const GenfunArgs& a) {
  require_format(a.format, {"json", "text"}, "genfun");
  const BasinKind kind = parse_basin(a.basin);
  if (a.m) BuildingSpec(kind, *a.m);  // validates m

  Json req;
  req["basin"] = a.basin;
  req["n"] = a.n;
  req["m"] = a.m ? Json(*a.m) : Json(nullptr);
  req["series_terms"] = a.series_terms ? Json(*a.series_terms) : Json(nullptr);
  req["format"] = a.format;
  Output o{make_doc("genfun", req), {}, kExitOk};

  genfun::GenFunRecord rec = genfun::genfun_record(kind, a.n);
  auto view = [&](const RationalFn& f) { return a.m ? f.eval_at_q(*a.m) : f; };
  const RationalFn layer = view(rec.layer), basin = view(rec.basin);
  const RationalFn layer_geo = view(rec.layer_geodesic), basin_geo = view(rec.basin_geodesic);

  Report checks;
  const RationalFn w(BiPoly::one_minus_x(2));
  checks.add("genfun.geodesic.layer", layer.equivalent(RationalFn(layer_geo.num(), layer_geo.den() * w.num())));
  checks.add("genfun.geodesic.basin", basin.equivalent(RationalFn(basin_geo.num(), basin_geo.den() * w.num())));
  checks.add("genfun.basin_closed_form", basin.equivalent(view(genfun::basin_closed_form(kind, a.n))));
  if (a.n >= 1)
    checks.add("genfun.recurrence",
               basin.equivalent(layer + view(genfun::basin_genfun(kind, a.n - 1)).times(BiPoly::x_var())));

  Json& res = o.doc["results"];
  res["symbolic"] = !a.m.has_value();
  res["layer"] = rational_to_json(layer);
  res["basin"] = rational_to_json(basin);
  res["layer_geodesic"] = rational_to_json(layer_geo);
  res["basin_geodesic"] = rational_to_json(basin_geo);
  std::optional<SeriesPrefix> ls, bs;
  if (a.series_terms) {
    ls = series_expand(layer, *a.series_terms);
    bs = series_expand(basin, *a.series_terms);
    res["layer_series"] = series_to_json(*ls, a.m.has_value());
    res["basin_series"] = series_to_json(*bs, a.m.has_value());
  }
  finish(o, checks);

  if (a.format == "text") {
    std::ostringstream os;
    os << "basin: " << a.basin << "  n: " << a.n << "  m: " << (a.m ? std::to_string(*a.m) : "q") << "\n";
    os << "layer: " << layer.to_string() << "\n";
    os << "basin: " << basin.to_string() << "\n";
    os << "layer geodesic: " << layer_geo.to_string() << "\n";
    os << "basin geodesic: " << basin_geo.to_string() << "\n";
    auto line = [&](const char* name, const SeriesPrefix& s) {
      os << name << ":";
      for (std::size_t k = 0; k < s.coeffs.size(); ++k) os << (k ? ", " : " ") << s.coeffs[k].to_string();
      os << "\n";
    };
    if (ls) line("layer series", *ls);
    if (bs) line("basin series", *bs);
    text_checks(os, checks);
    o.text = os.str();
  }
  return o;
}

// ---- counts -------------------------------------------------------------

struct CountsArgs {
  std::string basin;
  unsigned m = 2;
  unsigned n = 0;
  unsigned max_d = 12;
  std::string format = "json";
};

Output cmd_counts(const CountsArgs& a) {
  require_format(a.format, {"json", "text", "csv"}, "counts");
  const BuildingSpec spec(parse_basin(a.basin), a.m);

  Json req;
  req["basin"] = a.basin;
  req["m"] = a.m;
  req["n"] = a.n;
  req["max_d"] = a.max_d;
  req["format"] = a.format;
  Output o{make_doc("counts", req), {}, kExitOk};

  TruncatedTree tree = genfun::oracle_tree(spec, a.n, a.max_d);
  genfun::CountTable t = genfun::count_table_oracle(tree, way_out_vertex(spec, a.n), a.max_d);
  auto layer = series_expand(genfun::layer_genfun(spec, a.n), a.max_d);
  auto basin = series_expand(genfun::basin_genfun(spec, a.n), a.max_d);

  Report checks;
  Json rows = Json::array();
  bool closed_ok = true, layer_ok = true, basin_ok = true;
  for (unsigned d = 0; d <= a.max_d; ++d) {
    Json row;
    row["d"] = d;
    if (a.n >= 1) {
      mpz_class c = genfun::reachable_count_closed(spec, a.n, d);
      row["r_closed"] = c.get_str();
      closed_ok = closed_ok && c == t.r[d];
    } else {
      row["r_closed"] = nullptr;
    }
    row["r_oracle"] = t.r[d].get_str();
    row["p_oracle"] = t.p[d].get_str();
    row["r_series"] = layer.coeffs[d].coeff(0, 0).get_str();
    row["p_series"] = basin.coeffs[d].coeff(0, 0).get_str();
    layer_ok = layer_ok && layer.coeffs[d].coeff(0, 0) == t.r[d];
    basin_ok = basin_ok && basin.coeffs[d].coeff(0, 0) == t.p[d];
    rows.push_back(std::move(row));
  }
  if (a.n >= 1) checks.add("counts.r_closed_vs_oracle", closed_ok);
  checks.add("counts.layer_series_vs_oracle", layer_ok);
  checks.add("counts.basin_series_vs_oracle", basin_ok);

  Json& res = o.doc["results"];
  res["vertex"] = vertex_to_string(spec.kind(), way_out_vertex(spec, a.n));
  res["tree_vertices"] = tree.size();
  res["rows"] = rows;
  finish(o, checks);

  std::ostringstream os;
  if (a.format == "csv") {
    os << "d,r_closed,r_oracle,p_oracle,r_series,p_series\n";
    for (const auto& r : rows)
      os << r["d"].get<unsigned>() << "," << (r["r_closed"].is_null() ? "" : r["r_closed"].get<std::string>())
         << "," << r["r_oracle"].get<std::string>() << "," << r["p_oracle"].get<std::string>() << ","
         << r["r_series"].get<std::string>() << "," << r["p_series"].get<std::string>() << "\n";
  } else if (a.format == "text") {
    os << "basin: " << a.basin << "  m: " << a.m << "  v: " << res["vertex"].get<std::string>() << "\n";
    os << "d  r(closed)  r(oracle)  p(oracle)\n";
    for (const auto& r : rows)
      os << r["d"].get<unsigned>() << "  " << (r["r_closed"].is_null() ? "-" : r["r_closed"].get<std::string>())
         << "  " << r["r_oracle"].get<std::string>() << "  " << r["p_oracle"].get<std::string>() << "\n";
    text_checks(os, checks);
  }
  o.text = os.str();
  return o;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateArgs {
  std::string case_name;
  unsigned p = 3;
  unsigned n = 0;
  unsigned max_contribution = 4;
  std::optional<unsigned> precision;
  bool principal_only = false;
  unsigned threads = 1;
  std::string format = "json";
};

Output cmd_enumerate(const EnumerateArgs& a) {
  require_format(a.format, {"json", "text", "csv"}, "enumerate");
  const auto tag = orders::parse_case(a.case_name);
  const unsigned prec = a.precision.value_or(padic::default_precision(a.n, a.max_contribution));

  Json req;
  req["case"] = a.case_name;
  req["p"] = a.p;
  req["n"] = a.n;
  req["max_contribution"] = a.max_contribution;
  req["precision"] = prec;
  req["principal_only"] = a.principal_only;
  req["format"] = a.format;
  Output o{make_doc("enumerate", req), {}, kExitOk};

  auto inst = padic::CaseInstance::make(tag, a.p, prec);
  padic::EnumerationOptions opts;
  opts.principal_only = a.principal_only;
  opts.threads = a.threads;
  auto records = padic::enumerate_ideals(inst, a.n, a.max_contribution, opts);

  Report checks = padic::check_type_histogram(inst, a.n, a.max_contribution, records);
  for (auto& c : padic::check_series(inst, a.n, a.max_contribution, records).checks)
    if (!a.principal_only || c.name.find(".all_ideals") == std::string::npos) checks.checks.push_back(c);
  checks.append(padic::source_and_distance_check(inst, a.n, a.max_contribution, records));

  Json table = Json::array();
  std::map<std::string, unsigned long> by_type;
  std::map<unsigned, unsigned long> by_contribution;
  std::size_t principal = 0;
  for (const auto& r : records) {
    table.push_back(record_to_json(inst, a.n, r));
    if (r.principal) {
      ++principal;
      ++by_type[padic::type_to_string(*r.type)];
      ++by_contribution[r.contribution];
    }
  }
  Json& res = o.doc["results"];
  res["precision"] = prec;
  res["ideal_count"] = records.size();
  res["principal_count"] = principal;
  Json th = Json::object(), ch = Json::object();
  for (const auto& [t, c] : by_type) th[t] = c;
  for (const auto& [k, c] : by_contribution) ch[std::to_string(k)] = c;
  res["type_histogram"] = th;
  res["contribution_histogram"] = ch;
  res["records"] = table;
  finish(o, checks);

  std::ostringstream os;
  if (a.format == "csv") {
    os << "case,p,n,type,contribution,vertex,distance,principal\n";
    for (const auto& r : records) {
      os << a.case_name << "," << a.p << "," << a.n << ",";
      if (r.principal) os << padic::type_to_string(*r.type) << "," << r.contribution;
      else os << ",";
      os << "," << csv_escape(vertex_to_string(orders::basin_of(tag), r.vertex)) << ","
         << r.distance_to_On << "," << (r.principal ? "true" : "false") << "\n";
    }
  } else if (a.format == "text") {
    os << "case: " << a.case_name << "  p: " << a.p << "  n: " << a.n << "  D: " << a.max_contribution
       << "  precision: " << prec << "\n";
    os << records.size() << " ideals, " << principal << " principal\n";
    for (const auto& [t, c] : by_type) os << "type " << t << ": " << c << "\n";
    text_checks(os, checks);
  }
  o.text = os.str();
  return o;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<unsigned> max_n;
  std::optional<unsigned> m;
  std::optional<unsigned> p;
  unsigned max_contribution = 6;
  unsigned max_d = 12;
  unsigned threads = 1;
  std::string format = "json";
};

Output cmd_verify(const VerifyArgs& a) {
  require_format(a.format, {"json", "text", "csv"}, "verify");
  if (a.m) BuildingSpec(BasinKind::Unramified, *a.m);
  if (a.p && !padic::is_prime(*a.p)) throw UsageError("--p must be prime");

  Json req;
  req["suite"] = a.suite;
  req["max_n"] = a.max_n ? Json(*a.max_n) : Json(nullptr);
  req["m"] = a.m ? Json(*a.m) : Json(nullptr);
  req["p"] = a.p ? Json(*a.p) : Json(nullptr);
  req["max_contribution"] = a.max_contribution;
  req["max_d"] = a.max_d;
  req["format"] = a.format;
  Output o{make_doc("verify", req), {}, kExitOk};

  const bool all = a.suite == "all";
  Report total;
  Json summary = Json::object();
  auto record = [&](const std::string& name, const Report& r) {
    summary[name] = Json{{"checks", r.checks.size()}, {"failures", r.failures()}};
    total.append(r);
  };
  if (all || a.suite == "identities") {
    Report r = suites::identities(a.max_n.value_or(8));
    r.append(suites::line_fixture(a.max_n.value_or(8)));
    record("identities", r);
  }
  if (all || a.suite == "oracle") {
    std::vector<unsigned> ms = a.m ? std::vector<unsigned>{*a.m} : std::vector<unsigned>{2, 3};
    record("oracle", suites::oracle(ms, a.max_n.value_or(5), a.max_d));
  }
  if (all || a.suite == "arithmetic") {
    std::vector<suites::ArithmeticTarget> grid;
    if (a.p) {
      grid.push_back({orders::CaseTag::Ramified, *a.p});
      grid.push_back({orders::CaseTag::Split, *a.p});
      if (*a.p != 2) grid.push_back({orders::CaseTag::Unramified, *a.p});
    } else {
      grid = suites::default_arithmetic_grid();
    }
    record("arithmetic", suites::arithmetic(grid, a.max_n.value_or(2), a.max_contribution, a.threads));
  }
  o.doc["results"]["suites"] = summary;
  finish(o, total);

  std::ostringstream os;
  if (a.format == "csv") {
    os << "name,pass,detail\n";
    for (const auto& c : total.checks)
      os << csv_escape(c.name) << "," << (c.pass ? "true" : "false") << "," << csv_escape(c.detail) << "\n";
  } else if (a.format == "text") {
    text_checks(os, total);
  }
  o.text = os.str();
  return o;
}

// ---- tree ---------------------------------------------------------------

struct TreeArgs {
  std::string basin;
  unsigned m = 2;
  unsigned radius = 2;
  std::optional<unsigned> halfwidth;
  std::string format = "json";
};

Output cmd_tree(const TreeArgs& a) {
  require_format(a.format, {"json", "text", "dot"}, "tree");
  const BuildingSpec spec(parse_basin(a.basin), a.m);
  const unsigned hw = a.halfwidth.value_or(a.radius);
  if (spec.kind() == BasinKind::Split && hw < a.radius)
    throw UsageError("--halfwidth must be at least --radius for the split basin");

  Json req;
  req["basin"] = a.basin;
  req["m"] = a.m;
  req["radius"] = a.radius;
  req["halfwidth"] = spec.kind() == BasinKind::Split ? Json(hw) : Json(nullptr);
  req["format"] = a.format;
  Output o{make_doc("tree", req), {}, kExitOk};

  TruncatedTree tree = build_truncated(spec, a.radius, hw);
  Report checks;
  bool heights = true;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < tree.size(); ++i)
    for (auto j : tree.adjacent(i)) {
      ++edges;
      long hi = static_cast<long>(tree.vertex(i).height()), hj = static_cast<long>(tree.vertex(j).height());
      heights = heights && (std::labs(hi - hj) == 1 || (hi == 0 && hj == 0));
    }
  edges /= 2;
  checks.add("tree.connected_acyclic", edges + 1 == tree.size());
  checks.add("tree.height_steps", heights);

  Json& res = o.doc["results"];
  res["vertex_count"] = tree.size();
  res["edge_count"] = edges;
  Json layers = Json::object();
  for (const auto& [h, c] : tree.layer_sizes()) layers[std::to_string(h)] = c;
  res["layer_sizes"] = layers;
  Json verts = Json::array();
  for (std::size_t i = 0; i < tree.size(); ++i) {
    Json v;
    v["address"] = vertex_to_string(spec.kind(), tree.vertex(i));
    v["height"] = tree.vertex(i).height();
    Json nb = Json::array();
    for (auto j : tree.adjacent(i)) nb.push_back(vertex_to_string(spec.kind(), tree.vertex(j)));
    v["neighbors"] = nb;
    verts.push_back(std::move(v));
  }
  res["vertices"] = verts;
  finish(o, checks);

  if (a.format == "dot") {
    o.text = tree.to_dot();
  } else if (a.format == "text") {
    std::ostringstream os;
    os << "basin: " << a.basin << "  m: " << a.m << "  radius: " << a.radius << "\n";
    os << "height  vertices\n";
    for (const auto& [h, c] : tree.layer_sizes()) os << h << "  " << c << "\n";
    os << "total  " << tree.size() << "\n";
    o.text = os.str();
  }
  return o;
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::InvalidArgument:
    case Errc::UnsupportedPrime:
    case Errc::ArityMismatch:
    case Errc::UnsupportedHeight:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions of quadratic orders and impacted buildings of type A1~"};
  app.name("impactzeta");
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the report to a file instead of stdout");

  const std::vector<std::string> cases{"ramified", "unramified", "split"};

  ZetaArgs za;
  auto* zeta = app.add_subcommand("zeta", "Order zeta numerator, denominator and series");
  zeta->add_option("--case", za.case_name, "Extension case")->required()->check(CLI::IsMember(cases));
  zeta->add_option("-n", za.n, "Order index n")->required();
  zeta->add_option("--q", za.q, "Specialize q to this integer");
  zeta->add_option("--series-terms", za.series_terms, "Emit series coefficients of X^0..X^D");
  zeta->add_option("--format", za.format, "json|text|csv")->capture_default_str();

  GenfunArgs ga;
  auto* gen = app.add_subcommand("genfun", "Layer and basin generating functions");
  gen->add_option("--basin", ga.basin, "Basin kind")->required()->check(CLI::IsMember(cases));
  gen->add_option("-n", ga.n, "Height of the way-out vertex")->required();
  gen->add_option("--m", ga.m, "Branching parameter (symbolic q when omitted)");
  gen->add_option("--series-terms", ga.series_terms, "Emit series coefficients of X^0..X^D");
  gen->add_option("--format", ga.format, "json|text")->capture_default_str();

  CountsArgs ca;
  auto* counts = app.add_subcommand("counts", "Reachability counts: closed form vs BFS oracle");
  counts->add_option("--basin", ca.basin, "Basin kind")->required()->check(CLI::IsMember(cases));
  counts->add_option("--m", ca.m, "Branching parameter")->required();
  counts->add_option("-n", ca.n, "Height of the way-out vertex")->required();
  counts->add_option("--max-d", ca.max_d, "Largest walk length")->capture_default_str();
  counts->add_option("--format", ca.format, "json|text|csv")->capture_default_str();

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Enumerate ideals of O_n by Hermite form");
  en->add_option("--case", ea.case_name, "Extension case")->required()->check(CLI::IsMember(cases));
  en->add_option("--p", ea.p, "Prime")->required();
  en->add_option("-n", ea.n, "Order index n")->required();
  en->add_option("--max-contribution", ea.max_contribution, "Index bound D")->capture_default_str();
  en->add_option("--precision", ea.precision, "Working precision N (default derived from n, D)");
  en->add_flag("--principal-only", ea.principal_only, "Only emit principal ideals");
  en->add_option("--threads", ea.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  en->add_option("--format", ea.format, "json|text|csv")->capture_default_str();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", va.suite, "identities|oracle|arithmetic|all")
      ->capture_default_str()
      ->check(CLI::IsMember({"identities", "oracle", "arithmetic", "all"}));
  ver->add_option("--max-n", va.max_n, "Largest n");
  ver->add_option("--m", va.m, "Oracle branching parameter (default 2 and 3)");
  ver->add_option("--p", va.p, "Arithmetic prime (default grid when omitted)");
  ver->add_option("--max-contribution", va.max_contribution, "Arithmetic index bound D")->capture_default_str();
  ver->add_option("--max-d", va.max_d, "Oracle walk length bound")->capture_default_str();
  ver->add_option("--threads", va.threads, "Enumeration threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  ver->add_option("--format", va.format, "json|text|csv")->capture_default_str();

  TreeArgs ta;
  auto* tr = app.add_subcommand("tree", "Export a truncated impacted building");
  tr->add_option("--basin", ta.basin, "Basin kind")->required()->check(CLI::IsMember(cases));
  tr->add_option("--m", ta.m, "Branching parameter")->required();
  tr->add_option("--radius", ta.radius, "Largest height")->required();
  tr->add_option("--halfwidth", ta.halfwidth, "Apartment half-width (split)");
  tr->add_option("--format", ta.format, "json|text|dot")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Output o;
  std::string format;
  try {
    if (zeta->parsed()) o = cmd_zeta(za), format = za.format;
    else if (gen->parsed()) o = cmd_genfun(ga), format = ga.format;
    else if (counts->parsed()) o = cmd_counts(ca), format = ca.format;
    else if (en->parsed()) o = cmd_enumerate(ea), format = ea.format;
    else if (ver->parsed()) o = cmd_verify(va), format = va.format;
    else if (tr->parsed()) o = cmd_tree(ta), format = ta.format;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }

  std::string payload = format == "json" ? o.doc.dump(2) + "\n" : o.text;
  if (output_path.empty()) {
    out << payload;
  } else {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << output_path << "\n";
      return kExitFailure;
    }
    f << payload;
  }
  if (o.code != kExitOk) err << "verification failed\n";
  return o.code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace impactzeta::cli
