#include "impactzeta/lattice.hpp"

#include <algorithm>
#include <limits>

#include "impactzeta/error.hpp"

namespace impactzeta::padic {

namespace {

constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();

mpz_class ppow(unsigned p, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

}  // namespace

unsigned p_valuation(const mpz_class& v, unsigned p) {
  if (v == 0) return kInfinite;
  mpz_class r = v, pp = p;
  return static_cast<unsigned>(mpz_remove(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t()));
}

Basis LatticeHNF::basis(unsigned p) const {
  return Basis{Vec2{ppow(p, a), 0}, Vec2{c, ppow(p, b)}};
}

bool LatticeHNF::operator<(const LatticeHNF& o) const {
  if (a + b != o.a + o.b) return a + b < o.a + o.b;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::string LatticeHNF::to_string() const {
  return "a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",c=" + c.get_str();
}

LatticeHNF hnf_from_generators(unsigned p, const Vec2& g1, const Vec2& g2) {
  const mpz_class det = g1[0] * g2[1] - g2[0] * g1[1];
  if (det == 0) throw Error(Errc::InvalidArgument, "generators do not span a full-rank lattice");
  const unsigned vd = p_valuation(det, p);
  const unsigned v1 = p_valuation(g1[1], p), v2 = p_valuation(g2[1], p);
  const Vec2& g = v1 <= v2 ? g1 : g2;
  LatticeHNF h;
  h.b = std::min(v1, v2);
  h.a = vd - h.b;
  if (h.a == 0) {
    h.c = 0;
    return h;
  }
  const mpz_class pa = ppow(p, h.a);
  mpz_class unit;
  mpz_divexact(unit.get_mpz_t(), g[1].get_mpz_t(), ppow(p, h.b).get_mpz_t());
  mpz_class uinv;
  mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), pa.get_mpz_t());
  mpz_class c = g[0] * uinv;
  mpz_mod(h.c.get_mpz_t(), c.get_mpz_t(), pa.get_mpz_t());
  return h;
}

LatticeHNF hnf_from_basis(unsigned p, const Basis& b) { return hnf_from_generators(p, b[0], b[1]); }

bool lattice_contains(unsigned p, const LatticeHNF& l, const Vec2& v) {
  if (v[1] != 0 && p_valuation(v[1], p) < l.b) return false;
  mpz_class s;
  mpz_divexact(s.get_mpz_t(), v[1].get_mpz_t(), ppow(p, l.b).get_mpz_t());
  mpz_class rest = v[0] - s * l.c;
  return rest == 0 || p_valuation(rest, p) >= l.a;
}

bool lattice_contains(unsigned p, const LatticeHNF& outer, const LatticeHNF& inner) {
  Basis b = inner.basis(p);
  return lattice_contains(p, outer, b[0]) && lattice_contains(p, outer, b[1]);
}

LatticeHNF order_lattice(unsigned, unsigned n) { return LatticeHNF{0, n, 0}; }

unsigned index_exponent(unsigned, unsigned n, const LatticeHNF& l) {
  if (l.b < n) throw Error(Errc::InvalidArgument, "lattice is not inside O_n");
  return l.a + l.b - n;
}

Vec2 elem_times(const CaseInstance& inst, const Vec2& e, const Vec2& v) {
  mpz_class yy = e[1] * v[1];
  return Vec2{e[0] * v[0] - inst.delta() * yy, e[0] * v[1] + e[1] * v[0] + inst.tau() * yy};
}

Vec2 omega_times(const CaseInstance& inst, unsigned n, const Vec2& v) {
  return elem_times(inst, Vec2{0, ppow(inst.p(), n)}, v);
}

bool is_ideal(const CaseInstance& inst, unsigned n, const LatticeHNF& l) {
  const unsigned p = inst.p();
  Basis b = l.basis(p);
  return lattice_contains(p, l, omega_times(inst, n, b[0])) &&
         lattice_contains(p, l, omega_times(inst, n, b[1]));
}

unsigned lattice_distance(unsigned p, const Basis& a, const Basis& b) {
  // adj(A) for A with columns a[0], a[1]
  const mpz_class& a00 = a[0][0];
  const mpz_class& a10 = a[0][1];
  const mpz_class& a01 = a[1][0];
  const mpz_class& a11 = a[1][1];
  std::array<mpz_class, 4> m;
  for (int j = 0; j < 2; ++j) {
    m[2 * j] = a11 * b[j][0] - a01 * b[j][1];
    m[2 * j + 1] = -a10 * b[j][0] + a00 * b[j][1];
  }
  const mpz_class det = m[0] * m[3] - m[2] * m[1];
  if (det == 0) throw Error(Errc::InvalidArgument, "degenerate lattice basis");
  unsigned lo = kInfinite;
  for (const auto& e : m) lo = std::min(lo, p_valuation(e, p));
  return p_valuation(det, p) - 2 * lo;
}

unsigned lattice_distance(const CaseInstance& inst, const LatticeHNF& a, const LatticeHNF& b) {
  const unsigned p = inst.p();
  unsigned d = lattice_distance(p, a.basis(p), b.basis(p));
  if (std::max({a.a, a.b, b.a, b.b}) + d + CaseInstance::kGuard > 2 * inst.precision())
    throw Error(Errc::PrecisionExhausted, "lattice exponents exceed the working precision");
  return d;
}

}  // namespace impactzeta::padic
