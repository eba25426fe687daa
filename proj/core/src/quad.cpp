#include "impactzeta/quad.hpp"

#include "impactzeta/error.hpp"

namespace impactzeta::padic {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

CaseInstance CaseInstance::make(CaseTag tag, unsigned p, unsigned precision) {
  if (!is_prime(p)) throw Error(Errc::UnsupportedPrime, std::to_string(p) + " is not prime");
  if (tag == CaseTag::Unramified && p == 2)
    throw Error(Errc::UnsupportedPrime, "the unramified case needs an odd prime");
  if (precision < 4) throw Error(Errc::PrecisionTooSmall, "precision must be at least 4");

  CaseInstance inst(ExtensionCase::make(tag), p, precision);
  mpz_ui_pow_ui(inst.mod_.get_mpz_t(), p, precision);
  switch (tag) {
    case CaseTag::Ramified:
      inst.tau_ = 0;
      inst.delta_ = p;
      break;
    case CaseTag::Unramified: {
      mpz_class e = 2, pp = p;
      while (mpz_legendre(e.get_mpz_t(), pp.get_mpz_t()) != -1) ++e;
      inst.eps_ = e;
      inst.tau_ = 0;
      inst.delta_ = -e;
      break;
    }
    case CaseTag::Split:
      inst.tau_ = p + 1;
      inst.delta_ = p;
      break;
  }
  return inst;
}

mpz_class CaseInstance::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), mod_.get_mpz_t());
  return r;
}

QuadElem CaseInstance::reduce(const QuadElem& a) const { return {reduce(a.x), reduce(a.y)}; }

unsigned CaseInstance::val(const mpz_class& v) const {
  mpz_class r = reduce(v);
  if (r == 0) return n_;
  mpz_class pp = p_;
  return static_cast<unsigned>(mpz_remove(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t()));
}

mpz_class CaseInstance::inv_unit(const mpz_class& v) const {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), reduce(v).get_mpz_t(), mod_.get_mpz_t()) == 0)
    throw Error(Errc::NotAUnit, v.get_str() + " is not a p-adic unit");
  return r;
}

QuadElem CaseInstance::from_components(const mpz_class& c1, const mpz_class& c2) const {
  mpz_class y = reduce((c2 - c1) * inv_unit(mpz_class(p_) - 1));
  return reduce(QuadElem{c1 - y, y});
}

std::pair<mpz_class, mpz_class> CaseInstance::components(const QuadElem& a) const {
  return {reduce(a.x + a.y), reduce(a.x + mpz_class(p_) * a.y)};
}

QuadElem CaseInstance::add(const QuadElem& a, const QuadElem& b) const {
  return reduce(QuadElem{a.x + b.x, a.y + b.y});
}

QuadElem CaseInstance::sub(const QuadElem& a, const QuadElem& b) const {
  return reduce(QuadElem{a.x - b.x, a.y - b.y});
}

QuadElem CaseInstance::mul(const QuadElem& a, const QuadElem& b) const {
  mpz_class yy = a.y * b.y;
  return reduce(QuadElem{a.x * b.x - delta_ * yy, a.x * b.y + b.x * a.y + tau_ * yy});
}

QuadElem CaseInstance::conj(const QuadElem& a) const {
  return reduce(QuadElem{a.x + tau_ * a.y, -a.y});
}

mpz_class CaseInstance::norm(const QuadElem& a) const {
  return reduce(a.x * a.x + tau_ * a.x * a.y + delta_ * a.y * a.y);
}

bool CaseInstance::is_unit(const QuadElem& a) const {
  mpz_class nm = norm(a);
  return mpz_divisible_ui_p(nm.get_mpz_t(), p_) == 0;
}

QuadElem CaseInstance::inv(const QuadElem& a) const {
  if (!is_unit(a)) throw Error(Errc::NotAUnit, "element with non-unit norm");
  mpz_class ni = inv_unit(norm(a));
  QuadElem c = conj(a);
  return reduce(QuadElem{c.x * ni, c.y * ni});
}

QuadElem alg_op(const CaseInstance& inst, AlgOp kind, const QuadElem& a, const QuadElem& b) {
  switch (kind) {
    case AlgOp::Add: return inst.add(a, b);
    case AlgOp::Mul: return inst.mul(a, b);
    case AlgOp::Inv: return inst.inv(a);
  }
  return {};
}

TypeVec elem_type(const CaseInstance& inst, const QuadElem& a) {
  const unsigned limit = inst.precision() - CaseInstance::kGuard;
  auto exhausted = [] { return Error(Errc::PrecisionExhausted, "valuation beyond the guard margin"); };
  switch (inst.tag()) {
    case CaseTag::Ramified: {
      unsigned w = std::min(2 * inst.val(a.x), 2 * inst.val(a.y) + 1);
      if (w >= 2 * limit) throw exhausted();
      return {w};
    }
    case CaseTag::Unramified: {
      unsigned w = std::min(inst.val(a.x), inst.val(a.y));
      if (w >= limit) throw exhausted();
      return {w};
    }
    case CaseTag::Split: {
      auto [c1, c2] = inst.components(a);
      unsigned w1 = inst.val(c1), w2 = inst.val(c2);
      if (w1 >= limit || w2 >= limit) throw exhausted();
      return {w1, w2};
    }
  }
  return {};
}

bool in_order(const CaseInstance& inst, unsigned n, const QuadElem& a) {
  return inst.val(a.y) >= n;
}

bool in_order_units(const CaseInstance& inst, unsigned n, const QuadElem& a) {
  return in_order(inst, n, a) && inst.is_unit(a);
}

unsigned slope_map(const CaseInstance& inst, unsigned n, const QuadElem& u) {
  if (n == 0 || n + CaseInstance::kGuard >= inst.precision())
    throw Error(Errc::InvalidArgument, "slope map level out of range");
  if (!in_order_units(inst, n, u)) throw Error(Errc::NotInOrderUnit, "element is not in O_n^*");
  const unsigned p = inst.p();
  mpz_class z = inst.reduce(u.y), pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), pn.get_mpz_t());
  mpz_class w = inst.reduce(u.x), pp = p, winv;
  mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), pp.get_mpz_t());
  mpz_class r = z * winv;
  return static_cast<unsigned>(mpz_fdiv_ui(r.get_mpz_t(), p));
}

std::vector<UnitRep> level_reps(const CaseInstance& inst, unsigned level) {
  const unsigned p = inst.p();
  std::vector<UnitRep> out;
  if (level >= 1 || inst.tag() == CaseTag::Ramified) {
    mpz_class step;
    mpz_ui_pow_ui(step.get_mpz_t(), p, level);
    for (unsigned t = 0; t < p; ++t)
      out.push_back(UnitRep{level, t, inst.reduce(QuadElem{1, step * t})});
    return out;
  }
  // Level 0, unramified/split: scan residues mod p for units in new O_1^* classes.
  auto same_class = [&](const QuadElem& a, const QuadElem& b) {
    return in_order(inst, 1, inst.mul(a, inst.inv(b)));
  };
  std::vector<QuadElem> candidates{inst.one()};
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y) candidates.push_back(QuadElem{x, y});
  for (const auto& c : candidates) {
    if (!inst.is_unit(c)) continue;
    bool fresh = true;
    for (const auto& r : out)
      if (same_class(c, r.element)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(UnitRep{0, static_cast<unsigned>(out.size()), c});
  }
  return out;
}

std::vector<QuadElem> coset_reps(const CaseInstance& inst, unsigned n, unsigned d,
                                 std::size_t cap) {
  if (d > n) throw Error(Errc::InvalidArgument, "coset_reps needs d <= n");
  std::vector<std::vector<UnitRep>> levels;
  long double total = 1;
  for (unsigned i = n - d; i < n; ++i) {
    levels.push_back(level_reps(inst, i));
    total *= levels.back().size();
  }
  if (total > static_cast<long double>(cap))
    throw Error(Errc::EnumerationOverflow, "too many coset representatives");

  std::vector<QuadElem> out{inst.one()};
  for (const auto& reps : levels) {
    std::vector<QuadElem> next;
    next.reserve(out.size() * reps.size());
    for (const auto& u : out)
      for (const auto& r : reps) next.push_back(inst.mul(u, r.element));
    out = std::move(next);
  }
  return out;
}

mpz_class unit_index_bruteforce(const CaseInstance& inst, unsigned n) {
  if (n == 0) return 1;
  const unsigned p = inst.p();
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  if (pn * pn > 50'000'000) throw Error(Errc::EnumerationOverflow, "unit count too large");
  const unsigned long q = pn.get_ui();
  unsigned long units = 0;
  for (unsigned long x = 0; x < q; ++x)
    for (unsigned long y = 0; y < q; ++y) {
      mpz_class nm = inst.norm(QuadElem{x, y});
      if (mpz_divisible_ui_p(nm.get_mpz_t(), p) == 0) ++units;
    }
  // Units of O_n / p^n O_0 = Z / p^n.
  const unsigned long base_units = q - q / p;
  if (units % base_units != 0)
    throw Error(Errc::InvalidArgument, "unit count not divisible by |(Z/p^n)^*|");
  return mpz_class(units / base_units);
}

std::array<std::array<mpz_class, 2>, 2> unit_matrix(const CaseInstance& inst, const QuadElem& u) {
  QuadElem ud = inst.mul(u, inst.delta_elem());
  // rows x, y; columns images of 1 and Delta
  return {{{inst.reduce(u.x), ud.x}, {inst.reduce(u.y), ud.y}}};
}

}  // namespace impactzeta::padic
