#include "impactzeta/poly.hpp"

#include <algorithm>
#include <sstream>

#include "impactzeta/error.hpp"

namespace impactzeta {

namespace {

bool term_less(const Term& a, const Term& b) {
  if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp;
  return a.q_exp < b.q_exp;
}

bool same_monomial(const Term& a, const Term& b) {
  return a.x_exp == b.x_exp && a.q_exp == b.q_exp;
}

std::vector<Term> merge_sorted(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_less(b[j], a[i])) {
      Term t = b[j++];
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      Term t = a[i++];
      if (sign < 0)
        t.coeff -= b[j++].coeff;
      else
        t.coeff += b[j++].coeff;
      if (t.coeff != 0) out.push_back(std::move(t));
    }
  }
  return out;
}

void append_monomial(std::ostream& os, std::uint32_t q_exp, std::uint32_t x_exp) {
  bool star = false;
  if (q_exp > 0) {
    os << 'q';
    if (q_exp > 1) os << '^' << q_exp;
    star = true;
  }
  if (x_exp > 0) {
    if (star) os << '*';
    os << 'X';
    if (x_exp > 1) os << '^' << x_exp;
  }
}

}  // namespace

BiPoly BiPoly::constant(const mpz_class& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const mpz_class& c, std::uint32_t q_exp, std::uint32_t x_exp) {
  BiPoly p;
  if (c != 0) p.terms_.push_back(Term{q_exp, x_exp, c});
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  BiPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

BiPoly BiPoly::one_minus_x(std::uint32_t k) {
  return from_terms({Term{0, 0, 1}, Term{0, k, -1}});
}

void BiPoly::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && same_monomial(out.back(), t)) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

mpz_class BiPoly::coeff(std::uint32_t q_exp, std::uint32_t x_exp) const {
  Term key{q_exp, x_exp, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && same_monomial(*it, key)) return it->coeff;
  return 0;
}

BiPoly BiPoly::x_coeff(std::uint32_t k) const {
  BiPoly out;
  for (const auto& t : terms_)
    if (t.x_exp == k) out.terms_.push_back(Term{t.q_exp, 0, t.coeff});
  return out;
}

int BiPoly::x_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().x_exp);
}

int BiPoly::q_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.q_exp));
  return d;
}

bool BiPoly::is_q_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.x_exp == 0; });
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_ = merge_sorted(terms_, o.terms_, +1);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  terms_ = merge_sorted(terms_, o.terms_, -1);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      prod.push_back(Term{s.q_exp + t.q_exp, s.x_exp + t.x_exp, s.coeff * t.coeff});
  return BiPoly::from_terms(std::move(prod));
}

BiPoly BiPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  BiPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

BiPoly BiPoly::shift_x(std::uint32_t k) const {
  BiPoly out = *this;
  for (auto& t : out.terms_) t.x_exp += k;
  return out;
}

BiPoly BiPoly::shift_q(std::uint32_t k) const {
  BiPoly out = *this;
  for (auto& t : out.terms_) t.q_exp += k;
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BiPoly BiPoly::truncate_x(std::uint32_t d) const {
  BiPoly out;
  for (const auto& t : terms_)
    if (t.x_exp <= d) out.terms_.push_back(t);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool bare = t.q_exp == 0 && t.x_exp == 0;
    if (bare) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      append_monomial(os, t.q_exp, t.x_exp);
    }
  }
  return os.str();
}

BiPoly poly_arith(ArithKind kind, const BiPoly& a, const BiPoly& b) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
  }
  return {};
}

bool try_exact_div(const BiPoly& a, const BiPoly& b, BiPoly& quotient) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  std::vector<Term> q;
  BiPoly r = a;
  const Term& lb = b.terms().back();
  while (!r.is_zero()) {
    const Term& lr = r.terms().back();
    if (lr.x_exp < lb.x_exp || lr.q_exp < lb.q_exp) return false;
    if (!mpz_divisible_p(lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
    Term t{lr.q_exp - lb.q_exp, lr.x_exp - lb.x_exp, c};
    r -= BiPoly::monomial(t.coeff, t.q_exp, t.x_exp) * b;
    q.push_back(std::move(t));
  }
  quotient = BiPoly::from_terms(std::move(q));
  return true;
}

BiPoly poly_exact_div(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  if (!try_exact_div(a, b, q))
    throw Error(Errc::NotDivisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
  return q;
}

BiPoly eval_at_q(const BiPoly& a, const mpz_class& q0) {
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), q0.get_mpz_t(), t.q_exp);
    out.push_back(Term{0, t.x_exp, t.coeff * v});
  }
  return BiPoly::from_terms(std::move(out));
}

RationalFn::RationalFn(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::InvalidArgument, "zero denominator");
}

bool RationalFn::equivalent(const RationalFn& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  if (den_ == o.den_) return {num_ + o.num_, den_};
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  if (den_ == o.den_) return {num_ - o.num_, den_};
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFn RationalFn::cancel_factor(const BiPoly& f) const {
  return {poly_exact_div(num_, f), poly_exact_div(den_, f)};
}

RationalFn RationalFn::eval_at_q(const mpz_class& q0) const {
  return {impactzeta::eval_at_q(num_, q0), impactzeta::eval_at_q(den_, q0)};
}

std::string RationalFn::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

SeriesPrefix series_expand(const RationalFn& f, std::uint32_t d) {
  const BiPoly d0 = f.den().x_coeff(0);
  int sign = 0;
  if (d0 == BiPoly::constant(1)) sign = 1;
  else if (d0 == BiPoly::constant(-1)) sign = -1;
  else throw Error(Errc::NonUnitDenominator, f.den().to_string());

  std::vector<BiPoly> dc;
  const int dd = std::min<int>(f.den().x_degree(), static_cast<int>(d));
  for (int j = 0; j <= dd; ++j) dc.push_back(f.den().x_coeff(static_cast<std::uint32_t>(j)));

  SeriesPrefix s;
  s.degree = d;
  s.coeffs.reserve(d + 1);
  for (std::uint32_t k = 0; k <= d; ++k) {
    BiPoly c = f.num().x_coeff(k);
    for (std::uint32_t j = 1; j <= k && j < dc.size(); ++j)
      if (!dc[j].is_zero()) c -= dc[j] * s.coeffs[k - j];
    if (sign < 0) c = -c;
    s.coeffs.push_back(std::move(c));
  }
  return s;
}

SeriesPrefix eval_at_q(const SeriesPrefix& s, const mpz_class& q0) {
  SeriesPrefix out;
  out.degree = s.degree;
  for (const auto& c : s.coeffs) out.coeffs.push_back(eval_at_q(c, q0));
  return out;
}

}  // namespace impactzeta
