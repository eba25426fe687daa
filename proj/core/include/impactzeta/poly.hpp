#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace impactzeta {

struct Term {
  std::uint32_t q_exp = 0;
  std::uint32_t x_exp = 0;
  mpz_class coeff;

  bool operator==(const Term& o) const {
    return q_exp == o.q_exp && x_exp == o.x_exp && coeff == o.coeff;
  }
};

// Polynomial in two commuting indeterminates q and X over Z.
// Terms are kept sorted by (x_exp, q_exp) with no zero coefficients.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly constant(const mpz_class& c);
  static BiPoly monomial(const mpz_class& c, std::uint32_t q_exp, std::uint32_t x_exp);
  static BiPoly from_terms(std::vector<Term> terms);
  static BiPoly q_var() { return monomial(1, 1, 0); }
  static BiPoly x_var() { return monomial(1, 0, 1); }
  // 1 - X^k
  static BiPoly one_minus_x(std::uint32_t k = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(std::uint32_t q_exp, std::uint32_t x_exp) const;
  // Coefficient of X^k as a polynomial in q (x_exp 0).
  BiPoly x_coeff(std::uint32_t k) const;
  // Highest X exponent; -1 for the zero polynomial.
  int x_degree() const;
  int q_degree() const;
  bool is_q_only() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly scaled(const mpz_class& c) const;
  BiPoly shift_x(std::uint32_t k) const;
  BiPoly shift_q(std::uint32_t k) const;
  BiPoly pow(unsigned e) const;
  // Drop every term with x_exp > d.
  BiPoly truncate_x(std::uint32_t d) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  void normalize();
};

enum class ArithKind { Add, Sub, Mul };

BiPoly poly_arith(ArithKind kind, const BiPoly& a, const BiPoly& b);

// Quotient of an exact division; throws Error(NotDivisible) on nonzero remainder.
BiPoly poly_exact_div(const BiPoly& a, const BiPoly& b);
bool try_exact_div(const BiPoly& a, const BiPoly& b, BiPoly& quotient);

BiPoly eval_at_q(const BiPoly& a, const mpz_class& q0);

class RationalFn {
 public:
  RationalFn() : num_(), den_(BiPoly::constant(1)) {}
  RationalFn(BiPoly num, BiPoly den);
  explicit RationalFn(BiPoly num) : num_(std::move(num)), den_(BiPoly::constant(1)) {}

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  // Cross-multiplied equality; no reduction to lowest terms.
  bool equivalent(const RationalFn& o) const;

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn times(const BiPoly& p) const { return {num_ * p, den_}; }

  // Divide numerator and denominator by a common factor (exactly).
  RationalFn cancel_factor(const BiPoly& f) const;
  RationalFn eval_at_q(const mpz_class& q0) const;

  std::string to_string() const;

 private:
  BiPoly num_;
  BiPoly den_;
};

struct SeriesPrefix {
  std::uint32_t degree = 0;
  std::vector<BiPoly> coeffs;  // coeffs[k] is the q-polynomial at X^k

  bool operator==(const SeriesPrefix& o) const {
    return degree == o.degree && coeffs == o.coeffs;
  }
};

SeriesPrefix series_expand(const RationalFn& f, std::uint32_t d);
SeriesPrefix eval_at_q(const SeriesPrefix& s, const mpz_class& q0);

}  // namespace impactzeta
