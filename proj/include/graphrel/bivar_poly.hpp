#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace graphrel {

// Exponent pair of a monomial x^x * y^y.
struct Exponent {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Sparse bivariate polynomial with exact integer coefficients. The term map
// never stores zeros, so structural equality is polynomial equality.
class BivarPoly {
 public:
  using TermMap = std::map<Exponent, mpz_class>;

  BivarPoly() = default;

  static BivarPoly constant(const mpz_class& c);
  static BivarPoly monomial(int a, int b, const mpz_class& c = 1);
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  mpz_class coeff(int a, int b) const;
  void add_term(int a, int b, const mpz_class& c);

  // True iff every stored coefficient is positive (vacuously for zero).
  bool is_nonnegative() const;
  // Coefficients of x^0, x^1, ... in p(x, 0).
  std::vector<mpz_class> y_zero_slice() const;

  int degree_x() const;
  int degree_y() const;

  // Substitutes x -> x + dx, y -> y + dy.
  BivarPoly shifted(int dx, int dy) const;
  mpq_class evaluate(const mpq_class& x0, const mpq_class& y0) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const mpz_class& c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const mpz_class& c) { return a *= c; }
  friend BivarPoly operator-(const BivarPoly& a);

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  // Human-readable form, highest total degree first, e.g. "x^2 + 3*x + y + 3".
  std::string to_string() const;

 private:
  TermMap terms_;
};

// Copy of q in lowest terms. GMP rational arithmetic assumes canonical
// operands, and mpq_class(a, b) does not reduce.
inline mpq_class lowest_terms(mpq_class q) {
  q.canonicalize();
  return q;
}

// Parses expressions such as "4xy^5 + x^3y^2 - 8y^3 - 4" or "3*x^2*y".
// Throws std::invalid_argument on malformed input.
BivarPoly parse_poly(std::string_view text);

}  // namespace graphrel
