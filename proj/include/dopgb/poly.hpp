#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dopgb/exponent.hpp"
#include "dopgb/order.hpp"

namespace dopgb {

/// Exact rational. GMP arithmetic keeps values in lowest terms, but
/// mpq_class(a, b) does not reduce; Poly reduces coefficients on entry.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// A term c * X^e.
struct Term {
  Exp exp;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q.
///
/// Storage is a map keyed by the raw exponent (lexicographic on entries), so
/// the representation is canonical regardless of any term order. Ordered views
/// are produced on demand by sorted_terms() and leading().
class Poly {
 public:
  using TermMap = std::map<Exp, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Exp& e, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coeff(const Exp& e) const;

  /// Adds c * X^e, dropping the term if it cancels.
  void add_term(const Exp& e, const Rational& c);

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator*(const Poly& p, const Poly& q);
  Poly operator-() const;

  /// p * c X^e.
  Poly mul_term(const Exp& e, const Rational& c) const;
  /// this += c X^e * q, the inner loop of every reduction.
  void add_scaled(const Poly& q, const Exp& e, const Rational& c);

  /// Formal partial derivative with respect to variable i (0-based).
  Poly derivative(std::size_t i) const;
  /// Iterated derivative d^alpha.
  Poly derivative(const Exp& alpha) const;

  /// Leading term under `ord`. Throws NoLeadingTerm for the zero polynomial.
  Term leading(const MonomialOrder& ord) const;
  Exp lm(const MonomialOrder& ord) const { return leading(ord).exp; }
  Rational lc(const MonomialOrder& ord) const { return leading(ord).coeff; }

  /// Terms in descending order.
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const;

  std::int64_t total_degree() const;

  /// Rebuilds the polynomial with its variables embedded at `offset` in a ring
  /// of `nvars` variables.
  Poly embed(std::size_t nvars, std::size_t offset) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const Poly& q) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Scalar c such that c*p has coprime integer coefficients and a positive
/// leading coefficient under `ord`. Returns 1 for p = 0.
Rational normalizing_scale(const Poly& p, const MonomialOrder& ord);

/// gcd of numerators over lcm of denominators across every coefficient seen;
/// the building block for content normalization of vectors and operators.
class ContentAccumulator {
 public:
  void add(const Rational& c);
  void add(const Poly& p);
  /// 1/content, or 1 if nothing nonzero was seen.
  Rational inverse_content() const;

 private:
  mpz_class num_gcd_ = 0;
  mpz_class den_lcm_ = 1;
};

/// Names x1..xn.
std::vector<std::string> x_names(std::size_t n);
/// Names x1..xn, y1..yn for Q[X,Y].
std::vector<std::string> xy_names(std::size_t n);

/// Text form `3/2*x1^2*x2 - x3 + 1`, terms descending under `ord`.
std::string format_poly(const Poly& p, const std::vector<std::string>& names,
                        const MonomialOrder& ord);
std::string format_rational(const Rational& c);

/// Display order for coefficient polynomials: graded lex with x1 most
/// significant, so x1 + x2 prints in that order.
MonomialOrder display_order(std::size_t n);

}  // namespace dopgb
