#pragma once

// Independent reference implementations used only by tests. None of them call
// the library's multiplication, derivative or comparison routines; they work
// on plain term lists so that disagreements point at the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dopgb/diffop.hpp"
#include "dopgb/order.hpp"

namespace oracle {

using Mono = std::vector<int>;
using Terms = std::map<Mono, dopgb::Rational>;

Terms terms_of(const dopgb::Poly& p);
dopgb::Poly poly_of(const Terms& t, std::size_t n);

/// Term-by-term product collected in a std::map.
Terms multiply(const Terms& a, const Terms& b);

/// Power rule applied to every term.
Terms derivative(const Terms& a, std::size_t i);

/// Graded or plain lex comparison with the last variable most significant,
/// and graded reverse lex where a smaller last exponent is larger.
int compare(dopgb::OrderKind kind, const Mono& a, const Mono& b);

/// Product in A computed by moving one D at a time across the coefficients
/// of g with D_i r = r D_i + d_i(r).
dopgb::DiffOp multiply(const dopgb::DiffOp& f, const dopgb::DiffOp& g);

/// Action on R by iterated single derivatives.
dopgb::Poly apply(const dopgb::DiffOp& f, const dopgb::Poly& p);

/// Whether r is a Q-linear combination of the operators x^a D^b * g with
/// |a| + |b| <= degree and g in gens, decided by Gaussian elimination on
/// (D-exponent, x-exponent) coordinates.
bool in_bounded_span(const dopgb::DiffOp& r, const std::vector<dopgb::DiffOp>& gens, int degree);

/// All exponent vectors of length n with total degree <= d.
std::vector<dopgb::Exp> exponents_up_to(std::size_t n, int d);

struct RandomSource {
  explicit RandomSource(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  dopgb::Exp exponent(std::size_t n, int max_total);
  dopgb::Poly poly(std::size_t n, int max_terms, int max_degree, int coeff_bound = 100);
  dopgb::DiffOp op(std::size_t n, int max_terms, int max_d_degree, int max_coeff_degree,
                   int coeff_bound = 10);
  dopgb::BPoly bpoly(std::size_t n, int max_terms, int max_y_degree, int max_coeff_degree);

  std::mt19937_64 rng;
};

}  // namespace oracle
