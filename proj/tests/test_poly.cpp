#include <doctest.h>

#include "dopgb/errors.hpp"
#include "dopgb/parser.hpp"
#include "dopgb/poly.hpp"
#include "oracles.hpp"

using namespace dopgb;

namespace {

Poly P(const char* s, std::size_t n = 2) { return parse_poly(s, n); }

}  // namespace

TEST_CASE("small products and inverses") {
  CHECK((P("x1 + x2") * P("x2")) == P("x1*x2 + x2^2"));
  auto p = P("3/2*x1^2*x2 - x1 + 7");
  CHECK((p + (-p)).is_zero());
  CHECK((P("x1 + x2") * P("x1 - x2")) == P("x1^2 - x2^2"));
  CHECK_THROWS_AS(P("x1") + Poly::variable(3, 0), DimensionError);
}

TEST_CASE("products match the term-list oracle") {
  oracle::RandomSource rs(11);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 4));
    auto a = rs.poly(n, 8, 5);
    auto b = rs.poly(n, 8, 5);
    auto expect = oracle::poly_of(oracle::multiply(oracle::terms_of(a), oracle::terms_of(b)), n);
    CHECK((a * b) == expect);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  oracle::RandomSource rs(12);
  for (int k = 0; k < 150; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 3));
    auto a = rs.poly(n, 8, 5), b = rs.poly(n, 8, 5), c = rs.poly(n, 8, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(P("x1*x2").derivative(0) == P("x2"));
  CHECK(P("5").derivative(1).is_zero());
  CHECK(P("x1^3*x2").derivative(0) == P("3*x1^2*x2"));
  CHECK_THROWS(P("x1").derivative(2));

  oracle::RandomSource rs(13);
  for (int k = 0; k < 150; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 3));
    auto a = rs.poly(n, 8, 5), b = rs.poly(n, 8, 5);
    auto i = static_cast<std::size_t>(rs.uniform(0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(rs.uniform(0, static_cast<int>(n) - 1));
    CHECK(a.derivative(i) == oracle::poly_of(oracle::derivative(oracle::terms_of(a), i), n));
    CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
    CHECK(a.derivative(i).derivative(j) == a.derivative(j).derivative(i));
  }
}

TEST_CASE("leading data") {
  auto ord = MonomialOrder::graded_lex(2);
  CHECK(P("x1 + x2").lm(ord) == Exp{0, 1});
  CHECK(P("5*x1^2").lc(ord) == 5);
  CHECK(P("5*x1^2").lm(ord) == Exp{2, 0});
  CHECK(P("7").lm(ord) == Exp(2));
  CHECK_THROWS_AS(Poly(2).lm(ord), NoLeadingTerm);
}

TEST_CASE("printing then parsing gives the same term map") {
  oracle::RandomSource rs(14);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 4));
    auto a = rs.poly(n, 8, 5);
    a = a * Rational(rs.uniform(1, 9), rs.uniform(1, 9));
    auto text = format_poly(a, x_names(n), display_order(n));
    CHECK(parse_poly(text, n).terms() == a.terms());
  }
  CHECK(format_poly(P("x1 + x2"), x_names(2), display_order(2)) == "x1 + x2");
  CHECK(format_poly(P("3/2*x1^2*x2 - 1"), x_names(2), display_order(2)) == "3/2*x1^2*x2 - 1");
}

TEST_CASE("content normalization") {
  auto ord = coefficient_order(2);
  auto p = P("-4/3*x1 + 2*x2");
  auto s = normalizing_scale(p, ord);
  CHECK(p * s == P("-2*x1 + 3*x2"));
}
