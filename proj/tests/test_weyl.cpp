#include <doctest.h>

#include "dopgb/diffop.hpp"
#include "dopgb/errors.hpp"
#include "dopgb/parser.hpp"
#include "oracles.hpp"

using namespace dopgb;

namespace {

DiffOp O(const char* s, std::size_t n) { return parse_operator(s, n); }

/// Builds r*D^alpha without going through the parser's products.
DiffOp term(const Poly& r, const Exp& alpha) { return DiffOp::monomial(r, alpha); }

}  // namespace

TEST_CASE("commutator with a coefficient") {
  auto d1 = DiffOp::d(2, 0);
  auto r = DiffOp::from_coefficient(parse_poly("x1*x2", 2));
  CHECK(d1 * r - r * d1 == DiffOp::from_coefficient(parse_poly("x2", 2)));
  CHECK(d1 * r == term(parse_poly("x1*x2", 2), Exp{1, 0}) + term(parse_poly("x2", 2), Exp(2)));
  auto f = O("x1^2*D1 + D2^2", 2);
  CHECK(f * DiffOp::one(2) == f);
  CHECK(DiffOp::one(2) * f == f);
  auto d11 = DiffOp::d(1, 0) * DiffOp::d(1, 0);
  CHECK(d11 * DiffOp::x(1, 0) == term(parse_poly("x1", 1), Exp{2}) + term(Poly::constant(1, 2), Exp{1}));
}

TEST_CASE("products agree with the single-commutator oracle") {
  oracle::RandomSource rs(31);
  for (int k = 0; k < 150; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 4));
    auto f = rs.op(n, 3, 3, 3), g = rs.op(n, 3, 3, 3);
    CHECK(f * g == oracle::multiply(f, g));
  }
}

TEST_CASE("action on polynomials") {
  CHECK(O("x1*D4 + 1", 6).apply(parse_poly("x4", 6)) == parse_poly("x1 + x4", 6));
  auto p = parse_poly("x1^2 - 3*x2", 2);
  CHECK(DiffOp::one(2).apply(p) == p);
  CHECK(O("D5*D6", 6).apply(parse_poly("x5*x6", 6)) == parse_poly("1", 6));
  oracle::RandomSource rs(32);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 3));
    auto f = rs.op(n, 3, 3, 3);
    auto q = rs.poly(n, 5, 5);
    CHECK(f.apply(q) == oracle::apply(f, q));
  }
}

TEST_CASE("leading data of operators") {
  auto ord = MonomialOrder::graded_lex(6);
  auto f1 = O("x1*D4 + 1", 6);
  CHECK(f1.deg(ord) == Exp::unit(6, 3));
  CHECK(f1.lc(ord) == parse_poly("x1", 6));
  CHECK(f1.init(ord) == O("x1*D4", 6));
  auto f4 = O("D5*D6", 6);
  CHECK(f4.deg(ord) == Exp{0, 0, 0, 0, 1, 1});
  CHECK(f4.lc(ord) == Poly::constant(6, 1));
  auto r = O("x1^2 + 3", 6);
  CHECK(r.deg(ord) == Exp(6));
  CHECK(r.lc(ord) == parse_poly("x1^2 + 3", 6));
  CHECK_THROWS_AS(DiffOp(6).deg(ord), NoLeadingTerm);
}

TEST_CASE("sigma") {
  auto ord = MonomialOrder::graded_lex(6);
  BPoly b(6);
  b.add_term(Exp::unit(6, 4), parse_poly("x2", 6));
  CHECK(sigma(b) == O("x2*D5", 6));
  CHECK(sigma(BPoly(6)).is_zero());
  BPoly c(6);
  c.add_term(Exp{0, 0, 0, 0, 1, 1}, Poly::constant(6, 1));
  c.add_term(Exp::unit(6, 3), parse_poly("x1", 6));
  CHECK(sigma(c) == O("D5*D6 + x1*D4", 6));
  CHECK(sigma_inv(sigma(c)) == c);
  CHECK(format_bpoly(c, ord) == "y5*y6 + x1*y4");
}

TEST_CASE("multiplication by the zero operator and arity checks") {
  CHECK((DiffOp(2) * O("D1", 2)).is_zero());
  CHECK_THROWS_AS(O("D1", 2) * O("D1", 3), DimensionError);
  CHECK_THROWS_AS(O("D1", 2).apply(parse_poly("x1", 3)), DimensionError);
}

TEST_CASE("printing then parsing gives the same operator") {
  oracle::RandomSource rs(33);
  for (int k = 0; k < 150; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 4));
    auto ord = MonomialOrder::make(static_cast<OrderKind>(rs.uniform(0, 2)), n);
    auto f = rs.op(n, 4, 3, 3) * Rational(rs.uniform(1, 5), rs.uniform(1, 5));
    CHECK(parse_operator(format_op(f, ord), n) == f);
  }
  auto ord = MonomialOrder::graded_lex(6);
  CHECK(format_op(O("(x1+x2)*D6", 6), ord) == "(x1 + x2)*D6");
  CHECK(format_op(O("x1*D4 + 1", 6), ord) == "x1*D4 + 1");
  CHECK(format_op(O("-(x1+x2)*D6 - 2", 6), ord) == "-(x1 + x2)*D6 - 2");
}

#include "properties.hpp"

TEST_CASE("ring and sigma properties on random operators") {
  auto tally = props::weyl_properties(34, 60, 4);
  for (const auto& [name, fails] : tally.failures) {
    INFO(name);
    CHECK(fails == 0);
  }
}
