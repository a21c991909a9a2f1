#include <doctest.h>

#include "dopgb/errors.hpp"
#include "dopgb/order.hpp"
#include "oracles.hpp"

using namespace dopgb;

namespace {

oracle::Mono mono(const Exp& e) {
  oracle::Mono m(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i];
  return m;
}

int sign(Cmp c) { return c == Cmp::Less ? -1 : (c == Cmp::Equal ? 0 : 1); }

}  // namespace

TEST_CASE("graded lex ranks D4 below D5 in six variables") {
  auto ord = MonomialOrder::graded_lex(6);
  CHECK(ord.compare(Exp{0, 0, 0, 1, 0, 0}, Exp{0, 0, 0, 0, 1, 0}) == Cmp::Less);
  CHECK(ord.compare(Exp(6), Exp(6)) == Cmp::Equal);
  CHECK(MonomialOrder::graded_lex(2).compare(Exp{2, 0}, Exp{0, 1}) == Cmp::Greater);
}

TEST_CASE("length mismatch is a dimension error") {
  auto ord = MonomialOrder::graded_lex(2);
  CHECK_THROWS_AS(ord.compare(Exp{1, 0}, Exp{1, 0, 0}), DimensionError);
}

TEST_CASE("orders agree with a hand-written comparator up to degree 3") {
  for (auto kind : {OrderKind::GradedLex, OrderKind::Lex, OrderKind::GradedRevLex}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ord = MonomialOrder::make(kind, n);
      auto all = oracle::exponents_up_to(n, 3);
      for (const auto& a : all) {
        for (const auto& b : all) {
          CHECK(sign(ord.compare(a, b)) == oracle::compare(kind, mono(a), mono(b)));
        }
      }
    }
  }
}

TEST_CASE("admissibility holds exhaustively up to degree 4") {
  for (auto kind : {OrderKind::GradedLex, OrderKind::Lex, OrderKind::GradedRevLex}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ord = MonomialOrder::make(kind, n);
      auto all = oracle::exponents_up_to(n, 4);
      auto small = oracle::exponents_up_to(n, 2);
      for (const auto& a : all) {
        CHECK(!ord.less(a, Exp(n)));
        for (const auto& b : all) {
          auto ab = ord.compare(a, b);
          auto ba = ord.compare(b, a);
          CHECK(sign(ab) == -sign(ba));
          CHECK((ab == Cmp::Equal) == (a == b));
          if (ab != Cmp::Less) continue;
          for (const auto& c : small) CHECK(ord.less(a + c, b + c));
        }
      }
      // transitivity on a smaller slice
      auto mid = oracle::exponents_up_to(n, 2);
      for (const auto& a : mid)
        for (const auto& b : mid)
          for (const auto& c : mid)
            if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
    }
  }
}

TEST_CASE("strictly decreasing chains within degree 6 terminate") {
  // Every element has finitely many predecessors inside the down-set, so the
  // longest strictly decreasing chain starting at a is bounded by the rank of a.
  for (auto kind : {OrderKind::GradedLex, OrderKind::Lex, OrderKind::GradedRevLex}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ord = MonomialOrder::make(kind, n);
      auto all = oracle::exponents_up_to(n, 6);
      std::sort(all.begin(), all.end(), [&](const Exp& a, const Exp& b) { return ord.less(a, b); });
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(ord.less(all[i - 1], all[i]));
      CHECK(all.front() == Exp(n));
      std::vector<std::size_t> longest(all.size(), 1);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (ord.less(all[j], all[i])) longest[i] = std::max(longest[i], longest[j] + 1);
        }
        CHECK(longest[i] == i + 1);
      }
    }
  }
}

TEST_CASE("exponent arithmetic") {
  Exp a{0, 0, 0, 1, 0, 0};
  Exp b{0, 0, 0, 0, 1, 1};
  Exp family[] = {a, b};
  auto m = componentwise_max(family);
  CHECK(m == Exp{0, 0, 0, 1, 1, 1});
  CHECK(a.divides(m));
  CHECK(b.divides(m));
  CHECK(*a.minus(Exp(6)) == a);
  CHECK(Exp(6).divides(a));
  CHECK_FALSE(Exp{0, 1}.divides(Exp{1, 0}));
  CHECK_FALSE(Exp{1, 0}.minus(Exp{0, 1}).has_value());
  CHECK((a + b).total() == 3);
}

TEST_CASE("exponent overflow is reported") {
  set_exponent_limit(10);
  Exp a{6};
  CHECK_THROWS_AS(a + a, ExponentOverflow);
  CHECK_THROWS_AS(Exp{11}, ExponentOverflow);
  set_exponent_limit(2147483647);
  CHECK((a + a)[0] == 12);
}

TEST_CASE("order names round-trip") {
  for (auto kind : {OrderKind::GradedLex, OrderKind::Lex, OrderKind::GradedRevLex}) {
    CHECK(parse_order_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_order_kind("deglex"), InvalidInput);
}
