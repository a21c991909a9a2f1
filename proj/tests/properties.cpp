#include "properties.hpp"

#include "dopgb/diffop.hpp"
#include "oracles.hpp"

namespace props {

using namespace dopgb;

namespace {

BPoly times(const BPoly& a, const BPoly& b) { return a * b; }

}  // namespace

Tally weyl_properties(std::uint64_t seed, int cases, int monomial_degree) {
  oracle::RandomSource rs(seed);
  Tally t;
  bool counterexample = false;
  for (int k = 0; k < cases; ++k) {
    std::size_t n = static_cast<std::size_t>(rs.uniform(1, 4));
    auto ord = MonomialOrder::make(static_cast<OrderKind>(k % 3), n);
    auto f = rs.op(n, 3, 3, 3), g = rs.op(n, 3, 3, 3), h = rs.op(n, 2, 3, 3);
    if (f.is_zero() || g.is_zero()) {
      --k;
      continue;
    }
    auto fg = f * g;
    auto gf = g * f;
    t.record("associativity", (fg * h) == (f * (g * h)));
    t.record("left distributivity", f * (g + h) == fg + f * h);
    t.record("right distributivity", (f + g) * h == f * h + g * h);
    t.record("deg multiplicative", fg.deg(ord) == f.deg(ord) + g.deg(ord));
    t.record("lc multiplicative", fg.lc(ord) == f.lc(ord) * g.lc(ord));
    bool quasi = fg.deg(ord) == gf.deg(ord) && fg.lc(ord) == gf.lc(ord);
    auto diff = fg - gf;
    quasi = quasi && (diff.is_zero() || ord.less(diff.deg(ord), fg.deg(ord)));
    t.record("quasi-commutativity", quasi);

    bool action = true;
    for (const auto& e : oracle::exponents_up_to(n, monomial_degree)) {
      auto p = Poly::monomial(e);
      if (fg.apply(p) != oracle::apply(f, oracle::apply(g, p))) action = false;
    }
    t.record("action composes", action);

    auto b = rs.bpoly(n, 3, 3, 3), c = rs.bpoly(n, 3, 3, 3);
    if (b.is_zero() || c.is_zero()) continue;
    auto sb = sigma(b), sc = sigma(c);
    auto bc = times(b, c);
    auto prod = sb * sc;
    t.record("sigma keeps deg", sb.deg(ord) == b.deg(ord));
    t.record("sigma keeps lc", sb.lc(ord) == b.lc(ord));
    t.record("sigma commutes with init", sigma(b.init(ord)) == sb.init(ord));
    t.record("deg of products", bc.deg(ord) == prod.deg(ord));
    t.record("lc of products", bc.lc(ord) == prod.lc(ord));
    t.record("init of products", sigma(bc.init(ord)) == prod.init(ord));
    auto r = rs.poly(n, 3, 3, 10);
    t.record("sigma is R-linear", sigma(r * b + c) == r * sb + sc);
    t.record("sigma round trip", sigma_inv(sb) == b);
    if (sigma(bc) != prod) counterexample = true;
  }
  // the fixed witness y1, x1: sigma(x1*y1) = x1*D1 but D1 * x1 = x1*D1 + 1
  BPoly y1(1), x1(1);
  y1.add_term(Exp{1}, Poly::constant(1, 1));
  x1.add_term(Exp{0}, Poly::variable(1, 0));
  bool fixed = sigma(y1 * x1) != sigma(y1) * sigma(x1);
  t.record("sigma not multiplicative", counterexample && fixed);
  return t;
}

}  // namespace props
