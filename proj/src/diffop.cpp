#include "dopgb/diffop.hpp"

#include <sstream>

namespace dopgb {

namespace {

/// Calls fn(gamma) for every gamma <= alpha componentwise.
template <class Fn>
void for_each_below(const Exp& alpha, Fn&& fn) {
  Exp gamma(alpha.size());
  while (true) {
    fn(gamma);
    std::size_t i = 0;
    for (; i < alpha.size(); ++i) {
      if (gamma[i] < alpha[i]) {
        gamma.set(i, gamma[i] + 1);
        break;
      }
      gamma.set(i, 0);
    }
    if (i == alpha.size()) return;
  }
}

mpz_class multi_binomial(const Exp& alpha, const Exp& gamma) {
  mpz_class out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(alpha[i]),
                 static_cast<unsigned long>(gamma[i]));
    out *= b;
  }
  return out;
}

std::string monomial_text(const Exp& e, char letter) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    os << letter << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
    first = false;
  }
  return os.str();
}

template <class T>
std::string format_graded(const T& f, const MonomialOrder& ord, char letter) {
  if (f.is_zero()) return "0";
  const auto names = x_names(f.nvars());
  const auto dord = display_order(f.nvars());
  std::ostringstream os;
  bool first = true;
  auto emit_sign = [&](bool negative) {
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
  };
  for (const auto& [e, r] : f.sorted_terms(ord)) {
    if (e.is_zero()) {
      for (const auto& t : r.sorted_terms(dord)) {
        emit_sign(t.coeff < 0);
        os << format_poly(Poly::monomial(t.exp, abs(t.coeff)), names, dord);
      }
      continue;
    }
    auto mono = monomial_text(e, letter);
    if (r.size() == 1) {
      const auto& [ce, cc] = *r.terms().begin();
      emit_sign(cc < 0);
      auto mag = Poly::monomial(ce, abs(cc));
      if (mag.is_constant() && abs(cc) == 1) {
        os << mono;
      } else {
        os << format_poly(mag, names, dord) << '*' << mono;
      }
    } else {
      bool negative = r.lc(dord) < 0;
      emit_sign(negative);
      os << '(' << format_poly(negative ? -r : r, names, dord) << ")*" << mono;
    }
  }
  return os.str();
}

}  // namespace

DiffOp operator*(const DiffOp& f, const DiffOp& g) {
  f.require_compatible(g);
  const std::size_t n = f.nvars();
  DiffOp out(n);
  for (const auto& [beta, s] : g.terms()) {
    // d^gamma(s) is shared by every term of f with alpha >= gamma.
    std::map<Exp, Poly> derivs;
    for (const auto& [alpha, r] : f.terms()) {
      for_each_below(alpha, [&](const Exp& gamma) {
        auto it = derivs.find(gamma);
        if (it == derivs.end()) it = derivs.emplace(gamma, s.derivative(gamma)).first;
        if (it->second.is_zero()) return;
        auto shift = *alpha.minus(gamma) + beta;
        Rational c(multi_binomial(alpha, gamma));
        out.add_term(shift, (r * it->second) * c);
      });
    }
  }
  return out;
}

Poly DiffOp::apply(const Poly& p) const {
  if (p.nvars() != n_) throw DimensionError("operator and polynomial arity mismatch");
  Poly out(n_);
  for (const auto& [alpha, r] : terms_) out += r * p.derivative(alpha);
  return out;
}

BPoly operator*(const BPoly& f, const BPoly& g) {
  f.require_compatible(g);
  BPoly out(f.nvars());
  for (const auto& [a, r] : f.terms()) {
    for (const auto& [b, s] : g.terms()) out.add_term(a + b, r * s);
  }
  return out;
}

Poly BPoly::to_xy() const {
  Poly out(2 * n_);
  for (const auto& [y, r] : terms_) {
    for (const auto& [x, c] : r.terms()) out.add_term(Exp::concat(x, y), c);
  }
  return out;
}

BPoly BPoly::from_xy(const Poly& p, std::size_t n) {
  if (p.nvars() != 2 * n) throw DimensionError("polynomial is not in Q[X,Y]");
  BPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    out.add_term(e.slice(n, n), Poly::monomial(e.slice(0, n), c));
  }
  return out;
}

DiffOp sigma(const BPoly& b) {
  DiffOp out(b.nvars());
  for (const auto& [e, r] : b.terms()) out.add_term(e, r);
  return out;
}

BPoly sigma_inv(const DiffOp& f) {
  BPoly out(f.nvars());
  for (const auto& [e, r] : f.terms()) out.add_term(e, r);
  return out;
}

Rational normalizing_scale(const DiffOp& f, const MonomialOrder& ord) {
  if (f.is_zero()) return 1;
  ContentAccumulator acc;
  for (const auto& [e, r] : f.terms()) acc.add(r);
  auto s = acc.inverse_content();
  if (f.lc(ord).lc(coefficient_order(f.nvars())) < 0) s = -s;
  return s;
}

std::string format_op(const DiffOp& f, const MonomialOrder& ord) {
  return format_graded(f, ord, 'D');
}

std::string format_bpoly(const BPoly& b, const MonomialOrder& ord) {
  return format_graded(b, ord, 'y');
}

}  // namespace dopgb
