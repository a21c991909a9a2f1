#include "dopgb/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dopgb/errors.hpp"

namespace dopgb {

namespace {

void accumulate(Poly::TermMap& terms, const Exp& e, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exp(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  Poly p(nvars);
  p.add_term(Exp::unit(nvars, i), 1);
  return p;
}

Poly Poly::monomial(const Exp& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Poly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exp& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionError("term arity does not match polynomial");
  if (c == 0) return;
  if (c.get_den() != 1) {
    // mpq_class(a, b) is not reduced on construction
    Rational k = c;
    k.canonicalize();
    accumulate(terms_, e, k);
    return;
  }
  accumulate(terms_, e, c);
}

void Poly::require_compatible(const Poly& q) const {
  if (q.nvars_ != nvars_) {
    throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                         std::to_string(q.nvars_) + " variables");
  }
}

Poly& Poly::operator+=(const Poly& q) {
  require_compatible(q);
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  require_compatible(q);
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& [e, v] : terms_) v *= k;
  return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
  p.require_compatible(q);
  Poly out(p.nvars_);
  for (const auto& [e, c] : q.terms_) out.add_scaled(p, e, c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Poly Poly::mul_term(const Exp& e, const Rational& c) const {
  Poly out(nvars_);
  out.add_scaled(*this, e, c);
  return out;
}

void Poly::add_scaled(const Poly& q, const Exp& e, const Rational& c) {
  require_compatible(q);
  if (c == 0) return;
  for (const auto& [qe, qc] : q.terms_) add_term(qe + e, qc * c);
}

Poly Poly::derivative(std::size_t i) const {
  if (i >= nvars_) {
    throw DimensionError("derivative index " + std::to_string(i + 1) + " out of range 1.." +
                         std::to_string(nvars_));
  }
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exp d(e);
    d.set(i, e[i] - 1);
    out.add_term(d, c * e[i]);
  }
  return out;
}

Poly Poly::derivative(const Exp& alpha) const {
  if (alpha.size() != nvars_) throw DimensionError("derivative multi-index arity mismatch");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    auto rest = e.minus(alpha);
    if (!rest) continue;
    // falling factorials e_i (e_i - 1) ... (e_i - alpha_i + 1)
    mpz_class factor = 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::int32_t k = 0; k < alpha[i]; ++k) factor *= e[i] - k;
    }
    out.add_term(*rest, c * Rational(factor));
  }
  return out;
}

Term Poly::leading(const MonomialOrder& ord) const {
  if (terms_.empty()) throw NoLeadingTerm("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (ord.greater(it->first, best->first)) best = it;
  }
  return Term{best->first, best->second};
}

std::vector<Term> Poly::sorted_terms(const MonomialOrder& ord) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(Term{e, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.exp, b.exp); });
  return out;
}

std::int64_t Poly::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

Poly Poly::embed(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw DimensionError("embedding does not fit");
  Poly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exp big(nvars);
    for (std::size_t i = 0; i < nvars_; ++i) big.set(offset + i, e[i]);
    out.add_term(big, c);
  }
  return out;
}

void ContentAccumulator::add(const Rational& c) {
  if (c == 0) return;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_gcd_.get_mpz_t(), c.get_num_mpz_t());
  num_gcd_ = g;
  mpz_lcm(den_lcm_.get_mpz_t(), den_lcm_.get_mpz_t(), c.get_den_mpz_t());
}

void ContentAccumulator::add(const Poly& p) {
  for (const auto& [e, c] : p.terms()) add(c);
}

Rational ContentAccumulator::inverse_content() const {
  if (num_gcd_ == 0) return 1;
  Rational r(den_lcm_, num_gcd_);
  r.canonicalize();
  return r;
}

Rational normalizing_scale(const Poly& p, const MonomialOrder& ord) {
  if (p.is_zero()) return 1;
  ContentAccumulator acc;
  acc.add(p);
  auto s = acc.inverse_content();
  if (p.lc(ord) < 0) s = -s;
  return s;
}

std::vector<std::string> x_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<std::string> xy_names(std::size_t n) {
  auto names = x_names(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

std::string format_rational(const Rational& c) { return c.get_str(); }

MonomialOrder display_order(std::size_t n) {
  std::vector<std::size_t> priority(n);
  std::iota(priority.begin(), priority.end(), std::size_t{0});
  return MonomialOrder::make(OrderKind::GradedLex, std::move(priority));
}

std::string format_poly(const Poly& p, const std::vector<std::string>& names,
                        const MonomialOrder& ord) {
  if (p.is_zero()) return "0";
  if (names.size() < p.nvars()) throw DimensionError("not enough variable names");
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms(ord)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || e.is_zero()) {
      os << format_rational(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace dopgb
