#pragma once

#include <cstddef>
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dopgb/errors.hpp"
#include "dopgb/exponent.hpp"
#include "dopgb/order.hpp"
#include "dopgb/poly.hpp"

namespace dopgb {

namespace detail {

/// Finite map (exponent in N^n) -> nonzero coefficient in R = Q[x1..xn].
/// Shared storage for operators in A = R[D] and elements of B = R[Y].
template <class Derived>
class GradedOverR {
 public:
  using TermMap = std::map<Exp, Poly>;

  GradedOverR() = default;
  explicit GradedOverR(std::size_t n) : n_(n) {}

  static Derived from_coefficient(const Poly& r) { return monomial(r, Exp(r.nvars())); }
  static Derived monomial(const Poly& r, const Exp& e) {
    Derived out(e.size());
    out.add_term(e, r);
    return out;
  }

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Poly coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Poly(n_) : it->second;
  }

  void add_term(const Exp& e, const Poly& r);

  Derived& operator+=(const Derived& g) {
    require_compatible(g);
    for (const auto& [e, r] : g.terms_) add_term(e, r);
    return self();
  }
  Derived& operator-=(const Derived& g) {
    require_compatible(g);
    for (const auto& [e, r] : g.terms_) add_term(e, -r);
    return self();
  }
  Derived& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [e, r] : terms_) r *= c;  // Poly scaling canonicalizes c
    return self();
  }
  friend Derived operator+(Derived f, const Derived& g) { return f += g; }
  friend Derived operator-(Derived f, const Derived& g) { return f -= g; }
  friend Derived operator*(Derived f, const Rational& c) { return f *= c; }
  friend Derived operator*(const Rational& c, Derived f) { return f *= c; }
  Derived operator-() const {
    Derived out(static_cast<const Derived&>(*this));
    for (auto& [e, r] : out.terms_) r = -r;
    return out;
  }

  /// Left multiplication by r in R (coefficientwise in both rings).
  friend Derived operator*(const Poly& r, const Derived& f) {
    Derived out(f.n_);
    if (r.nvars() != f.n_) throw DimensionError("coefficient arity mismatch");
    for (const auto& [e, c] : f.terms_) out.add_term(e, r * c);
    return out;
  }

  /// deg: the order-maximal exponent with nonzero coefficient.
  Exp deg(const MonomialOrder& ord) const;
  /// lc: the coefficient at deg.
  Poly lc(const MonomialOrder& ord) const { return terms_.at(deg(ord)); }
  /// init = lc * (D or Y)^deg.
  Derived init(const MonomialOrder& ord) const {
    auto d = deg(ord);
    return monomial(terms_.at(d), d);
  }

  /// Terms in descending order under `ord`.
  std::vector<std::pair<Exp, Poly>> sorted_terms(const MonomialOrder& ord) const;

  /// Largest total degree of any coefficient.
  std::int64_t coefficient_degree() const;

  friend bool operator==(const GradedOverR& a, const GradedOverR& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 protected:
  void require_compatible(const GradedOverR& g) const {
    if (g.n_ != n_) throw DimensionError("operands over different numbers of variables");
  }
  Derived& self() { return static_cast<Derived&>(*this); }

  std::size_t n_ = 0;
  TermMap terms_;
};


template <class Derived>
void GradedOverR<Derived>::add_term(const Exp& e, const Poly& r) {
  if (e.size() != n_ || r.nvars() != n_) throw DimensionError("term arity mismatch");
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class Derived>
Exp GradedOverR<Derived>::deg(const MonomialOrder& ord) const {
  if (terms_.empty()) throw NoLeadingTerm("zero element has no degree");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (ord.greater(it->first, best->first)) best = it;
  }
  return best->first;
}

template <class Derived>
std::vector<std::pair<Exp, Poly>> GradedOverR<Derived>::sorted_terms(
    const MonomialOrder& ord) const {
  std::vector<std::pair<Exp, Poly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  return out;
}

template <class Derived>
std::int64_t GradedOverR<Derived>::coefficient_degree() const {
  std::int64_t d = 0;
  for (const auto& [e, r] : terms_) d = std::max(d, r.total_degree());
  return d;
}

}  // namespace detail

/// Element of A = R[D1..Dn], R = Q[x1..xn], stored in normal form sum r_a D^a
/// with coefficients to the left.
class DiffOp : public detail::GradedOverR<DiffOp> {
 public:
  using GradedOverR::GradedOverR;

  static DiffOp one(std::size_t n) { return from_coefficient(Poly::constant(n, 1)); }
  static DiffOp x(std::size_t n, std::size_t i) { return from_coefficient(Poly::variable(n, i)); }
  static DiffOp d(std::size_t n, std::size_t i) {
    return monomial(Poly::constant(n, 1), Exp::unit(n, i));
  }

  /// Noncommutative product via the closed Leibniz formula
  /// D^a (r D^b) = sum_{g <= a} C(a,g) d^g(r) D^(a+b-g).
  friend DiffOp operator*(const DiffOp& f, const DiffOp& g);

  /// (sum r_a D^a)(p) = sum r_a d^a(p): the action of A on R.
  Poly apply(const Poly& p) const;
};

/// Element of the commutative ring B = R[Y1..Yn].
class BPoly : public detail::GradedOverR<BPoly> {
 public:
  using GradedOverR::GradedOverR;

  friend BPoly operator*(const BPoly& f, const BPoly& g);

  /// The same element in Q[x1..xn, y1..yn] (X first, then Y).
  Poly to_xy() const;
  static BPoly from_xy(const Poly& p, std::size_t n);
};

/// sigma: B -> A, r Y^a |-> r D^a. R-linear bijection, not multiplicative.
DiffOp sigma(const BPoly& b);
BPoly sigma_inv(const DiffOp& f);

/// Scale making every rational coefficient of f an integer with gcd 1 and the
/// leading rational of lc(f) (under coefficient_order) positive.
Rational normalizing_scale(const DiffOp& f, const MonomialOrder& ord);

/// Text form: coefficient left of the D-monomial, terms descending under `ord`,
/// e.g. `x1*D4 + 1`, `(x1 + x2)*D6`.
std::string format_op(const DiffOp& f, const MonomialOrder& ord);
std::string format_bpoly(const BPoly& b, const MonomialOrder& ord);

}  // namespace dopgb
