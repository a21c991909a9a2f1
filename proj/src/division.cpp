#include "dopgb/division.hpp"

#include <atomic>

#include "dopgb/errors.hpp"

namespace dopgb {

namespace {

std::atomic<std::uint64_t> g_verified{0};
std::atomic<std::uint64_t> g_calls{0};

std::vector<std::size_t> eligible(std::span<const Exp> degs, const Exp& target) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (degs[i].divides(target)) out.push_back(i);
  }
  return out;
}

}  // namespace

Divider::Divider(std::vector<DiffOp> F, const MonomialOrder& ord, bool verify)
    : ord_(ord), coeff_ord_(coefficient_order(ord.nvars())), verify_(verify) {
  for (const auto& f : F) append(f);
}

void Divider::append(const DiffOp& f) {
  if (f.nvars() != ord_.nvars()) throw DimensionError("divisor arity differs from the order");
  if (f.is_zero()) throw InvalidInput("division by the zero operator");
  F_.push_back(f);
  degs_.push_back(f.deg(ord_));
  lcs_.push_back(f.lc(ord_));
}

const cgb::GBasis& Divider::lc_basis(const std::vector<std::size_t>& subset) const {
  auto it = cache_.find(subset);
  if (it == cache_.end()) {
    std::vector<Poly> gens;
    for (auto i : subset) gens.push_back(lcs_[i]);
    it = cache_.emplace(subset, cgb::buchberger(gens, coeff_ord_)).first;
  }
  return it->second;
}

DivisionResult Divider::divide(const DiffOp& g) const {
  const std::size_t n = ord_.nvars();
  if (g.nvars() != n) throw DimensionError("dividend arity differs from the order");
  g_calls.fetch_add(1, std::memory_order_relaxed);
  DivisionResult out{std::vector<DiffOp>(F_.size(), DiffOp(n)), DiffOp(n)};
  DiffOp h = g;
  std::optional<Exp> last;
  while (!h.is_zero()) {
    auto deg = h.deg(ord_);
    if (last && !ord_.less(deg, *last)) {
      throw InvariantViolation("working degree did not decrease during division");
    }
    last = deg;
    auto lc = h.coeff(deg);
    auto subset = eligible(degs_, deg);
    std::optional<std::vector<Poly>> cof;
    if (!subset.empty()) cof = cgb::membership_with_cofactors(lc, lc_basis(subset));
    if (!cof) {
      auto init = DiffOp::monomial(lc, deg);
      out.remainder += init;
      h -= init;
      continue;
    }
    for (std::size_t k = 0; k < subset.size(); ++k) {
      const auto& d = (*cof)[k];
      if (d.is_zero()) continue;
      auto i = subset[k];
      auto multiplier = DiffOp::monomial(d, *deg.minus(degs_[i]));
      h -= multiplier * F_[i];
      out.quotients[i] += multiplier;
    }
  }
  if (verify_) verify_division(g, F_, out, ord_);
  return out;
}

DivisionResult divide_op(const DiffOp& g, std::span<const DiffOp> F, const MonomialOrder& ord) {
  return Divider(std::vector<DiffOp>(F.begin(), F.end()), ord).divide(g);
}

void verify_division(const DiffOp& g, std::span<const DiffOp> F, const DivisionResult& result,
                     const MonomialOrder& ord) {
  if (result.quotients.size() != F.size()) {
    throw InvariantViolation("division returned the wrong number of quotients");
  }
  DiffOp sum = result.remainder;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto& q = result.quotients[i];
    if (q.is_zero()) continue;
    auto product = q * F[i];
    sum += product;
    if (g.is_zero() || ord.greater(product.deg(ord), g.deg(ord))) {
      throw InvariantViolation("division condition (2) violated: deg(h_f f) exceeds deg(g)");
    }
  }
  if (sum != g) throw InvariantViolation("division condition (1) violated: g != sum h_f f + r");
  const auto& r = result.remainder;
  if (!r.is_zero()) {
    auto deg = r.deg(ord);
    std::vector<Poly> lcs;
    for (const auto& f : F) {
      if (f.deg(ord).divides(deg)) lcs.push_back(f.lc(ord));
    }
    if (!lcs.empty() &&
        cgb::membership_with_cofactors(r.lc(ord), lcs, coefficient_order(ord.nvars()))) {
      throw InvariantViolation("division condition (3) violated: lc(r) is reducible");
    }
  }
  g_verified.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t division_count() noexcept { return g_calls.load(std::memory_order_relaxed); }

std::uint64_t verified_division_count() noexcept {
  return g_verified.load(std::memory_order_relaxed);
}

}  // namespace dopgb
