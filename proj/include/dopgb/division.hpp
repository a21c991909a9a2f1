#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dopgb/commutative.hpp"
#include "dopgb/diffop.hpp"
#include "dopgb/order.hpp"

namespace dopgb {

struct DivisionResult {
  /// quotients[i] multiplies F[i] on the left.
  std::vector<DiffOp> quotients;
  DiffOp remainder;
};

/// Left division of operators by a finite family F.
///
/// At each step the working operator h is reduced when lc(h) lies in the
/// R-ideal of {lc(f) : deg(f) <= deg(h)}: with cofactors (d_f) the operator
/// sum d_f D^(deg h - deg f) f is subtracted, which cancels init(h). Otherwise
/// init(h) moves to the remainder. Every step strictly lowers deg(h).
///
/// Results satisfy
///   (1) g = sum h_f f + r,
///   (2) h_f = 0 or deg(h_f f) <= deg(g),
///   (3) r = 0 or lc(r) not in <lc(f) : deg(r) in deg(f) + N^n>,
/// and are re-checked after every division unless verification is disabled.
/// The leading-coefficient bases are cached per divisor subset, so one Divider
/// should be reused for many divisions by the same family.
class Divider {
 public:
  Divider(std::vector<DiffOp> F, const MonomialOrder& ord, bool verify = true);

  DivisionResult divide(const DiffOp& g) const;

  /// Adds a divisor at the end; cached data for the earlier ones is kept.
  void append(const DiffOp& f);

  const std::vector<DiffOp>& divisors() const noexcept { return F_; }
  const MonomialOrder& order() const noexcept { return ord_; }

 private:
  const cgb::GBasis& lc_basis(const std::vector<std::size_t>& subset) const;

  std::vector<DiffOp> F_;
  MonomialOrder ord_;
  MonomialOrder coeff_ord_;
  std::vector<Exp> degs_;
  std::vector<Poly> lcs_;
  bool verify_;
  mutable std::map<std::vector<std::size_t>, cgb::GBasis> cache_;
};

DivisionResult divide_op(const DiffOp& g, std::span<const DiffOp> F, const MonomialOrder& ord);

/// Re-checks conditions (1)-(3); condition (3) through an independent
/// membership query on lc(r). Throws InvariantViolation on failure.
void verify_division(const DiffOp& g, std::span<const DiffOp> F, const DivisionResult& result,
                     const MonomialOrder& ord);

/// Number of divisions performed in this process.
std::uint64_t division_count() noexcept;

/// Number of divisions whose conditions were re-verified in this process.
std::uint64_t verified_division_count() noexcept;

}  // namespace dopgb
