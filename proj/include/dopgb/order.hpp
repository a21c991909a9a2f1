#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dopgb/exponent.hpp"

namespace dopgb {

enum class OrderKind { GradedLex, Lex, GradedRevLex };

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(const std::string& name);  // "grlex" | "lex" | "grevlex"

/// Admissible term order on N^n.
///
/// An order is a list of blocks compared one after another; each block covers a
/// contiguous range of variables and carries its own kind and variable priority
/// (indices relative to the block, most significant first). Single-block orders
/// are the normal case; the block form exists for the Y-before-X order used by
/// the syzygy computations in Q[X,Y].
class MonomialOrder {
 public:
  struct Block {
    std::size_t offset = 0;
    std::size_t length = 0;
    OrderKind kind = OrderKind::GradedLex;
    std::vector<std::size_t> priority;
  };

  MonomialOrder() = default;

  /// Default priority makes the highest-indexed variable the most significant,
  /// so under graded-lex D1 < D2 < ... < Dn.
  static MonomialOrder make(OrderKind kind, std::size_t nvars);
  static MonomialOrder make(OrderKind kind, std::vector<std::size_t> priority);
  static MonomialOrder graded_lex(std::size_t nvars) { return make(OrderKind::GradedLex, nvars); }
  static MonomialOrder lex(std::size_t nvars) { return make(OrderKind::Lex, nvars); }
  static MonomialOrder graded_rev_lex(std::size_t nvars) {
    return make(OrderKind::GradedRevLex, nvars);
  }

  /// Block order on the concatenated variable set: `first` is applied to the
  /// variables at `first_offset`, ties are broken by `second` at `second_offset`.
  static MonomialOrder block(const MonomialOrder& first, std::size_t first_offset,
                             const MonomialOrder& second, std::size_t second_offset);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  OrderKind kind() const { return blocks_.front().kind; }

  Cmp compare(const Exp& a, const Exp& b) const;
  bool less(const Exp& a, const Exp& b) const { return compare(a, b) == Cmp::Less; }
  bool greater(const Exp& a, const Exp& b) const { return compare(a, b) == Cmp::Greater; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Block> blocks_;
};

bool operator==(const MonomialOrder::Block& a, const MonomialOrder::Block& b);

/// Order used for the coefficient ring R = Q[x1..xn]: graded reverse lex with
/// xn most significant.
MonomialOrder coefficient_order(std::size_t n);

/// Order on Q[x1..xn, y1..yn] (X at indices 0..n-1, Y at n..2n-1): the Y block
/// is compared first with `d_order`, the X block breaks ties with
/// coefficient_order(n).
MonomialOrder xy_block_order(const MonomialOrder& d_order);

}  // namespace dopgb
