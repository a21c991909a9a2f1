#include "dopgb/order.hpp"

#include <algorithm>
#include <numeric>

#include "dopgb/errors.hpp"

namespace dopgb {

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::GradedLex: return "grlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::GradedRevLex: return "grevlex";
  }
  return "?";
}

OrderKind parse_order_kind(const std::string& name) {
  if (name == "grlex") return OrderKind::GradedLex;
  if (name == "lex") return OrderKind::Lex;
  if (name == "grevlex") return OrderKind::GradedRevLex;
  throw InvalidInput("unknown order '" + name + "' (expected grlex, lex or grevlex)");
}

MonomialOrder MonomialOrder::make(OrderKind kind, std::size_t nvars) {
  std::vector<std::size_t> priority(nvars);
  std::iota(priority.rbegin(), priority.rend(), std::size_t{0});
  return make(kind, std::move(priority));
}

MonomialOrder MonomialOrder::make(OrderKind kind, std::vector<std::size_t> priority) {
  std::vector<std::size_t> sorted(priority);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidInput("variable priority is not a permutation");
  }
  MonomialOrder ord;
  ord.nvars_ = priority.size();
  ord.blocks_.push_back(Block{0, priority.size(), kind, std::move(priority)});
  return ord;
}

MonomialOrder MonomialOrder::block(const MonomialOrder& first, std::size_t first_offset,
                                   const MonomialOrder& second, std::size_t second_offset) {
  MonomialOrder ord;
  ord.nvars_ = std::max(first_offset + first.nvars_, second_offset + second.nvars_);
  for (auto b : first.blocks_) {
    b.offset += first_offset;
    ord.blocks_.push_back(std::move(b));
  }
  for (auto b : second.blocks_) {
    b.offset += second_offset;
    ord.blocks_.push_back(std::move(b));
  }
  std::vector<int> covered(ord.nvars_, 0);
  for (const auto& b : ord.blocks_) {
    for (std::size_t i = 0; i < b.length; ++i) ++covered[b.offset + i];
  }
  if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) {
    throw InvalidInput("block order must cover every variable exactly once");
  }
  return ord;
}

namespace {

Cmp sign(std::int64_t d) { return d < 0 ? Cmp::Less : (d > 0 ? Cmp::Greater : Cmp::Equal); }

Cmp compare_block(const MonomialOrder::Block& b, std::span<const std::int32_t> x,
                  std::span<const std::int32_t> y) {
  if (b.kind != OrderKind::Lex) {
    std::int64_t dx = 0, dy = 0;
    for (std::size_t i = 0; i < b.length; ++i) {
      dx += x[b.offset + i];
      dy += y[b.offset + i];
    }
    if (dx != dy) return sign(dx - dy);
  }
  if (b.kind == OrderKind::GradedRevLex) {
    // Smaller exponent in the least significant variable wins.
    for (auto it = b.priority.rbegin(); it != b.priority.rend(); ++it) {
      auto v = b.offset + *it;
      if (x[v] != y[v]) return sign(static_cast<std::int64_t>(y[v]) - x[v]);
    }
    return Cmp::Equal;
  }
  for (auto p : b.priority) {
    auto v = b.offset + p;
    if (x[v] != y[v]) return sign(static_cast<std::int64_t>(x[v]) - y[v]);
  }
  return Cmp::Equal;
}

}  // namespace

Cmp MonomialOrder::compare(const Exp& a, const Exp& b) const {
  require_same_length(a, b);
  if (a.size() != nvars_) {
    throw DimensionError("exponent has " + std::to_string(a.size()) + " entries, order expects " +
                         std::to_string(nvars_));
  }
  for (const auto& blk : blocks_) {
    auto c = compare_block(blk, a.entries(), b.entries());
    if (c != Cmp::Equal) return c;
  }
  return Cmp::Equal;
}

bool operator==(const MonomialOrder::Block& a, const MonomialOrder::Block& b) {
  return a.offset == b.offset && a.length == b.length && a.kind == b.kind &&
         a.priority == b.priority;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  return a.nvars_ == b.nvars_ && a.blocks_ == b.blocks_;
}

MonomialOrder coefficient_order(std::size_t n) { return MonomialOrder::graded_rev_lex(n); }

MonomialOrder xy_block_order(const MonomialOrder& d_order) {
  auto n = d_order.nvars();
  return MonomialOrder::block(d_order, n, coefficient_order(n), 0);
}

}  // namespace dopgb
