#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dopgb/diffop.hpp"
#include "dopgb/order.hpp"

namespace dopgb {

/// Header lines `vars = n` and `order = grlex|lex|grevlex`, then one operator
/// per line. `#` starts a comment. The order defaults to grlex.
struct ProblemFile {
  std::size_t nvars = 0;
  OrderKind kind = OrderKind::GradedLex;
  std::vector<DiffOp> generators;
  /// 1-based line of each generator.
  std::vector<std::size_t> lines;

  MonomialOrder order() const { return MonomialOrder::make(kind, nvars); }
};

ProblemFile parse_problem(std::string_view text);

/// Parses one operator expression over n variables. `*` is the product in A,
/// so `D1*x1` is x1*D1 + 1. Errors report `line` and a 1-based column.
DiffOp parse_operator(std::string_view text, std::size_t n, std::size_t line = 1);

/// Same grammar restricted to expressions without D.
Poly parse_poly(std::string_view text, std::size_t n, std::size_t line = 1);

}  // namespace dopgb
