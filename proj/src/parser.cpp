#include "dopgb/parser.hpp"

#include <cctype>
#include <charconv>

#include "dopgb/errors.hpp"

namespace dopgb {

namespace {

constexpr long kMaxPower = 1000;

class OperatorParser {
 public:
  OperatorParser(std::string_view text, std::size_t n, std::size_t line)
      : text_(text), n_(n), line_(line) {}

  DiffOp parse() {
    skip_space();
    if (done()) fail("empty expression");
    auto out = expr();
    skip_space();
    if (!done()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, pos + 1, msg);
  }

  bool done() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  DiffOp expr() {
    DiffOp out(n_);
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    auto t = term();
    out += negative ? -t : t;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  DiffOp term() {
    auto out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  DiffOp factor() {
    if (accept('-')) return -factor();
    auto base = atom();
    if (!accept('^')) return base;
    skip_space();
    auto at = pos_;
    auto k = integer();
    if (k > kMaxPower) fail_at(at, "exponent too large");
    auto out = DiffOp::one(n_);
    for (long i = 0; i < k; ++i) out = out * base;
    return out;
  }

  long integer() {
    skip_space();
    auto start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail_at(start, "integer out of range");
    return value;
  }

  std::size_t index(std::size_t at) {
    if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a variable index");
    }
    auto k = integer();
    if (k < 1 || static_cast<std::size_t>(k) > n_) {
      fail_at(at, "variable index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(n_));
    }
    return static_cast<std::size_t>(k - 1);
  }

  DiffOp atom() {
    skip_space();
    if (done()) fail("unexpected end of expression");
    auto at = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto out = expr();
      if (!accept(')')) fail("expected ')'");
      return out;
    }
    if (c == 'x' || c == 'D') {
      ++pos_;
      auto i = index(at);
      return c == 'x' ? DiffOp::x(n_, i) : DiffOp::d(n_, i);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skip_space();
      auto digits_start = pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class num(std::string(text_.substr(digits_start, pos_ - digits_start)));
      mpz_class den = 1;
      if (accept('/')) {
        skip_space();
        auto den_start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den_start == pos_) fail("expected a denominator");
        den = mpz_class(std::string(text_.substr(den_start, pos_ - den_start)));
        if (den == 0) fail_at(den_start, "zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return DiffOp::from_coefficient(Poly::constant(n_, r));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Recognizes `key = value`; returns false if the line is not of that form.
bool header(std::string_view line, std::string_view key, std::string_view& value) {
  auto eq = line.find('=');
  if (eq == std::string_view::npos || trim(line.substr(0, eq)) != key) return false;
  value = trim(line.substr(eq + 1));
  return true;
}

}  // namespace

DiffOp parse_operator(std::string_view text, std::size_t n, std::size_t line) {
  return OperatorParser(text, n, line).parse();
}

Poly parse_poly(std::string_view text, std::size_t n, std::size_t line) {
  auto op = parse_operator(text, n, line);
  for (const auto& [e, r] : op.terms()) {
    if (!e.is_zero()) throw ParseError(line, 1, "polynomial expression contains D");
  }
  return op.is_zero() ? Poly(n) : op.coeff(Exp(n));
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  bool have_vars = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto content = raw.substr(0, raw.find('#'));
    if (trim(content).empty()) continue;
    std::string_view value;
    if (header(content, "vars", value)) {
      if (have_vars) throw ParseError(line_no, 1, "duplicate 'vars' header");
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || ptr != value.data() + value.size() || n == 0) {
        throw ParseError(line_no, static_cast<std::size_t>(value.data() - raw.data()) + 1,
                         "'vars' must be a positive integer");
      }
      out.nvars = n;
      have_vars = true;
      continue;
    }
    if (header(content, "order", value)) {
      try {
        out.kind = parse_order_kind(std::string(value));
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, static_cast<std::size_t>(value.data() - raw.data()) + 1,
                         e.what());
      }
      continue;
    }
    if (!have_vars) throw ParseError(line_no, 1, "operator before the 'vars' header");
    auto op = parse_operator(content, out.nvars, line_no);
    if (op.is_zero()) {
      auto first = content.find_first_not_of(" \t\r");
      throw ParseError(line_no, first + 1, "operator is zero");
    }
    out.generators.push_back(std::move(op));
    out.lines.push_back(line_no);
  }
  if (!have_vars) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'vars' header");
  return out;
}

}  // namespace dopgb
