#include "dopgb/exponent.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "dopgb/errors.hpp"

namespace dopgb {

namespace {

std::atomic<std::int64_t> g_limit{kDefaultExponentLimit};

std::int32_t checked_entry(std::int64_t value) {
  if (value < 0) throw ExponentOverflow("negative exponent entry");
  if (value > g_limit.load(std::memory_order_relaxed)) {
    throw ExponentOverflow("exponent entry " + std::to_string(value) + " exceeds limit");
  }
  return static_cast<std::int32_t>(value);
}

}  // namespace

std::int64_t exponent_limit() noexcept { return g_limit.load(std::memory_order_relaxed); }

void set_exponent_limit(std::int64_t limit) {
  if (limit < 0 || limit > kDefaultExponentLimit) {
    throw std::invalid_argument("exponent limit out of range");
  }
  g_limit.store(limit, std::memory_order_relaxed);
}

Exp::Exp(std::initializer_list<std::int32_t> entries)
    : Exp(std::vector<std::int32_t>(entries)) {}

Exp::Exp(std::vector<std::int32_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    checked_entry(e);
    total_ += e;
  }
}

Exp Exp::unit(std::size_t n, std::size_t i) {
  Exp e(n);
  e.set(i, 1);
  return e;
}

void Exp::set(std::size_t i, std::int64_t value) {
  auto v = checked_entry(value);
  total_ += static_cast<std::int64_t>(v) - entries_.at(i);
  entries_[i] = v;
}

void require_same_length(const Exp& a, const Exp& b) {
  if (a.size() != b.size()) {
    throw DimensionError("exponent length mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

bool Exp::divides(const Exp& other) const {
  require_same_length(*this, other);
  if (total_ > other.total_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

std::optional<Exp> Exp::minus(const Exp& other) const {
  require_same_length(*this, other);
  Exp out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (other.entries_[i] > entries_[i]) return std::nullopt;
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  out.total_ = total_ - other.total_;
  return out;
}

Exp& Exp::operator+=(const Exp& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = checked_entry(static_cast<std::int64_t>(entries_[i]) + other.entries_[i]);
  }
  total_ += other.total_;
  return *this;
}

Exp Exp::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > entries_.size()) throw DimensionError("slice out of range");
  return Exp(std::vector<std::int32_t>(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                                       entries_.begin() +
                                           static_cast<std::ptrdiff_t>(offset + length)));
}

Exp Exp::concat(const Exp& a, const Exp& b) {
  std::vector<std::int32_t> v(a.entries_);
  v.insert(v.end(), b.entries_.begin(), b.entries_.end());
  return Exp(std::move(v));
}

std::string Exp::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Exp lcm(const Exp& a, const Exp& b) {
  require_same_length(a, b);
  std::vector<std::int32_t> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = std::max(a[i], b[i]);
  return Exp(std::move(v));
}

Exp componentwise_max(std::span<const Exp> family) {
  if (family.empty()) throw InvalidInput("componentwise_max of an empty family");
  Exp m = family.front();
  for (const auto& e : family.subspan(1)) m = lcm(m, e);
  return m;
}

}  // namespace dopgb
