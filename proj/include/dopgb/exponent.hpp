#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dopgb {

inline constexpr std::int64_t kDefaultExponentLimit = 2147483647;  // 2^31 - 1

/// Upper bound for every exponent entry. Arithmetic that would exceed it throws
/// ExponentOverflow instead of wrapping.
std::int64_t exponent_limit() noexcept;
void set_exponent_limit(std::int64_t limit);

/// Dense exponent vector in N^n with a cached total degree.
///
/// Used for X-, Y- and D-exponents alike. The length is fixed at construction.
/// The built-in ordering (operator<=>) is plain lexicographic on the entries and
/// only serves as a storage key; admissible orders live in MonomialOrder.
class Exp {
 public:
  Exp() = default;
  explicit Exp(std::size_t n) : entries_(n, 0) {}
  Exp(std::initializer_list<std::int32_t> entries);
  explicit Exp(std::vector<std::int32_t> entries);

  static Exp unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int32_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int32_t> entries() const noexcept { return entries_; }
  std::int64_t total() const noexcept { return total_; }
  bool is_zero() const noexcept { return total_ == 0; }

  void set(std::size_t i, std::int64_t value);

  /// True iff this <= other componentwise, i.e. X^this divides X^other.
  bool divides(const Exp& other) const;

  /// Componentwise difference; empty when some entry of `other` exceeds ours.
  std::optional<Exp> minus(const Exp& other) const;

  Exp& operator+=(const Exp& other);
  friend Exp operator+(Exp a, const Exp& b) { return a += b; }

  /// Sub-vector [offset, offset + length).
  Exp slice(std::size_t offset, std::size_t length) const;
  /// Concatenation (a, b).
  static Exp concat(const Exp& a, const Exp& b);

  friend bool operator==(const Exp& a, const Exp& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const Exp& a, const Exp& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string str() const;

 private:
  std::vector<std::int32_t> entries_;
  std::int64_t total_ = 0;
};

/// Componentwise maximum of a and b (the exponent of lcm).
Exp lcm(const Exp& a, const Exp& b);

/// Componentwise maximum over a non-empty family (the lcm of the D-monomials).
Exp componentwise_max(std::span<const Exp> family);

void require_same_length(const Exp& a, const Exp& b);

}  // namespace dopgb
