#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace act2dp {

/// Raised for malformed instances, unknown ids and violated preconditions.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a brute-force routine refuses an input above its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact non-negative cost. All arithmetic is integral, so comparisons and
/// ties are exact.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(std::int64_t value) : value_(value) {
    if (value < 0) throw InvalidInput("negative cost " + std::to_string(value));
  }

  constexpr std::int64_t value() const { return value_; }

  constexpr Cost& operator+=(Cost other) {
    value_ += other.value_;
    return *this;
  }
  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }

  friend constexpr auto operator<=>(const Cost&, const Cost&) = default;

  friend std::ostream& operator<<(std::ostream& os, Cost c) { return os << c.value_; }

 private:
  std::int64_t value_ = 0;
};

/// A cost or the explicit "unreachable" sentinel (std::nullopt).
using MaybeCost = std::optional<Cost>;

/// Sum where either operand may be unreachable.
inline MaybeCost operator+(MaybeCost a, Cost b) {
  if (!a) return std::nullopt;
  return *a + b;
}

/// True when `a` is strictly better than `b`; unreachable is worst.
inline bool better(MaybeCost a, MaybeCost b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

}  // namespace act2dp
