#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace saptree {

/// Non-negative integer extended with infinity; increments saturate.
class Distance {
 public:
  using value_type = std::uint32_t;

  constexpr Distance() = default;
  constexpr explicit Distance(value_type v) : value_(v) {}

  static constexpr Distance infinity() { return Distance(kInf); }

  constexpr bool is_finite() const { return value_ != kInf; }
  constexpr bool is_infinite() const { return value_ == kInf; }

  /// Finite value; callers check is_finite() first.
  constexpr value_type value() const { return value_; }

  constexpr Distance next() const {
    return is_finite() ? Distance(value_ + 1) : infinity();
  }

  friend constexpr auto operator<=>(Distance, Distance) = default;

  std::string to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("inf");
  }

 private:
  static constexpr value_type kInf = std::numeric_limits<value_type>::max();
  value_type value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Distance d) {
  return os << d.to_string();
}

/// |a - b| <= 1 read in the saturating algebra: a <= b + 1 and b <= a + 1.
constexpr bool within_one(Distance a, Distance b) {
  return a <= b.next() && b <= a.next();
}

}  // namespace saptree
