#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pvarea {

// Coordinates live on [0, inf). Endpoints are non-negative integers plus a
// dedicated infinity value; kInf is the largest uint32_t, so plain unsigned
// comparison already orders every finite endpoint below infinity.
using Endpoint = std::uint32_t;
inline constexpr Endpoint kInf = 0xFFFFFFFFu;

std::string endpoint_to_string(Endpoint e);

// Half-open interval [lo, hi[ with 0 <= lo < hi <= kInf. Intervals are never
// empty; operations that would produce an empty set return nullopt instead.
class Interval {
 public:
  Interval(Endpoint lo, Endpoint hi);

  Endpoint lo() const { return lo_; }
  Endpoint hi() const { return hi_; }
  bool bounded() const { return hi_ != kInf; }

  friend auto operator<=>(const Interval&, const Interval&) = default;

 private:
  Endpoint lo_;
  Endpoint hi_;
};

inline Interval full_interval() { return Interval(0, kInf); }

bool contains(const Interval& outer, const Interval& inner);
bool contains_point(const Interval& iv, Endpoint p);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Renders as "[lo,hi[" with "-" for an infinite upper endpoint, e.g. "[0,-[".
std::string to_string(const Interval& iv);

// Parses the to_string format. Throws std::invalid_argument on malformed
// input or an empty interval.
Interval parse_interval(std::string_view text);

}  // namespace pvarea
