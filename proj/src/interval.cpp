#include "pvarea/interval.hpp"

#include <charconv>
#include <stdexcept>

namespace pvarea {

std::string endpoint_to_string(Endpoint e) {
  if (e == kInf) return "-";
  return std::to_string(e);
}

Interval::Interval(Endpoint lo, Endpoint hi) : lo_(lo), hi_(hi) {
  if (lo >= hi) throw std::invalid_argument("empty interval [" + std::to_string(lo) + "," + std::to_string(hi) + "[");
  if (lo == kInf) throw std::invalid_argument("interval starting at infinity");
}

bool contains(const Interval& outer, const Interval& inner) {
  return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

bool contains_point(const Interval& iv, Endpoint p) {
  return iv.lo() <= p && p < iv.hi();
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Endpoint lo = a.lo() > b.lo() ? a.lo() : b.lo();
  Endpoint hi = a.hi() < b.hi() ? a.hi() : b.hi();
  if (lo >= hi) return std::nullopt;
  return Interval(lo, hi);
}

std::string to_string(const Interval& iv) {
  return "[" + endpoint_to_string(iv.lo()) + "," + endpoint_to_string(iv.hi()) + "[";
}

namespace {

Endpoint parse_endpoint(std::string_view text) {
  if (text == "-") return kInf;
  Endpoint value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad endpoint '" + std::string(text) + "'");
  if (value == kInf) throw std::invalid_argument("endpoint out of range");
  return value;
}

}  // namespace

Interval parse_interval(std::string_view text) {
  if (text.size() < 5 || text.front() != '[' || text.back() != '[')
    throw std::invalid_argument("bad interval '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  size_t comma = body.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("bad interval '" + std::string(text) + "'");
  Endpoint lo = parse_endpoint(body.substr(0, comma));
  Endpoint hi = parse_endpoint(body.substr(comma + 1));
  if (lo >= hi) throw std::invalid_argument("empty interval '" + std::string(text) + "'");
  return Interval(lo, hi);
}

}  // namespace pvarea
