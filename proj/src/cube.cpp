#include "pvarea/cube.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "pvarea/kernels.hpp"

namespace pvarea {

Cube::Cube(std::vector<Interval> coords) {
  ep_.resize(2 * coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    ep_[i] = coords[i].lo();
    ep_[coords.size() + i] = coords[i].hi();
  }
}

Cube::Cube(std::span<const Endpoint> planes, std::size_t dim) {
  assert(planes.size() == 2 * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (planes[i] >= planes[dim + i])
      throw std::invalid_argument("empty cube coordinate");
  }
  ep_.assign(planes.begin(), planes.end());
}

bool record_less(const Endpoint* a, const Endpoint* b, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
    if (a[dim + i] != b[dim + i]) return a[dim + i] < b[dim + i];
  }
  return false;
}

bool cube_less(const Cube& a, const Cube& b) {
  assert(a.dimension() == b.dimension());
  return record_less(a.data(), b.data(), a.dimension());
}

bool contains(const Cube& outer, const Cube& inner) {
  assert(outer.dimension() == inner.dimension());
  return kernels::active_kernels().contains(outer.data(), inner.data(),
                                            outer.dimension());
}

std::optional<Cube> intersect(const Cube& a, const Cube& b) {
  assert(a.dimension() == b.dimension());
  const std::size_t dim = a.dimension();
  std::vector<Endpoint> out(2 * dim);
  if (!kernels::active_kernels().intersect(a.data(), b.data(), out.data(), dim))
    return std::nullopt;
  return Cube(out, dim);
}

bool contains_point(const Cube& c, std::span<const Endpoint> p) {
  assert(p.size() == c.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < c.lo(i) || p[i] >= c.hi(i)) return false;
  }
  return true;
}

Cube concat(const Cube& a, const Cube& b) {
  const std::size_t da = a.dimension();
  const std::size_t db = b.dimension();
  std::vector<Endpoint> planes(2 * (da + db));
  for (std::size_t i = 0; i < da; ++i) {
    planes[i] = a.lo(i);
    planes[da + db + i] = a.hi(i);
  }
  for (std::size_t i = 0; i < db; ++i) {
    planes[da + i] = b.lo(i);
    planes[da + db + da + i] = b.hi(i);
  }
  return Cube(planes, da + db);
}

Cube restrict_to(const Cube& c, std::span<const std::uint32_t> idx) {
  std::vector<Endpoint> planes(2 * idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    assert(idx[k] < c.dimension());
    assert(k == 0 || idx[k - 1] < idx[k]);
    planes[k] = c.lo(idx[k]);
    planes[idx.size() + k] = c.hi(idx[k]);
  }
  return Cube(planes, idx.size());
}

std::string to_string(const Cube& c) {
  std::string out;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (i != 0) out += '*';
    out += to_string(c.coord(i));
  }
  return out;
}

Cube parse_cube(std::string_view text) {
  if (text.empty()) return Cube();
  std::vector<Interval> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = text.find('*', start);
    std::string_view part = sep == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, sep - start);
    coords.push_back(parse_interval(part));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return Cube(std::move(coords));
}

Cube CubeList::cube(std::size_t i) const {
  return Cube(std::span(at(i), stride()), dim_);
}

void CubeList::push(const Cube& c) {
  assert(c.dimension() == dim_);
  push_raw(c.data());
}

void CubeList::push_raw(const Endpoint* planes) {
  buf_.insert(buf_.end(), planes, planes + stride());
  ++count_;
}

void CubeList::clear() {
  buf_.clear();
  count_ = 0;
}

void CubeList::append_intersections(const CubeList& src, const Cube& b) {
  assert(src.dimension() == dim_ && b.dimension() == dim_);
  buf_.resize((count_ + src.size()) * stride());
  std::size_t written = kernels::active_kernels().intersect_filter(
      src.buf_.data(), src.size(), b.data(), buf_.data() + count_ * stride(),
      dim_);
  count_ += written;
  buf_.resize(count_ * stride());
}

void CubeList::sort_unique() {
  const std::size_t st = stride();
  std::vector<std::uint32_t> order(count_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (record_less(at(a), at(b), dim_)) return true;
    if (record_less(at(b), at(a), dim_)) return false;
    return a < b;
  });
  std::vector<Endpoint> next;
  next.reserve(buf_.size());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Endpoint* rec = at(order[k]);
    if (kept > 0 &&
        std::equal(rec, rec + st, next.data() + (kept - 1) * st))
      continue;
    next.insert(next.end(), rec, rec + st);
    ++kept;
  }
  buf_ = std::move(next);
  count_ = kept;
}

void CubeList::prune_dominated() {
  sort_unique();
  const auto& k = kernels::active_kernels();
  const std::size_t st = stride();
  std::vector<Endpoint> next;
  next.reserve(buf_.size());
  std::size_t kept = 0;
  for (std::size_t i = 0; i < count_; ++i) {
    // Containment is a partial order once duplicates are gone, so checking
    // against the full pre-prune list keeps exactly the maximal records.
    if (k.find_container(buf_.data(), count_, at(i), dim_, i) != count_)
      continue;
    next.insert(next.end(), at(i), at(i) + st);
    ++kept;
  }
  buf_ = std::move(next);
  count_ = kept;
}

CubeList project(const CubeList& cubes, std::span<const std::uint32_t> idx) {
  CubeList out(idx.size());
  out.reserve(cubes.size());
  for (std::size_t i = 0; i < cubes.size(); ++i)
    out.push(restrict_to(cubes.cube(i), idx));
  out.sort_unique();
  return out;
}

}  // namespace pvarea
