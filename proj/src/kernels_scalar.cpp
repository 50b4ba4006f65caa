#include "pvarea/kernels.hpp"

namespace pvarea::kernels {

namespace {

bool intersect_scalar(const std::uint32_t* a, const std::uint32_t* b,
                      std::uint32_t* out, std::size_t dim) {
  bool nonempty = true;
  for (std::size_t i = 0; i < dim; ++i) {
    std::uint32_t lo = a[i] > b[i] ? a[i] : b[i];
    std::uint32_t hi = a[dim + i] < b[dim + i] ? a[dim + i] : b[dim + i];
    out[i] = lo;
    out[dim + i] = hi;
    nonempty &= lo < hi;
  }
  return nonempty;
}

bool contains_scalar(const std::uint32_t* outer, const std::uint32_t* inner,
                     std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    if (outer[i] > inner[i]) return false;
    if (inner[dim + i] > outer[dim + i]) return false;
  }
  return true;
}

std::size_t intersect_filter_scalar(const std::uint32_t* cubes,
                                    std::size_t count, const std::uint32_t* b,
                                    std::uint32_t* out, std::size_t dim) {
  const std::size_t stride = 2 * dim;
  std::size_t written = 0;
  for (std::size_t c = 0; c < count; ++c) {
    if (intersect_scalar(cubes + c * stride, b, out + written * stride, dim))
      ++written;
  }
  return written;
}

std::size_t find_container_scalar(const std::uint32_t* cubes,
                                  std::size_t count,
                                  const std::uint32_t* inner, std::size_t dim,
                                  std::size_t skip) {
  const std::size_t stride = 2 * dim;
  for (std::size_t c = 0; c < count; ++c) {
    if (c == skip) continue;
    if (contains_scalar(cubes + c * stride, inner, dim)) return c;
  }
  return count;
}

}  // namespace

const CubeKernels& scalar_kernels() {
  static const CubeKernels k{"scalar", intersect_scalar, contains_scalar,
                             intersect_filter_scalar, find_container_scalar};
  return k;
}

}  // namespace pvarea::kernels
