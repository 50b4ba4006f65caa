#ifdef PVAREA_HAVE_AVX2

#include <immintrin.h>

#include "pvarea/kernels.hpp"

namespace pvarea::kernels {

namespace {

// Lane masks for maskload/maskstore: masks()[k] activates the first k of 8
// lanes. Dimensions up to 8 (the common case) take a single masked op per
// plane; larger dimensions loop in chunks of 8.
const __m256i* masks() {
  alignas(32) static const std::uint32_t table[9][8] = {
      {0, 0, 0, 0, 0, 0, 0, 0},
      {~0u, 0, 0, 0, 0, 0, 0, 0},
      {~0u, ~0u, 0, 0, 0, 0, 0, 0},
      {~0u, ~0u, ~0u, 0, 0, 0, 0, 0},
      {~0u, ~0u, ~0u, ~0u, 0, 0, 0, 0},
      {~0u, ~0u, ~0u, ~0u, ~0u, 0, 0, 0},
      {~0u, ~0u, ~0u, ~0u, ~0u, ~0u, 0, 0},
      {~0u, ~0u, ~0u, ~0u, ~0u, ~0u, ~0u, 0},
      {~0u, ~0u, ~0u, ~0u, ~0u, ~0u, ~0u, ~0u},
  };
  return reinterpret_cast<const __m256i*>(table);
}

inline __m256i load_n(const std::uint32_t* p, __m256i lane_mask) {
  return _mm256_maskload_epi32(reinterpret_cast<const int*>(p), lane_mask);
}

inline void store_n(std::uint32_t* p, __m256i lane_mask, __m256i v) {
  _mm256_maskstore_epi32(reinterpret_cast<int*>(p), lane_mask, v);
}

bool intersect_avx2(const std::uint32_t* a, const std::uint32_t* b,
                    std::uint32_t* out, std::size_t dim) {
  bool nonempty = true;
  for (std::size_t i = 0; i < dim; i += 8) {
    const std::size_t n = dim - i < 8 ? dim - i : 8;
    const __m256i lane_mask = masks()[n];
    __m256i lo = _mm256_max_epu32(load_n(a + i, lane_mask), load_n(b + i, lane_mask));
    __m256i hi = _mm256_min_epu32(load_n(a + dim + i, lane_mask),
                                  load_n(b + dim + i, lane_mask));
    store_n(out + i, lane_mask, lo);
    store_n(out + dim + i, lane_mask, hi);
    // Lane empty iff hi <= lo iff min(lo, hi) == hi; inactive lanes load as
    // zero and would report empty, so restrict to active lanes.
    __m256i empty = _mm256_cmpeq_epi32(_mm256_min_epu32(lo, hi), hi);
    nonempty &= _mm256_movemask_epi8(_mm256_and_si256(empty, lane_mask)) == 0;
  }
  return nonempty;
}

bool contains_avx2(const std::uint32_t* outer, const std::uint32_t* inner,
                   std::size_t dim) {
  for (std::size_t i = 0; i < dim; i += 8) {
    const std::size_t n = dim - i < 8 ? dim - i : 8;
    const __m256i lane_mask = masks()[n];
    __m256i olo = load_n(outer + i, lane_mask);
    __m256i ilo = load_n(inner + i, lane_mask);
    __m256i ohi = load_n(outer + dim + i, lane_mask);
    __m256i ihi = load_n(inner + dim + i, lane_mask);
    // olo <= ilo iff min(olo, ilo) == olo; ihi <= ohi iff min(ihi, ohi) == ihi.
    __m256i ok = _mm256_and_si256(
        _mm256_cmpeq_epi32(_mm256_min_epu32(olo, ilo), olo),
        _mm256_cmpeq_epi32(_mm256_min_epu32(ihi, ohi), ihi));
    if (_mm256_movemask_epi8(_mm256_andnot_si256(ok, lane_mask)) != 0)
      return false;
  }
  return true;
}

std::size_t intersect_filter_avx2(const std::uint32_t* cubes,
                                  std::size_t count, const std::uint32_t* b,
                                  std::uint32_t* out, std::size_t dim) {
  const std::size_t stride = 2 * dim;
  std::size_t written = 0;
  for (std::size_t c = 0; c < count; ++c) {
    if (intersect_avx2(cubes + c * stride, b, out + written * stride, dim))
      ++written;
  }
  return written;
}

std::size_t find_container_avx2(const std::uint32_t* cubes, std::size_t count,
                                const std::uint32_t* inner, std::size_t dim,
                                std::size_t skip) {
  const std::size_t stride = 2 * dim;
  for (std::size_t c = 0; c < count; ++c) {
    if (c == skip) continue;
    if (contains_avx2(cubes + c * stride, inner, dim)) return c;
  }
  return count;
}

}  // namespace

const CubeKernels& avx2_kernels() {
  static const CubeKernels k{"avx2", intersect_avx2, contains_avx2,
                             intersect_filter_avx2, find_container_avx2};
  return k;
}

}  // namespace pvarea::kernels

#endif  // PVAREA_HAVE_AVX2
