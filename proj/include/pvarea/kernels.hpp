#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pvarea::kernels {

// Cube record layout: 2*dim uint32_t, lower endpoints first, then upper
// endpoints (lo plane, hi plane). kInf marks an unbounded upper endpoint and
// compares greatest under unsigned order, so min/max work uniformly.
//
// A batch of cubes is `count` consecutive records.
struct CubeKernels {
  const char* name;

  // out = a meet b, written even when empty. Returns true iff non-empty
  // (every coordinate keeps lo < hi).
  bool (*intersect)(const std::uint32_t* a, const std::uint32_t* b,
                    std::uint32_t* out, std::size_t dim);

  // outer.lo <= inner.lo and inner.hi <= outer.hi coordinatewise.
  bool (*contains)(const std::uint32_t* outer, const std::uint32_t* inner,
                   std::size_t dim);

  // Intersects each record of `cubes` with `b`, appending only the non-empty
  // meets to `out` (room for count records). Returns records written.
  std::size_t (*intersect_filter)(const std::uint32_t* cubes,
                                  std::size_t count, const std::uint32_t* b,
                                  std::uint32_t* out, std::size_t dim);

  // Index of the first record other than `skip` that contains `inner`;
  // `count` when none does. Pass skip >= count to consider every record.
  std::size_t (*find_container)(const std::uint32_t* cubes, std::size_t count,
                                const std::uint32_t* inner, std::size_t dim,
                                std::size_t skip);
};

const CubeKernels& scalar_kernels();
#ifdef PVAREA_HAVE_AVX2
const CubeKernels& avx2_kernels();
#endif

// Variants compiled into this build (scalar first).
std::vector<const CubeKernels*> all_kernels();

// Active variant. Chosen once: PVAREA_KERNELS=scalar|avx2 in the environment
// wins, otherwise the widest variant the CPU supports.
const CubeKernels& active_kernels();

// Forces a variant by name; false if unknown or unsupported on this CPU.
bool select_kernels(std::string_view name);

}  // namespace pvarea::kernels
