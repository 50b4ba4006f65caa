#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "pvarea/interval.hpp"
#include "pvarea/kernels.hpp"

using namespace pvarea;
using kernels::CubeKernels;

namespace {

std::vector<std::uint32_t> random_records(std::mt19937& rng, std::size_t count,
                                          std::size_t dim) {
  std::uniform_int_distribution<std::uint32_t> lo_dist(0, 5);
  std::uniform_int_distribution<std::uint32_t> span_dist(1, 6);
  std::vector<std::uint32_t> buf(count * 2 * dim);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < dim; ++i) {
      std::uint32_t lo = lo_dist(rng);
      std::uint32_t span = span_dist(rng);
      buf[c * 2 * dim + i] = lo;
      buf[c * 2 * dim + dim + i] = span == 6 ? kInf : lo + span;
    }
  }
  return buf;
}

struct KernelGuard {
  KernelGuard() : saved(kernels::active_kernels().name) {}
  ~KernelGuard() { kernels::select_kernels(saved); }
  std::string saved;
};

}  // namespace

TEST_CASE("scalar intersection clamps bounds and reports emptiness") {
  const CubeKernels& k = kernels::scalar_kernels();
  std::uint32_t a[4] = {1, 0, 4, kInf};      // [1,4[ x [0,inf[
  std::uint32_t b[4] = {2, 3, kInf, 5};      // [2,inf[ x [3,5[
  std::uint32_t out[4];
  CHECK(k.intersect(a, b, out, 2));
  CHECK(out[0] == 2);
  CHECK(out[1] == 3);
  CHECK(out[2] == 4);
  CHECK(out[3] == 5);

  std::uint32_t c[4] = {4, 0, 6, kInf};      // [4,6[ x full: disjoint from a
  CHECK_FALSE(k.intersect(a, c, out, 2));
}

TEST_CASE("scalar containment compares both planes") {
  const CubeKernels& k = kernels::scalar_kernels();
  std::uint32_t outer[4] = {0, 0, kInf, kInf};
  std::uint32_t inner[4] = {1, 3, 2, 4};
  CHECK(k.contains(outer, inner, 2));
  CHECK_FALSE(k.contains(inner, outer, 2));
  CHECK(k.contains(inner, inner, 2));
}

TEST_CASE("zero-dimensional records intersect and contain trivially") {
  for (const CubeKernels* k : kernels::all_kernels()) {
    CAPTURE(k->name);
    CHECK(k->intersect(nullptr, nullptr, nullptr, 0));
    CHECK(k->contains(nullptr, nullptr, 0));
  }
}

TEST_CASE("batch intersect keeps only non-empty meets in order") {
  const CubeKernels& k = kernels::scalar_kernels();
  // [0,2[, [1,5[, [6,9[ against [1,6[ in one dimension.
  std::vector<std::uint32_t> cubes = {0, 2, 1, 5, 6, 9};
  std::uint32_t b[2] = {1, 6};
  std::vector<std::uint32_t> out(cubes.size());
  REQUIRE(k.intersect_filter(cubes.data(), 3, b, out.data(), 1) == 2);
  CHECK(out[0] == 1);
  CHECK(out[1] == 2);
  CHECK(out[2] == 1);
  CHECK(out[3] == 5);
}

TEST_CASE("find_container skips the requested index") {
  const CubeKernels& k = kernels::scalar_kernels();
  // Records: [0,inf[, [1,3[, [1,3[ in one dimension.
  std::vector<std::uint32_t> cubes = {0, kInf, 1, 3, 1, 3};
  std::uint32_t probe[2] = {1, 3};
  CHECK(k.find_container(cubes.data(), 3, probe, 1, 3) == 0);
  CHECK(k.find_container(cubes.data(), 1, probe, 1, 0) == 1);
  // [5,9[ only fits inside [0,inf[; skipping that record leaves no container.
  std::uint32_t outside[2] = {5, 9};
  CHECK(k.find_container(cubes.data(), 3, outside, 1, 3) == 0);
  CHECK(k.find_container(cubes.data(), 3, outside, 1, 0) == 3);
}

TEST_CASE("kernel selection honours names and rejects unknown ones") {
  KernelGuard guard;
  CHECK(kernels::select_kernels("scalar"));
  CHECK(std::string(kernels::active_kernels().name) == "scalar");
  CHECK_FALSE(kernels::select_kernels("no-such-kernel"));
  CHECK(std::string(kernels::active_kernels().name) == "scalar");
  for (const CubeKernels* k : kernels::all_kernels())
    CHECK(kernels::select_kernels(k->name));
}

TEST_CASE("every compiled kernel variant agrees with the scalar reference") {
  const CubeKernels& ref = kernels::scalar_kernels();
  std::mt19937 rng(20240811);
  for (std::size_t dim : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 13u, 16u}) {
    const std::size_t count = 64;
    std::vector<std::uint32_t> cubes = random_records(rng, count, dim);
    std::vector<std::uint32_t> probes = random_records(rng, 8, dim);

    for (const CubeKernels* k : kernels::all_kernels()) {
      CAPTURE(k->name);
      CAPTURE(dim);
      for (std::size_t p = 0; p < 8; ++p) {
        const std::uint32_t* b = probes.data() + p * 2 * dim;

        std::vector<std::uint32_t> out_ref(count * 2 * dim, 0xABABABAB);
        std::vector<std::uint32_t> out_got(count * 2 * dim, 0xABABABAB);
        std::size_t n_ref =
            ref.intersect_filter(cubes.data(), count, b, out_ref.data(), dim);
        std::size_t n_got =
            k->intersect_filter(cubes.data(), count, b, out_got.data(), dim);
        REQUIRE(n_ref == n_got);
        out_ref.resize(n_ref * 2 * dim);
        out_got.resize(n_got * 2 * dim);
        CHECK(out_ref == out_got);

        for (std::size_t c = 0; c < count; ++c) {
          const std::uint32_t* a = cubes.data() + c * 2 * dim;
          std::vector<std::uint32_t> ia(2 * dim), ig(2 * dim);
          bool ra = ref.intersect(a, b, ia.data(), dim);
          bool rg = k->intersect(a, b, ig.data(), dim);
          CHECK(ra == rg);
          CHECK(ia == ig);
          CHECK(ref.contains(a, b, dim) == k->contains(a, b, dim));
          CHECK(ref.contains(b, a, dim) == k->contains(b, a, dim));
        }

        CHECK(ref.find_container(cubes.data(), count, b, dim, count) ==
              k->find_container(cubes.data(), count, b, dim, count));
        CHECK(ref.find_container(cubes.data(), count, b, dim, 3) ==
              k->find_container(cubes.data(), count, b, dim, 3));
      }
    }
  }
}
