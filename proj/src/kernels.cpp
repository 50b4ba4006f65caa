#include "pvarea/kernels.hpp"

#include <cstdlib>

namespace pvarea::kernels {

namespace {

bool cpu_has_avx2() {
#ifdef PVAREA_HAVE_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const CubeKernels* lookup(std::string_view name) {
  if (name == "scalar") return &scalar_kernels();
#ifdef PVAREA_HAVE_AVX2
  if (name == "avx2" && cpu_has_avx2()) return &avx2_kernels();
#endif
  return nullptr;
}

const CubeKernels* default_kernels() {
  if (const char* env = std::getenv("PVAREA_KERNELS")) {
    if (const CubeKernels* k = lookup(env)) return k;
  }
#ifdef PVAREA_HAVE_AVX2
  if (cpu_has_avx2()) return &avx2_kernels();
#endif
  return &scalar_kernels();
}

const CubeKernels*& active_slot() {
  static const CubeKernels* active = default_kernels();
  return active;
}

}  // namespace

std::vector<const CubeKernels*> all_kernels() {
  std::vector<const CubeKernels*> ks{&scalar_kernels()};
#ifdef PVAREA_HAVE_AVX2
  if (cpu_has_avx2()) ks.push_back(&avx2_kernels());
#endif
  return ks;
}

const CubeKernels& active_kernels() { return *active_slot(); }

bool select_kernels(std::string_view name) {
  const CubeKernels* k = lookup(name);
  if (k == nullptr) return false;
  active_slot() = k;
  return true;
}

}  // namespace pvarea::kernels
