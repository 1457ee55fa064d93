#include <atomic>
#include <cstdlib>

#include "csext/kernels.hpp"

namespace csext::kernels {

namespace {

void axpy_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p) {
  if (c == 0) return;
  for (std::size_t k = 0; k < n; ++k)
    dst[k] = static_cast<std::uint8_t>((dst[k] + static_cast<unsigned>(c) * src[k]) % p);
}

void scale_scalar(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = static_cast<std::uint8_t>((static_cast<unsigned>(c) * dst[k]) % p);
}

std::uint8_t dot_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t p) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += static_cast<unsigned>(a[k]) * b[k];
  return static_cast<std::uint8_t>(acc % p);
}

constexpr KernelSet kScalar{"scalar", axpy_scalar, scale_scalar, dot_scalar};

bool cpu_has_avx2() {
#if defined(CSEXT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet* pick_default() {
  const std::vector<const KernelSet*> sets = available_kernels();
  if (const char* env = std::getenv("CSEXT_KERNELS")) {
    for (const KernelSet* s : sets)
      if (std::string_view(s->name) == env) return s;
  }
  return sets.back();
}

std::atomic<const KernelSet*>& current() {
  static std::atomic<const KernelSet*> cur{pick_default()};
  return cur;
}

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> out{&kScalar};
#ifdef CSEXT_HAVE_AVX2_KERNELS
  if (cpu_has_avx2()) out.push_back(&detail::avx2_kernels());
#endif
  return out;
}

const KernelSet& active() { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  for (const KernelSet* s : available_kernels()) {
    if (name == s->name) {
      current().store(s, std::memory_order_relaxed);
      return true;
    }
  }
  return false;
}

}  // namespace csext::kernels
