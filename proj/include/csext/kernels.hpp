#pragma once

// Row kernels over GF(p) on byte residues. A scalar reference set is always
// available; vector sets are compiled when the target supports them and
// selected at runtime from CPU features (override with CSEXT_KERNELS).

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace csext::kernels {

struct KernelSet {
  const char* name;
  /// dst[k] = (dst[k] + c * src[k]) mod p; all inputs already reduced.
  void (*axpy)(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p);
  /// dst[k] = (c * dst[k]) mod p.
  void (*scale)(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p);
  /// sum_k a[k] * b[k] mod p.
  std::uint8_t (*dot)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t p);
};

const KernelSet& scalar_kernels();

/// Every set usable on this machine, scalar first.
std::vector<const KernelSet*> available_kernels();

/// Best available set, or the one named by CSEXT_KERNELS ("scalar", "avx2").
const KernelSet& active();

/// Selects a set by name; returns false when unavailable.
bool select(std::string_view name);

#if defined(__x86_64__) || defined(_M_X64)
#define CSEXT_HAVE_AVX2_KERNELS 1
namespace detail {
const KernelSet& avx2_kernels();
}
#endif

}  // namespace csext::kernels
