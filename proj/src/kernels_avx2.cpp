// Compiled with -mavx2; only reached through runtime dispatch on AVX2 hosts.

#include "csext/kernels.hpp"

#ifdef CSEXT_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace csext::kernels::detail {

namespace {

// Barrett reduction of 16-bit lanes: magic = floor(2^16 / p) leaves the
// quotient at most one short, so a single conditional subtract suffices.
inline __m256i reduce16(__m256i x, __m256i magic, __m256i p16) {
  const __m256i q = _mm256_mulhi_epu16(x, magic);
  const __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, p16));
  return _mm256_min_epu16(r, _mm256_sub_epi16(r, p16));
}

inline __m256i magic_for(std::uint8_t p) {
  return _mm256_set1_epi16(static_cast<short>(static_cast<std::uint16_t>(65536u / p)));
}

void axpy_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c, std::size_t n, std::uint8_t p) {
  if (c == 0) return;
  const __m256i zero = _mm256_setzero_si256();
  const __m256i c16 = _mm256_set1_epi16(c);
  const __m256i p16 = _mm256_set1_epi16(p);
  const __m256i magic = magic_for(p);
  std::size_t k = 0;
  for (; k + 32 <= n; k += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i lo = _mm256_add_epi16(_mm256_mullo_epi16(_mm256_unpacklo_epi8(s, zero), c16), _mm256_unpacklo_epi8(d, zero));
    __m256i hi = _mm256_add_epi16(_mm256_mullo_epi16(_mm256_unpackhi_epi8(s, zero), c16), _mm256_unpackhi_epi8(d, zero));
    lo = reduce16(lo, magic, p16);
    hi = reduce16(hi, magic, p16);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_packus_epi16(lo, hi));
  }
  for (; k < n; ++k) dst[k] = static_cast<std::uint8_t>((dst[k] + static_cast<unsigned>(c) * src[k]) % p);
}

void scale_avx2(std::uint8_t* dst, std::uint8_t c, std::size_t n, std::uint8_t p) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i c16 = _mm256_set1_epi16(c);
  const __m256i p16 = _mm256_set1_epi16(p);
  const __m256i magic = magic_for(p);
  std::size_t k = 0;
  for (; k + 32 <= n; k += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i lo = reduce16(_mm256_mullo_epi16(_mm256_unpacklo_epi8(d, zero), c16), magic, p16);
    __m256i hi = reduce16(_mm256_mullo_epi16(_mm256_unpackhi_epi8(d, zero), c16), magic, p16);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_packus_epi16(lo, hi));
  }
  for (; k < n; ++k) dst[k] = static_cast<std::uint8_t>((static_cast<unsigned>(c) * dst[k]) % p);
}

std::uint8_t dot_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n, std::uint8_t p) {
  // Each 32-byte chunk adds at most 2 * 2 * 250^2 to a 32-bit lane; flush
  // well before overflow.
  constexpr std::size_t kFlushChunks = 4096;
  const __m256i zero = _mm256_setzero_si256();
  std::uint64_t total = 0;
  std::size_t k = 0;
  while (k + 32 <= n) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t chunk = 0; chunk < kFlushChunks && k + 32 <= n; ++chunk, k += 32) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(_mm256_unpacklo_epi8(va, zero), _mm256_unpacklo_epi8(vb, zero)));
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(_mm256_unpackhi_epi8(va, zero), _mm256_unpackhi_epi8(vb, zero)));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint32_t lane : lanes) total += lane;
  }
  for (; k < n; ++k) total += static_cast<unsigned>(a[k]) * b[k];
  return static_cast<std::uint8_t>(total % p);
}

constexpr KernelSet kAvx2{"avx2", axpy_avx2, scale_avx2, dot_avx2};

}  // namespace

const KernelSet& avx2_kernels() { return kAvx2; }

}  // namespace csext::kernels::detail

#endif
