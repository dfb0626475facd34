// AVX2 variants of the bit-packed kernels.  This translation unit is the
// only one compiled with -mavx2; callers reach it through the runtime
// dispatch in kernels.cpp after a CPUID check.

#include "sylow/kernels.hpp"

#if defined(SYLOW_HAVE_AVX2)

#include <immintrin.h>

namespace sylow::kernels::detail {

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void and_words_avx2(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_and_si256(a, b));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

namespace {

constexpr std::uint64_t kLowMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

}  // namespace

void mobius_avx2(std::uint64_t* words, unsigned arity) {
  const std::size_t nwords = arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1;
  if (nwords < 4) {
    mobius_scalar(words, arity);
    return;
  }
  // Sub-word levels run identically in all four lanes.
  for (unsigned j = 0; j < 6; ++j) {
    const __m256i mask = _mm256_set1_epi64x(
        static_cast<long long>(kLowMask[j]));
    const int shift = 1 << j;
    for (std::size_t w = 0; w < nwords; w += 4) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + w));
      __m256i lo = _mm256_and_si256(v, mask);
      v = _mm256_xor_si256(v, _mm256_slli_epi64(lo, shift));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(words + w), v);
    }
  }
  // Cross-word butterflies; vector step once the stride spans a register.
  for (unsigned j = 6; j < arity; ++j) {
    const std::size_t stride = std::size_t{1} << (j - 6);
    if (stride < 4) {
      for (std::size_t base = 0; base < nwords; base += 2 * stride)
        for (std::size_t k = 0; k < stride; ++k)
          words[base + stride + k] ^= words[base + k];
      continue;
    }
    for (std::size_t base = 0; base < nwords; base += 2 * stride) {
      for (std::size_t k = 0; k < stride; k += 4) {
        __m256i lo = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(words + base + k));
        __m256i hi = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(words + base + stride + k));
        _mm256_storeu_si256(
            reinterpret_cast<__m256i*>(words + base + stride + k),
            _mm256_xor_si256(hi, lo));
      }
    }
  }
}

bool all_zero_avx2(const std::uint64_t* words, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_or_si256(
        acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= words[i];
  return tail == 0;
}

}  // namespace sylow::kernels::detail

#endif  // SYLOW_HAVE_AVX2
