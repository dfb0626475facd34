#include "sylow/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace sylow::kernels {

namespace detail {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void and_words_scalar(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

namespace {

// Masks selecting, within one word, the bit positions whose level-j index
// bit is zero (the "low" half of each 2^(j+1) block).
constexpr std::uint64_t kLowMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

}  // namespace

void mobius_scalar(std::uint64_t* words, unsigned arity) {
  const std::size_t nwords = arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1;
  const unsigned in_word_levels = arity < 6 ? arity : 6;
  for (unsigned j = 0; j < in_word_levels; ++j) {
    const unsigned shift = 1u << j;
    for (std::size_t w = 0; w < nwords; ++w)
      words[w] ^= (words[w] & kLowMask[j]) << shift;
  }
  for (unsigned j = 6; j < arity; ++j) {
    const std::size_t stride = std::size_t{1} << (j - 6);
    for (std::size_t base = 0; base < nwords; base += 2 * stride)
      for (std::size_t k = 0; k < stride; ++k)
        words[base + stride + k] ^= words[base + k];
  }
}

bool all_zero_scalar(const std::uint64_t* words, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= words[i];
  return acc == 0;
}

}  // namespace detail

namespace {

Backend choose_initial_backend() {
#if defined(SYLOW_HAVE_AVX2)
  if (const char* env = std::getenv("SYLOW_BACKEND")) {
    const std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::Avx2;
  }
  if (cpu_has_avx2()) return Backend::Avx2;
#endif
  return Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{choose_initial_backend()};
  return slot;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "?";
}

bool cpu_has_avx2() {
#if defined(SYLOW_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !cpu_has_avx2())
    throw std::invalid_argument("avx2 backend not supported on this CPU");
  backend_slot().store(b, std::memory_order_relaxed);
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
#if defined(SYLOW_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) {
    detail::xor_words_avx2(dst, src, n);
    return;
  }
#endif
  detail::xor_words_scalar(dst, src, n);
}

void and_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
#if defined(SYLOW_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) {
    detail::and_words_avx2(dst, src, n);
    return;
  }
#endif
  detail::and_words_scalar(dst, src, n);
}

void mobius(std::uint64_t* words, unsigned arity) {
#if defined(SYLOW_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) {
    detail::mobius_avx2(words, arity);
    return;
  }
#endif
  detail::mobius_scalar(words, arity);
}

bool all_zero(const std::uint64_t* words, std::size_t n) {
#if defined(SYLOW_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return detail::all_zero_avx2(words, n);
#endif
  return detail::all_zero_scalar(words, n);
}

std::uint64_t popcount(const std::uint64_t* words, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(words[i]);
  return total;
}

}  // namespace sylow::kernels
