#pragma once

#include <cstddef>
#include <cstdint>

// Bit-packed kernels behind truth-table arithmetic.
//
// A table over k variables occupies 2^k bits stored little-endian: the value
// at point v lives at bit (v & 63) of word (v >> 6).  Tables with k < 6 use
// the low 2^k bits of a single word and keep the unused high bits at zero;
// every kernel preserves that invariant.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant.  The backend is picked once at startup from CPUID (override with
// the SYLOW_BACKEND environment variable or set_backend()); scalar and SIMD
// paths are equivalence-tested bit for bit.

namespace sylow::kernels {

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);

// True when the running CPU can execute the AVX2 variants.
bool cpu_has_avx2();

Backend active_backend();

// Throws std::invalid_argument when the CPU cannot run the requested backend.
void set_backend(Backend b);

// dst[i] ^= src[i]
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

// dst[i] &= src[i]
void and_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

// In-place subset-sum butterfly over 2^arity bits (GF(2) zeta transform,
// its own inverse).  Converts ANF coefficient tables to value tables and
// back with the same call.
void mobius(std::uint64_t* words, unsigned arity);

bool all_zero(const std::uint64_t* words, std::size_t n);

std::uint64_t popcount(const std::uint64_t* words, std::size_t n);

namespace detail {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n);
void and_words_scalar(std::uint64_t* dst, const std::uint64_t* src,
                      std::size_t n);
void mobius_scalar(std::uint64_t* words, unsigned arity);
bool all_zero_scalar(const std::uint64_t* words, std::size_t n);

#if defined(SYLOW_HAVE_AVX2)
void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t n);
void and_words_avx2(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t n);
void mobius_avx2(std::uint64_t* words, unsigned arity);
bool all_zero_avx2(const std::uint64_t* words, std::size_t n);
#endif

}  // namespace detail

}  // namespace sylow::kernels
