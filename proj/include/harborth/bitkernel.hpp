#pragma once

// Word-array kernels behind the achievable-sum bit vectors. Every operation
// has a scalar reference implementation; on x86-64 an AVX2 variant is
// selected at runtime when the CPU supports it. The two are equivalence
// tested against each other on random inputs.

#include <cstddef>
#include <cstdint>

namespace harborth::kern {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t nbits) {
    return (nbits + kWordBits - 1) / kWordBits;
}

// Scalar reference kernels. Always available, used as the baseline in the
// variant equivalence tests.
namespace scalar {
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept;
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept;
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept;
bool is_zero(const std::uint64_t* a, std::size_t n) noexcept;
// true iff every set bit of b is also set in a
bool contains_all(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept;
std::size_t popcount(const std::uint64_t* a, std::size_t n) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HARBORTH_HAVE_AVX2_KERNELS 1
namespace avx2 {
// Compiled with the avx2 target attribute; call only after cpu_has_avx2().
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept;
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept;
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept;
bool is_zero(const std::uint64_t* a, std::size_t n) noexcept;
bool contains_all(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept;
std::size_t popcount(const std::uint64_t* a, std::size_t n) noexcept;
}  // namespace avx2
bool cpu_has_avx2() noexcept;
#endif

// Runtime-dispatched entry points.
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept;
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept;
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept;
bool is_zero(const std::uint64_t* a, std::size_t n) noexcept;
bool contains_all(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept;
std::size_t popcount(const std::uint64_t* a, std::size_t n) noexcept;

// Name of the active backend: "avx2" or "scalar".
const char* backend() noexcept;

inline bool test_bit(const std::uint64_t* a, std::size_t i) noexcept {
    return (a[i / kWordBits] >> (i % kWordBits)) & 1u;
}
inline void set_bit(std::uint64_t* a, std::size_t i) noexcept {
    a[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}
inline void clear_bit(std::uint64_t* a, std::size_t i) noexcept {
    a[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

}  // namespace harborth::kern
