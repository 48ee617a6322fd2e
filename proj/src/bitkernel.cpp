#include "harborth/bitkernel.hpp"

#include <bit>

#if defined(HARBORTH_HAVE_AVX2_KERNELS)
#include <immintrin.h>
#endif

namespace harborth::kern {

namespace scalar {

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool is_zero(const std::uint64_t* a, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i]) return false;
    return true;
}

bool contains_all(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        if (b[i] & ~a[i]) return false;
    return true;
}

std::size_t popcount(const std::uint64_t* a, std::size_t n) noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

}  // namespace scalar

#if defined(HARBORTH_HAVE_AVX2_KERNELS)

bool cpu_has_avx2() noexcept {
    return __builtin_cpu_supports("avx2");
}

namespace avx2 {

__attribute__((target("avx2"))) void or_into(std::uint64_t* dst, const std::uint64_t* src,
                                             std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

__attribute__((target("avx2"))) void and_into(std::uint64_t* dst, const std::uint64_t* src,
                                              std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(d, s));
    }
    for (; i < n; ++i) dst[i] &= src[i];
}

__attribute__((target("avx2"))) bool equal(const std::uint64_t* a, const std::uint64_t* b,
                                           std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(_mm256_xor_si256(va, vb), _mm256_xor_si256(va, vb))) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

__attribute__((target("avx2"))) bool is_zero(const std::uint64_t* a, std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(va, va)) return false;
    }
    for (; i < n; ++i)
        if (a[i]) return false;
    return true;
}

__attribute__((target("avx2"))) bool contains_all(const std::uint64_t* a, const std::uint64_t* b,
                                                  std::size_t n) noexcept {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // b & ~a must be zero; testc returns 1 iff (~va & vb) == 0
        if (!_mm256_testc_si256(va, vb)) return false;
    }
    for (; i < n; ++i)
        if (b[i] & ~a[i]) return false;
    return true;
}

__attribute__((target("avx2"))) std::size_t popcount(const std::uint64_t* a,
                                                     std::size_t n) noexcept {
    // Word-at-a-time popcnt; the hardware instruction already saturates the
    // pipe for the array sizes seen here.
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

}  // namespace avx2

namespace {

struct Dispatch {
    void (*or_into)(std::uint64_t*, const std::uint64_t*, std::size_t) noexcept;
    void (*and_into)(std::uint64_t*, const std::uint64_t*, std::size_t) noexcept;
    bool (*equal)(const std::uint64_t*, const std::uint64_t*, std::size_t) noexcept;
    bool (*is_zero)(const std::uint64_t*, std::size_t) noexcept;
    bool (*contains_all)(const std::uint64_t*, const std::uint64_t*, std::size_t) noexcept;
    std::size_t (*popcount)(const std::uint64_t*, std::size_t) noexcept;
    const char* name;
};

Dispatch select_backend() {
    if (cpu_has_avx2()) {
        return {avx2::or_into, avx2::and_into, avx2::equal,
                avx2::is_zero, avx2::contains_all, avx2::popcount, "avx2"};
    }
    return {scalar::or_into, scalar::and_into, scalar::equal,
            scalar::is_zero, scalar::contains_all, scalar::popcount, "scalar"};
}

const Dispatch g_dispatch = select_backend();

}  // namespace

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept {
    g_dispatch.or_into(dst, src, n);
}
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept {
    g_dispatch.and_into(dst, src, n);
}
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
    return g_dispatch.equal(a, b, n);
}
bool is_zero(const std::uint64_t* a, std::size_t n) noexcept {
    return g_dispatch.is_zero(a, n);
}
bool contains_all(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
    return g_dispatch.contains_all(a, b, n);
}
std::size_t popcount(const std::uint64_t* a, std::size_t n) noexcept {
    return g_dispatch.popcount(a, n);
}
const char* backend() noexcept { return g_dispatch.name; }

#else  // no AVX2 kernels on this platform

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept {
    scalar::or_into(dst, src, n);
}
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) noexcept {
    scalar::and_into(dst, src, n);
}
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
    return scalar::equal(a, b, n);
}
bool is_zero(const std::uint64_t* a, std::size_t n) noexcept { return scalar::is_zero(a, n); }
bool contains_all(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) noexcept {
    return scalar::contains_all(a, b, n);
}
std::size_t popcount(const std::uint64_t* a, std::size_t n) noexcept {
    return scalar::popcount(a, n);
}
const char* backend() noexcept { return "scalar"; }

#endif

}  // namespace harborth::kern
