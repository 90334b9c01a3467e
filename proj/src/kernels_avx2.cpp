// AVX2 variants of the word kernels. This file is compiled with -mavx2 and
// only on x86-64; callers go through avx2_ops() which checks the CPU first.

#include "weightss/kernels.hpp"

#if defined(WEIGHTSS_HAVE_AVX2)

#include <immintrin.h>

namespace weightss::kernels {

namespace {

void xor_rows_avx2(Word* dst, const Word* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

bool dot_parity_avx2(const Word* a, const Word* b, std::size_t n)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
    }
    Word lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    Word tail = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < n; ++i)
        tail ^= a[i] & b[i];
    return (__builtin_popcountll(tail) & 1) != 0;
}

bool any_set_avx2(const Word* a, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(x, x))
            return true;
    }
    for (; i < n; ++i)
        if (a[i])
            return true;
    return false;
}

std::size_t popcount_avx2(const Word* a, std::size_t n)
{
    // popcount has no AVX2 instruction; the win is memory throughput only,
    // so reuse the scalar loop per word.
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
    return c;
}

const Ops kAvx2{"avx2", xor_rows_avx2, dot_parity_avx2, any_set_avx2, popcount_avx2};

}  // namespace

const Ops* avx2_ops()
{
    static const Ops* ops = __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
    return ops;
}

}  // namespace weightss::kernels

#else

namespace weightss::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace weightss::kernels

#endif
