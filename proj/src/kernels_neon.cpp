// NEON variants, aarch64 only. Mirrors the AVX2 file at 128-bit width.

#include "weightss/kernels.hpp"

#if defined(WEIGHTSS_HAVE_NEON)

#include <arm_neon.h>

namespace weightss::kernels {

namespace {

void xor_rows_neon(Word* dst, const Word* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

bool dot_parity_neon(const Word* a, const Word* b, std::size_t n)
{
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t x = vld1q_u64(a + i);
        uint64x2_t y = vld1q_u64(b + i);
        acc = veorq_u64(acc, vandq_u64(x, y));
    }
    Word tail = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < n; ++i)
        tail ^= a[i] & b[i];
    return (__builtin_popcountll(tail) & 1) != 0;
}

bool any_set_neon(const Word* a, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t x = vld1q_u64(a + i);
        if ((vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) != 0)
            return true;
    }
    for (; i < n; ++i)
        if (a[i])
            return true;
    return false;
}

std::size_t popcount_neon(const Word* a, std::size_t n)
{
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t bytes = vreinterpretq_u8_u64(vld1q_u64(a + i));
        c += vaddvq_u8(vcntq_u8(bytes));
    }
    for (; i < n; ++i)
        c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
    return c;
}

const Ops kNeon{"neon", xor_rows_neon, dot_parity_neon, any_set_neon, popcount_neon};

}  // namespace

const Ops* neon_ops() { return &kNeon; }

}  // namespace weightss::kernels

#else

namespace weightss::kernels {
const Ops* neon_ops() { return nullptr; }
}  // namespace weightss::kernels

#endif
