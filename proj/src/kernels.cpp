#include "weightss/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace weightss::kernels {

namespace {

void xor_rows_scalar(Word* dst, const Word* src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= src[i];
}

bool dot_parity_scalar(const Word* a, const Word* b, std::size_t n)
{
    Word acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc ^= a[i] & b[i];
    // popcount(x ^ y) == popcount(x) + popcount(y) (mod 2)
    return (__builtin_popcountll(acc) & 1) != 0;
}

bool any_set_scalar(const Word* a, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i])
            return true;
    return false;
}

std::size_t popcount_scalar(const Word* a, std::size_t n)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
    return c;
}

const Ops kScalar{"scalar", xor_rows_scalar, dot_parity_scalar, any_set_scalar,
                  popcount_scalar};

const Ops* pick_active()
{
    const char* forced = std::getenv("WEIGHTSS_KERNELS");
    if (forced) {
        std::string want(forced);
        for (const Ops* ops : available_ops())
            if (want == ops->name)
                return ops;
        return &kScalar;
    }
    if (const Ops* ops = avx2_ops())
        return ops;
    if (const Ops* ops = neon_ops())
        return ops;
    return &kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

std::vector<const Ops*> available_ops()
{
    std::vector<const Ops*> out{&kScalar};
    if (const Ops* ops = avx2_ops())
        out.push_back(ops);
    if (const Ops* ops = neon_ops())
        out.push_back(ops);
    return out;
}

const Ops& active_ops()
{
    static const Ops* active = pick_active();
    return *active;
}

}  // namespace weightss::kernels
