#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "weightss/kernels.hpp"

using namespace weightss::kernels;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Word> out(n);
    for (Word& w : out)
        w = rng();
    return out;
}

}  // namespace

TEST_CASE("kernel variants match the scalar reference", "[kernels]")
{
    std::mt19937_64 rng(12345);
    const Ops& ref = scalar_ops();
    for (const Ops* ops : available_ops()) {
        INFO("variant: " << ops->name);
        for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 1000u}) {
            std::vector<Word> a = random_words(rng, n);
            std::vector<Word> b = random_words(rng, n);

            std::vector<Word> x = a, y = a;
            ref.xor_rows(x.data(), b.data(), n);
            ops->xor_rows(y.data(), b.data(), n);
            REQUIRE(x == y);

            REQUIRE(ref.dot_parity(a.data(), b.data(), n) ==
                    ops->dot_parity(a.data(), b.data(), n));
            REQUIRE(ref.any_set(a.data(), n) == ops->any_set(a.data(), n));
            REQUIRE(ref.popcount(a.data(), n) == ops->popcount(a.data(), n));

            std::vector<Word> zeros(n, 0);
            REQUIRE_FALSE(ops->any_set(zeros.data(), n));
            REQUIRE(ops->popcount(zeros.data(), n) == 0);
            REQUIRE_FALSE(ops->dot_parity(zeros.data(), a.data(), n));
        }
    }
}

TEST_CASE("dot parity agrees with a bit-by-bit count", "[kernels]")
{
    std::mt19937_64 rng(99);
    for (const Ops* ops : available_ops()) {
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 1 + rng() % 6;
            std::vector<Word> a = random_words(rng, n);
            std::vector<Word> b = random_words(rng, n);
            int count = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (int bit = 0; bit < 64; ++bit)
                    if (((a[i] >> bit) & 1) && ((b[i] >> bit) & 1))
                        ++count;
            REQUIRE(ops->dot_parity(a.data(), b.data(), n) == (count % 2 == 1));
        }
    }
}

TEST_CASE("active variant is one of the available ones", "[kernels]")
{
    const Ops& active = active_ops();
    bool found = false;
    for (const Ops* ops : available_ops())
        found = found || (ops == &active);
    REQUIRE(found);
}
