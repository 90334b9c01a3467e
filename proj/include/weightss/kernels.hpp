#ifndef WEIGHTSS_KERNELS_HPP
#define WEIGHTSS_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace weightss::kernels {

using Word = std::uint64_t;

// Word-level primitives all GF(2) arithmetic reduces to. Each variant must
// be bit-exact with the scalar reference; variants are runtime-selected.
struct Ops {
    const char* name;
    void (*xor_rows)(Word* dst, const Word* src, std::size_t n);
    bool (*dot_parity)(const Word* a, const Word* b, std::size_t n);
    bool (*any_set)(const Word* a, std::size_t n);
    std::size_t (*popcount)(const Word* a, std::size_t n);
};

const Ops& scalar_ops();

// null when the build or the CPU lacks the instruction set
const Ops* avx2_ops();
const Ops* neon_ops();

// every variant usable on this machine, scalar first
std::vector<const Ops*> available_ops();

// Selected once per process: best available, unless WEIGHTSS_KERNELS names
// a variant explicitly ("scalar", "avx2", "neon").
const Ops& active_ops();

}  // namespace weightss::kernels

#endif
