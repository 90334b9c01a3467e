#ifndef WEIGHTSS_TESTS_HELPERS_HPP
#define WEIGHTSS_TESTS_HELPERS_HPP

#include "oracle.hpp"
#include "weightss/complexes.hpp"

namespace helpers {

/// Engine-side object built from the oracle's plain-array description.
inline weightss::cx::FilteredComplex from_oracle(const oracle::FilteredComplexData& f)
{
    using namespace weightss;
    cx::GradedComplex k(+1, f.k_lo, f.dims);
    for (auto& [deg, mat] : f.d) {
        z2::Z2Matrix m(k.dim(deg + 1), k.dim(deg));
        for (std::size_t r = 0; r < mat.size(); ++r)
            for (int c = 0; c < k.dim(deg); ++c)
                if (mat[r] & (oracle::Vec{1} << c))
                    m.set(static_cast<int>(r), c, true);
        k.set_diff(deg, std::move(m));
    }
    cx::FilteredComplex out(std::move(k));
    out.set_window(1, f.span);
    for (int p = 1; p <= f.span; ++p)
        for (int deg = f.k_lo; deg < f.k_lo + static_cast<int>(f.dims.size()); ++deg) {
            std::vector<z2::Z2Vector> gens;
            auto pit = f.gens.find(p);
            if (pit != f.gens.end()) {
                auto kit = pit->second.find(deg);
                if (kit != pit->second.end())
                    for (oracle::Vec g : kit->second) {
                        z2::Z2Vector v(out.complex().dim(deg));
                        for (int c = 0; c < v.size(); ++c)
                            if (g & (oracle::Vec{1} << c))
                                v.set(c, true);
                        gens.push_back(std::move(v));
                    }
            }
            out.set_piece(p, deg,
                          z2::Z2Subspace::span_of(gens, out.complex().dim(deg)));
        }
    return out;
}

}  // namespace helpers

#endif
