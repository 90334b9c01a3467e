#ifndef WEIGHTSS_ENGINE_HPP
#define WEIGHTSS_ENGINE_HPP

#include <map>
#include <utility>
#include <vector>

#include "weightss/complexes.hpp"

namespace weightss::ss {

using cx::FilteredComplex;
using z2::Z2Matrix;
using z2::Z2Subspace;
using z2::Z2Vector;

using Bidegree = std::pair<int, int>;  // (p, q)

/// One page entry E_r^{p,q} = Z / B with canonical ambient representatives.
struct PageCell {
    int dim = 0;
    Z2Subspace zpart;           // cycles-to-order-r inside F^p K^{p+q}
    Z2Subspace bpart;           // boundaries-to-order-r, contained in zpart
    z2::AmbientQuotient quot;   // zpart / bpart
    Z2Matrix reps;              // dim x ambient, canonical representatives
};

/// Full spectral sequence of a bounded filtered cochain complex, cochain
/// convention: d_r goes (p, q) -> (p + r, q - r + 1).
class SpectralSequence {
public:
    const FilteredComplex& input() const { return input_; }
    int r_stop() const { return r_stop_; }
    int stable_page() const { return stable_; }
    int p_cells_lo() const { return p_lo_; }
    int p_cells_hi() const { return p_hi_; }

    int dim(int r, int p, int q) const;
    int dim_inf(int p, int q) const;
    const PageCell* cell(int r, int p, int q) const;
    const PageCell* cell_inf(int p, int q) const;
    Z2Matrix differential(int r, int p, int q) const;

    const std::map<Bidegree, PageCell>& page(int r) const;
    const std::map<Bidegree, PageCell>& limit() const { return limit_; }

    /// dim H^q of the underlying complex.
    int cohomology_dim(int q) const;
    /// dim F^p H^q, the filtration induced on cohomology.
    int induced_filtration_dim(int p, int q) const;
    /// F^p H^q as a subspace in H^q coordinates.
    Z2Subspace induced_filtration_subspace(int p, int q) const;
    /// Quotient presenting H^q (cocycles modulo coboundaries).
    const z2::AmbientQuotient& cohomology_quotient(int q) const;

    friend SpectralSequence compute_pages(const FilteredComplex& f);

private:
    FilteredComplex input_;
    int p_lo_ = 0, p_hi_ = -1;            // cell window in p
    int r_stop_ = 0, stable_ = 0;
    std::vector<std::map<Bidegree, PageCell>> pages_;
    std::vector<std::map<Bidegree, Z2Matrix>> diffs_;
    std::map<Bidegree, PageCell> limit_;
    struct DegreeData {
        z2::AmbientQuotient h;
        std::map<int, Z2Subspace> filt;  // p -> F^p H^q in H-coordinates
        int p_lo = 0, p_hi = -1;
    };
    std::map<int, DegreeData> coh_;
};

/// All pages, differentials, the limit and the induced filtration, with
/// internal consistency checks (d_r^2 = 0, page homology, convergence).
SpectralSequence compute_pages(const FilteredComplex& f);

/// Homological mirror: spectral sequence of a chain complex with increasing
/// filtration, computed through the grading flip.
SpectralSequence compute_pages_homological(const FilteredComplex& chain_f);
/// E^r_{p,q} of the original chain complex, read off the flipped sequence.
int dim_homological(const SpectralSequence& flipped_ss, int r, int p, int q);
int dim_homological_inf(const SpectralSequence& flipped_ss, int p, int q);

/// Page maps induced by a filtered chain map; index r, then (p, q).
std::vector<std::map<Bidegree, Z2Matrix>> page_maps(const SpectralSequence& src,
                                                    const SpectralSequence& dst,
                                                    const cx::ChainMap& f);

/// Weight-indexed view: page r >= 2 at (p, q) reads E_{r-1}^{-q, p+2q}.
struct WeightPages {
    int stable = 2;                                  // first r with page == limit
    int r_hi = 2;                                    // last materialized page
    std::vector<std::map<Bidegree, int>> dims;       // index r - 2
    std::map<Bidegree, int> limit;

    int dim(int r, int p, int q) const;
    int dim_inf(int p, int q) const;

    static WeightPages reindex(const SpectralSequence& e);
};

/// Flag dims of the induced filtration: for each degree q the list of
/// (p, dim F^p H^q) over the jump window, plus graded dims.
struct FiltrationTable {
    struct Row {
        int q = 0;
        int h_dim = 0;
        std::map<int, int> flag;    // p -> dim F^p H^q
        std::map<int, int> graded;  // p -> dim F^p/F^{p+1}
    };
    std::vector<Row> rows;
};

FiltrationTable induced_filtration_table(const SpectralSequence& e);

}  // namespace weightss::ss

#endif
