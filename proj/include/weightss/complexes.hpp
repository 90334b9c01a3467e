#ifndef WEIGHTSS_COMPLEXES_HPP
#define WEIGHTSS_COMPLEXES_HPP

#include <map>
#include <utility>
#include <vector>

#include "weightss/z2.hpp"

namespace weightss::cx {

using z2::Z2Matrix;
using z2::Z2Subspace;
using z2::Z2Vector;

struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bounded graded complex over GF(2). dir = +1 for cochain, -1 for chain.
/// diff(k) maps degree k to degree k + dir.
class GradedComplex {
public:
    GradedComplex() = default;
    GradedComplex(int dir, int k_lo, std::vector<int> dims);

    int dir() const { return dir_; }
    int k_lo() const { return k_lo_; }
    int k_hi() const { return k_lo_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }

    int dim(int k) const;
    const Z2Matrix& diff(int k) const;          // valid shape for any k
    void set_diff(int k, Z2Matrix d);

    void check() const;                          // shapes and d^2 = 0
    GradedComplex flipped() const;               // degree k -> -k, dir negated

    std::vector<int> homology_dims() const;      // dim H^k for k_lo..k_hi
    int homology_dim(int k) const;

private:
    int dir_ = +1;
    int k_lo_ = 0;
    std::vector<int> dims_;
    std::map<int, Z2Matrix> diffs_;  // every shape-relevant degree, zero-initialized
};

/// Graded complex with a bounded monotone filtration compatible with the
/// differential. dir = +1: decreasing in p (full below the window, zero
/// above); dir = -1: increasing in p (zero below, full above).
class FilteredComplex {
public:
    FilteredComplex() = default;
    explicit FilteredComplex(GradedComplex cx);   // trivial filtration

    const GradedComplex& complex() const { return cx_; }
    GradedComplex& complex() { return cx_; }

    int p_lo() const { return p_lo_; }
    int p_hi() const { return p_hi_; }
    /// Indices where the filtration can jump: [p_lo, p_hi] plus clamps.
    Z2Subspace piece(int p, int k) const;

    void set_window(int p_lo, int p_hi);
    void set_piece(int p, int k, Z2Subspace s);

    void check() const;           // monotone, bounded, d-compatible
    FilteredComplex flipped() const;

private:
    GradedComplex cx_;
    int p_lo_ = 1, p_hi_ = 0;     // empty window = trivial filtration
    std::vector<std::vector<Z2Subspace>> pieces_;  // [p - p_lo][k - k_lo]
    Z2Subspace clamp_low(int k) const;
    Z2Subspace clamp_high(int k) const;
};

/// Degree-preserving chain map between complexes of the same direction.
struct ChainMap {
    std::map<int, Z2Matrix> mats;  // degree -> matrix (dim_target x dim_source)

    Z2Matrix at(int k, const GradedComplex& src, const GradedComplex& dst) const;
};

void check_chain_map(const ChainMap& f, const GradedComplex& src, const GradedComplex& dst);
/// f(F^p) subset of G^p, on top of being a chain map.
void check_filtered_map(const ChainMap& f, const FilteredComplex& src, const FilteredComplex& dst);

/// Bookkeeping for complexes assembled from summands: which slice of each
/// total degree belongs to which block.
struct Block {
    long tag0 = 0, tag1 = 0;  // meaning depends on the construction
    int offset = 0;
    int size = 0;
};
struct BlockTable {
    std::map<int, std::vector<Block>> by_degree;
};

// ---------------------------------------------------------------- filtrations

/// Truncation filtration of a cochain complex: full below -p, kernel of the
/// differential on the diagonal, zero above.
FilteredComplex canonical_filtration(const GradedComplex& k);
/// Homological mirror (chain complexes, increasing filtration).
FilteredComplex canonical_filtration_homological(const GradedComplex& k);

/// Dual complex with the annihilator filtration. Chain input gives a cochain
/// dual with F^p = ann(F_{p-1}); cochain input gives a chain dual with
/// F_p = ann(F^{p+1}).
FilteredComplex dualize(const FilteredComplex& k);

enum class TensorMode { ChainChain, CochainCochain, CochainChain };

/// Filtered tensor product; block table records the (i, j) summand layout.
FilteredComplex tensor_filtered(const FilteredComplex& a, const FilteredComplex& b,
                                TensorMode mode, BlockTable* table = nullptr);

// ------------------------------------------------------------ cubical diagrams

using SubsetMask = std::uint32_t;

/// Cubical diagram of filtered cochain complexes indexed by the subsets of
/// {0, ..., n}; edge maps go from a subset to each superset with one more
/// element, so the simple-complex differential raises total degree.
struct CubicalDiagram {
    int n = 0;
    std::map<SubsetMask, FilteredComplex> objects;
    std::map<std::pair<SubsetMask, SubsetMask>, ChainMap> edges;  // (T, S=T+{x})

    const FilteredComplex& object(SubsetMask s) const;
    const ChainMap& edge(SubsetMask t, SubsetMask s) const;
    void check() const;  // chain maps commute with differentials; 2-faces commute
};

/// Total complex of a cubical diagram graded by internal degree + |S|, with
/// the componentwise filtration.
FilteredComplex simple_complex(const CubicalDiagram& d, BlockTable* table = nullptr);

// ------------------------------------------------------------- double complexes

/// First-quadrant double complex: columns i >= 0, rows j in [j_lo, j_hi].
struct DoubleComplexGrid {
    int cols = 0;
    int j_lo = 0, j_hi = -1;
    std::vector<std::vector<int>> dims;                 // [i][j - j_lo]
    std::map<std::pair<int, int>, Z2Matrix> dprime;     // (i,j) -> C(i+1,j)
    std::map<std::pair<int, int>, Z2Matrix> dsecond;    // (i,j) -> C(i,j+1)

    int dim(int i, int j) const;
    Z2Matrix dp(int i, int j) const;
    Z2Matrix ds(int i, int j) const;
    void check() const;
};

/// Total complex with the column filtration F^p = columns >= p.
FilteredComplex total_naive(const DoubleComplexGrid& dc, BlockTable* table = nullptr);
/// Same total complex, filtered by the columnwise truncation filtrations.
FilteredComplex total_column_canonical(const DoubleComplexGrid& dc, BlockTable* table = nullptr);

/// Dec(F)^p K^k = F^{p+k} K^k  intersect  d^{-1}(F^{p+k+1} K^{k+1}).
FilteredComplex deligne_shift(const FilteredComplex& f);

// ---------------------------------------------------------------------- misc

Z2Matrix kronecker(const Z2Matrix& a, const Z2Matrix& b);
Z2Subspace kron_subspace(const Z2Subspace& u, const Z2Subspace& v);
/// Embed `s` into a larger space at coordinate offset `offset`.
Z2Subspace embed(const Z2Subspace& s, int total_dim, int offset);

/// Cone-style subcomplex of elementwise kernels of a degreewise map.
GradedComplex kernel_complex(const ChainMap& f, const GradedComplex& src,
                             const GradedComplex& dst);

}  // namespace weightss::cx

#endif
