#ifndef WEIGHTSS_HYPERRES_HPP
#define WEIGHTSS_HYPERRES_HPP

#include <optional>
#include <string>
#include <tuple>

#include "weightss/engine.hpp"
#include "weightss/simplicial.hpp"

namespace weightss::hr {

using cx::SubsetMask;

struct HyperresError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cubical diagram of simplicial models over a base model: pieces indexed by
/// the nonempty subsets of {1..n} (element i on bit i-1), face maps
/// X_S -> X_T for T inside S with one element fewer, augmentations
/// X_S -> base for singletons. Absent pieces are empty models.
struct HyperresolutionInput {
    int n = 1;
    bool compact = true;
    int dim_x = 0;
    simp::SimplicialModel base;
    std::map<SubsetMask, simp::SimplicialModel> pieces;
    std::map<std::pair<SubsetMask, SubsetMask>, simp::SimplicialMap> face_maps;
    std::map<SubsetMask, simp::SimplicialMap> augmentations;

    const simp::SimplicialModel& piece(SubsetMask s) const;
    const simp::SimplicialMap* face_map(SubsetMask s, SubsetMask t) const;
    const simp::SimplicialMap* augmentation(SubsetMask s) const;
    SubsetMask all_mask() const { return (SubsetMask{1} << n) - 1; }
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    std::string summary() const;
};

/// Structural checks: maps simplicial, functoriality on all 2-faces of the
/// augmented cube, and the descent comparison H^*(base) -> H^*(total).
ValidationReport validate(const HyperresolutionInput& h);

/// The double complex of the diagram: column i collects the pieces with
/// |S| = i + 1, row differentials pull back along the face maps.
struct Assembled {
    cx::DoubleComplexGrid grid;
    std::vector<std::vector<SubsetMask>> columns;       // members per column
    std::map<std::tuple<int, int, SubsetMask>, int> offsets;  // (i, j, S) -> offset

    int offset(int i, int j, SubsetMask s) const;
};

Assembled assemble(const HyperresolutionInput& h);

struct NamedClass {
    std::string name;
    int degree = 0;
    int weight = 0;
    z2::Z2Vector h_coords;
};

/// Weight data carried over to the base model through the descent map.
struct BaseTransport {
    simp::SimplicialModel model;
    int n = 0;
    std::map<int, z2::AmbientQuotient> h_coh;                 // H^k(base)
    std::map<int, z2::AmbientQuotient> h_hom;                 // H_k(base)
    std::map<std::pair<int, int>, z2::Z2Subspace> weight;     // (p, k) -> W^p H^k
    std::vector<NamedClass> classes;

    z2::Z2Subspace weight_subspace(int p, int k) const;
    int weight_of(int k, const z2::Z2Vector& h_coords) const;
};

struct WeightResult {
    int n = 0;
    bool compact = true;
    ss::SpectralSequence ss;        // weight-filtered total complex
    ss::WeightPages pages;          // r >= 2 view
    ss::FiltrationTable table;      // weight flag on the computed cohomology
    std::vector<NamedClass> registry;
    std::optional<BaseTransport> base;

    int weight_of(int k, const z2::Z2Vector& h_coords) const;
};

/// Weight pages, filtration and class registry of a compact input. The pages
/// are cross-checked against the column filtration of the same double
/// complex before returning.
WeightResult weight_compact(const HyperresolutionInput& h);

struct GlueMap {
    simp::SimplicialMap base;
    std::map<SubsetMask, simp::SimplicialMap> pieces;  // Z_S -> X_S
};

/// Weight data of the open complement U = X \ Z via the mapping-cone simple
/// complex of glue-induced restriction; cohomology is compactly supported.
WeightResult weight_open(const HyperresolutionInput& hx, const HyperresolutionInput& hz,
                         const GlueMap& glue);

/// Recompute the base transport for a compact result (also done internally
/// by weight_compact).
BaseTransport weight_filtration_on_base(const HyperresolutionInput& h,
                                        const WeightResult& r);

/// The weight-filtered total complex of the diagram (column truncation
/// filtrations on the assembled double complex).
cx::FilteredComplex weight_filtered_complex(const HyperresolutionInput& h);

}  // namespace weightss::hr

#endif
