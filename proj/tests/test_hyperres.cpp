#include <catch2/catch_amalgamated.hpp>

#include "weightss/corpus.hpp"
#include "weightss/hyperres.hpp"
#include "weightss/invariants.hpp"

using namespace weightss;
using simp::SimplicialMap;
using simp::SimplicialModel;

namespace {

std::map<ss::Bidegree, int> weight_dims(const hr::WeightResult& r, int page)
{
    std::map<ss::Bidegree, int> out;
    int idx = page - 2;
    if (idx >= 0 && idx < static_cast<int>(r.pages.dims.size()))
        for (auto& [pq, d] : r.pages.dims[idx])
            if (d > 0)
                out[pq] = d;
    return out;
}

hr::HyperresolutionInput redundant_circle_square()
{
    // blow up a point of the circle into itself: a redundant square
    hr::HyperresolutionInput h;
    h.n = 2;
    h.compact = true;
    h.dim_x = 1;
    h.base = corpus::circle();
    h.pieces.emplace(1u, corpus::circle());
    h.pieces.emplace(2u, corpus::point());
    h.pieces.emplace(3u, corpus::point());

    SimplicialMap at0;
    at0.vertex_map = {0};
    h.face_maps.emplace(std::make_pair(3u, 1u), at0);
    h.face_maps.emplace(std::make_pair(3u, 2u), simp::identity_map(corpus::point()));
    h.augmentations.emplace(1u, simp::identity_map(corpus::circle()));
    h.augmentations.emplace(2u, at0);
    return h;
}

}  // namespace

TEST_CASE("validation of the bundled diagrams", "[hyperres]")
{
    REQUIRE(hr::validate(corpus::trivial_input(corpus::torus7(), 2)).ok());
    REQUIRE(hr::validate(corpus::pinched_torus_input()).ok());
    REQUIRE(hr::validate(corpus::two_spheres_input()).ok());
    REQUIRE(hr::validate(redundant_circle_square()).ok());
}

TEST_CASE("descent failure is reported with its degree", "[hyperres]")
{
    hr::HyperresolutionInput h = corpus::pinched_torus_input();
    // replace the band inclusion with a constant map into the same fibre;
    // the squares still commute but the diagram no longer descends
    h.face_maps[{3u, 1u}] = simp::constant_map(corpus::circle(), 0);
    hr::ValidationReport rep = hr::validate(h);
    REQUIRE_FALSE(rep.ok());
    bool descent_failed = false;
    for (const hr::CheckResult& c : rep.checks)
        if (c.name == "descent" && !c.pass) {
            descent_failed = true;
            REQUIRE(c.detail.find("degree 1") != std::string::npos);
        } else {
            REQUIRE(c.pass);
        }
    REQUIRE(descent_failed);
}

TEST_CASE("assembled double complexes", "[hyperres]")
{
    // trivial diagram: one column, the cochain complex itself
    hr::Assembled one = hr::assemble(corpus::trivial_input(corpus::circle(), 1));
    REQUIRE(one.grid.cols == 1);
    REQUIRE(one.grid.dim(0, 0) == 3);
    REQUIRE(one.grid.dim(0, 1) == 3);

    // pinched square: columns (C(T) + C(pt), C(circle))
    hr::Assembled sq = hr::assemble(corpus::pinched_torus_input());
    REQUIRE(sq.grid.cols == 2);
    REQUIRE(sq.grid.dim(0, 0) == 10);
    REQUIRE(sq.grid.dim(0, 1) == 27);
    REQUIRE(sq.grid.dim(0, 2) == 18);
    REQUIRE(sq.grid.dim(1, 0) == 3);
    REQUIRE(sq.grid.dim(1, 1) == 3);

    // disjoint union pieces sit in block-diagonal columns
    hr::HyperresolutionInput ts_input = corpus::two_spheres_input();
    hr::Assembled ts = hr::assemble(ts_input);
    const SimplicialModel& norm = ts_input.piece(1u);
    z2::Z2Matrix ds = ts.grid.ds(0, 0);
    // octahedron A occupies the first 6 vertex coordinates and its own edges
    int edges_a = 0;
    for (const auto& e : norm.simplices(1))
        if (e[1] < 6)
            ++edges_a;
    for (int r = 0; r < edges_a; ++r)
        for (int c = 6; c < norm.vertex_count(); ++c)
            REQUIRE_FALSE(ds.get(r, c));
}

TEST_CASE("weight pages of compact models", "[hyperres]")
{
    hr::WeightResult pt = hr::weight_compact(corpus::trivial_input(corpus::point(), 0));
    REQUIRE(weight_dims(pt, 2) == std::map<ss::Bidegree, int>{{{0, 0}, 1}});

    hr::WeightResult torus = hr::weight_compact(corpus::trivial_input(corpus::torus7(), 2));
    REQUIRE(weight_dims(torus, 2) ==
            std::map<ss::Bidegree, int>{{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 1}});

    hr::WeightResult pinched = hr::weight_compact(corpus::pinched_torus_input());
    REQUIRE(weight_dims(pinched, 2) ==
            std::map<ss::Bidegree, int>{{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}});
    REQUIRE(pinched.pages.stable == 2);
    // the filtration table puts each class at the pure weight
    for (const auto& row : pinched.table.rows) {
        if (row.h_dim == 0)
            continue;
        REQUIRE(row.graded.size() == 1);
        REQUIRE(row.graded.count(-row.q) == 1);
    }

    hr::WeightResult spheres = hr::weight_compact(corpus::two_spheres_input());
    REQUIRE(weight_dims(spheres, 2) ==
            std::map<ss::Bidegree, int>{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 2}, 2}});
}

TEST_CASE("absent cube vertices act as empty varieties", "[hyperres]")
{
    hr::HyperresolutionInput h;
    h.n = 2;
    h.compact = true;
    h.dim_x = 1;
    h.base = corpus::circle();
    h.pieces.emplace(1u, corpus::circle());
    h.augmentations.emplace(1u, simp::identity_map(corpus::circle()));
    REQUIRE(hr::validate(h).ok());
    hr::WeightResult sparse = hr::weight_compact(h);
    hr::WeightResult trivial =
        hr::weight_compact(corpus::trivial_input(corpus::circle(), 1));
    REQUIRE(weight_dims(sparse, 2) == weight_dims(trivial, 2));
}

TEST_CASE("weight result rejects non-compact inputs", "[hyperres]")
{
    REQUIRE_THROWS_AS(
        hr::weight_compact(corpus::trivial_input(corpus::circle(), 1, false)),
        hr::HyperresError);
}

TEST_CASE("open complements through the cone construction", "[hyperres]")
{
    hr::HyperresolutionInput circle = corpus::trivial_input(corpus::circle(), 1);
    hr::HyperresolutionInput pt = corpus::trivial_input(corpus::point(), 0);

    // the affine line
    hr::WeightResult line = hr::weight_open(circle, pt, corpus::point_glue(circle));
    REQUIRE(line.ss.cohomology_dim(0) == 0);
    REQUIRE(line.ss.cohomology_dim(1) == 1);
    REQUIRE(inv::virtual_betti(line).polynomial == "u");

    // the affine plane
    hr::HyperresolutionInput sphere = corpus::trivial_input(corpus::sphere(), 2);
    hr::WeightResult plane = hr::weight_open(sphere, pt, corpus::point_glue(sphere));
    REQUIRE(plane.ss.cohomology_dim(0) == 0);
    REQUIRE(plane.ss.cohomology_dim(1) == 0);
    REQUIRE(plane.ss.cohomology_dim(2) == 1);
    REQUIRE(inv::virtual_betti(plane).polynomial == "u^2");

    // empty closed part: identical pages to the compact computation
    hr::WeightResult whole =
        hr::weight_open(circle, corpus::empty_input(), hr::GlueMap{});
    hr::WeightResult compact = hr::weight_compact(circle);
    REQUIRE(weight_dims(whole, 2) == weight_dims(compact, 2));

    // Z = X: the complement is empty
    hr::WeightResult empty =
        hr::weight_open(circle, circle, corpus::identity_glue(circle));
    for (int q = 0; q <= 2; ++q)
        REQUIRE(empty.ss.cohomology_dim(q) == 0);
    REQUIRE(inv::virtual_betti(empty).beta.empty());
}

TEST_CASE("glue maps must commute", "[hyperres]")
{
    hr::HyperresolutionInput circle = corpus::trivial_input(corpus::circle(), 1);
    hr::HyperresolutionInput pt = corpus::trivial_input(corpus::point(), 0);
    hr::GlueMap bad = corpus::point_glue(circle);
    bad.base.vertex_map = {1};  // piece glue goes to vertex 0, base glue to 1
    REQUIRE_THROWS_WITH(hr::weight_open(circle, pt, bad),
                        Catch::Matchers::ContainsSubstring("augmentation square"));
}

TEST_CASE("pages do not depend on the chosen diagram", "[hyperres]")
{
    hr::WeightResult trivial =
        hr::weight_compact(corpus::trivial_input(corpus::circle(), 1));
    hr::WeightResult redundant = hr::weight_compact(redundant_circle_square());
    for (int r = 2; r <= std::max(trivial.pages.r_hi, redundant.pages.r_hi) + 1; ++r)
        REQUIRE(weight_dims(trivial, std::min(r, trivial.pages.r_hi)) ==
                weight_dims(redundant, std::min(r, redundant.pages.r_hi)));
}

TEST_CASE("support triangle and convergence on the bundled compacts", "[hyperres]")
{
    std::vector<hr::WeightResult> results;
    results.push_back(hr::weight_compact(corpus::trivial_input(corpus::point(), 0)));
    results.push_back(hr::weight_compact(corpus::trivial_input(corpus::circle(), 1)));
    results.push_back(hr::weight_compact(corpus::trivial_input(corpus::sphere(), 2)));
    results.push_back(hr::weight_compact(corpus::trivial_input(corpus::torus7(), 2)));
    results.push_back(
        hr::weight_compact(corpus::trivial_input(corpus::projective_plane(), 2)));
    results.push_back(hr::weight_compact(corpus::pinched_torus_input()));
    results.push_back(hr::weight_compact(corpus::two_spheres_input()));

    for (const hr::WeightResult& r : results) {
        for (int page = 2; page <= r.pages.r_hi; ++page)
            for (auto& [pq, d] : weight_dims(r, page)) {
                auto [p, q] = pq;
                REQUIRE(p >= 0);
                REQUIRE(q >= 0);
                REQUIRE(p + q <= r.n);
            }
        // anti-diagonal sums of the limit match the base cohomology
        REQUIRE(r.base.has_value());
        for (int k = 0; k <= r.n; ++k) {
            int total = 0;
            for (auto& [pq, d] : r.pages.limit)
                if (pq.first + pq.second == k)
                    total += d;
            REQUIRE(total == r.base->model.cochain_complex().homology_dim(k));
        }
    }
}

TEST_CASE("homological mirror has transposed pages", "[hyperres]")
{
    for (const hr::HyperresolutionInput& h :
         {corpus::pinched_torus_input(), corpus::trivial_input(corpus::torus7(), 2)}) {
        cx::FilteredComplex f = hr::weight_filtered_complex(h);
        ss::SpectralSequence e = ss::compute_pages(f);
        ss::SpectralSequence mirror = ss::compute_pages_homological(cx::dualize(f));
        for (int r = 0; r <= std::max(e.r_stop(), mirror.r_stop()) + 1; ++r)
            for (int p = e.p_cells_lo() - 1; p <= e.p_cells_hi() + 1; ++p)
                for (int k = f.complex().k_lo(); k <= f.complex().k_hi(); ++k)
                    REQUIRE(e.dim(r, p, k - p) == ss::dim_homological(mirror, r, p, k - p));
    }
}

TEST_CASE("standalone base transport matches the computed one", "[hyperres]")
{
    hr::HyperresolutionInput h = corpus::pinched_torus_input();
    hr::WeightResult r = hr::weight_compact(h);
    hr::BaseTransport again = hr::weight_filtration_on_base(h, r);
    REQUIRE(again.classes.size() == r.base->classes.size());
    for (std::size_t i = 0; i < again.classes.size(); ++i) {
        REQUIRE(again.classes[i].name == r.base->classes[i].name);
        REQUIRE(again.classes[i].weight == r.base->classes[i].weight);
        REQUIRE(again.classes[i].h_coords == r.base->classes[i].h_coords);
    }
}

TEST_CASE("weight flags run from the full space at -k down to zero", "[hyperres]")
{
    for (const hr::HyperresolutionInput& h :
         {corpus::pinched_torus_input(), corpus::two_spheres_input()}) {
        hr::WeightResult r = hr::weight_compact(h);
        for (const auto& row : r.table.rows) {
            if (row.h_dim == 0)
                continue;
            REQUIRE(r.ss.induced_filtration_dim(-row.q, row.q) == row.h_dim);
            REQUIRE(r.ss.induced_filtration_dim(1, row.q) == 0);
        }
    }
}

TEST_CASE("base transport assigns pure weights on nonsingular models", "[hyperres]")
{
    hr::WeightResult torus = hr::weight_compact(corpus::trivial_input(corpus::torus7(), 2));
    REQUIRE(torus.base.has_value());
    for (const hr::NamedClass& c : torus.base->classes)
        REQUIRE(c.weight == -c.degree);

    hr::WeightResult pinched = hr::weight_compact(corpus::pinched_torus_input());
    for (const hr::NamedClass& c : pinched.base->classes)
        REQUIRE(c.weight == -c.degree);

    hr::WeightResult pt = hr::weight_compact(corpus::trivial_input(corpus::point(), 0));
    REQUIRE(pt.base->classes.size() == 1);
    REQUIRE(pt.base->classes[0].weight == 0);
}
