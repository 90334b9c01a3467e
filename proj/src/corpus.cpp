#include "weightss/corpus.hpp"

namespace weightss::corpus {

using simp::SimplicialMap;
using simp::SimplicialModel;

SimplicialModel point() { return SimplicialModel(1, {{0}}); }

SimplicialModel two_points() { return SimplicialModel(2, {{0}, {1}}); }

SimplicialModel circle()
{
    return SimplicialModel(3, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialModel sphere()
{
    return SimplicialModel(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialModel torus7()
{
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialModel(7, tris);
}

SimplicialModel projective_plane()
{
    return SimplicialModel(6, {{0, 1, 4},
                               {0, 1, 5},
                               {0, 2, 3},
                               {0, 2, 5},
                               {0, 3, 4},
                               {1, 2, 3},
                               {1, 2, 4},
                               {1, 3, 5},
                               {2, 4, 5},
                               {3, 4, 5}});
}

namespace {

/// Band between two 3-vertex rings r and s: squares (r_i, r_{i+1}; s_i,
/// s_{i+1}) cut along the (r_i, s_{i+1}) diagonal.
void band(std::vector<std::vector<int>>& tris, const int r[3], const int s[3])
{
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        tris.push_back({r[i], r[j], s[j]});
        tris.push_back({r[i], s[i], s[j]});
    }
}

}  // namespace

SimplicialModel drum_torus()
{
    // rings: e = 0,1,2  a = 3,4,5  b = 6,7,8, stacked e -> a -> b -> e
    const int e[3] = {0, 1, 2}, a[3] = {3, 4, 5}, b[3] = {6, 7, 8};
    std::vector<std::vector<int>> tris;
    band(tris, e, a);
    band(tris, a, b);
    band(tris, b, e);
    return SimplicialModel(9, tris);
}

SimplicialModel pinched_base()
{
    // w = 0, rings a = 1,2,3 and b = 4,5,6; caps at w on both rings
    const int a[3] = {1, 2, 3}, b[3] = {4, 5, 6};
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < 3; ++i) {
        tris.push_back({0, a[i], a[(i + 1) % 3]});
        tris.push_back({0, b[i], b[(i + 1) % 3]});
    }
    band(tris, a, b);
    return SimplicialModel(7, tris);
}

hr::HyperresolutionInput trivial_input(const SimplicialModel& m, int dim, bool compact)
{
    hr::HyperresolutionInput h;
    h.n = 1;
    h.compact = compact;
    h.dim_x = dim;
    h.base = m;
    h.pieces.emplace(1u, m);
    h.augmentations.emplace(1u, simp::identity_map(m));
    return h;
}

hr::HyperresolutionInput empty_input(int n)
{
    hr::HyperresolutionInput h;
    h.n = n;
    h.compact = true;
    h.dim_x = 0;
    h.base = SimplicialModel(0, {});
    return h;
}

hr::HyperresolutionInput pinched_torus_input()
{
    hr::HyperresolutionInput h;
    h.n = 2;
    h.compact = true;
    h.dim_x = 2;
    h.base = pinched_base();
    h.pieces.emplace(1u, drum_torus());
    h.pieces.emplace(2u, point());
    h.pieces.emplace(3u, circle());

    SimplicialMap incl;  // exceptional ring e into the drum
    incl.vertex_map = {0, 1, 2};
    h.face_maps.emplace(std::make_pair(3u, 1u), incl);
    h.face_maps.emplace(std::make_pair(3u, 2u), constant_map(circle(), 0));

    SimplicialMap collapse;  // drum -> base, e ring to the pinch vertex
    collapse.vertex_map = {0, 0, 0, 1, 2, 3, 4, 5, 6};
    h.augmentations.emplace(1u, collapse);
    h.augmentations.emplace(2u, constant_map(point(), 0));
    return h;
}

hr::HyperresolutionInput two_spheres_input()
{
    // base: two octahedra sharing their poles P = 0, Q = 1
    auto octahedron = [](int p, int q, const int eq[4]) {
        std::vector<std::vector<int>> tris;
        for (int i = 0; i < 4; ++i) {
            int j = (i + 1) % 4;
            tris.push_back({p, eq[i], eq[j]});
            tris.push_back({q, eq[i], eq[j]});
        }
        return tris;
    };
    const int eq_a[4] = {2, 3, 4, 5}, eq_b[4] = {6, 7, 8, 9};
    std::vector<std::vector<int>> base_tris = octahedron(0, 1, eq_a);
    for (auto& t : octahedron(0, 1, eq_b))
        base_tris.push_back(t);

    hr::HyperresolutionInput h;
    h.n = 2;
    h.compact = true;
    h.dim_x = 2;
    h.base = SimplicialModel(10, base_tris);

    // normalization: the two octahedra disjoint, poles 0,1 and 6,7
    const int eq_a2[4] = {2, 3, 4, 5}, eq_b2[4] = {8, 9, 10, 11};
    std::vector<std::vector<int>> norm_tris = octahedron(0, 1, eq_a2);
    for (auto& t : octahedron(6, 7, eq_b2))
        norm_tris.push_back(t);
    SimplicialModel norm(12, norm_tris);
    SimplicialModel four_points(4, {{0}, {1}, {2}, {3}});

    h.pieces.emplace(1u, norm);
    h.pieces.emplace(2u, two_points());
    h.pieces.emplace(3u, four_points);

    SimplicialMap to_norm;  // the four pole preimages
    to_norm.vertex_map = {0, 1, 6, 7};
    h.face_maps.emplace(std::make_pair(3u, 1u), to_norm);
    SimplicialMap to_points;
    to_points.vertex_map = {0, 1, 0, 1};
    h.face_maps.emplace(std::make_pair(3u, 2u), to_points);

    SimplicialMap aug_norm;
    aug_norm.vertex_map = {0, 1, 2, 3, 4, 5, 0, 1, 6, 7, 8, 9};
    h.augmentations.emplace(1u, aug_norm);
    SimplicialMap aug_points;
    aug_points.vertex_map = {0, 1};
    h.augmentations.emplace(2u, aug_points);
    return h;
}

hr::HyperresolutionInput product_input(const hr::HyperresolutionInput& h,
                                       const SimplicialModel& factor)
{
    hr::HyperresolutionInput out;
    out.n = h.n;
    out.compact = h.compact;
    out.dim_x = h.dim_x + factor.dim();
    out.base = simp::ordered_product(h.base, factor);
    SimplicialMap id_f = simp::identity_map(factor);
    for (auto& [mask, model] : h.pieces)
        out.pieces.emplace(mask, simp::ordered_product(model, factor));
    for (auto& [key, f] : h.face_maps) {
        auto [s, t] = key;
        out.face_maps.emplace(
            key, simp::product_map(h.piece(s), factor, h.piece(t), factor, f, id_f));
    }
    for (auto& [mask, f] : h.augmentations)
        out.augmentations.emplace(
            mask, simp::product_map(h.piece(mask), factor, h.base, factor, f, id_f));
    return out;
}

hr::GlueMap point_glue(const hr::HyperresolutionInput& hx)
{
    (void)hx;
    hr::GlueMap g;
    g.base.vertex_map = {0};
    SimplicialMap f;
    f.vertex_map = {0};
    g.pieces.emplace(1u, f);
    return g;
}

hr::GlueMap identity_glue(const hr::HyperresolutionInput& h)
{
    hr::GlueMap g;
    g.base = simp::identity_map(h.base);
    for (auto& [mask, model] : h.pieces)
        g.pieces.emplace(mask, simp::identity_map(model));
    return g;
}

}  // namespace weightss::corpus
