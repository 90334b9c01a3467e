#ifndef WEIGHTSS_CORPUS_HPP
#define WEIGHTSS_CORPUS_HPP

#include "weightss/hyperres.hpp"

namespace weightss::corpus {

// Small models used across the bundled inputs and the test suites.
simp::SimplicialModel point();
simp::SimplicialModel two_points();
simp::SimplicialModel circle();            // 3 vertices
simp::SimplicialModel sphere();            // boundary of the 3-simplex
simp::SimplicialModel torus7();            // 7-vertex triangulation
simp::SimplicialModel projective_plane();  // 6-vertex triangulation
simp::SimplicialModel drum_torus();        // 9 vertices, three stacked bands
simp::SimplicialModel pinched_base();      // sphere with the poles identified

/// One-piece diagram with the identity augmentation.
hr::HyperresolutionInput trivial_input(const simp::SimplicialModel& m, int dim,
                                       bool compact = true);
/// Empty diagram (all pieces empty).
hr::HyperresolutionInput empty_input(int n = 1);

/// Square diagram collapsing one band circle of the drum torus.
hr::HyperresolutionInput pinched_torus_input();

/// Square diagram for two spheres glued at two points (octahedra sharing
/// their poles); its degree-one class has impure weight.
hr::HyperresolutionInput two_spheres_input();

/// Cross every piece, map and the base with a compact factor.
hr::HyperresolutionInput product_input(const hr::HyperresolutionInput& h,
                                       const simp::SimplicialModel& factor);

/// Glue sending a trivial point diagram onto vertex 0 of the target base.
hr::GlueMap point_glue(const hr::HyperresolutionInput& hx);
/// Identity glue of a diagram into itself.
hr::GlueMap identity_glue(const hr::HyperresolutionInput& h);

}  // namespace weightss::corpus

#endif
