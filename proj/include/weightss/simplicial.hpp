#ifndef WEIGHTSS_SIMPLICIAL_HPP
#define WEIGHTSS_SIMPLICIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "weightss/complexes.hpp"

namespace weightss::simp {

struct SimplicialError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Finite simplicial complex on vertices 0..V-1 (the integer order is the
/// vertex order used by the product formulas). Faces are generated from the
/// maximal simplices.
class SimplicialModel {
public:
    SimplicialModel() = default;
    SimplicialModel(int vertex_count, const std::vector<std::vector<int>>& maximal);

    int vertex_count() const { return nverts_; }
    int dim() const { return static_cast<int>(simps_.size()) - 1; }
    int simplex_count(int d) const;
    const std::vector<std::vector<int>>& simplices(int d) const;
    const std::vector<int>& simplex(int d, int idx) const;
    int index_of(const std::vector<int>& sorted_vertices) const;  // -1 if absent
    bool has_simplex(const std::vector<int>& sorted_vertices) const;

    cx::GradedComplex chain_complex() const;    // direction -1
    cx::GradedComplex cochain_complex() const;  // direction +1, the transpose
    z2::Z2Matrix boundary(int d) const;         // C_d -> C_{d-1}

    /// Mod-2 sum of the top-dimensional simplices.
    z2::Z2Vector top_chain() const;
    bool top_chain_is_cycle() const;
    /// top_chain when it is a cycle; throws otherwise.
    z2::Z2Vector fundamental_class() const;

private:
    int nverts_ = 0;
    std::vector<std::vector<std::vector<int>>> simps_;   // [d] sorted lists, lex order
    std::vector<std::map<std::vector<int>, int>> index_;
};

struct SimplicialMap {
    std::vector<int> vertex_map;  // size = source vertex count

    int operator()(int v) const { return vertex_map.at(v); }
};

SimplicialMap identity_map(const SimplicialModel& m);
SimplicialMap constant_map(const SimplicialModel& src, int target_vertex);

/// Throws unless every simplex image spans a simplex of the target.
void check_simplicial(const SimplicialMap& f, const SimplicialModel& src,
                      const SimplicialModel& dst);

/// C_*(src) -> C_*(dst): simplex to its image when nondegenerate, else 0.
cx::ChainMap induced_chain_map(const SimplicialMap& f, const SimplicialModel& src,
                               const SimplicialModel& dst);
/// C^*(dst) -> C^*(src), the transpose of the chain map.
cx::ChainMap induced_cochain_map(const SimplicialMap& f, const SimplicialModel& src,
                                 const SimplicialModel& dst);

/// Ordered cup product: (phi cup psi)(v_0..v_{a+b}) =
/// phi(v_0..v_a) psi(v_a..v_{a+b}). Degree overflow gives the zero cochain.
z2::Z2Vector cup(const SimplicialModel& m, int deg_phi, const z2::Z2Vector& phi,
                 int deg_psi, const z2::Z2Vector& psi);

/// Cap product normalized so that psi(phi cap c) = (psi cup phi)(c) holds on
/// the nose: phi cap (v_0..v_l) = phi(v_{l-m}..v_l) (v_0..v_{l-m}).
z2::Z2Vector cap(const SimplicialModel& m, int deg_phi, const z2::Z2Vector& phi,
                 int deg_c, const z2::Z2Vector& c);

/// Cochain evaluation against a chain of the same degree.
bool evaluate(const z2::Z2Vector& cochain, const z2::Z2Vector& chain);

// --------------------------------------------------------- ordered products

/// Vertex (va, vb) of the product carries index va * b.vertex_count() + vb.
int product_vertex(const SimplicialModel& a, const SimplicialModel& b, int va, int vb);

/// Staircase triangulation of |A| x |B| induced by the vertex orders.
SimplicialModel ordered_product(const SimplicialModel& a, const SimplicialModel& b);

/// (fa x fb) as a vertex map between ordered products.
SimplicialMap product_map(const SimplicialModel& a, const SimplicialModel& b,
                          const SimplicialModel& a2, const SimplicialModel& b2,
                          const SimplicialMap& fa, const SimplicialMap& fb);

}  // namespace weightss::simp

#endif
