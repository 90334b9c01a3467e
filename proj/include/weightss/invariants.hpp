#ifndef WEIGHTSS_INVARIANTS_HPP
#define WEIGHTSS_INVARIANTS_HPP

#include "weightss/hyperres.hpp"

namespace weightss::inv {

struct VirtualBetti {
    std::vector<int> beta;   // beta[q]
    std::string polynomial;  // rendered in the variable u
};

/// Alternating row sums of the weight page at r = 2.
VirtualBetti virtual_betti(const hr::WeightResult& r);

std::string poly_string(const std::vector<int>& coeffs);
std::vector<int> poly_multiply(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> poly_add(const std::vector<int>& a, const std::vector<int>& b);

struct AdditivityReport {
    bool pass = true;
    struct Row {
        int q = 0;
        int beta_x = 0, beta_z = 0, beta_u = 0, delta = 0;
    };
    std::vector<Row> rows;
};

/// beta_q(X) = beta_q(Z) + beta_q(U) for a closed pair and its complement.
AdditivityReport additivity_check(const hr::WeightResult& x, const hr::WeightResult& z,
                                  const hr::WeightResult& u);

struct KunnethReport {
    bool split_ok = true;   // tensor pages split as products of factor pages
    bool pages_ok = true;   // tensor pages match the product variety, r >= 1
    bool betti_ok = true;   // virtual Poincare polynomial multiplies
    std::vector<std::string> mismatches;

    bool pass() const { return split_ok && pages_ok && betti_ok; }
};

/// Compare tensor pages of the factor filtrations against the product
/// filtration, with the splitting formula as a side check.
KunnethReport kunneth_check(const cx::FilteredComplex& kx, const cx::FilteredComplex& ky,
                            const cx::FilteredComplex& kxy);

struct PurityReport {
    bool pure = true;
    bool has_witness = false;
    int k = 0, p = 0;  // first impure degree and the offending weight index
};

PurityReport purity_check(const hr::WeightResult& r);

struct DualityRecord {
    std::string name;
    int degree = 0;
    int weight = 0;
    bool pure = false;
    bool in_kernel = false;
    std::string image;     // class of phi cap [X] in the homology basis
    int bound = 0;         // predicted homological weight -p-n
    bool contained = true; // image inside the predicted level
};

struct DualityReport {
    int n = 0;
    std::vector<DualityRecord> records;
    bool obstruction_ok = true;  // containment for every class
    bool impure_killed = true;   // impure classes die
    bool duality_holds = true;   // cap with [X] bijective in every degree
    std::vector<std::string> witnesses;
    bool adjunction_ok = true;   // pairing identity on all basis triples
};

/// Cap with the fundamental class of the base model, weight bookkeeping
/// included. Requires a compact result with base transport.
DualityReport duality_map(const hr::WeightResult& r);

struct CupFiltrationReport {
    bool pass = true;
    struct Row {
        std::string phi, psi;
        int a = 0, p = 0, b = 0, s = 0;
        bool zero = false;
        int product_weight = 0;
        bool ok = true;
    };
    std::vector<Row> rows;
};

/// Products of weight-adapted classes land at least as deep as the sum of
/// the weights.
CupFiltrationReport cup_filtration_check(const hr::WeightResult& r);

/// Pairing identity psi(phi cap c) = (psi cup phi)(c) over all basis
/// cochain/cochain/chain triples of the model.
bool cap_adjunction_holds(const simp::SimplicialModel& m);

/// Leibniz rule d(phi cup psi) = d(phi) cup psi + phi cup d(psi) on random
/// cochains of the model.
bool cup_leibniz_holds(const simp::SimplicialModel& m, std::mt19937_64& rng, int trials);

}  // namespace weightss::inv

#endif
