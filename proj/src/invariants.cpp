#include "weightss/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace weightss::inv {

using simp::SimplicialModel;
using z2::Z2Matrix;
using z2::Z2Vector;

namespace {

Z2Vector class_rep(const z2::AmbientQuotient& q, const Z2Vector& coords)
{
    Z2Vector v(q.numerator().ambient_dim());
    for (int i = 0; i < coords.size(); ++i)
        if (coords.get(i))
            v.xor_in(q.rep(i));
    return v;
}

std::string coords_name(const Z2Vector& coords, const std::string& prefix, int degree)
{
    if (coords.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < coords.size(); ++i)
        if (coords.get(i)) {
            if (!first)
                os << "+";
            os << prefix << degree << "_" << i;
            first = false;
        }
    return os.str();
}

std::map<ss::Bidegree, int> page_dims(const ss::SpectralSequence& e, int r)
{
    std::map<ss::Bidegree, int> out;
    for (auto& [pq, pc] : e.page(std::min(r, e.r_stop() + 1)))
        if (pc.dim > 0)
            out[pq] = pc.dim;
    return out;
}

}  // namespace

// ---------------------------------------------------------------- polynomials

std::string poly_string(const std::vector<int>& coeffs)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t q = 0; q < coeffs.size(); ++q) {
        int c = coeffs[q];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int a = std::abs(c);
        if (a != 1 || q == 0)
            os << a;
        if (q >= 1)
            os << "u";
        if (q >= 2)
            os << "^" << q;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::vector<int> poly_multiply(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

std::vector<int> poly_add(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// -------------------------------------------------------------- virtual Betti

VirtualBetti virtual_betti(const hr::WeightResult& r)
{
    VirtualBetti vb;
    if (!r.pages.dims.empty()) {
        std::map<int, int> by_q;
        for (auto& [pq, d] : r.pages.dims[0]) {
            auto [p, q] = pq;
            if (q < 0)
                continue;
            by_q[q] += (p % 2 == 0 ? d : -d);
        }
        int q_max = by_q.empty() ? -1 : by_q.rbegin()->first;
        vb.beta.assign(q_max + 1, 0);
        for (auto& [q, v] : by_q)
            vb.beta[q] = v;
    }
    while (!vb.beta.empty() && vb.beta.back() == 0)
        vb.beta.pop_back();
    vb.polynomial = poly_string(vb.beta);
    return vb;
}

// ----------------------------------------------------------------- additivity

AdditivityReport additivity_check(const hr::WeightResult& x, const hr::WeightResult& z,
                                  const hr::WeightResult& u)
{
    VirtualBetti bx = virtual_betti(x), bz = virtual_betti(z), bu = virtual_betti(u);
    AdditivityReport rep;
    std::size_t qmax = std::max({bx.beta.size(), bz.beta.size(), bu.beta.size()});
    for (std::size_t q = 0; q < qmax; ++q) {
        AdditivityReport::Row row;
        row.q = static_cast<int>(q);
        row.beta_x = q < bx.beta.size() ? bx.beta[q] : 0;
        row.beta_z = q < bz.beta.size() ? bz.beta[q] : 0;
        row.beta_u = q < bu.beta.size() ? bu.beta[q] : 0;
        row.delta = row.beta_x - row.beta_z - row.beta_u;
        if (row.delta != 0)
            rep.pass = false;
        rep.rows.push_back(row);
    }
    return rep;
}

// -------------------------------------------------------------------- Kunneth

KunnethReport kunneth_check(const cx::FilteredComplex& kx, const cx::FilteredComplex& ky,
                            const cx::FilteredComplex& kxy)
{
    KunnethReport rep;
    ss::SpectralSequence ex = ss::compute_pages(kx);
    ss::SpectralSequence ey = ss::compute_pages(ky);
    ss::SpectralSequence et =
        ss::compute_pages(cx::tensor_filtered(kx, ky, cx::TensorMode::CochainCochain));
    ss::SpectralSequence exy = ss::compute_pages(kxy);

    int r_top = std::max({et.r_stop(), ex.r_stop(), ey.r_stop(), exy.r_stop()}) + 1;

    for (int r = 0; r <= r_top; ++r) {
        std::map<ss::Bidegree, int> expected;
        for (auto& [pq_x, dx] : page_dims(ex, r))
            for (auto& [pq_y, dy] : page_dims(ey, r))
                expected[{pq_x.first + pq_y.first, pq_x.second + pq_y.second}] += dx * dy;
        if (expected != page_dims(et, r)) {
            rep.split_ok = false;
            rep.mismatches.push_back("tensor page r=" + std::to_string(r) +
                                     " does not split");
        }
        if (r >= 1 && page_dims(et, r) != page_dims(exy, r)) {
            rep.pages_ok = false;
            rep.mismatches.push_back("tensor vs product pages differ at r=" +
                                     std::to_string(r));
        }
    }
    return rep;
}

// --------------------------------------------------------------------- purity

PurityReport purity_check(const hr::WeightResult& r)
{
    PurityReport rep;
    for (const auto& row : r.table.rows) {
        int k = row.q;
        int worst = 0;
        bool found = false;
        for (auto& [p, d] : row.graded)
            if (p > -k && d > 0) {
                found = true;
                worst = std::max(worst, p);
            }
        if (found) {
            rep.pure = false;
            rep.has_witness = true;
            rep.k = k;
            rep.p = worst;
            break;
        }
    }
    return rep;
}

// -------------------------------------------------------------------- duality

DualityReport duality_map(const hr::WeightResult& r)
{
    if (!r.compact || !r.base)
        throw hr::HyperresError("duality_map: compact result with base transport required");
    const hr::BaseTransport& bt = *r.base;
    const SimplicialModel& m = bt.model;
    const int n = r.n;
    if (m.dim() != n)
        throw hr::HyperresError("duality_map: base model dimension differs from dim_x");
    Z2Vector fc = m.fundamental_class();

    DualityReport rep;
    rep.n = n;
    rep.adjunction_ok = cap_adjunction_holds(m);

    for (int k = 0; k <= n; ++k) {
        const z2::AmbientQuotient& hk = bt.h_coh.at(k);
        const z2::AmbientQuotient& hnk = bt.h_hom.at(n - k);

        // homological weight level W_m H_{n-k} = ann(W^{m+1} H^{n-k}) under
        // the evaluation pairing; membership is checked by evaluating the
        // cohomological classes one level above the target
        std::vector<const hr::NamedClass*> cols;
        for (const hr::NamedClass& c : bt.classes)
            if (c.degree == k)
                cols.push_back(&c);

        Z2Matrix dmat(hnk.dim(), static_cast<int>(cols.size()));
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            const hr::NamedClass& c = *cols[ci];
            Z2Vector rep_c = class_rep(hk, c.h_coords);
            Z2Vector capped = simp::cap(m, k, rep_c, n, fc);

            DualityRecord rec;
            rec.name = c.name;
            rec.degree = k;
            rec.weight = c.weight;
            rec.pure = (c.weight == -k);
            rec.bound = -c.weight - n;

            Z2Vector img_coords = hnk.coords(capped);
            rec.in_kernel = img_coords.is_zero();
            rec.image = coords_name(img_coords, "c", n - k);
            for (int rr = 0; rr < hnk.dim(); ++rr)
                if (img_coords.get(rr))
                    dmat.set(rr, static_cast<int>(ci), true);

            // containment: every cohomology class of weight > -bound - ... one
            // level above the predicted homological level must vanish on it
            rec.contained = true;
            for (const hr::NamedClass& psi : bt.classes) {
                if (psi.degree != n - k)
                    continue;
                if (psi.weight < rec.bound + 1)
                    continue;
                Z2Vector psi_rep = class_rep(bt.h_coh.at(n - k), psi.h_coords);
                if (simp::evaluate(psi_rep, capped)) {
                    rec.contained = false;
                    break;
                }
            }
            if (!rec.contained)
                rep.obstruction_ok = false;
            if (!rec.pure && !rec.in_kernel)
                rep.impure_killed = false;
            rep.records.push_back(std::move(rec));
        }

        bool bijective = hk.dim() == hnk.dim() &&
                         z2::rank(dmat) == static_cast<int>(cols.size());
        if (!bijective) {
            rep.duality_holds = false;
            z2::Z2Subspace ker = z2::kernel(dmat);
            for (int i = 0; i < ker.dim(); ++i) {
                Z2Vector kv = ker.basis_vector(i);
                std::ostringstream os;
                bool first = true;
                for (std::size_t ci = 0; ci < cols.size(); ++ci)
                    if (kv.get(static_cast<int>(ci))) {
                        if (!first)
                            os << "+";
                        os << cols[ci]->name;
                        first = false;
                    }
                if (!first)
                    rep.witnesses.push_back(os.str());
            }
        }
    }
    return rep;
}

// -------------------------------------------------------------- cup filtration

CupFiltrationReport cup_filtration_check(const hr::WeightResult& r)
{
    if (!r.compact || !r.base)
        throw hr::HyperresError(
            "cup_filtration_check: compact result with base transport required");
    const hr::BaseTransport& bt = *r.base;
    const SimplicialModel& m = bt.model;

    CupFiltrationReport rep;
    for (const hr::NamedClass& phi : bt.classes)
        for (const hr::NamedClass& psi : bt.classes) {
            int a = phi.degree, b = psi.degree;
            if (a + b > m.dim())
                continue;
            Z2Vector prod = simp::cup(m, a, class_rep(bt.h_coh.at(a), phi.h_coords), b,
                                      class_rep(bt.h_coh.at(b), psi.h_coords));
            CupFiltrationReport::Row row;
            row.phi = phi.name;
            row.psi = psi.name;
            row.a = a;
            row.b = b;
            row.p = phi.weight;
            row.s = psi.weight;
            Z2Vector coords = bt.h_coh.at(a + b).coords(prod);
            if (coords.is_zero()) {
                row.zero = true;
                row.product_weight = 0;
                row.ok = true;
            } else {
                row.product_weight = bt.weight_of(a + b, coords);
                row.ok =
                    bt.weight_subspace(phi.weight + psi.weight, a + b).contains(coords);
            }
            if (!row.ok)
                rep.pass = false;
            rep.rows.push_back(std::move(row));
        }
    return rep;
}

// ----------------------------------------------------------- model-level laws

bool cap_adjunction_holds(const SimplicialModel& m)
{
    for (int l = 0; l <= m.dim(); ++l)
        for (int mm = 0; mm <= l; ++mm) {
            int d = l - mm;
            // cup table over basis pairs
            std::vector<std::vector<Z2Vector>> cupt(
                m.simplex_count(d), std::vector<Z2Vector>(m.simplex_count(mm)));
            for (int psi = 0; psi < m.simplex_count(d); ++psi)
                for (int phi = 0; phi < m.simplex_count(mm); ++phi) {
                    Z2Vector e_psi(m.simplex_count(d));
                    e_psi.set(psi, true);
                    Z2Vector e_phi(m.simplex_count(mm));
                    e_phi.set(phi, true);
                    cupt[psi][phi] = simp::cup(m, d, e_psi, mm, e_phi);
                }
            for (int phi = 0; phi < m.simplex_count(mm); ++phi) {
                Z2Vector e_phi(m.simplex_count(mm));
                e_phi.set(phi, true);
                for (int c = 0; c < m.simplex_count(l); ++c) {
                    Z2Vector e_c(m.simplex_count(l));
                    e_c.set(c, true);
                    Z2Vector capped = simp::cap(m, mm, e_phi, l, e_c);
                    for (int psi = 0; psi < m.simplex_count(d); ++psi)
                        if (capped.get(psi) != cupt[psi][phi].get(c))
                            return false;
                }
            }
        }
    return true;
}

bool cup_leibniz_holds(const SimplicialModel& m, std::mt19937_64& rng, int trials)
{
    cx::GradedComplex c = m.cochain_complex();
    for (int t = 0; t < trials; ++t)
        for (int a = 0; a <= m.dim(); ++a)
            for (int b = 0; a + b <= m.dim(); ++b) {
                Z2Vector phi(m.simplex_count(a));
                Z2Vector psi(m.simplex_count(b));
                for (int i = 0; i < phi.size(); ++i)
                    phi.set(i, (rng() & 1) != 0);
                for (int i = 0; i < psi.size(); ++i)
                    psi.set(i, (rng() & 1) != 0);
                Z2Vector lhs = c.diff(a + b).apply(simp::cup(m, a, phi, b, psi));
                Z2Vector rhs = simp::cup(m, a + 1, c.diff(a).apply(phi), b, psi);
                rhs.xor_in(simp::cup(m, a, phi, b + 1, c.diff(b).apply(psi)));
                if (!(lhs == rhs))
                    return false;
            }
    return true;
}

}  // namespace weightss::inv
