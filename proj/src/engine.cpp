#include "weightss/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace weightss::ss {

namespace {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Z2Matrix reps_of(const z2::AmbientQuotient& q)
{
    Z2Matrix reps(q.dim(), q.numerator().ambient_dim());
    for (int i = 0; i < q.dim(); ++i)
        reps.set_row(i, q.rep(i));
    return reps;
}

}  // namespace

// ------------------------------------------------------------ accessors

int SpectralSequence::dim(int r, int p, int q) const
{
    const PageCell* c = cell(r, p, q);
    return c ? c->dim : 0;
}

int SpectralSequence::dim_inf(int p, int q) const
{
    const PageCell* c = cell_inf(p, q);
    return c ? c->dim : 0;
}

const PageCell* SpectralSequence::cell(int r, int p, int q) const
{
    if (r < 0)
        return nullptr;
    if (r > r_stop_)
        return cell_inf(p, q);
    auto it = pages_[r].find({p, q});
    return it == pages_[r].end() ? nullptr : &it->second;
}

const PageCell* SpectralSequence::cell_inf(int p, int q) const
{
    auto it = limit_.find({p, q});
    return it == limit_.end() ? nullptr : &it->second;
}

Z2Matrix SpectralSequence::differential(int r, int p, int q) const
{
    int src = dim(r, p, q);
    int dst = dim(r, p + r, q - r + 1);
    if (r >= 0 && r <= r_stop_) {
        auto it = diffs_[r].find({p, q});
        if (it != diffs_[r].end())
            return it->second;
    }
    return Z2Matrix(dst, src);
}

const std::map<Bidegree, PageCell>& SpectralSequence::page(int r) const
{
    if (r < 0 || r > r_stop_)
        return limit_;
    return pages_[r];
}

int SpectralSequence::cohomology_dim(int q) const
{
    auto it = coh_.find(q);
    return it == coh_.end() ? 0 : it->second.h.dim();
}

int SpectralSequence::induced_filtration_dim(int p, int q) const
{
    return induced_filtration_subspace(p, q).dim();
}

Z2Subspace SpectralSequence::induced_filtration_subspace(int p, int q) const
{
    auto it = coh_.find(q);
    if (it == coh_.end())
        return Z2Subspace::zero(0);
    const DegreeData& dd = it->second;
    if (p < dd.p_lo)
        return Z2Subspace::full(dd.h.dim());
    if (p > dd.p_hi)
        return Z2Subspace::zero(dd.h.dim());
    return dd.filt.at(p);
}

const z2::AmbientQuotient& SpectralSequence::cohomology_quotient(int q) const
{
    auto it = coh_.find(q);
    if (it == coh_.end())
        throw EngineError("cohomology_quotient: degree outside complex");
    return it->second.h;
}

// --------------------------------------------------------------- computation

SpectralSequence compute_pages(const FilteredComplex& f)
{
    f.check();
    if (f.complex().dir() != 1)
        throw cx::StructureError("compute_pages: cochain input required (flip chain inputs)");

    SpectralSequence out;
    out.input_ = f;
    const cx::GradedComplex& k = out.input_.complex();
    const int k_lo = k.k_lo(), k_hi = k.k_hi();
    const int plo = f.p_lo() - 1;   // piece(plo) is full
    const int phi = f.p_hi() + 1;   // piece(phi) is zero
    out.p_lo_ = plo;
    out.p_hi_ = phi - 1;
    const int span = phi - plo;
    const int degspan = k.empty() ? 0 : k_hi - k_lo;
    out.r_stop_ = span + degspan + 1;

    // Z_r^{p,q} = F^p K^{p+q}  intersect  d^{-1}(F^{p+r} K^{p+q+1})
    std::map<std::tuple<int, int, int>, Z2Subspace> zmemo;
    auto zr = [&](int r, int p, int kdeg) -> const Z2Subspace& {
        auto key = std::make_tuple(r, p, kdeg);
        auto it = zmemo.find(key);
        if (it != zmemo.end())
            return it->second;
        Z2Subspace z = z2::subspace_intersect(
            out.input_.piece(p, kdeg),
            z2::preimage(k.diff(kdeg), out.input_.piece(p + r, kdeg + 1)));
        return zmemo.emplace(key, std::move(z)).first->second;
    };

    out.pages_.resize(out.r_stop_ + 1);
    out.diffs_.resize(out.r_stop_ + 1);

    for (int r = 0; r <= out.r_stop_; ++r) {
        for (int kdeg = k_lo; kdeg <= k_hi; ++kdeg) {
            if (k.dim(kdeg) == 0)
                continue;
            for (int p = plo; p <= phi - 1; ++p) {
                int q = kdeg - p;
                const Z2Subspace& z = zr(r, p, kdeg);
                Z2Subspace b = z2::subspace_sum(
                    zr(r - 1, p + 1, kdeg),
                    z2::apply_subspace(k.diff(kdeg - 1), zr(r - 1, p - r + 1, kdeg - 1)));
                if (!z.contains(b))
                    throw EngineError("compute_pages: boundary escapes cycles at r=" +
                                      std::to_string(r));
                PageCell pc;
                pc.zpart = z;
                pc.bpart = b;
                pc.quot = z2::AmbientQuotient(pc.zpart, pc.bpart);
                pc.dim = pc.quot.dim();
                pc.reps = reps_of(pc.quot);
                if (pc.dim > 0 || r == 0)
                    out.pages_[r].emplace(Bidegree{p, q}, std::move(pc));
            }
        }
    }

    // limit page, directly from stable cycles and boundaries
    for (int kdeg = k_lo; kdeg <= k_hi; ++kdeg) {
        if (k.dim(kdeg) == 0)
            continue;
        Z2Subspace cocycles = z2::kernel(k.diff(kdeg));
        Z2Subspace cobound = z2::image(k.diff(kdeg - 1));
        for (int p = plo; p <= phi - 1; ++p) {
            int q = kdeg - p;
            PageCell pc;
            pc.zpart = z2::subspace_intersect(out.input_.piece(p, kdeg), cocycles);
            pc.bpart = z2::subspace_sum(
                z2::subspace_intersect(out.input_.piece(p + 1, kdeg), cocycles),
                z2::subspace_intersect(out.input_.piece(p, kdeg), cobound));
            pc.quot = z2::AmbientQuotient(pc.zpart, pc.bpart);
            pc.dim = pc.quot.dim();
            pc.reps = reps_of(pc.quot);
            if (pc.dim != out.dim(out.r_stop_, p, q))
                throw EngineError("compute_pages: limit page disagrees with page r_stop");
            if (pc.dim > 0)
                out.limit_.emplace(Bidegree{p, q}, std::move(pc));
        }
    }

    // differentials d_r and the page-homology consistency check
    for (int r = 0; r <= out.r_stop_; ++r) {
        for (auto& [pq, pc] : out.pages_[r]) {
            if (pc.dim == 0)
                continue;
            auto [p, q] = pq;
            int kdeg = p + q;
            const PageCell* target = out.cell(r, p + r, q - r + 1);
            if (!target || target->dim == 0)
                continue;
            Z2Matrix m(target->dim, pc.dim);
            for (int i = 0; i < pc.dim; ++i) {
                Z2Vector img = k.diff(kdeg).apply(pc.reps.row(i));
                if (!target->zpart.contains(img))
                    throw EngineError("compute_pages: d_r image misses the target cycles");
                Z2Vector coords = target->quot.coords(img);
                for (int rrow = 0; rrow < target->dim; ++rrow)
                    if (coords.get(rrow))
                        m.set(rrow, i, true);
            }
            if (!m.is_zero())
                out.diffs_[r].emplace(pq, std::move(m));
        }
        // d_r o d_r = 0
        for (auto& [pq, m] : out.diffs_[r]) {
            auto [p, q] = pq;
            Z2Matrix next = out.differential(r, p + r, q - r + 1);
            if (!(next * m).is_zero())
                throw EngineError("compute_pages: d_r^2 != 0");
        }
    }
    for (int r = 0; r < out.r_stop_; ++r)
        for (auto& [pq, pc] : out.pages_[r]) {
            auto [p, q] = pq;
            int expected = pc.dim - z2::rank(out.differential(r, p, q)) -
                           z2::rank(out.differential(r, p - r, q + r - 1));
            if (expected != out.dim(r + 1, p, q))
                throw EngineError("compute_pages: E_{r+1} is not the homology of (E_r, d_r)");
        }

    // stable page
    auto dims_of = [&](int r) {
        std::map<Bidegree, int> d;
        for (auto& [pq, pc] : out.pages_[r])
            if (pc.dim > 0)
                d[pq] = pc.dim;
        return d;
    };
    std::map<Bidegree, int> final_dims = dims_of(out.r_stop_);
    int stable = out.r_stop_;
    for (int r = out.r_stop_ - 1; r >= 0; --r) {
        if (dims_of(r) != final_dims)
            break;
        stable = r;
    }
    out.stable_ = stable;

    // cohomology and the induced filtration F^p H^q = im[H(F^p) -> H]
    for (int kdeg = k_lo; kdeg <= k_hi; ++kdeg) {
        SpectralSequence::DegreeData dd;
        Z2Subspace cocycles = z2::kernel(k.diff(kdeg));
        Z2Subspace cobound = z2::image(k.diff(kdeg - 1));
        dd.h = z2::AmbientQuotient(cocycles, cobound);
        dd.p_lo = plo;
        dd.p_hi = phi;
        for (int p = plo; p <= phi; ++p) {
            Z2Subspace zp = z2::subspace_intersect(out.input_.piece(p, kdeg), cocycles);
            std::vector<Z2Vector> gens;
            for (int i = 0; i < zp.dim(); ++i)
                gens.push_back(dd.h.coords(zp.basis_vector(i)));
            dd.filt.emplace(p, Z2Subspace::span_of(gens, dd.h.dim()));
        }
        // convergence: E_inf^{p, q-p} are the graded pieces of the flag
        int total = 0;
        for (int p = plo; p <= phi - 1; ++p) {
            int gr = dd.filt.at(p).dim() - dd.filt.at(p + 1).dim();
            if (gr != out.dim_inf(p, kdeg - p))
                throw EngineError("compute_pages: induced filtration does not grade E_inf");
            total += out.dim_inf(p, kdeg - p);
        }
        if (total != dd.h.dim())
            throw EngineError("compute_pages: E_inf does not converge to cohomology");
        out.coh_.emplace(kdeg, std::move(dd));
    }

    return out;
}

SpectralSequence compute_pages_homological(const FilteredComplex& chain_f)
{
    if (chain_f.complex().dir() != -1)
        throw cx::StructureError("compute_pages_homological: chain input required");
    return compute_pages(chain_f.flipped());
}

int dim_homological(const SpectralSequence& flipped_ss, int r, int p, int q)
{
    return flipped_ss.dim(r, -p, -q);
}

int dim_homological_inf(const SpectralSequence& flipped_ss, int p, int q)
{
    return flipped_ss.dim_inf(-p, -q);
}

// ----------------------------------------------------------------- page maps

std::vector<std::map<Bidegree, Z2Matrix>> page_maps(const SpectralSequence& src,
                                                    const SpectralSequence& dst,
                                                    const cx::ChainMap& f)
{
    cx::check_filtered_map(f, src.input(), dst.input());
    int r_top = std::min(src.r_stop(), dst.r_stop());
    std::vector<std::map<Bidegree, Z2Matrix>> out(r_top + 1);
    for (int r = 0; r <= r_top; ++r)
        for (auto& [pq, pc] : src.page(r)) {
            if (pc.dim == 0)
                continue;
            auto [p, q] = pq;
            const PageCell* target = dst.cell(r, p, q);
            Z2Matrix m(target ? target->dim : 0, pc.dim);
            if (target && target->dim > 0) {
                for (int i = 0; i < pc.dim; ++i) {
                    Z2Vector img = f.at(p + q, src.input().complex(), dst.input().complex())
                                       .apply(pc.reps.row(i));
                    Z2Vector coords = target->quot.coords(img);
                    for (int rrow = 0; rrow < target->dim; ++rrow)
                        if (coords.get(rrow))
                            m.set(rrow, i, true);
                }
            }
            out[r].emplace(pq, std::move(m));
        }
    return out;
}

// --------------------------------------------------------------- weight view

int WeightPages::dim(int r, int p, int q) const
{
    if (r < 2)
        return 0;
    if (r > r_hi)
        return dim_inf(p, q);
    auto& tab = dims[r - 2];
    auto it = tab.find({p, q});
    return it == tab.end() ? 0 : it->second;
}

int WeightPages::dim_inf(int p, int q) const
{
    auto it = limit.find({p, q});
    return it == limit.end() ? 0 : it->second;
}

WeightPages WeightPages::reindex(const SpectralSequence& e)
{
    WeightPages w;
    w.r_hi = e.r_stop() + 1;
    w.stable = std::max(2, e.stable_page() + 1);
    w.dims.resize(w.r_hi - 1);
    for (int r = 2; r <= w.r_hi; ++r)
        for (auto& [pq, pc] : e.page(r - 1)) {
            if (pc.dim == 0)
                continue;
            auto [pc_p, pc_q] = pq;
            // (p, q) with E_{r-1}^{-q, p+2q} sitting at (pc_p, pc_q)
            int q = -pc_p;
            int p = pc_q + 2 * pc_p;
            w.dims[r - 2][{p, q}] = pc.dim;
        }
    for (auto& [pq, pc] : e.limit()) {
        auto [pc_p, pc_q] = pq;
        if (pc.dim > 0)
            w.limit[{pc_q + 2 * pc_p, -pc_p}] = pc.dim;
    }
    return w;
}

FiltrationTable induced_filtration_table(const SpectralSequence& e)
{
    FiltrationTable t;
    const cx::GradedComplex& k = e.input().complex();
    for (int q = k.k_lo(); q <= k.k_hi(); ++q) {
        FiltrationTable::Row row;
        row.q = q;
        row.h_dim = e.cohomology_dim(q);
        for (int p = e.p_cells_lo(); p <= e.p_cells_hi() + 1; ++p)
            row.flag[p] = e.induced_filtration_dim(p, q);
        for (int p = e.p_cells_lo(); p <= e.p_cells_hi(); ++p) {
            int gr = row.flag[p] - e.induced_filtration_dim(p + 1, q);
            if (gr > 0)
                row.graded[p] = gr;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace weightss::ss
