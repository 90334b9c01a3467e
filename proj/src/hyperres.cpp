#include "weightss/hyperres.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace weightss::hr {

using simp::SimplicialMap;
using simp::SimplicialModel;
using z2::Z2Matrix;
using z2::Z2Subspace;
using z2::Z2Vector;

namespace {

const SimplicialModel kEmptyModel;

std::string mask_name(SubsetMask m)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i = 0; i < 31; ++i)
        if (m & (SubsetMask{1} << i)) {
            if (!first)
                os << ',';
            os << (i + 1);
            first = false;
        }
    os << '}';
    return os.str();
}

std::vector<SubsetMask> masks_of_size(int n, int size)
{
    std::vector<SubsetMask> out;
    for (SubsetMask s = 1; s < (SubsetMask{1} << n); ++s)
        if (__builtin_popcount(s) == size)
            out.push_back(s);
    return out;
}

}  // namespace

// ------------------------------------------------------ HyperresolutionInput

const SimplicialModel& HyperresolutionInput::piece(SubsetMask s) const
{
    auto it = pieces.find(s);
    return it == pieces.end() ? kEmptyModel : it->second;
}

const SimplicialMap* HyperresolutionInput::face_map(SubsetMask s, SubsetMask t) const
{
    auto it = face_maps.find({s, t});
    return it == face_maps.end() ? nullptr : &it->second;
}

const SimplicialMap* HyperresolutionInput::augmentation(SubsetMask s) const
{
    auto it = augmentations.find(s);
    return it == augmentations.end() ? nullptr : &it->second;
}

// ----------------------------------------------------------------- validate

bool ValidationReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (const CheckResult& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty())
            os << "  (" << c.detail << ")";
        os << '\n';
    }
    return os.str();
}

namespace {

/// Chain map of a face arrow between pieces, with empty-piece conventions.
cx::ChainMap piece_chain_map(const HyperresolutionInput& h, SubsetMask s, SubsetMask t)
{
    const SimplicialModel& src = h.piece(s);
    const SimplicialModel& dst = h.piece(t);
    if (src.vertex_count() == 0)
        return {};
    const SimplicialMap* f = h.face_map(s, t);
    if (!f)
        throw simp::SimplicialError("missing face map " + mask_name(s) + " -> " +
                                    mask_name(t));
    return simp::induced_chain_map(*f, src, dst);
}

void check_two_faces(const HyperresolutionInput& h, ValidationReport& rep)
{
    CheckResult res{"functoriality", true, ""};
    // treat the base as the empty-set vertex of the augmented cube
    auto arrow = [&](SubsetMask s, SubsetMask t) -> cx::ChainMap {
        if (t == 0) {
            const SimplicialModel& src = h.piece(s);
            if (src.vertex_count() == 0)
                return {};
            const SimplicialMap* a = h.augmentation(s);
            if (!a)
                throw simp::SimplicialError("missing augmentation " + mask_name(s));
            return simp::induced_chain_map(*a, src, h.base);
        }
        return piece_chain_map(h, s, t);
    };
    auto model_of = [&](SubsetMask s) -> const SimplicialModel& {
        return s == 0 ? h.base : h.piece(s);
    };

    try {
        for (SubsetMask s = 1; s < (SubsetMask{1} << h.n); ++s) {
            if (__builtin_popcount(s) < 2)
                continue;
            if (h.piece(s).vertex_count() == 0)
                continue;
            std::vector<int> members;
            for (int i = 0; i < h.n; ++i)
                if (s & (SubsetMask{1} << i))
                    members.push_back(i);
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    SubsetMask t1 = s & ~(SubsetMask{1} << members[a]);
                    SubsetMask t2 = s & ~(SubsetMask{1} << members[b]);
                    SubsetMask r = t1 & t2;  // r = 0 is the base vertex
                    {
                        cx::ChainMap f1 = arrow(s, t1), g1 = arrow(t1, r);
                        cx::ChainMap f2 = arrow(s, t2), g2 = arrow(t2, r);
                        const auto& cs = model_of(s).chain_complex();
                        const auto& c1 = model_of(t1).chain_complex();
                        const auto& c2 = model_of(t2).chain_complex();
                        const auto& cr = model_of(r).chain_complex();
                        for (int d = 0; d <= model_of(s).dim(); ++d) {
                            Z2Matrix m1 = g1.at(d, c1, cr) * f1.at(d, cs, c1);
                            Z2Matrix m2 = g2.at(d, c2, cr) * f2.at(d, cs, c2);
                            if (!(m1 == m2)) {
                                res.pass = false;
                                res.detail = "face " + mask_name(s) + " -> " +
                                             mask_name(r) + " at degree " +
                                             std::to_string(d);
                                rep.checks.push_back(res);
                                return;
                            }
                        }
                    }
                }
        }
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = e.what();
    }
    rep.checks.push_back(res);
}

cx::ChainMap augmentation_into_total(const HyperresolutionInput& h, const Assembled& as,
                                     const cx::BlockTable& ttable,
                                     const cx::GradedComplex& total)
{
    cx::ChainMap aug;
    const cx::GradedComplex base_cx = h.base.cochain_complex();
    for (int k = 0; k <= std::max(h.base.dim(), total.k_hi()); ++k) {
        Z2Matrix m(total.dim(k), base_cx.dim(k));
        auto blocks = ttable.by_degree.find(k);
        if (blocks != ttable.by_degree.end()) {
            for (const cx::Block& blk : blocks->second) {
                if (blk.tag0 != 0)
                    continue;  // augmentation lands in column 0
                int j = static_cast<int>(blk.tag1);
                for (SubsetMask s : as.columns[0]) {
                    const SimplicialModel& piece = h.piece(s);
                    const SimplicialMap* a = h.augmentation(s);
                    if (!a || piece.vertex_count() == 0)
                        continue;
                    cx::ChainMap co = simp::induced_cochain_map(*a, piece, h.base);
                    Z2Matrix block = co.at(j, base_cx, piece.cochain_complex());
                    int off = blk.offset + as.offset(0, j, s);
                    for (int r = 0; r < block.rows(); ++r)
                        for (int c = 0; c < block.cols(); ++c)
                            if (block.get(r, c))
                                m.set(off + r, c, true);
                }
            }
        }
        aug.mats.emplace(k, std::move(m));
    }
    return aug;
}

}  // namespace

ValidationReport validate(const HyperresolutionInput& h)
{
    ValidationReport rep;

    {
        CheckResult res{"structure", true, ""};
        if (h.n < 1) {
            res.pass = false;
            res.detail = "cube size must be at least 1";
        }
        for (auto& [s, model] : h.pieces) {
            if (s == 0 || s >= (SubsetMask{1} << h.n)) {
                res.pass = false;
                res.detail = "piece index " + mask_name(s) + " outside the cube";
            }
            // a nonempty piece needs nonempty targets downward
            if (model.vertex_count() > 0 && __builtin_popcount(s) >= 2)
                for (int i = 0; i < h.n; ++i) {
                    SubsetMask t = s & ~(SubsetMask{1} << i);
                    if (t != s && t != 0 && h.piece(t).vertex_count() == 0) {
                        res.pass = false;
                        res.detail = "piece " + mask_name(s) +
                                     " maps to the empty piece " + mask_name(t);
                    }
                }
        }
        rep.checks.push_back(res);
    }

    {
        CheckResult res{"maps-simplicial", true, ""};
        try {
            for (auto& [key, f] : h.face_maps) {
                auto [s, t] = key;
                if (h.piece(s).vertex_count() == 0)
                    continue;
                simp::check_simplicial(f, h.piece(s), h.piece(t));
            }
            for (auto& [s, f] : h.augmentations) {
                if (h.piece(s).vertex_count() == 0)
                    continue;
                simp::check_simplicial(f, h.piece(s), h.base);
            }
            for (SubsetMask s : masks_of_size(h.n, 1))
                if (h.piece(s).vertex_count() > 0 && !h.augmentation(s))
                    throw simp::SimplicialError("missing augmentation " + mask_name(s));
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = e.what();
        }
        rep.checks.push_back(res);
    }

    check_two_faces(h, rep);

    {
        CheckResult res{"descent", true, ""};
        try {
            Assembled as = assemble(h);
            cx::BlockTable ttable;
            cx::FilteredComplex total = cx::total_naive(as.grid, &ttable);
            cx::GradedComplex base_cx = h.base.cochain_complex();
            cx::ChainMap aug = augmentation_into_total(h, as, ttable, total.complex());
            cx::check_chain_map(aug, base_cx, total.complex());
            // quasi-isomorphism degree by degree
            int k_hi = std::max(h.base.dim(), total.complex().k_hi());
            for (int k = 0; k <= k_hi; ++k) {
                z2::AmbientQuotient hb(z2::kernel(base_cx.diff(k)),
                                       z2::image(base_cx.diff(k - 1)));
                z2::AmbientQuotient ht(z2::kernel(total.complex().diff(k)),
                                       z2::image(total.complex().diff(k - 1)));
                Z2Matrix hmap(ht.dim(), hb.dim());
                for (int i = 0; i < hb.dim(); ++i) {
                    Z2Vector img = aug.at(k, base_cx, total.complex()).apply(hb.rep(i));
                    Z2Vector coords = ht.coords(img);
                    for (int r = 0; r < ht.dim(); ++r)
                        if (coords.get(r))
                            hmap.set(r, i, true);
                }
                bool iso = hb.dim() == ht.dim() && z2::rank(hmap) == hb.dim();
                if (!iso) {
                    res.pass = false;
                    res.detail = "not a quasi-isomorphism in degree " + std::to_string(k);
                    break;
                }
            }
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = e.what();
        }
        rep.checks.push_back(res);
    }

    return rep;
}

// ----------------------------------------------------------------- assemble

int Assembled::offset(int i, int j, SubsetMask s) const
{
    auto it = offsets.find({i, j, s});
    if (it == offsets.end())
        throw HyperresError("Assembled::offset: unknown block");
    return it->second;
}

Assembled assemble(const HyperresolutionInput& h)
{
    Assembled out;
    out.columns.resize(h.n);
    int j_hi = 0;
    for (int i = 0; i < h.n; ++i) {
        out.columns[i] = masks_of_size(h.n, i + 1);
        for (SubsetMask s : out.columns[i])
            j_hi = std::max(j_hi, h.piece(s).dim());
    }

    out.grid.cols = h.n;
    out.grid.j_lo = 0;
    out.grid.j_hi = j_hi;
    out.grid.dims.assign(h.n, std::vector<int>(j_hi + 1, 0));
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j <= j_hi; ++j) {
            int off = 0;
            for (SubsetMask s : out.columns[i]) {
                out.offsets[{i, j, s}] = off;
                off += h.piece(s).simplex_count(j);
            }
            out.grid.dims[i][j] = off;
        }

    // row differentials: cochain differentials of the pieces
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < j_hi; ++j) {
            Z2Matrix m(out.grid.dim(i, j + 1), out.grid.dim(i, j));
            for (SubsetMask s : out.columns[i]) {
                Z2Matrix blk = h.piece(s).boundary(j + 1).transposed();
                int ro = out.offset(i, j + 1, s), co = out.offset(i, j, s);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c)
                        if (blk.get(r, c))
                            m.set(ro + r, co + c, true);
            }
            out.grid.dsecond[{i, j}] = std::move(m);
        }

    // column differentials: pullback along every face relation T subset S
    for (int i = 0; i + 1 < h.n; ++i)
        for (int j = 0; j <= j_hi; ++j) {
            Z2Matrix m(out.grid.dim(i + 1, j), out.grid.dim(i, j));
            for (SubsetMask s : out.columns[i + 1]) {
                const SimplicialModel& sp = h.piece(s);
                if (sp.vertex_count() == 0)
                    continue;
                for (SubsetMask t : out.columns[i]) {
                    if ((t & s) != t)
                        continue;
                    const SimplicialModel& tp = h.piece(t);
                    const SimplicialMap* f = h.face_map(s, t);
                    if (!f)
                        throw HyperresError("assemble: missing face map " + mask_name(s) +
                                            " -> " + mask_name(t));
                    cx::ChainMap co = simp::induced_cochain_map(*f, sp, tp);
                    Z2Matrix blk = co.at(j, tp.cochain_complex(), sp.cochain_complex());
                    int ro = out.offset(i + 1, j, s), co_off = out.offset(i, j, t);
                    for (int r = 0; r < blk.rows(); ++r)
                        for (int c = 0; c < blk.cols(); ++c)
                            if (blk.get(r, c))
                                m.set(ro + r, co_off + c, true);
                }
            }
            out.grid.dprime[{i, j}] = std::move(m);
        }

    out.grid.check();
    return out;
}

// ------------------------------------------------------------ weight results

namespace {

/// Basis adapted to a decreasing flag: vectors tagged with the largest index
/// whose level still contains them, deepest levels first.
std::vector<std::pair<Z2Vector, int>> adapted_flag_basis(
    int dim_h, int p_lo, int p_hi, const std::function<Z2Subspace(int)>& flag)
{
    std::vector<std::pair<Z2Vector, int>> out;
    Z2Subspace span = Z2Subspace::zero(dim_h);
    for (int p = p_hi; p >= p_lo; --p) {
        Z2Subspace level = flag(p);
        for (int i = 0; i < level.dim(); ++i) {
            Z2Vector v = level.basis_vector(i);
            if (!span.contains(v)) {
                out.emplace_back(v, p);
                span = z2::subspace_sum(span, Z2Subspace::span_of({v}, dim_h));
            }
        }
    }
    return out;
}

std::vector<NamedClass> registry_of(const ss::SpectralSequence& e)
{
    std::vector<NamedClass> out;
    const cx::GradedComplex& k = e.input().complex();
    for (int deg = k.k_lo(); deg <= k.k_hi(); ++deg) {
        int h = e.cohomology_dim(deg);
        if (h == 0)
            continue;
        auto basis = adapted_flag_basis(
            h, e.p_cells_lo(), e.p_cells_hi(),
            [&](int p) { return e.induced_filtration_subspace(p, deg); });
        for (std::size_t i = 0; i < basis.size(); ++i) {
            NamedClass c;
            c.name = "h" + std::to_string(deg) + "_" + std::to_string(i);
            c.degree = deg;
            c.h_coords = basis[i].first;
            c.weight = basis[i].second;
            out.push_back(std::move(c));
        }
    }
    return out;
}

void check_against_naive(const ss::WeightPages& pages, const ss::SpectralSequence& naive)
{
    for (int r = 2; r <= naive.r_stop() + 1; ++r) {
        for (auto& [pq, pc] : naive.page(std::min(r, naive.r_stop()))) {
            auto [p, q] = pq;
            int lhs = pages.dim(r, p, q);
            int rhs = r > naive.r_stop() ? naive.dim_inf(p, q) : pc.dim;
            if (lhs != rhs)
                throw HyperresError(
                    "weight pages disagree with the column-filtration route at r=" +
                    std::to_string(r));
        }
        // also catch entries present on the weight side only
        if (r - 2 < static_cast<int>(pages.dims.size()))
            for (auto& [pq, d] : pages.dims[r - 2]) {
                auto [p, q] = pq;
                if (d != naive.dim(std::min(r, naive.r_stop() + 1), p, q))
                    throw HyperresError(
                        "weight pages disagree with the column-filtration route at r=" +
                        std::to_string(r));
            }
    }
}

BaseTransport make_base_transport(const HyperresolutionInput& h,
                                  const ss::SpectralSequence& e)
{
    Assembled as = assemble(h);
    cx::BlockTable ttable;
    cx::FilteredComplex total = cx::total_naive(as.grid, &ttable);
    cx::GradedComplex base_cx = h.base.cochain_complex();
    cx::ChainMap aug = augmentation_into_total(h, as, ttable, total.complex());

    BaseTransport bt;
    bt.model = h.base;
    bt.n = h.dim_x;
    cx::GradedComplex base_ch = h.base.chain_complex();
    for (int k = 0; k <= h.base.dim(); ++k) {
        bt.h_coh.emplace(k, z2::AmbientQuotient(z2::kernel(base_cx.diff(k)),
                                                z2::image(base_cx.diff(k - 1))));
        bt.h_hom.emplace(k, z2::AmbientQuotient(z2::kernel(base_ch.diff(k)),
                                                z2::image(base_ch.diff(k + 1))));
    }

    for (int k = 0; k <= h.base.dim(); ++k) {
        const z2::AmbientQuotient& hb = bt.h_coh.at(k);
        const z2::AmbientQuotient& ht = e.cohomology_quotient(k);
        Z2Matrix hmap(ht.dim(), hb.dim());
        for (int i = 0; i < hb.dim(); ++i) {
            Z2Vector img = aug.at(k, base_cx, e.input().complex()).apply(hb.rep(i));
            Z2Vector coords = ht.coords(img);
            for (int r = 0; r < ht.dim(); ++r)
                if (coords.get(r))
                    hmap.set(r, i, true);
        }
        if (hb.dim() != ht.dim() || z2::rank(hmap) != hb.dim())
            throw HyperresError("base transport: descent map is not an isomorphism");
        for (int p = e.p_cells_lo(); p <= e.p_cells_hi() + 1; ++p)
            bt.weight[{p, k}] =
                z2::preimage(hmap, e.induced_filtration_subspace(p, k));
        auto basis = adapted_flag_basis(
            hb.dim(), e.p_cells_lo(), e.p_cells_hi(),
            [&](int p) { return bt.weight.at({p, k}); });
        for (std::size_t i = 0; i < basis.size(); ++i) {
            NamedClass c;
            c.name = "h" + std::to_string(k) + "_" + std::to_string(i);
            c.degree = k;
            c.h_coords = basis[i].first;
            c.weight = basis[i].second;
            bt.classes.push_back(std::move(c));
        }
    }
    return bt;
}

}  // namespace

Z2Subspace BaseTransport::weight_subspace(int p, int k) const
{
    int dim_h = h_coh.count(k) ? h_coh.at(k).dim() : 0;
    auto it = weight.find({p, k});
    if (it != weight.end())
        return it->second;
    // outside the stored window the flag is constant
    int pmin = weight.empty() ? 0 : weight.begin()->first.first;
    return p < pmin ? Z2Subspace::full(dim_h) : Z2Subspace::zero(dim_h);
}

int BaseTransport::weight_of(int k, const Z2Vector& coords) const
{
    int best = 0;
    bool found = false;
    for (auto& [key, sub] : weight) {
        auto [p, deg] = key;
        if (deg != k)
            continue;
        if (sub.contains(coords)) {
            best = found ? std::max(best, p) : p;
            found = true;
        }
    }
    if (!found)
        throw HyperresError("weight_of: class not in the widest filtration level");
    return best;
}

int WeightResult::weight_of(int k, const Z2Vector& coords) const
{
    int best = ss.p_cells_lo();
    for (int p = ss.p_cells_lo(); p <= ss.p_cells_hi() + 1; ++p) {
        if (ss.induced_filtration_subspace(p, k).contains(coords))
            best = p;
        else
            break;
    }
    return best;
}

WeightResult weight_compact(const HyperresolutionInput& h)
{
    if (!h.compact)
        throw HyperresError("weight_compact: input is flagged non-compact (use weight_open)");
    ValidationReport rep = validate(h);
    if (!rep.ok())
        throw HyperresError("weight_compact: validation failed\n" + rep.summary());

    Assembled as = assemble(h);
    cx::FilteredComplex f_col = cx::total_column_canonical(as.grid);
    cx::FilteredComplex f_naive = cx::total_naive(as.grid);

    WeightResult out;
    out.n = h.dim_x;
    out.compact = true;
    out.ss = ss::compute_pages(f_col);
    out.pages = ss::WeightPages::reindex(out.ss);
    check_against_naive(out.pages, ss::compute_pages(f_naive));
    out.table = ss::induced_filtration_table(out.ss);
    out.registry = registry_of(out.ss);
    out.base = make_base_transport(h, out.ss);
    return out;
}

WeightResult weight_open(const HyperresolutionInput& hx, const HyperresolutionInput& hz,
                         const GlueMap& glue)
{
    for (const auto* h : {&hx, &hz}) {
        ValidationReport rep = validate(*h);
        if (!rep.ok())
            throw HyperresError("weight_open: validation failed\n" + rep.summary());
    }
    if (hx.n != hz.n)
        throw HyperresError("weight_open: cube sizes differ");

    // glue must commute with every face map and augmentation
    for (SubsetMask s = 1; s < (SubsetMask{1} << hx.n); ++s) {
        const SimplicialModel& zs = hz.piece(s);
        if (zs.vertex_count() == 0)
            continue;
        auto it = glue.pieces.find(s);
        if (it == glue.pieces.end())
            throw HyperresError("weight_open: missing glue map for piece " + mask_name(s));
        simp::check_simplicial(it->second, zs, hx.piece(s));
        for (int i = 0; i < hx.n; ++i) {
            SubsetMask t = s & ~(SubsetMask{1} << i);
            if (t == s)
                continue;
            const SimplicialMap& gs = it->second;
            if (t == 0) {
                const SimplicialMap* az = hz.augmentation(s);
                const SimplicialMap* ax = hx.augmentation(s);
                for (int v = 0; v < zs.vertex_count(); ++v)
                    if (glue.base((*az)(v)) != (*ax)(gs(v)))
                        throw HyperresError("weight_open: glue does not commute with the "
                                            "augmentation square at " +
                                            mask_name(s));
            } else if (hz.piece(t).vertex_count() > 0) {
                const SimplicialMap* fz = hz.face_map(s, t);
                const SimplicialMap* fx = hx.face_map(s, t);
                const SimplicialMap& gt = glue.pieces.at(t);
                for (int v = 0; v < zs.vertex_count(); ++v)
                    if (gt((*fz)(v)) != (*fx)(gs(v)))
                        throw HyperresError("weight_open: glue does not commute with the "
                                            "face square " +
                                            mask_name(s) + " -> " + mask_name(t));
            }
        }
    }

    Assembled ax = assemble(hx);
    Assembled az = assemble(hz);
    cx::FilteredComplex fx = cx::total_column_canonical(ax.grid);
    cx::FilteredComplex fz = cx::total_column_canonical(az.grid);

    cx::BlockTable tx, tz;
    cx::total_naive(ax.grid, &tx);
    cx::total_naive(az.grid, &tz);
    auto block_offset = [](const cx::BlockTable& t, int k, int i) {
        auto it = t.by_degree.find(k);
        if (it == t.by_degree.end())
            return -1;
        for (const cx::Block& b : it->second)
            if (b.tag0 == i)
                return b.offset;
        return -1;
    };

    // restriction map total(X) -> total(Z), blockwise glue pullbacks
    cx::ChainMap restriction_map;
    for (int k = fx.complex().k_lo(); k <= fx.complex().k_hi(); ++k) {
        Z2Matrix m(fz.complex().dim(k), fx.complex().dim(k));
        for (int i = 0; i < hx.n; ++i) {
            int j = k - i;
            if (j < 0)
                continue;
            for (SubsetMask s : ax.columns[i]) {
                const SimplicialModel& xs = hx.piece(s);
                const SimplicialModel& zs = hz.piece(s);
                if (xs.vertex_count() == 0 || zs.vertex_count() == 0)
                    continue;
                cx::ChainMap co =
                    simp::induced_cochain_map(glue.pieces.at(s), zs, xs);
                Z2Matrix blk = co.at(j, xs.cochain_complex(), zs.cochain_complex());
                if (blk.rows() == 0 || blk.cols() == 0)
                    continue;
                int xcol = block_offset(tx, k, i), zcol = block_offset(tz, k, i);
                if (xcol < 0 || zcol < 0)
                    throw HyperresError("weight_open: inconsistent total layout");
                int xoff = xcol + ax.offset(i, j, s);
                int zoff = zcol + az.offset(i, j, s);
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c)
                        if (blk.get(r, c))
                            m.set(zoff + r, xoff + c, true);
            }
        }
        restriction_map.mats.emplace(k, std::move(m));
    }

    cx::CubicalDiagram cube;
    cube.n = 0;
    cube.objects.emplace(0u, fx);
    cube.objects.emplace(1u, fz);
    cube.edges.emplace(std::make_pair(0u, 1u), restriction_map);
    cx::FilteredComplex s = cx::simple_complex(cube);

    WeightResult out;
    out.n = hx.dim_x;
    out.compact = false;
    out.ss = ss::compute_pages(s);
    out.pages = ss::WeightPages::reindex(out.ss);

    // cross-route check: the combined double complex (closed-part columns
    // shifted one step right) carries the same pages from page two
    {
        cx::DoubleComplexGrid comb;
        comb.cols = hx.n + 1;
        comb.j_lo = std::min(ax.grid.j_lo, az.grid.j_lo);
        comb.j_hi = std::max(ax.grid.j_hi, az.grid.j_hi);
        comb.dims.assign(comb.cols, std::vector<int>(comb.j_hi - comb.j_lo + 1, 0));
        for (int i = 0; i < comb.cols; ++i)
            for (int j = comb.j_lo; j <= comb.j_hi; ++j)
                comb.dims[i][j - comb.j_lo] = ax.grid.dim(i, j) + az.grid.dim(i - 1, j);

        auto put = [](Z2Matrix& dst, const Z2Matrix& blk, int ro, int co) {
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c)
                    if (blk.get(r, c))
                        dst.set(ro + r, co + c, true);
        };
        // column restriction C^j(X^(i)) -> C^j(Z^(i)) from the glue maps
        auto restriction_block = [&](int i, int j) {
            Z2Matrix m(az.grid.dim(i, j), ax.grid.dim(i, j));
            if (i < 0 || i >= hx.n)
                return m;
            for (SubsetMask s2 : ax.columns[i]) {
                const SimplicialModel& xs = hx.piece(s2);
                const SimplicialModel& zs = hz.piece(s2);
                if (xs.vertex_count() == 0 || zs.vertex_count() == 0)
                    continue;
                cx::ChainMap co = simp::induced_cochain_map(glue.pieces.at(s2), zs, xs);
                Z2Matrix blk = co.at(j, xs.cochain_complex(), zs.cochain_complex());
                if (blk.rows() > 0 && blk.cols() > 0)
                    put(m, blk, az.offset(i, j, s2), ax.offset(i, j, s2));
            }
            return m;
        };
        for (int i = 0; i < comb.cols; ++i)
            for (int j = comb.j_lo; j <= comb.j_hi; ++j) {
                Z2Matrix ds(comb.dim(i, j + 1), comb.dim(i, j));
                put(ds, ax.grid.ds(i, j), 0, 0);
                put(ds, az.grid.ds(i - 1, j), ax.grid.dim(i, j + 1), ax.grid.dim(i, j));
                comb.dsecond[{i, j}] = std::move(ds);

                Z2Matrix dp(comb.dim(i + 1, j), comb.dim(i, j));
                put(dp, ax.grid.dp(i, j), 0, 0);
                put(dp, restriction_block(i, j), ax.grid.dim(i + 1, j), 0);
                put(dp, az.grid.dp(i - 1, j), ax.grid.dim(i + 1, j),
                    ax.grid.dim(i, j));
                comb.dprime[{i, j}] = std::move(dp);
            }
        ss::SpectralSequence e_comb = ss::compute_pages(cx::total_naive(comb));
        for (int page = 2; page <= e_comb.r_stop() + 1; ++page) {
            std::map<ss::Bidegree, int> lhs;
            int idx = std::min(page, out.pages.r_hi) - 2;
            for (auto& [pq, d] : out.pages.dims[idx])
                if (d > 0)
                    lhs[pq] = d;
            std::map<ss::Bidegree, int> rhs;
            for (auto& [pq, pc] : e_comb.page(std::min(page, e_comb.r_stop() + 1)))
                if (pc.dim > 0)
                    rhs[pq] = pc.dim;
            if (lhs != rhs)
                throw HyperresError(
                    "weight_open: cone pages disagree with the combined double complex "
                    "at r=" +
                    std::to_string(page));
        }
    }

    out.table = ss::induced_filtration_table(out.ss);
    out.registry = registry_of(out.ss);
    return out;
}

BaseTransport weight_filtration_on_base(const HyperresolutionInput& h, const WeightResult& r)
{
    return make_base_transport(h, r.ss);
}

cx::FilteredComplex weight_filtered_complex(const HyperresolutionInput& h)
{
    return cx::total_column_canonical(assemble(h).grid);
}

}  // namespace weightss::hr
