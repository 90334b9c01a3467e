#include "weightss/complexes.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace weightss::cx {

namespace {

std::string subset_name(SubsetMask m)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (m & (SubsetMask{1} << i)) {
            if (!first)
                os << ',';
            os << i;
            first = false;
        }
    os << '}';
    return os.str();
}

}  // namespace

// ------------------------------------------------------------ GradedComplex

GradedComplex::GradedComplex(int dir, int k_lo, std::vector<int> dims)
    : dir_(dir), k_lo_(k_lo), dims_(std::move(dims))
{
    if (dir_ != 1 && dir_ != -1)
        throw StructureError("GradedComplex: direction must be +1 or -1");
    for (int d : dims_)
        if (d < 0)
            throw StructureError("GradedComplex: negative dimension");
    // materialize every shaped slot up front; values stay immutable afterwards
    for (int k = k_lo_ - 1; k <= k_hi() + 1; ++k)
        diffs_.emplace(k, Z2Matrix(dim(k + dir_), dim(k)));
}

int GradedComplex::dim(int k) const
{
    if (k < k_lo_ || k > k_hi())
        return 0;
    return dims_[k - k_lo_];
}

const Z2Matrix& GradedComplex::diff(int k) const
{
    auto it = diffs_.find(k);
    if (it != diffs_.end())
        return it->second;
    static const Z2Matrix kEmpty;  // far outside the degree range: 0 x 0
    return kEmpty;
}

void GradedComplex::set_diff(int k, Z2Matrix d)
{
    if (d.rows() != dim(k + dir_) || d.cols() != dim(k))
        throw StructureError("GradedComplex::set_diff: shape mismatch");
    diffs_[k] = std::move(d);
}

void GradedComplex::check() const
{
    for (int k = k_lo_ - 1; k <= k_hi(); ++k) {
        const Z2Matrix composite = diff(k + dir_) * diff(k);
        if (!composite.is_zero())
            throw StructureError("GradedComplex: d^2 != 0 at degree " + std::to_string(k));
    }
}

GradedComplex GradedComplex::flipped() const
{
    std::vector<int> rdims(dims_.rbegin(), dims_.rend());
    GradedComplex out(-dir_, -k_hi(), std::move(rdims));
    for (int k = k_lo_; k <= k_hi(); ++k)
        out.set_diff(-k, diff(k));
    return out;
}

int GradedComplex::homology_dim(int k) const
{
    return dim(k) - z2::rank(diff(k)) - z2::rank(diff(k - dir_));
}

std::vector<int> GradedComplex::homology_dims() const
{
    std::vector<int> out;
    for (int k = k_lo_; k <= k_hi(); ++k)
        out.push_back(homology_dim(k));
    return out;
}

// ---------------------------------------------------------- FilteredComplex

FilteredComplex::FilteredComplex(GradedComplex cx) : cx_(std::move(cx))
{
    // trivial filtration: the jump sits between p = 0 and p = 1 for cochain,
    // between -1 and 0 for chain
    if (cx_.dir() == 1) {
        p_lo_ = 1;
        p_hi_ = 0;
    } else {
        p_lo_ = 0;
        p_hi_ = -1;
    }
}

Z2Subspace FilteredComplex::clamp_low(int k) const
{
    return cx_.dir() == 1 ? Z2Subspace::full(cx_.dim(k)) : Z2Subspace::zero(cx_.dim(k));
}

Z2Subspace FilteredComplex::clamp_high(int k) const
{
    return cx_.dir() == 1 ? Z2Subspace::zero(cx_.dim(k)) : Z2Subspace::full(cx_.dim(k));
}

Z2Subspace FilteredComplex::piece(int p, int k) const
{
    if (k < cx_.k_lo() || k > cx_.k_hi())
        return Z2Subspace::zero(0);
    if (p < p_lo_)
        return clamp_low(k);
    if (p > p_hi_)
        return clamp_high(k);
    return pieces_[p - p_lo_][k - cx_.k_lo()];
}

void FilteredComplex::set_window(int p_lo, int p_hi)
{
    p_lo_ = p_lo;
    p_hi_ = p_hi;
    pieces_.assign(std::max(0, p_hi - p_lo + 1), {});
    for (auto& row : pieces_) {
        row.reserve(cx_.k_hi() - cx_.k_lo() + 1);
        for (int k = cx_.k_lo(); k <= cx_.k_hi(); ++k)
            row.push_back(Z2Subspace::zero(cx_.dim(k)));
    }
}

void FilteredComplex::set_piece(int p, int k, Z2Subspace s)
{
    if (p < p_lo_ || p > p_hi_ || k < cx_.k_lo() || k > cx_.k_hi())
        throw StructureError("FilteredComplex::set_piece: outside stored window");
    if (s.ambient_dim() != cx_.dim(k))
        throw StructureError("FilteredComplex::set_piece: ambient mismatch");
    pieces_[p - p_lo_][k - cx_.k_lo()] = std::move(s);
}

void FilteredComplex::check() const
{
    cx_.check();
    for (int k = cx_.k_lo(); k <= cx_.k_hi(); ++k) {
        for (int p = p_lo_ - 1; p <= p_hi_; ++p) {
            const Z2Subspace outer = cx_.dir() == 1 ? piece(p, k) : piece(p + 1, k);
            const Z2Subspace inner = cx_.dir() == 1 ? piece(p + 1, k) : piece(p, k);
            if (!outer.contains(inner))
                throw StructureError("FilteredComplex: filtration not monotone at p=" +
                                     std::to_string(p) + ", k=" + std::to_string(k));
        }
        for (int p = p_lo_; p <= p_hi_; ++p) {
            Z2Subspace img = z2::apply_subspace(cx_.diff(k), piece(p, k));
            if (!piece(p, k + cx_.dir()).contains(img))
                throw StructureError(
                    "FilteredComplex: differential does not respect the filtration at p=" +
                    std::to_string(p) + ", k=" + std::to_string(k));
        }
    }
}

FilteredComplex FilteredComplex::flipped() const
{
    FilteredComplex out(cx_.flipped());
    out.set_window(-p_hi_, -p_lo_);
    for (int p = p_lo_; p <= p_hi_; ++p)
        for (int k = cx_.k_lo(); k <= cx_.k_hi(); ++k)
            out.set_piece(-p, -k, piece(p, k));
    return out;
}

// ----------------------------------------------------------------- ChainMap

Z2Matrix ChainMap::at(int k, const GradedComplex& src, const GradedComplex& dst) const
{
    auto it = mats.find(k);
    if (it != mats.end()) {
        if (it->second.rows() != dst.dim(k) || it->second.cols() != src.dim(k))
            throw StructureError("ChainMap: stored matrix has wrong shape at degree " +
                                 std::to_string(k));
        return it->second;
    }
    return Z2Matrix(dst.dim(k), src.dim(k));
}

void check_chain_map(const ChainMap& f, const GradedComplex& src, const GradedComplex& dst)
{
    if (src.dir() != dst.dir())
        throw StructureError("check_chain_map: direction mismatch");
    int lo = std::min(src.k_lo(), dst.k_lo()) - 1;
    int hi = std::max(src.k_hi(), dst.k_hi()) + 1;
    for (int k = lo; k <= hi; ++k) {
        Z2Matrix lhs = dst.diff(k) * f.at(k, src, dst);
        Z2Matrix rhs = f.at(k + src.dir(), src, dst) * src.diff(k);
        if (!(lhs == rhs))
            throw StructureError("check_chain_map: does not commute with d at degree " +
                                 std::to_string(k));
    }
}

void check_filtered_map(const ChainMap& f, const FilteredComplex& src,
                        const FilteredComplex& dst)
{
    check_chain_map(f, src.complex(), dst.complex());
    int plo = std::min(src.p_lo(), dst.p_lo()) - 1;
    int phi = std::max(src.p_hi(), dst.p_hi()) + 1;
    for (int p = plo; p <= phi; ++p)
        for (int k = src.complex().k_lo(); k <= src.complex().k_hi(); ++k) {
            Z2Subspace img = z2::apply_subspace(f.at(k, src.complex(), dst.complex()),
                                                src.piece(p, k));
            if (!dst.piece(p, k).contains(img))
                throw StructureError("check_filtered_map: image leaves the filtration at p=" +
                                     std::to_string(p) + ", k=" + std::to_string(k));
        }
}

// -------------------------------------------------------- basic filtrations

FilteredComplex canonical_filtration(const GradedComplex& k)
{
    if (k.dir() != 1)
        throw StructureError("canonical_filtration: cochain input required");
    FilteredComplex f(k);
    if (k.empty())
        return f;
    f.set_window(-k.k_hi(), -k.k_lo());
    for (int p = -k.k_hi(); p <= -k.k_lo(); ++p)
        for (int q = k.k_lo(); q <= k.k_hi(); ++q) {
            if (q < -p)
                f.set_piece(p, q, Z2Subspace::full(k.dim(q)));
            else if (q == -p)
                f.set_piece(p, q, z2::kernel(k.diff(q)));
            else
                f.set_piece(p, q, Z2Subspace::zero(k.dim(q)));
        }
    f.check();
    return f;
}

FilteredComplex canonical_filtration_homological(const GradedComplex& k)
{
    if (k.dir() != -1)
        throw StructureError("canonical_filtration_homological: chain input required");
    FilteredComplex f(k);
    if (k.empty())
        return f;
    f.set_window(-k.k_hi(), -k.k_lo());
    for (int p = -k.k_hi(); p <= -k.k_lo(); ++p)
        for (int q = k.k_lo(); q <= k.k_hi(); ++q) {
            if (q > -p)
                f.set_piece(p, q, Z2Subspace::full(k.dim(q)));
            else if (q == -p)
                f.set_piece(p, q, z2::kernel(k.diff(q)));
            else
                f.set_piece(p, q, Z2Subspace::zero(k.dim(q)));
        }
    f.check();
    return f;
}

// ------------------------------------------------------------------ dualize

FilteredComplex dualize(const FilteredComplex& fk)
{
    const GradedComplex& k = fk.complex();
    GradedComplex dual(-k.dir(), k.k_lo(),
                       [&] {
                           std::vector<int> d;
                           for (int q = k.k_lo(); q <= k.k_hi(); ++q)
                               d.push_back(k.dim(q));
                           return d;
                       }());
    // transpose of the differential one step up/down the dual grading
    for (int q = k.k_lo(); q <= k.k_hi(); ++q)
        dual.set_diff(q, k.diff(q - k.dir()).transposed());

    FilteredComplex out(std::move(dual));
    if (k.empty())
        return out;
    if (k.dir() == -1) {
        // chain -> cochain, F^p = ann(F_{p-1})
        out.set_window(fk.p_lo() + 1, fk.p_hi() + 1);
        for (int p = fk.p_lo() + 1; p <= fk.p_hi() + 1; ++p)
            for (int q = k.k_lo(); q <= k.k_hi(); ++q)
                out.set_piece(p, q, z2::annihilator(fk.piece(p - 1, q)));
    } else {
        // cochain -> chain, F_p = ann(F^{p+1})
        out.set_window(fk.p_lo() - 1, fk.p_hi() - 1);
        for (int p = fk.p_lo() - 1; p <= fk.p_hi() - 1; ++p)
            for (int q = k.k_lo(); q <= k.k_hi(); ++q)
                out.set_piece(p, q, z2::annihilator(fk.piece(p + 1, q)));
    }
    out.check();
    return out;
}

// ----------------------------------------------------------------- kronecker

Z2Matrix kronecker(const Z2Matrix& a, const Z2Matrix& b)
{
    Z2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra)
        for (int ca = 0; ca < a.cols(); ++ca) {
            if (!a.get(ra, ca))
                continue;
            for (int rb = 0; rb < b.rows(); ++rb)
                for (int cb = 0; cb < b.cols(); ++cb)
                    if (b.get(rb, cb))
                        out.set(ra * b.rows() + rb, ca * b.cols() + cb, true);
        }
    return out;
}

Z2Subspace kron_subspace(const Z2Subspace& u, const Z2Subspace& v)
{
    int n = u.ambient_dim() * v.ambient_dim();
    std::vector<Z2Vector> gens;
    gens.reserve(static_cast<std::size_t>(u.dim()) * v.dim());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) {
            Z2Vector w(n);
            for (int s = 0; s < u.ambient_dim(); ++s) {
                if (!u.basis().get(i, s))
                    continue;
                for (int t = 0; t < v.ambient_dim(); ++t)
                    if (v.basis().get(j, t))
                        w.set(s * v.ambient_dim() + t, true);
            }
            gens.push_back(std::move(w));
        }
    return Z2Subspace::span_of(gens, n);
}

Z2Subspace embed(const Z2Subspace& s, int total_dim, int offset)
{
    std::vector<Z2Vector> gens;
    gens.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        Z2Vector w(total_dim);
        for (int c = 0; c < s.ambient_dim(); ++c)
            if (s.basis().get(i, c))
                w.set(offset + c, true);
        gens.push_back(std::move(w));
    }
    return Z2Subspace::span_of(gens, total_dim);
}

namespace {

void write_block(Z2Matrix& dst, const Z2Matrix& src, int row_off, int col_off)
{
    for (int r = 0; r < src.rows(); ++r)
        for (int c = 0; c < src.cols(); ++c)
            if (src.get(r, c))
                dst.set(row_off + r, col_off + c, true);
}

struct BlockIndex {
    // per degree: block tag -> (offset, size)
    std::map<int, std::vector<Block>> blocks;
    std::map<int, int> total;

    int offset_of(int degree, long tag0, long tag1) const
    {
        auto it = blocks.find(degree);
        if (it == blocks.end())
            return -1;
        for (const Block& b : it->second)
            if (b.tag0 == tag0 && b.tag1 == tag1)
                return b.offset;
        return -1;
    }
};

}  // namespace

// ------------------------------------------------------------------- tensor

namespace {

/// chain (x) chain core; callers adapt other modes through flips.
FilteredComplex tensor_chain_chain(const FilteredComplex& fa, const FilteredComplex& fb,
                                   BlockTable* table)
{
    const GradedComplex& a = fa.complex();
    const GradedComplex& b = fb.complex();
    if (a.dir() != -1 || b.dir() != -1)
        throw StructureError("tensor: chain/chain core expects chain complexes");

    BlockIndex idx;
    int n_lo = a.k_lo() + b.k_lo();
    int n_hi = a.k_hi() + b.k_hi();
    if (a.empty() || b.empty()) {
        n_lo = 0;
        n_hi = -1;
    }
    std::vector<int> dims;
    for (int n = n_lo; n <= n_hi; ++n) {
        int total = 0;
        for (int i = a.k_lo(); i <= a.k_hi(); ++i) {
            int j = n - i;
            int sz = a.dim(i) * b.dim(j);
            if (sz > 0) {
                idx.blocks[n].push_back({i, j, total, sz});
                total += sz;
            }
        }
        idx.total[n] = total;
        dims.push_back(total);
    }

    GradedComplex tot(-1, n_lo, dims);
    for (int n = n_lo; n <= n_hi; ++n) {
        Z2Matrix d(tot.dim(n - 1), tot.dim(n));
        for (const Block& blk : idx.blocks[n]) {
            int i = static_cast<int>(blk.tag0);
            int j = static_cast<int>(blk.tag1);
            int off_l = idx.offset_of(n - 1, i - 1, j);
            if (off_l >= 0)
                write_block(d, kronecker(a.diff(i), Z2Matrix::identity(b.dim(j))), off_l,
                            blk.offset);
            int off_r = idx.offset_of(n - 1, i, j - 1);
            if (off_r >= 0)
                write_block(d, kronecker(Z2Matrix::identity(a.dim(i)), b.diff(j)), off_r,
                            blk.offset);
        }
        tot.set_diff(n, std::move(d));
    }

    FilteredComplex out(std::move(tot));
    int p_lo = fa.p_lo() + fb.p_lo() - 1;
    int p_hi = fa.p_hi() + fb.p_hi() + 1;
    out.set_window(p_lo, p_hi);
    for (int p = p_lo; p <= p_hi; ++p)
        for (int n = n_lo; n <= n_hi; ++n) {
            std::vector<Z2Vector> gens;
            for (const Block& blk : idx.blocks[n]) {
                int i = static_cast<int>(blk.tag0);
                int j = static_cast<int>(blk.tag1);
                // sum over alpha + beta = p of F_alpha (x) J_beta
                Z2Subspace w = Z2Subspace::zero(blk.size);
                for (int alpha = fa.p_lo() - 1; alpha <= fa.p_hi() + 1; ++alpha) {
                    Z2Subspace term =
                        kron_subspace(fa.piece(alpha, i), fb.piece(p - alpha, j));
                    w = z2::subspace_sum(w, term);
                }
                Z2Subspace emb = embed(w, out.complex().dim(n), blk.offset);
                for (int r = 0; r < emb.dim(); ++r)
                    gens.push_back(emb.basis_vector(r));
            }
            out.set_piece(p, n, Z2Subspace::span_of(gens, out.complex().dim(n)));
        }
    out.check();

    if (table)
        for (auto& [deg, blocks] : idx.blocks)
            table->by_degree[deg] = blocks;
    return out;
}

BlockTable flip_table(const BlockTable& t, bool negate_tag0, bool negate_tag1)
{
    BlockTable out;
    for (auto& [deg, blocks] : t.by_degree) {
        std::vector<Block> flipped;
        for (const Block& b : blocks)
            flipped.push_back({negate_tag0 ? -b.tag0 : b.tag0,
                               negate_tag1 ? -b.tag1 : b.tag1, b.offset, b.size});
        out.by_degree[-deg] = flipped;
    }
    return out;
}

}  // namespace

FilteredComplex tensor_filtered(const FilteredComplex& a, const FilteredComplex& b,
                                TensorMode mode, BlockTable* table)
{
    switch (mode) {
    case TensorMode::ChainChain:
        return tensor_chain_chain(a, b, table);
    case TensorMode::CochainCochain: {
        if (a.complex().dir() != 1 || b.complex().dir() != 1)
            throw StructureError("tensor: cochain/cochain mode expects cochain complexes");
        BlockTable inner;
        FilteredComplex res =
            tensor_chain_chain(a.flipped(), b.flipped(), table ? &inner : nullptr).flipped();
        if (table)
            *table = flip_table(inner, true, true);
        return res;
    }
    case TensorMode::CochainChain: {
        if (a.complex().dir() != 1 || b.complex().dir() != -1)
            throw StructureError("tensor: cochain/chain mode expects cochain, chain");
        BlockTable inner;
        FilteredComplex res =
            tensor_chain_chain(a.flipped(), b, table ? &inner : nullptr);
        if (table) {
            // the core saw the cochain factor through its flip; report the
            // original cochain degree, grading is already the right one
            table->by_degree.clear();
            for (auto& [deg, blocks] : inner.by_degree) {
                std::vector<Block>& out_blocks = table->by_degree[deg];
                for (const Block& blk : blocks)
                    out_blocks.push_back({-blk.tag0, blk.tag1, blk.offset, blk.size});
            }
        }
        return res;
    }
    }
    throw StructureError("tensor: unknown mode");
}

// --------------------------------------------------------- cubical diagrams

const FilteredComplex& CubicalDiagram::object(SubsetMask s) const
{
    auto it = objects.find(s);
    if (it == objects.end())
        throw StructureError("CubicalDiagram: missing object " + subset_name(s));
    return it->second;
}

const ChainMap& CubicalDiagram::edge(SubsetMask t, SubsetMask s) const
{
    auto it = edges.find({t, s});
    if (it == edges.end())
        throw StructureError("CubicalDiagram: missing edge " + subset_name(t) + " -> " +
                             subset_name(s));
    return it->second;
}

void CubicalDiagram::check() const
{
    const SubsetMask all = (SubsetMask{1} << (n + 1)) - 1;
    for (SubsetMask s = 0; s <= all; ++s)
        object(s);
    for (SubsetMask t = 0; t <= all; ++t)
        for (int x = 0; x <= n; ++x) {
            if (t & (SubsetMask{1} << x))
                continue;
            SubsetMask s = t | (SubsetMask{1} << x);
            check_filtered_map(edge(t, s), object(t), object(s));
        }
    // 2-face commutation
    for (SubsetMask t = 0; t <= all; ++t)
        for (int x = 0; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y) {
                SubsetMask bx = SubsetMask{1} << x, by = SubsetMask{1} << y;
                if ((t & bx) || (t & by))
                    continue;
                SubsetMask s = t | bx | by;
                const GradedComplex& src = object(t).complex();
                const GradedComplex& dst = object(s).complex();
                const GradedComplex& mx = object(t | bx).complex();
                const GradedComplex& my = object(t | by).complex();
                for (int k = src.k_lo(); k <= src.k_hi(); ++k) {
                    Z2Matrix via_x =
                        edge(t | bx, s).at(k, mx, dst) * edge(t, t | bx).at(k, src, mx);
                    Z2Matrix via_y =
                        edge(t | by, s).at(k, my, dst) * edge(t, t | by).at(k, src, my);
                    if (!(via_x == via_y))
                        throw StructureError("CubicalDiagram: face " + subset_name(t) +
                                             " -> " + subset_name(s) +
                                             " does not commute at degree " +
                                             std::to_string(k));
                }
            }
}

FilteredComplex simple_complex(const CubicalDiagram& d, BlockTable* table)
{
    d.check();
    const SubsetMask all = (SubsetMask{1} << (d.n + 1)) - 1;

    std::vector<SubsetMask> order;
    for (SubsetMask s = 0; s <= all; ++s)
        order.push_back(s);
    std::sort(order.begin(), order.end(), [](SubsetMask a, SubsetMask b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        return ca != cb ? ca < cb : a < b;
    });

    int k_lo = 0, k_hi = -1;
    bool any = false;
    for (SubsetMask s : order) {
        const GradedComplex& c = d.object(s).complex();
        if (c.empty())
            continue;
        int sz = __builtin_popcount(s);
        int lo = c.k_lo() + sz, hi = c.k_hi() + sz;
        if (!any) {
            k_lo = lo;
            k_hi = hi;
            any = true;
        } else {
            k_lo = std::min(k_lo, lo);
            k_hi = std::max(k_hi, hi);
        }
    }

    BlockIndex idx;
    std::vector<int> dims;
    for (int k = k_lo; k <= k_hi; ++k) {
        int total = 0;
        for (SubsetMask s : order) {
            int i = k - __builtin_popcount(s);
            int sz = d.object(s).complex().dim(i);
            if (sz > 0) {
                idx.blocks[k].push_back({static_cast<long>(s), i, total, sz});
                total += sz;
            }
        }
        dims.push_back(total);
    }

    GradedComplex tot(+1, k_lo, dims);
    for (int k = k_lo; k <= k_hi; ++k) {
        Z2Matrix dk(tot.dim(k + 1), tot.dim(k));
        for (const Block& blk : idx.blocks[k]) {
            SubsetMask s = static_cast<SubsetMask>(blk.tag0);
            int i = static_cast<int>(blk.tag1);
            const GradedComplex& c = d.object(s).complex();
            int off_internal = idx.offset_of(k + 1, blk.tag0, i + 1);
            if (off_internal >= 0)
                write_block(dk, c.diff(i), off_internal, blk.offset);
            for (int x = 0; x <= d.n; ++x) {
                if (s & (SubsetMask{1} << x))
                    continue;
                SubsetMask s2 = s | (SubsetMask{1} << x);
                int off_face = idx.offset_of(k + 1, static_cast<long>(s2), i);
                if (off_face >= 0)
                    write_block(dk, d.edge(s, s2).at(i, c, d.object(s2).complex()),
                                off_face, blk.offset);
            }
        }
        tot.set_diff(k, std::move(dk));
    }

    FilteredComplex out(std::move(tot));
    int p_lo = 0, p_hi = -1;
    any = false;
    for (SubsetMask s : order) {
        const FilteredComplex& f = d.object(s);
        if (!any) {
            p_lo = f.p_lo();
            p_hi = f.p_hi();
            any = true;
        } else {
            p_lo = std::min(p_lo, f.p_lo());
            p_hi = std::max(p_hi, f.p_hi());
        }
    }
    out.set_window(p_lo, p_hi);
    for (int p = p_lo; p <= p_hi; ++p)
        for (int k = k_lo; k <= k_hi; ++k) {
            std::vector<Z2Vector> gens;
            for (const Block& blk : idx.blocks[k]) {
                SubsetMask s = static_cast<SubsetMask>(blk.tag0);
                int i = static_cast<int>(blk.tag1);
                Z2Subspace emb =
                    embed(d.object(s).piece(p, i), out.complex().dim(k), blk.offset);
                for (int r = 0; r < emb.dim(); ++r)
                    gens.push_back(emb.basis_vector(r));
            }
            out.set_piece(p, k, Z2Subspace::span_of(gens, out.complex().dim(k)));
        }
    out.check();

    if (table)
        for (auto& [deg, blocks] : idx.blocks)
            table->by_degree[deg] = blocks;
    return out;
}

// -------------------------------------------------------- double complexes

int DoubleComplexGrid::dim(int i, int j) const
{
    if (i < 0 || i >= cols || j < j_lo || j > j_hi)
        return 0;
    return dims[i][j - j_lo];
}

Z2Matrix DoubleComplexGrid::dp(int i, int j) const
{
    auto it = dprime.find({i, j});
    if (it != dprime.end())
        return it->second;
    return Z2Matrix(dim(i + 1, j), dim(i, j));
}

Z2Matrix DoubleComplexGrid::ds(int i, int j) const
{
    auto it = dsecond.find({i, j});
    if (it != dsecond.end())
        return it->second;
    return Z2Matrix(dim(i, j + 1), dim(i, j));
}

void DoubleComplexGrid::check() const
{
    for (int i = -1; i <= cols; ++i)
        for (int j = j_lo - 1; j <= j_hi + 1; ++j) {
            if (!(dp(i + 1, j) * dp(i, j)).is_zero())
                throw StructureError("DoubleComplexGrid: d'^2 != 0 at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            if (!(ds(i, j + 1) * ds(i, j)).is_zero())
                throw StructureError("DoubleComplexGrid: d''^2 != 0 at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            Z2Matrix ab = ds(i + 1, j) * dp(i, j);
            Z2Matrix ba = dp(i, j + 1) * ds(i, j);
            if (!(ab == ba))
                throw StructureError("DoubleComplexGrid: d' and d'' do not commute at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

namespace {

struct TotalSkeleton {
    GradedComplex cx;
    BlockIndex idx;
};

TotalSkeleton build_total(const DoubleComplexGrid& dc)
{
    dc.check();
    TotalSkeleton out;
    int k_lo = 0 + dc.j_lo, k_hi = (dc.cols - 1) + dc.j_hi;
    if (dc.cols == 0 || dc.j_hi < dc.j_lo) {
        k_lo = 0;
        k_hi = -1;
    }
    std::vector<int> dims;
    for (int k = k_lo; k <= k_hi; ++k) {
        int total = 0;
        for (int i = 0; i < dc.cols; ++i) {
            int j = k - i;
            int sz = dc.dim(i, j);
            if (sz > 0) {
                out.idx.blocks[k].push_back({i, j, total, sz});
                total += sz;
            }
        }
        dims.push_back(total);
    }
    out.cx = GradedComplex(+1, k_lo, dims);
    for (int k = k_lo; k <= k_hi; ++k) {
        Z2Matrix dk(out.cx.dim(k + 1), out.cx.dim(k));
        for (const Block& blk : out.idx.blocks[k]) {
            int i = static_cast<int>(blk.tag0);
            int j = static_cast<int>(blk.tag1);
            int off_p = out.idx.offset_of(k + 1, i + 1, j);
            if (off_p >= 0)
                write_block(dk, dc.dp(i, j), off_p, blk.offset);
            int off_s = out.idx.offset_of(k + 1, i, j + 1);
            if (off_s >= 0)
                write_block(dk, dc.ds(i, j), off_s, blk.offset);
        }
        out.cx.set_diff(k, std::move(dk));
    }
    return out;
}

}  // namespace

FilteredComplex total_naive(const DoubleComplexGrid& dc, BlockTable* table)
{
    TotalSkeleton sk = build_total(dc);
    FilteredComplex out(sk.cx);
    out.set_window(0, dc.cols);
    for (int p = 0; p <= dc.cols; ++p)
        for (int k = sk.cx.k_lo(); k <= sk.cx.k_hi(); ++k) {
            std::vector<Z2Vector> gens;
            for (const Block& blk : sk.idx.blocks[k]) {
                if (blk.tag0 < p)
                    continue;
                Z2Subspace emb = embed(Z2Subspace::full(blk.size), sk.cx.dim(k), blk.offset);
                for (int r = 0; r < emb.dim(); ++r)
                    gens.push_back(emb.basis_vector(r));
            }
            out.set_piece(p, k, Z2Subspace::span_of(gens, sk.cx.dim(k)));
        }
    out.check();
    if (table)
        for (auto& [deg, blocks] : sk.idx.blocks)
            table->by_degree[deg] = blocks;
    return out;
}

FilteredComplex total_column_canonical(const DoubleComplexGrid& dc, BlockTable* table)
{
    TotalSkeleton sk = build_total(dc);
    FilteredComplex out(sk.cx);
    out.set_window(-dc.j_hi, -dc.j_lo);
    for (int p = -dc.j_hi; p <= -dc.j_lo; ++p)
        for (int k = sk.cx.k_lo(); k <= sk.cx.k_hi(); ++k) {
            std::vector<Z2Vector> gens;
            for (const Block& blk : sk.idx.blocks[k]) {
                int i = static_cast<int>(blk.tag0);
                int j = static_cast<int>(blk.tag1);
                Z2Subspace piece_ij = Z2Subspace::zero(blk.size);
                if (j < -p)
                    piece_ij = Z2Subspace::full(blk.size);
                else if (j == -p)
                    piece_ij = z2::kernel(dc.ds(i, j));
                Z2Subspace emb = embed(piece_ij, sk.cx.dim(k), blk.offset);
                for (int r = 0; r < emb.dim(); ++r)
                    gens.push_back(emb.basis_vector(r));
            }
            out.set_piece(p, k, Z2Subspace::span_of(gens, sk.cx.dim(k)));
        }
    out.check();
    if (table)
        for (auto& [deg, blocks] : sk.idx.blocks)
            table->by_degree[deg] = blocks;
    return out;
}

// ------------------------------------------------------------- Deligne shift

FilteredComplex deligne_shift(const FilteredComplex& f)
{
    const GradedComplex& k = f.complex();
    if (k.dir() != 1)
        throw StructureError("deligne_shift: cochain input required");
    FilteredComplex out(k);
    if (k.empty())
        return out;
    int p_lo = f.p_lo() - k.k_hi() - 1;
    int p_hi = f.p_hi() - k.k_lo();
    out.set_window(p_lo, p_hi);
    for (int p = p_lo; p <= p_hi; ++p)
        for (int q = k.k_lo(); q <= k.k_hi(); ++q) {
            Z2Subspace inside = f.piece(p + q, q);
            Z2Subspace pulled = z2::preimage(k.diff(q), f.piece(p + q + 1, q + 1));
            out.set_piece(p, q, z2::subspace_intersect(inside, pulled));
        }
    out.check();
    return out;
}

// ------------------------------------------------------------ kernel complex

GradedComplex kernel_complex(const ChainMap& f, const GradedComplex& src,
                             const GradedComplex& dst)
{
    check_chain_map(f, src, dst);
    std::map<int, Z2Subspace> kernels;
    std::vector<int> dims;
    for (int k = src.k_lo(); k <= src.k_hi(); ++k) {
        kernels.emplace(k, z2::kernel(f.at(k, src, dst)));
        dims.push_back(kernels.at(k).dim());
    }
    GradedComplex out(src.dir(), src.k_lo(), dims);
    for (int k = src.k_lo(); k <= src.k_hi(); ++k) {
        int k2 = k + src.dir();
        if (k2 < src.k_lo() || k2 > src.k_hi())
            continue;
        const Z2Subspace& dom = kernels.at(k);
        const Z2Subspace& cod = kernels.at(k2);
        Z2Matrix d(cod.dim(), dom.dim());
        for (int i = 0; i < dom.dim(); ++i) {
            Z2Vector img = src.diff(k).apply(dom.basis_vector(i));
            Z2Vector coords = cod.coords_of(img);
            for (int r = 0; r < cod.dim(); ++r)
                if (coords.get(r))
                    d.set(r, i, true);
        }
        out.set_diff(k, std::move(d));
    }
    out.check();
    return out;
}

}  // namespace weightss::cx
