#include "weightss/simplicial.hpp"

#include <algorithm>
#include <set>

namespace weightss::simp {

using z2::Z2Matrix;
using z2::Z2Vector;

// ------------------------------------------------------------ SimplicialModel

SimplicialModel::SimplicialModel(int vertex_count,
                                 const std::vector<std::vector<int>>& maximal)
    : nverts_(vertex_count)
{
    if (vertex_count < 0)
        throw SimplicialError("SimplicialModel: negative vertex count");

    std::set<std::vector<int>> closure;
    std::vector<std::vector<int>> stack;
    for (const auto& s : maximal) {
        std::vector<int> v = s;
        std::sort(v.begin(), v.end());
        if (v.empty())
            throw SimplicialError("SimplicialModel: empty simplex");
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw SimplicialError("SimplicialModel: repeated vertex in a simplex");
        if (v.front() < 0 || v.back() >= vertex_count)
            throw SimplicialError("SimplicialModel: vertex out of range");
        stack.push_back(std::move(v));
    }
    while (!stack.empty()) {
        std::vector<int> s = std::move(stack.back());
        stack.pop_back();
        if (!closure.insert(s).second)
            continue;
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<int> face;
                face.reserve(s.size() - 1);
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i)
                        face.push_back(s[j]);
                stack.push_back(std::move(face));
            }
    }

    int top = -1;
    for (const auto& s : closure)
        top = std::max(top, static_cast<int>(s.size()) - 1);
    simps_.assign(top + 1, {});
    index_.assign(top + 1, {});
    for (const auto& s : closure)
        simps_[s.size() - 1].push_back(s);
    for (int d = 0; d <= top; ++d) {
        std::sort(simps_[d].begin(), simps_[d].end());
        for (std::size_t i = 0; i < simps_[d].size(); ++i)
            index_[d].emplace(simps_[d][i], static_cast<int>(i));
    }
}

int SimplicialModel::simplex_count(int d) const
{
    if (d < 0 || d > dim())
        return 0;
    return static_cast<int>(simps_[d].size());
}

const std::vector<std::vector<int>>& SimplicialModel::simplices(int d) const
{
    static const std::vector<std::vector<int>> kEmpty;
    if (d < 0 || d > dim())
        return kEmpty;
    return simps_[d];
}

const std::vector<int>& SimplicialModel::simplex(int d, int idx) const
{
    return simps_.at(d).at(idx);
}

int SimplicialModel::index_of(const std::vector<int>& s) const
{
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim())
        return -1;
    auto it = index_[d].find(s);
    return it == index_[d].end() ? -1 : it->second;
}

bool SimplicialModel::has_simplex(const std::vector<int>& s) const
{
    return index_of(s) >= 0;
}

Z2Matrix SimplicialModel::boundary(int d) const
{
    Z2Matrix b(simplex_count(d - 1), simplex_count(d));
    if (d <= 0 || d > dim())
        return b;
    for (int idx = 0; idx < simplex_count(d); ++idx) {
        const std::vector<int>& s = simplex(d, idx);
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i)
                    face.push_back(s[j]);
            b.set(index_of(face), idx, true);
        }
    }
    return b;
}

cx::GradedComplex SimplicialModel::chain_complex() const
{
    std::vector<int> dims;
    for (int d = 0; d <= dim(); ++d)
        dims.push_back(simplex_count(d));
    cx::GradedComplex c(-1, 0, dims);
    for (int d = 1; d <= dim(); ++d)
        c.set_diff(d, boundary(d));
    c.check();
    return c;
}

cx::GradedComplex SimplicialModel::cochain_complex() const
{
    std::vector<int> dims;
    for (int d = 0; d <= dim(); ++d)
        dims.push_back(simplex_count(d));
    cx::GradedComplex c(+1, 0, dims);
    for (int d = 0; d < dim(); ++d)
        c.set_diff(d, boundary(d + 1).transposed());
    c.check();
    return c;
}

Z2Vector SimplicialModel::top_chain() const
{
    Z2Vector v(simplex_count(dim()));
    for (int i = 0; i < v.size(); ++i)
        v.set(i, true);
    return v;
}

bool SimplicialModel::top_chain_is_cycle() const
{
    if (dim() < 0)
        return false;
    return boundary(dim()).apply(top_chain()).is_zero();
}

Z2Vector SimplicialModel::fundamental_class() const
{
    if (!top_chain_is_cycle())
        throw SimplicialError(
            "fundamental_class: top simplices do not form a cycle (not a mod-2 "
            "pseudomanifold)");
    return top_chain();
}

// -------------------------------------------------------------------- maps

SimplicialMap identity_map(const SimplicialModel& m)
{
    SimplicialMap f;
    f.vertex_map.resize(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v)
        f.vertex_map[v] = v;
    return f;
}

SimplicialMap constant_map(const SimplicialModel& src, int target_vertex)
{
    SimplicialMap f;
    f.vertex_map.assign(src.vertex_count(), target_vertex);
    return f;
}

namespace {

std::vector<int> image_simplex(const SimplicialMap& f, const std::vector<int>& s)
{
    std::vector<int> img;
    img.reserve(s.size());
    for (int v : s)
        img.push_back(f(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

}  // namespace

void check_simplicial(const SimplicialMap& f, const SimplicialModel& src,
                      const SimplicialModel& dst)
{
    if (static_cast<int>(f.vertex_map.size()) != src.vertex_count())
        throw SimplicialError("check_simplicial: vertex map size mismatch");
    for (int v : f.vertex_map)
        if (v < 0 || v >= dst.vertex_count())
            throw SimplicialError("check_simplicial: image vertex out of range");
    for (int d = 0; d <= src.dim(); ++d)
        for (const auto& s : src.simplices(d))
            if (!dst.has_simplex(image_simplex(f, s)))
                throw SimplicialError("check_simplicial: image of a simplex is not a simplex");
}

cx::ChainMap induced_chain_map(const SimplicialMap& f, const SimplicialModel& src,
                               const SimplicialModel& dst)
{
    check_simplicial(f, src, dst);
    cx::ChainMap out;
    for (int d = 0; d <= src.dim(); ++d) {
        Z2Matrix m(dst.simplex_count(d), src.simplex_count(d));
        for (int idx = 0; idx < src.simplex_count(d); ++idx) {
            std::vector<int> img = image_simplex(f, src.simplex(d, idx));
            if (static_cast<int>(img.size()) == d + 1)
                m.set(dst.index_of(img), idx, true);
        }
        out.mats.emplace(d, std::move(m));
    }
    return out;
}

cx::ChainMap induced_cochain_map(const SimplicialMap& f, const SimplicialModel& src,
                                 const SimplicialModel& dst)
{
    cx::ChainMap chain = induced_chain_map(f, src, dst);
    cx::ChainMap out;
    for (auto& [d, m] : chain.mats)
        out.mats.emplace(d, m.transposed());
    return out;
}

// ---------------------------------------------------------------- cup / cap

z2::Z2Vector cup(const SimplicialModel& m, int deg_phi, const z2::Z2Vector& phi,
                 int deg_psi, const z2::Z2Vector& psi)
{
    if (phi.size() != m.simplex_count(deg_phi) || psi.size() != m.simplex_count(deg_psi))
        throw SimplicialError("cup: cochain sizes do not match the model");
    int d = deg_phi + deg_psi;
    Z2Vector out(m.simplex_count(d));
    if (d > m.dim())
        return out;  // degree overflow: zero cochain
    for (int idx = 0; idx < m.simplex_count(d); ++idx) {
        const std::vector<int>& s = m.simplex(d, idx);
        std::vector<int> front(s.begin(), s.begin() + deg_phi + 1);
        std::vector<int> back(s.begin() + deg_phi, s.end());
        bool v = phi.get(m.index_of(front)) && psi.get(m.index_of(back));
        if (v)
            out.set(idx, true);
    }
    return out;
}

z2::Z2Vector cap(const SimplicialModel& m, int deg_phi, const z2::Z2Vector& phi,
                 int deg_c, const z2::Z2Vector& c)
{
    if (deg_phi > deg_c)
        throw SimplicialError("cap: cochain degree exceeds chain degree");
    if (phi.size() != m.simplex_count(deg_phi) || c.size() != m.simplex_count(deg_c))
        throw SimplicialError("cap: input sizes do not match the model");
    int d = deg_c - deg_phi;
    Z2Vector out(m.simplex_count(d));
    for (int idx = 0; idx < m.simplex_count(deg_c); ++idx) {
        if (!c.get(idx))
            continue;
        const std::vector<int>& s = m.simplex(deg_c, idx);
        std::vector<int> front(s.begin(), s.begin() + d + 1);
        std::vector<int> back(s.begin() + d, s.end());
        if (phi.get(m.index_of(back)))
            out.flip(m.index_of(front));
    }
    return out;
}

bool evaluate(const z2::Z2Vector& cochain, const z2::Z2Vector& chain)
{
    return cochain.dot(chain);
}

// ----------------------------------------------------------------- products

int product_vertex(const SimplicialModel&, const SimplicialModel& b, int va, int vb)
{
    return va * b.vertex_count() + vb;
}

namespace {

// maximal monotone lattice paths through the grid sa x sb
void staircases_rec(const std::vector<int>& sa, const std::vector<int>& sb,
                    const SimplicialModel& a, const SimplicialModel& b,
                    std::size_t ia, std::size_t ib, std::vector<int>& current,
                    std::vector<std::vector<int>>& out)
{
    if (ia + 1 == sa.size() && ib + 1 == sb.size()) {
        out.push_back(current);
        return;
    }
    if (ia + 1 < sa.size()) {
        current.push_back(product_vertex(a, b, sa[ia + 1], sb[ib]));
        staircases_rec(sa, sb, a, b, ia + 1, ib, current, out);
        current.pop_back();
    }
    if (ib + 1 < sb.size()) {
        current.push_back(product_vertex(a, b, sa[ia], sb[ib + 1]));
        staircases_rec(sa, sb, a, b, ia, ib + 1, current, out);
        current.pop_back();
    }
}

void staircases(const std::vector<int>& sa, const std::vector<int>& sb,
                const SimplicialModel& a, const SimplicialModel& b,
                std::vector<std::vector<int>>& out)
{
    std::vector<int> current{product_vertex(a, b, sa[0], sb[0])};
    staircases_rec(sa, sb, a, b, 0, 0, current, out);
}

}  // namespace

SimplicialModel ordered_product(const SimplicialModel& a, const SimplicialModel& b)
{
    std::vector<std::vector<int>> maximal;
    for (int da = 0; da <= a.dim(); ++da)
        for (const auto& sa : a.simplices(da))
            for (int db = 0; db <= b.dim(); ++db)
                for (const auto& sb : b.simplices(db))
                    staircases(sa, sb, a, b, maximal);
    return SimplicialModel(a.vertex_count() * b.vertex_count(), maximal);
}

SimplicialMap product_map(const SimplicialModel& a, const SimplicialModel& b,
                          const SimplicialModel& a2, const SimplicialModel& b2,
                          const SimplicialMap& fa, const SimplicialMap& fb)
{
    SimplicialMap f;
    f.vertex_map.resize(a.vertex_count() * b.vertex_count());
    for (int va = 0; va < a.vertex_count(); ++va)
        for (int vb = 0; vb < b.vertex_count(); ++vb)
            f.vertex_map[product_vertex(a, b, va, vb)] =
                product_vertex(a2, b2, fa(va), fb(vb));
    return f;
}

}  // namespace weightss::simp
