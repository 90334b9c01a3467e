// Brute-force evaluation of spectral-sequence page dimensions by enumerating
// subspaces as explicit vector sets. Kept independent of the library's
// linear algebra on purpose: plain 0/1 arrays and uint32 bit vectors only.

#ifndef WEIGHTSS_TESTS_ORACLE_HPP
#define WEIGHTSS_TESTS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::uint32_t;
using Mat = std::vector<Vec>;  // rows as bit masks, row r bit c = entry (r, c)
using VecSet = std::set<Vec>;

inline int parity(std::uint32_t x) { return __builtin_popcount(x) & 1; }

inline Vec matvec(const Mat& m, Vec v)
{
    Vec out = 0;
    for (std::size_t r = 0; r < m.size(); ++r)
        if (parity(m[r] & v))
            out |= Vec{1} << r;
    return out;
}

inline VecSet span_set(const std::vector<Vec>& gens)
{
    VecSet out{0};
    for (Vec g : gens) {
        VecSet next = out;
        for (Vec v : out)
            next.insert(v ^ g);
        out = std::move(next);
    }
    return out;
}

inline VecSet set_sum(const VecSet& a, const VecSet& b)
{
    VecSet out;
    for (Vec x : a)
        for (Vec y : b)
            out.insert(x ^ y);
    return out;
}

inline int set_dim(const VecSet& s)
{
    int d = 0;
    while ((std::size_t{1} << d) < s.size())
        ++d;
    return d;
}

/// Random bounded filtered cochain complex described by plain arrays; built
/// from level-tagged generators and cancelling pairs, then conjugated by
/// random level-respecting changes of basis.
struct FilteredComplexData {
    int k_lo = 0;
    std::vector<int> dims;                      // per degree
    std::map<int, Mat> d;                       // degree -> matrix
    int span = 0;                               // filtration levels 0..span
    std::map<int, std::map<int, std::vector<Vec>>> gens;  // p -> degree -> gens

    int dim(int k) const
    {
        if (k < k_lo || k >= k_lo + static_cast<int>(dims.size()))
            return 0;
        return dims[k - k_lo];
    }

    Mat mat(int k) const
    {
        auto it = d.find(k);
        if (it != d.end())
            return it->second;
        return Mat(static_cast<std::size_t>(dim(k + 1)), 0);
    }

    VecSet piece(int p, int k) const
    {
        if (dim(k) == 0)
            return {0};
        if (p <= 0) {
            std::vector<Vec> all;
            for (int i = 0; i < dim(k); ++i)
                all.push_back(Vec{1} << i);
            return span_set(all);
        }
        if (p > span)
            return {0};
        auto pit = gens.find(p);
        if (pit == gens.end())
            return {0};
        auto kit = pit->second.find(k);
        if (kit == pit->second.end())
            return {0};
        return span_set(kit->second);
    }
};

inline FilteredComplexData random_filtered_complex(std::mt19937_64& rng, int max_degrees = 4,
                                                   int max_dim = 4, int max_span = 3)
{
    FilteredComplexData out;
    int degrees = 2 + static_cast<int>(rng() % (max_degrees - 1));
    out.k_lo = static_cast<int>(rng() % 3) - 1;
    out.span = 1 + static_cast<int>(rng() % max_span);

    std::vector<std::vector<int>> level(degrees);
    for (int k = 0; k < degrees; ++k) {
        int n = static_cast<int>(rng() % (max_dim + 1));
        for (int i = 0; i < n; ++i)
            level[k].push_back(static_cast<int>(rng() % (out.span + 1)));
        // order basis by descending level so upper-triangular mixing respects
        // the filtration
        std::sort(level[k].rbegin(), level[k].rend());
        out.dims.push_back(n);
    }

    // cancelling pairs: slot i of degree k paired with slot j of degree k+1,
    // allowed when level(target) >= level(source); a slot used as a target is
    // blocked from being a source at the next transition so d^2 = 0
    std::map<int, Mat> base;
    std::vector<std::vector<bool>> blocked(degrees);
    for (int k = 0; k < degrees; ++k)
        blocked[k].assign(level[k].size(), false);
    for (int k = 0; k + 1 < degrees; ++k) {
        Mat m(level[k + 1].size(), 0);
        std::vector<bool> target_used(level[k + 1].size(), false);
        std::vector<bool> source_used(level[k].size(), false);
        int tries = static_cast<int>(rng() % (level[k].size() + 1));
        for (int t = 0; t < tries; ++t) {
            int i = level[k].empty() ? -1 : static_cast<int>(rng() % level[k].size());
            int j = level[k + 1].empty() ? -1
                                         : static_cast<int>(rng() % level[k + 1].size());
            if (i < 0 || j < 0 || source_used[i] || target_used[j] || blocked[k][i])
                continue;
            if (level[k + 1][j] < level[k][i])
                continue;
            m[j] |= Vec{1} << i;
            source_used[i] = true;
            target_used[j] = true;
            blocked[k + 1][j] = true;
        }
        base[out.k_lo + k] = m;
    }

    // random unitriangular change of basis per degree (descending levels)
    std::vector<Mat> g(degrees), ginv(degrees);
    for (int k = 0; k < degrees; ++k) {
        int n = static_cast<int>(level[k].size());
        Mat m(n, 0);
        for (int i = 0; i < n; ++i) {
            m[i] |= Vec{1} << i;
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1)
                    m[i] |= Vec{1} << j;  // column j mixes into row i
        }
        // invert the unitriangular matrix by back substitution over GF(2)
        Mat inv(n, 0);
        for (int i = 0; i < n; ++i)
            inv[i] |= Vec{1} << i;
        for (int i = n - 1; i >= 0; --i)
            for (int j = i + 1; j < n; ++j)
                if (m[i] & (Vec{1} << j))
                    inv[i] ^= inv[j];
        g[k] = m;
        ginv[k] = inv;
    }

    auto matmul = [](const Mat& a, const Mat& b) {
        // (a*b)[r] row mask: bit c = parity over k of a[r][k] b[k][c]
        Mat out(a.size(), 0);
        for (std::size_t r = 0; r < a.size(); ++r)
            for (std::size_t k = 0; k < b.size(); ++k)
                if (a[r] & (Vec{1} << k))
                    out[r] ^= b[k];
        return out;
    };

    for (int k = 0; k + 1 < degrees; ++k)
        out.d[out.k_lo + k] = matmul(g[k + 1], matmul(base[out.k_lo + k], ginv[k]));

    // filtration generators: images of the standard level basis
    for (int p = 1; p <= out.span; ++p)
        for (int k = 0; k < degrees; ++k) {
            std::vector<Vec> gens;
            int n = static_cast<int>(level[k].size());
            for (int i = 0; i < n; ++i) {
                if (level[k][i] < p)
                    continue;
                // column i of g[k]
                Vec col = 0;
                for (int r = 0; r < n; ++r)
                    if (g[k][r] & (Vec{1} << i))
                        col |= Vec{1} << r;
                gens.push_back(col);
            }
            out.gens[p][out.k_lo + k] = gens;
        }
    return out;
}

/// Page dimension straight from the cycle/boundary formula, by enumeration.
inline int page_dim(const FilteredComplexData& f, int r, int p, int q)
{
    auto zset = [&](int rr, int pp, int kk) {
        VecSet out;
        VecSet fp = f.piece(pp, kk);
        VecSet target = f.piece(pp + rr, kk + 1);
        Mat m = f.mat(kk);
        for (Vec v : fp)
            if (target.count(matvec(m, v)))
                out.insert(v);
        return out;
    };
    int k = p + q;
    VecSet z = zset(r, p, k);
    VecSet b1 = zset(r - 1, p + 1, k);
    VecSet b2;
    {
        Mat m = f.mat(k - 1);
        for (Vec v : zset(r - 1, p - r + 1, k - 1))
            b2.insert(matvec(m, v));
    }
    VecSet b = set_sum(b1, b2);
    return set_dim(z) - set_dim(b);
}

inline int homology_dim(const FilteredComplexData& f, int q)
{
    VecSet ker;
    Mat m = f.mat(q);
    for (Vec v : f.piece(-1, q))
        if (matvec(m, v) == 0)
            ker.insert(v);
    VecSet img;
    Mat prev = f.mat(q - 1);
    for (Vec v : f.piece(-1, q - 1))
        img.insert(matvec(prev, v));
    return set_dim(ker) - set_dim(img);
}

}  // namespace oracle

#endif
