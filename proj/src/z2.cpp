#include "weightss/z2.hpp"

#include <algorithm>
#include <cassert>

namespace weightss::z2 {

namespace {
const kernels::Ops& ops() { return kernels::active_ops(); }

std::size_t words_for(int bits) { return (static_cast<std::size_t>(bits) + 63) / 64; }
}  // namespace

// ---------------------------------------------------------------- Z2Vector

Z2Vector::Z2Vector(int size) : size_(size), words_(words_for(size), 0) {}

bool Z2Vector::get(int i) const
{
    assert(i >= 0 && i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
}

void Z2Vector::set(int i, bool v)
{
    assert(i >= 0 && i < size_);
    Word mask = Word{1} << (i & 63);
    if (v)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

void Z2Vector::flip(int i) { set(i, !get(i)); }

void Z2Vector::xor_in(const Z2Vector& other)
{
    if (other.size_ != size_)
        throw DimensionError("Z2Vector::xor_in: size mismatch");
    ops().xor_rows(words_.data(), other.words_.data(), words_.size());
}

bool Z2Vector::dot(const Z2Vector& other) const
{
    if (other.size_ != size_)
        throw DimensionError("Z2Vector::dot: size mismatch");
    return ops().dot_parity(words_.data(), other.words_.data(), words_.size());
}

bool Z2Vector::is_zero() const { return !ops().any_set(words_.data(), words_.size()); }

int Z2Vector::popcount() const
{
    return static_cast<int>(ops().popcount(words_.data(), words_.size()));
}

// ---------------------------------------------------------------- Z2Matrix

Z2Matrix::Z2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)),
      data_(static_cast<std::size_t>(rows) * words_for(cols), 0)
{
    if (rows < 0 || cols < 0)
        throw DimensionError("Z2Matrix: negative shape");
}

Z2Matrix Z2Matrix::identity(int n)
{
    Z2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

Z2Matrix Z2Matrix::zero(int rows, int cols) { return Z2Matrix(rows, cols); }

Z2Matrix Z2Matrix::from_rows(const std::vector<Z2Vector>& rows, int cols)
{
    Z2Matrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

Z2Matrix Z2Matrix::random(int rows, int cols, std::mt19937_64& rng)
{
    Z2Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, (rng() & 1) != 0);
    return m;
}

bool Z2Matrix::get(int r, int c) const
{
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return (row_words(r)[c >> 6] >> (c & 63)) & 1u;
}

void Z2Matrix::set(int r, int c, bool v)
{
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    Word mask = Word{1} << (c & 63);
    if (v)
        row_words(r)[c >> 6] |= mask;
    else
        row_words(r)[c >> 6] &= ~mask;
}

void Z2Matrix::row_xor(int dst, int src)
{
    ops().xor_rows(row_words(dst), row_words(src), stride_);
}

void Z2Matrix::swap_rows(int a, int b)
{
    if (a == b)
        return;
    Word* ra = row_words(a);
    Word* rb = row_words(b);
    for (std::size_t i = 0; i < stride_; ++i)
        std::swap(ra[i], rb[i]);
}

bool Z2Matrix::row_is_zero(int r) const { return !ops().any_set(row_words(r), stride_); }

Z2Vector Z2Matrix::row(int r) const
{
    Z2Vector v(cols_);
    std::copy(row_words(r), row_words(r) + stride_, v.words());
    return v;
}

void Z2Matrix::set_row(int r, const Z2Vector& v)
{
    if (v.size() != cols_)
        throw DimensionError("Z2Matrix::set_row: size mismatch");
    std::copy(v.words(), v.words() + v.word_count(), row_words(r));
}

Z2Matrix Z2Matrix::transposed() const
{
    Z2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

Z2Matrix Z2Matrix::operator*(const Z2Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw DimensionError("Z2Matrix::operator*: inner dimensions differ");
    Z2Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k)
            if (get(r, k))
                ops().xor_rows(out.row_words(r), rhs.row_words(k), out.stride_);
    return out;
}

Z2Matrix Z2Matrix::operator+(const Z2Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("Z2Matrix::operator+: shape mismatch");
    Z2Matrix out = *this;
    ops().xor_rows(out.data_.data(), rhs.data_.data(), out.data_.size());
    return out;
}

Z2Vector Z2Matrix::apply(const Z2Vector& v) const
{
    if (v.size() != cols_)
        throw DimensionError("Z2Matrix::apply: vector size mismatch");
    Z2Vector out(rows_);
    for (int r = 0; r < rows_; ++r)
        if (ops().dot_parity(row_words(r), v.words(), stride_))
            out.set(r, true);
    return out;
}

bool Z2Matrix::is_zero() const { return !ops().any_set(data_.data(), data_.size()); }

bool Z2Matrix::operator==(const Z2Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Z2Matrix Z2Matrix::vstack(const Z2Matrix& below) const
{
    if (cols_ != below.cols_)
        throw DimensionError("Z2Matrix::vstack: column count differs");
    Z2Matrix out(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(rows_ * stride_));
    return out;
}

Z2Matrix Z2Matrix::hstack(const Z2Matrix& right) const
{
    if (rows_ != right.rows_)
        throw DimensionError("Z2Matrix::hstack: row count differs");
    Z2Matrix out(rows_, cols_ + right.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            out.set(r, c, get(r, c));
        for (int c = 0; c < right.cols_; ++c)
            out.set(r, cols_ + c, right.get(r, c));
    }
    return out;
}

// -------------------------------------------------------------------- rref

RrefResult rref(const Z2Matrix& m)
{
    RrefResult res;
    res.r = m;
    Z2Matrix& a = res.r;
    int cur = 0;
    for (int col = 0; col < a.cols() && cur < a.rows(); ++col) {
        int pivot = -1;
        for (int r = cur; r < a.rows(); ++r)
            if (a.get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        a.swap_rows(cur, pivot);
        for (int r = 0; r < a.rows(); ++r)
            if (r != cur && a.get(r, col))
                a.row_xor(r, cur);
        res.pivots.push_back(col);
        ++cur;
    }
    res.rank = cur;
    return res;
}

int rank(const Z2Matrix& m) { return rref(m).rank; }

// --------------------------------------------------------------- Z2Subspace

Z2Subspace Z2Subspace::zero(int ambient)
{
    Z2Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Z2Matrix(0, ambient);
    return s;
}

Z2Subspace Z2Subspace::full(int ambient)
{
    Z2Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Z2Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (int i = 0; i < ambient; ++i)
        s.pivots_[i] = i;
    return s;
}

Z2Subspace Z2Subspace::span_of(const Z2Matrix& generators)
{
    RrefResult rr = rref(generators);
    Z2Subspace s;
    s.ambient_ = generators.cols();
    s.basis_ = Z2Matrix(rr.rank, generators.cols());
    for (int i = 0; i < rr.rank; ++i)
        s.basis_.set_row(i, rr.r.row(i));
    s.pivots_ = rr.pivots;
    return s;
}

Z2Subspace Z2Subspace::span_of(const std::vector<Z2Vector>& generators, int ambient)
{
    return span_of(Z2Matrix::from_rows(generators, ambient));
}

bool Z2Subspace::contains(const Z2Vector& v) const
{
    if (v.size() != ambient_)
        throw DimensionError("Z2Subspace::contains: ambient mismatch");
    Z2Vector w = v;
    for (int i = 0; i < dim(); ++i)
        if (w.get(pivots_[i]))
            w.xor_in(basis_.row(i));
    return w.is_zero();
}

bool Z2Subspace::contains(const Z2Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw DimensionError("Z2Subspace::contains: ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

Z2Vector Z2Subspace::coords_of(const Z2Vector& v) const
{
    if (v.size() != ambient_)
        throw DimensionError("Z2Subspace::coords_of: ambient mismatch");
    Z2Vector w = v;
    Z2Vector coords(dim());
    for (int i = 0; i < dim(); ++i)
        if (w.get(pivots_[i])) {
            coords.set(i, true);
            w.xor_in(basis_.row(i));
        }
    if (!w.is_zero())
        throw DimensionError("Z2Subspace::coords_of: vector outside subspace");
    return coords;
}

Z2Vector Z2Subspace::from_coords(const Z2Vector& coords) const
{
    if (coords.size() != dim())
        throw DimensionError("Z2Subspace::from_coords: coordinate size mismatch");
    Z2Vector v(ambient_);
    for (int i = 0; i < dim(); ++i)
        if (coords.get(i))
            v.xor_in(basis_.row(i));
    return v;
}

bool Z2Subspace::operator==(const Z2Subspace& o) const
{
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

// ------------------------------------------------------------- operations

Z2Subspace kernel(const Z2Matrix& m)
{
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : rr.pivots)
        is_pivot[p] = true;

    std::vector<Z2Vector> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        Z2Vector v(m.cols());
        v.set(c, true);
        for (int i = 0; i < rr.rank; ++i)
            if (rr.r.get(i, c))
                v.set(rr.pivots[i], true);
        basis.push_back(std::move(v));
    }
    return Z2Subspace::span_of(basis, m.cols());
}

Z2Subspace image(const Z2Matrix& m) { return Z2Subspace::span_of(m.transposed()); }

Z2Subspace subspace_sum(const Z2Subspace& u, const Z2Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionError("subspace_sum: ambient mismatch");
    return Z2Subspace::span_of(u.basis().vstack(v.basis()));
}

Z2Subspace subspace_intersect(const Z2Subspace& u, const Z2Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionError("subspace_intersect: ambient mismatch");
    // Zassenhaus: rows [U | U] and [V | 0]; echelon rows with zero left half
    // carry an intersection basis in the right half.
    int n = u.ambient_dim();
    Z2Matrix top = u.basis().hstack(u.basis());
    Z2Matrix bottom = v.basis().hstack(Z2Matrix::zero(v.dim(), n));
    RrefResult rr = rref(top.vstack(bottom));

    std::vector<Z2Vector> inter;
    for (int r = 0; r < rr.rank; ++r) {
        Z2Vector full_row = rr.r.row(r);
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            left_zero = !full_row.get(c);
        if (!left_zero)
            continue;
        Z2Vector right(n);
        for (int c = 0; c < n; ++c)
            right.set(c, full_row.get(n + c));
        inter.push_back(std::move(right));
    }
    return Z2Subspace::span_of(inter, n);
}

Z2Subspace annihilator(const Z2Subspace& w) { return kernel(w.basis()); }

Z2Subspace preimage(const Z2Matrix& m, const Z2Subspace& w)
{
    if (w.ambient_dim() != m.rows())
        throw DimensionError("preimage: subspace not in codomain of the map");
    // Mv in W  iff  (ann W basis) * M v = 0.
    Z2Subspace ann = annihilator(w);
    return kernel(ann.basis() * m);
}

Z2Subspace apply_subspace(const Z2Matrix& m, const Z2Subspace& u)
{
    if (u.ambient_dim() != m.cols())
        throw DimensionError("apply_subspace: subspace not in domain of the map");
    std::vector<Z2Vector> imgs;
    imgs.reserve(u.dim());
    for (int i = 0; i < u.dim(); ++i)
        imgs.push_back(m.apply(u.basis_vector(i)));
    return Z2Subspace::span_of(imgs, m.rows());
}

Quotient quotient(const Z2Subspace& u, const Z2Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionError("quotient: ambient mismatch");
    if (!u.contains(v))
        throw DimensionError("quotient: denominator is not contained in numerator");

    int k = u.dim();
    // V written in U-coordinates, echelonized.
    std::vector<Z2Vector> vin;
    vin.reserve(v.dim());
    for (int i = 0; i < v.dim(); ++i)
        vin.push_back(u.coords_of(v.basis_vector(i)));
    Z2Subspace vu = Z2Subspace::span_of(vin, k);

    std::vector<bool> is_pivot(k, false);
    for (int p : vu.pivots())
        is_pivot[p] = true;
    std::vector<int> free;
    for (int c = 0; c < k; ++c)
        if (!is_pivot[c])
            free.push_back(c);

    Quotient q;
    q.dim = static_cast<int>(free.size());
    q.projection = Z2Matrix(q.dim, k);
    q.section = Z2Matrix(k, q.dim);
    for (int j = 0; j < q.dim; ++j) {
        q.projection.set(j, free[j], true);
        q.section.set(free[j], j, true);
    }
    // reducing by the echelon rows of V adds their free-column pattern
    // whenever the pivot coordinate is set
    for (int i = 0; i < vu.dim(); ++i)
        for (int j = 0; j < q.dim; ++j)
            if (vu.basis().get(i, free[j]))
                q.projection.set(j, vu.pivots()[i], true);
    return q;
}

// --------------------------------------------------------- AmbientQuotient

AmbientQuotient::AmbientQuotient(const Z2Subspace& u, const Z2Subspace& v)
    : u_(u), v_(v), q_(quotient(u, v))
{
}

Z2Vector AmbientQuotient::rep(int i) const
{
    Z2Vector e(q_.dim);
    e.set(i, true);
    return u_.from_coords(q_.section.apply(e));
}

Z2Vector AmbientQuotient::coords(const Z2Vector& x) const
{
    return q_.projection.apply(u_.coords_of(x));
}

}  // namespace weightss::z2
