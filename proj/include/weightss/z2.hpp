#ifndef WEIGHTSS_Z2_HPP
#define WEIGHTSS_Z2_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "weightss/kernels.hpp"

namespace weightss::z2 {

using kernels::Word;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bit-packed vector over GF(2).
class Z2Vector {
public:
    Z2Vector() = default;
    explicit Z2Vector(int size);

    int size() const { return size_; }
    bool get(int i) const;
    void set(int i, bool v);
    void flip(int i);

    void xor_in(const Z2Vector& other);
    bool dot(const Z2Vector& other) const;
    bool is_zero() const;
    int popcount() const;

    const Word* words() const { return words_.data(); }
    Word* words() { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

    bool operator==(const Z2Vector& o) const = default;

private:
    int size_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major bit matrix over GF(2). Rows are word-aligned so that row
/// XOR, the elimination primitive, runs on whole words.
class Z2Matrix {
public:
    Z2Matrix() = default;
    Z2Matrix(int rows, int cols);

    static Z2Matrix identity(int n);
    static Z2Matrix zero(int rows, int cols);
    static Z2Matrix from_rows(const std::vector<Z2Vector>& rows, int cols);
    static Z2Matrix random(int rows, int cols, std::mt19937_64& rng);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    const Word* row_words(int r) const { return data_.data() + static_cast<std::size_t>(r) * stride_; }
    Word* row_words(int r) { return data_.data() + static_cast<std::size_t>(r) * stride_; }
    std::size_t stride() const { return stride_; }

    void row_xor(int dst, int src);          // row dst ^= row src
    void swap_rows(int a, int b);
    bool row_is_zero(int r) const;
    Z2Vector row(int r) const;
    void set_row(int r, const Z2Vector& v);

    Z2Matrix transposed() const;
    Z2Matrix operator*(const Z2Matrix& rhs) const;
    Z2Matrix operator+(const Z2Matrix& rhs) const;
    Z2Vector apply(const Z2Vector& v) const;  // column-vector convention

    bool is_zero() const;
    bool operator==(const Z2Matrix& o) const;

    Z2Matrix vstack(const Z2Matrix& below) const;
    Z2Matrix hstack(const Z2Matrix& right) const;

private:
    int rows_ = 0, cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

struct RrefResult {
    Z2Matrix r;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

RrefResult rref(const Z2Matrix& m);
int rank(const Z2Matrix& m);

/// Subspace of GF(2)^n held as a reduced row-echelon basis, so equal
/// subspaces compare bit-identical.
class Z2Subspace {
public:
    Z2Subspace() = default;

    static Z2Subspace zero(int ambient);
    static Z2Subspace full(int ambient);
    static Z2Subspace span_of(const Z2Matrix& generators);
    static Z2Subspace span_of(const std::vector<Z2Vector>& generators, int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Z2Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    Z2Vector basis_vector(int i) const { return basis_.row(i); }

    bool contains(const Z2Vector& v) const;
    bool contains(const Z2Subspace& other) const;
    /// Coordinates of v in the echelon basis; throws if v is outside.
    Z2Vector coords_of(const Z2Vector& v) const;
    Z2Vector from_coords(const Z2Vector& coords) const;

    bool operator==(const Z2Subspace& o) const;

private:
    int ambient_ = 0;
    Z2Matrix basis_;            // dim x ambient, reduced row echelon
    std::vector<int> pivots_;
};

Z2Subspace kernel(const Z2Matrix& m);
Z2Subspace image(const Z2Matrix& m);  // column space

Z2Subspace subspace_sum(const Z2Subspace& u, const Z2Subspace& v);
Z2Subspace subspace_intersect(const Z2Subspace& u, const Z2Subspace& v);
/// {v : Mv in W}; W lives in the codomain of M.
Z2Subspace preimage(const Z2Matrix& m, const Z2Subspace& w);
/// {x : <x, w> = 0 for all w in W}.
Z2Subspace annihilator(const Z2Subspace& w);
/// Image of the subspace spanned by `u` under M (as column-vector map).
Z2Subspace apply_subspace(const Z2Matrix& m, const Z2Subspace& u);

/// U/V for V contained in U. `projection` maps U-coordinates (w.r.t. the
/// echelon basis of U) onto quotient coordinates, `section` splits it;
/// projection * section = identity.
struct Quotient {
    int dim = 0;
    Z2Matrix projection;  // dim x dim(U)
    Z2Matrix section;     // dim(U) x dim
};

Quotient quotient(const Z2Subspace& u, const Z2Subspace& v);

/// Quotient presented in the ambient space: canonical representatives plus
/// the coordinate map for arbitrary members of U.
class AmbientQuotient {
public:
    AmbientQuotient() = default;
    AmbientQuotient(const Z2Subspace& u, const Z2Subspace& v);

    int dim() const { return q_.dim; }
    const Z2Subspace& numerator() const { return u_; }
    const Z2Subspace& denominator() const { return v_; }
    /// Representative (in ambient coordinates) of quotient basis class i.
    Z2Vector rep(int i) const;
    /// Quotient coordinates of the class of x (x must lie in U).
    Z2Vector coords(const Z2Vector& x) const;

private:
    Z2Subspace u_, v_;
    Quotient q_;
};

}  // namespace weightss::z2

#endif
