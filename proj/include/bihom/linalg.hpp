#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

// Coordinate vector over a fixed parameter context.
using Vec = std::vector<Scalar>;

Vec zero_vec(const ContextPtr& context, std::size_t n);
Vec unit_vec(const ContextPtr& context, std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& x, const Vec& y);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Scalar& c, const Vec& v);
Vec vec_embed(const Vec& v, const ContextPtr& bigger, const std::vector<std::size_t>& where);
std::string vec_str(const Vec& v);  // "(c0, c1, ...)"

// Dense rows x cols matrix of Scalar entries, row-major.  Column j is the
// coordinate vector of the image of the j-th domain basis vector, so a map
// "e1 -> e1, e2 -> -a*e1 + b*e2" has columns (1,0) and (-a,b).
class LinearMap {
public:
    LinearMap(ContextPtr context, std::size_t rows, std::size_t cols);  // zero map
    static LinearMap identity(ContextPtr context, std::size_t n);
    // rows[i][j] is the entry in row i, column j.
    static LinearMap from_rows(ContextPtr context, const std::vector<std::vector<Scalar>>& rows);
    static LinearMap from_rows(ContextPtr context, const std::vector<std::vector<long>>& rows);
    // columns[j] is the image of the j-th domain basis vector.
    static LinearMap from_columns(ContextPtr context, std::size_t rows, const std::vector<Vec>& columns);

    const ContextPtr& context() const { return context_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar value);
    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;

    Vec apply(const Vec& x) const;  // matrix times column vector
    bool operator==(const LinearMap& other) const;
    bool operator!=(const LinearMap& other) const { return !(*this == other); }
    bool is_identity() const;
    bool is_zero() const;

    LinearMap embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const;
    std::string str() const;  // "[[.., ..], [.., ..]]" by rows

private:
    ContextPtr context_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;  // row-major
};

// Matrix product f*g: apply g first, then f.  cols(f) must equal rows(g).
LinearMap mat_compose(const LinearMap& f, const LinearMap& g);

// k-fold composition of a square map; k = 0 gives the identity.
LinearMap mat_pow(const LinearMap& f, std::size_t k);

// Exact inverse of a square map via fraction-aware Gauss-Jordan elimination.
// Throws Singular when the rank is deficient.
LinearMap mat_inverse(const LinearMap& f);

bool mat_is_invertible(const LinearMap& f);
bool mat_commute(const LinearMap& f, const LinearMap& g);

// Block-diagonal sum: acts as f on the first rows(f) coordinates and as g on
// the rest.
LinearMap block_diag(const LinearMap& f, const LinearMap& g);

// Kronecker product; index (i, j) of the domain flattens to i*cols(g) + j.
LinearMap mat_kron(const LinearMap& f, const LinearMap& g);

struct RrefResult {
    LinearMap rref;
    std::vector<std::size_t> pivot_cols;
    std::vector<Vec> kernel_basis;

    std::size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form plus a kernel basis.  Pivots prefer the
// structurally simplest entry (fewest polynomial terms, then lowest total
// degree) to limit expression swell.  Kernel vectors correspond to free
// columns in ascending order and are scaled so that their first nonzero
// coordinate has a positive leading numerator coefficient.
RrefResult rref_and_kernel(const LinearMap& f);

std::size_t mat_rank(const LinearMap& f);

// Solve f*x = b exactly; returns the particular solution with all free
// coordinates zero, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const LinearMap& f, const Vec& b);

// A subspace of an ambient coordinate space, held as an independent basis.
class Subspace {
public:
    Subspace(ContextPtr context, std::size_t ambient_dim, std::vector<Vec> basis);

    const ContextPtr& context() const { return context_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;

private:
    ContextPtr context_;
    std::size_t ambient_dim_ = 0;
    std::vector<Vec> basis_;
};

// Standard basis vectors completing sub to the ambient space: after
// row-reducing the basis, every non-pivot coordinate contributes its standard
// vector, in ascending index order.
std::vector<Vec> complement_basis(const Subspace& sub);

}  // namespace bihom
