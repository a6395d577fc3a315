#include "bihom/linalg.hpp"

#include <algorithm>
#include <utility>

#include "bihom/error.hpp"

namespace bihom {

namespace {

void require_same_length(const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        throw Error("DimensionMismatch", "coordinate vectors have lengths " + std::to_string(x.size()) +
                                             " and " + std::to_string(y.size()));
}

// Pivot preference: fewest polynomial terms across numerator and denominator,
// then lowest combined total degree.
std::pair<std::uint64_t, std::uint64_t> pivot_cost(const Scalar& s) {
    return {static_cast<std::uint64_t>(s.num().term_count() + s.den().term_count()),
            s.num().total_degree() + s.den().total_degree()};
}

}  // namespace

Vec zero_vec(const ContextPtr& context, std::size_t n) { return Vec(n, Scalar(context)); }

Vec unit_vec(const ContextPtr& context, std::size_t n, std::size_t i) {
    if (i >= n) throw Error("InvalidArgument", "unit vector index out of range");
    Vec v = zero_vec(context, n);
    v[i] = Scalar(context, 1L);
    return v;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool vec_eq(const Vec& x, const Vec& y) {
    require_same_length(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] == y[i])) return false;
    }
    return true;
}

Vec vec_add(const Vec& x, const Vec& y) {
    require_same_length(x, y);
    Vec out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
    return out;
}

Vec vec_sub(const Vec& x, const Vec& y) {
    require_same_length(x, y);
    Vec out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] - y[i]);
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const Scalar& x : v) out.push_back(c * x);
    return out;
}

Vec vec_embed(const Vec& v, const ContextPtr& bigger, const std::vector<std::size_t>& where) {
    Vec out;
    out.reserve(v.size());
    for (const Scalar& x : v) out.push_back(x.embed(bigger, where));
    return out;
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

LinearMap::LinearMap(ContextPtr context, std::size_t rows, std::size_t cols)
    : context_(std::move(context)), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(context_)) {
    if (!context_) throw Error("InvalidArgument", "linear map requires a parameter context");
}

LinearMap LinearMap::identity(ContextPtr context, std::size_t n) {
    LinearMap m(std::move(context), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(m.context_, 1L));
    return m;
}

LinearMap LinearMap::from_rows(ContextPtr context, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    LinearMap m(std::move(context), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw Error("DimensionMismatch", "matrix rows have unequal lengths");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

LinearMap LinearMap::from_rows(ContextPtr context, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Scalar>> conv;
    conv.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Scalar> out;
        out.reserve(row.size());
        for (long v : row) out.emplace_back(context, v);
        conv.push_back(std::move(out));
    }
    return from_rows(std::move(context), conv);
}

LinearMap LinearMap::from_columns(ContextPtr context, std::size_t rows, const std::vector<Vec>& columns) {
    LinearMap m(std::move(context), rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw Error("DimensionMismatch", "column " + std::to_string(j) + " has length " +
                                                 std::to_string(columns[j].size()) + ", expected " +
                                                 std::to_string(rows));
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
}

const Scalar& LinearMap::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("InvalidArgument", "matrix index out of range");
    return entries_[r * cols_ + c];
}

void LinearMap::set(std::size_t r, std::size_t c, Scalar value) {
    if (r >= rows_ || c >= cols_) throw Error("InvalidArgument", "matrix index out of range");
    require_same_context(context_, value.context());
    entries_[r * cols_ + c] = std::move(value);
}

Vec LinearMap::column(std::size_t j) const {
    if (j >= cols_) throw Error("InvalidArgument", "matrix column out of range");
    Vec out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(entries_[i * cols_ + j]);
    return out;
}

Vec LinearMap::row(std::size_t i) const {
    if (i >= rows_) throw Error("InvalidArgument", "matrix row out of range");
    Vec out(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return out;
}

Vec LinearMap::apply(const Vec& x) const {
    if (x.size() != cols_)
        throw Error("DimensionMismatch", "applying a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                             " map to a vector of length " + std::to_string(x.size()));
    Vec out = zero_vec(context_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& m = entries_[i * cols_ + j];
            if (!m.is_zero()) out[i] += m * x[j];
        }
    }
    return out;
}

bool LinearMap::operator==(const LinearMap& other) const {
    require_same_context(context_, other.context_);
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!(entries_[i] == other.entries_[i])) return false;
    }
    return true;
}

bool LinearMap::is_identity() const {
    if (rows_ != cols_) return false;
    const Scalar one(context_, 1L);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& e = entries_[i * cols_ + j];
            if (i == j ? !(e == one) : !e.is_zero()) return false;
        }
    }
    return true;
}

bool LinearMap::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& c) { return c.is_zero(); });
}

LinearMap LinearMap::embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const {
    LinearMap out(bigger, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j).embed(bigger, where));
    }
    return out;
}

std::string LinearMap::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

LinearMap mat_compose(const LinearMap& f, const LinearMap& g) {
    require_same_context(f.context(), g.context());
    if (f.cols() != g.rows())
        throw Error("DimensionMismatch", "composing " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                                             " with " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
    LinearMap out(f.context(), f.rows(), g.cols());
    for (std::size_t k = 0; k < f.cols(); ++k) {
        for (std::size_t i = 0; i < f.rows(); ++i) {
            const Scalar& fik = f.at(i, k);
            if (fik.is_zero()) continue;
            for (std::size_t j = 0; j < g.cols(); ++j) {
                const Scalar& gkj = g.at(k, j);
                if (gkj.is_zero()) continue;
                out.set(i, j, out.at(i, j) + fik * gkj);
            }
        }
    }
    return out;
}

LinearMap mat_pow(const LinearMap& f, std::size_t k) {
    if (!f.is_square()) throw Error("DimensionMismatch", "powers require a square map");
    LinearMap out = LinearMap::identity(f.context(), f.rows());
    for (std::size_t i = 0; i < k; ++i) out = mat_compose(out, f);
    return out;
}

namespace {

// In-place Gauss-Jordan over columns [0, limit); returns the pivot columns.
// The pivot within a column is the nonzero candidate with the fewest
// polynomial terms, then the lowest total degree, then the smallest row.
std::vector<std::size_t> row_reduce(LinearMap& m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        std::pair<std::uint64_t, std::uint64_t> best_cost{0, 0};
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            auto cost = pivot_cost(m.at(i, c));
            if (best == m.rows() || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == m.rows()) continue;  // free column
        if (best != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Scalar tmp = m.at(r, j);
                m.set(r, j, m.at(best, j));
                m.set(best, j, tmp);
            }
        }
        const Scalar inv_pivot = m.at(r, c).inv();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(r, j).is_zero()) m.set(r, j, m.at(r, j) * inv_pivot);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Scalar factor = m.at(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!m.at(r, j).is_zero()) m.set(i, j, m.at(i, j) - factor * m.at(r, j));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Scale v so its first nonzero coordinate has a positive leading numerator
// coefficient; purely cosmetic, keeps reported bases deterministic and tidy.
void normalize_sign(Vec& v) {
    for (const Scalar& c : v) {
        if (c.is_zero()) continue;
        if (c.num().leading_coefficient() < 0) {
            for (Scalar& x : v) x = -x;
        }
        return;
    }
}

}  // namespace

RrefResult rref_and_kernel(const LinearMap& f) {
    LinearMap m = f;
    std::vector<std::size_t> pivots = row_reduce(m, f.cols());
    std::vector<Vec> kernel;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < f.cols(); ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        Vec v = zero_vec(f.context(), f.cols());
        v[c] = Scalar(f.context(), 1L);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
        normalize_sign(v);
        kernel.push_back(std::move(v));
    }
    return RrefResult{std::move(m), std::move(pivots), std::move(kernel)};
}

std::size_t mat_rank(const LinearMap& f) {
    LinearMap m = f;
    return row_reduce(m, f.cols()).size();
}

LinearMap mat_inverse(const LinearMap& f) {
    if (!f.is_square()) throw Error("DimensionMismatch", "inverse requires a square map");
    const std::size_t n = f.rows();
    LinearMap aug(f.context(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, f.at(i, j));
        aug.set(i, n + i, Scalar(f.context(), 1L));
    }
    std::vector<std::size_t> pivots = row_reduce(aug, n);
    if (pivots.size() < n)
        throw Error("Singular", "map of rank " + std::to_string(pivots.size()) + " in dimension " +
                                    std::to_string(n) + " has no inverse");
    LinearMap out(f.context(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, aug.at(i, n + j));
    }
    return out;
}

bool mat_is_invertible(const LinearMap& f) { return f.is_square() && mat_rank(f) == f.rows(); }

bool mat_commute(const LinearMap& f, const LinearMap& g) {
    return mat_compose(f, g) == mat_compose(g, f);
}

LinearMap block_diag(const LinearMap& f, const LinearMap& g) {
    require_same_context(f.context(), g.context());
    LinearMap out(f.context(), f.rows() + g.rows(), f.cols() + g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) out.set(i, j, f.at(i, j));
    }
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) out.set(f.rows() + i, f.cols() + j, g.at(i, j));
    }
    return out;
}

LinearMap mat_kron(const LinearMap& f, const LinearMap& g) {
    require_same_context(f.context(), g.context());
    LinearMap out(f.context(), f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& fij = f.at(i, j);
            if (fij.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k) {
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    const Scalar& gkl = g.at(k, l);
                    if (gkl.is_zero()) continue;
                    out.set(i * g.rows() + k, j * g.cols() + l, fij * gkl);
                }
            }
        }
    }
    return out;
}

std::optional<Vec> solve(const LinearMap& f, const Vec& b) {
    if (b.size() != f.rows())
        throw Error("DimensionMismatch", "right-hand side length " + std::to_string(b.size()) +
                                             " does not match " + std::to_string(f.rows()) + " rows");
    LinearMap aug(f.context(), f.rows(), f.cols() + 1);
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) aug.set(i, j, f.at(i, j));
        aug.set(i, f.cols(), b[i]);
    }
    std::vector<std::size_t> pivots = row_reduce(aug, f.cols());
    for (std::size_t i = pivots.size(); i < f.rows(); ++i) {
        if (!aug.at(i, f.cols()).is_zero()) return std::nullopt;
    }
    Vec x = zero_vec(f.context(), f.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, f.cols());
    return x;
}

Subspace::Subspace(ContextPtr context, std::size_t ambient_dim, std::vector<Vec> basis)
    : context_(std::move(context)), ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (!context_) throw Error("InvalidArgument", "subspace requires a parameter context");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(basis_.size());
    for (const Vec& v : basis_) {
        if (v.size() != ambient_dim_)
            throw Error("DimensionMismatch", "basis vector length " + std::to_string(v.size()) +
                                                 " does not match ambient dimension " +
                                                 std::to_string(ambient_dim_));
        rows.push_back(v);
    }
    if (!basis_.empty()) {
        LinearMap stacked = LinearMap::from_rows(context_, rows);
        if (mat_rank(stacked) != basis_.size())
            throw Error("InvalidArgument", "subspace basis vectors are linearly dependent");
    }
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_dim_)
        throw Error("DimensionMismatch", "vector length does not match the ambient dimension");
    if (vec_is_zero(v)) return true;
    if (basis_.empty()) return false;
    LinearMap m = LinearMap::from_columns(context_, ambient_dim_, basis_);
    return solve(m, v).has_value();
}

std::vector<Vec> complement_basis(const Subspace& sub) {
    std::vector<bool> pivot_coord(sub.ambient_dim(), false);
    if (sub.dim() > 0) {
        std::vector<std::vector<Scalar>> rows;
        rows.reserve(sub.dim());
        for (const Vec& v : sub.basis()) rows.push_back(v);
        LinearMap stacked = LinearMap::from_rows(sub.context(), rows);
        for (std::size_t c : rref_and_kernel(stacked).pivot_cols) pivot_coord[c] = true;
    }
    std::vector<Vec> out;
    for (std::size_t c = 0; c < sub.ambient_dim(); ++c) {
        if (!pivot_coord[c]) out.push_back(unit_vec(sub.context(), sub.ambient_dim(), c));
    }
    return out;
}

}  // namespace bihom
