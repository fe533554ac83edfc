#pragma once

#include "matspace/mat.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace matspace::la {

/// In-place reduced row echelon form of a list of equal-length rows.
/// Returns the pivot column of each nonzero row; after the call the first
/// pivots.size() rows are the RREF rows and all remaining rows are zero.
template <class K>
std::vector<std::size_t> rref_rows(std::vector<std::vector<K>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const K piv_inv = rows[r][c].inv();
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= piv_inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const K f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Linear subspace of K^ambient in canonical form: the basis columns are
/// the reduced column echelon basis (pivot rows strictly increasing, pivot
/// entries 1, pivot rows zero in every other column). Two subspaces are
/// equal iff their canonical bases are entry-wise equal; the zero subspace
/// has an empty basis.
template <class K>
class Subspace {
public:
    using Field = typename K::Field;

    /// Zero subspace of K^ambient.
    Subspace(std::size_t ambient, const Field& f) : ambient_(ambient), field_(f) {}

    /// Canonical span of arbitrary vectors (each of length ambient).
    static Subspace span(std::size_t ambient, const Field& f,
                         std::vector<std::vector<K>> vectors) {
        for (const auto& v : vectors)
            if (v.size() != ambient)
                throw std::invalid_argument("Subspace: vector length differs from ambient");
        Subspace s(ambient, f);
        auto pivots = rref_rows(vectors);
        s.pivot_rows_ = std::move(pivots);
        s.basis_.assign(vectors.begin(), vectors.begin() + s.pivot_rows_.size());
        return s;
    }

    static Subspace full(std::size_t ambient, const Field& f) {
        std::vector<std::vector<K>> e;
        for (std::size_t i = 0; i < ambient; ++i) {
            std::vector<K> v(ambient, f.zero());
            v[i] = f.one();
            e.push_back(std::move(v));
        }
        return span(ambient, f, std::move(e));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t codim() const { return ambient_ - basis_.size(); }
    const Field& field() const { return field_; }

    /// Canonical basis vectors (columns of the echelon basis matrix).
    const std::vector<std::vector<K>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

    /// Residual of v after removing its component in this subspace; the
    /// residual is zero exactly when v lies in the subspace.
    std::vector<K> reduce(std::vector<K> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector length mismatch");
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            const K c = v[pivot_rows_[j]];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < ambient_; ++i) v[i] -= c * basis_[j][i];
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const K& x) { return x.is_zero(); });
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) return false;
        for (const auto& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Field field_;
    std::vector<std::vector<K>> basis_;      // canonical columns
    std::vector<std::size_t> pivot_rows_;    // strictly increasing
};

/// Kernel basis of the linear map given by `rows` (a list of equations over
/// K^ncols), via RREF and back-substitution of the free variables.
template <class K>
std::vector<std::vector<K>> kernel_vectors(std::vector<std::vector<K>> rows, std::size_t ncols,
                                           const typename K::Field& f) {
    const auto pivots = rref_rows(rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> out;
    for (std::size_t free_c = 0; free_c < ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<K> v(ncols, f.zero());
        v[free_c] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free_c];
        out.push_back(std::move(v));
    }
    return out;
}

template <class K>
struct RankFactor {
    std::size_t rank;
    Subspace<K> kernel;
    Subspace<K> image;
};

/// Exact rank together with canonical kernel and image (column span).
template <class K>
RankFactor<K> rank_factor(const Mat<K>& a) {
    std::vector<std::vector<K>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<K> row;
        row.reserve(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
        rows.push_back(std::move(row));
    }
    auto ker = kernel_vectors(rows, a.cols(), a.field());

    std::vector<std::vector<K>> cols;
    cols.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<K> col;
        col.reserve(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) col.push_back(a.at(i, j));
        cols.push_back(std::move(col));
    }
    auto image = Subspace<K>::span(a.rows(), a.field(), std::move(cols));
    auto kernel = Subspace<K>::span(a.cols(), a.field(), std::move(ker));
    return {image.dim(), std::move(kernel), std::move(image)};
}

/// Rank only (no canonicalization of kernel/image).
template <class K>
std::size_t rank_of(const Mat<K>& a) {
    std::vector<std::vector<K>> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<K> row;
        row.reserve(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
        rows.push_back(std::move(row));
    }
    return rref_rows(rows).size();
}

template <class K>
void require_same_ambient(const Subspace<K>& u, const Subspace<K>& v) {
    if (u.ambient() != v.ambient() || !(u.field() == v.field()))
        throw std::invalid_argument("Subspace: ambient dimension or field mismatch");
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& u, const Subspace<K>& v) {
    require_same_ambient(u, v);
    std::vector<std::vector<K>> gens = u.basis();
    gens.insert(gens.end(), v.basis().begin(), v.basis().end());
    return Subspace<K>::span(u.ambient(), u.field(), std::move(gens));
}

template <class K>
Subspace<K> subspace_intersect(const Subspace<K>& u, const Subspace<K>& v) {
    require_same_ambient(u, v);
    const auto& f = u.field();
    if (u.dim() == 0 || v.dim() == 0) return Subspace<K>(u.ambient(), f);
    // solve U x = V y via the kernel of [U | -V]; the U x parts span U ∩ V
    const std::size_t a = u.dim(), b = v.dim();
    std::vector<std::vector<K>> rows(u.ambient(), std::vector<K>(a + b, f.zero()));
    for (std::size_t i = 0; i < u.ambient(); ++i) {
        for (std::size_t j = 0; j < a; ++j) rows[i][j] = u.basis()[j][i];
        for (std::size_t j = 0; j < b; ++j) rows[i][a + j] = -v.basis()[j][i];
    }
    auto ker = kernel_vectors(std::move(rows), a + b, f);
    std::vector<std::vector<K>> gens;
    for (const auto& x : ker) {
        std::vector<K> w(u.ambient(), f.zero());
        for (std::size_t j = 0; j < a; ++j)
            if (!x[j].is_zero())
                for (std::size_t i = 0; i < u.ambient(); ++i) w[i] += x[j] * u.basis()[j][i];
        gens.push_back(std::move(w));
    }
    return Subspace<K>::span(u.ambient(), f, std::move(gens));
}

/// Largest subspace U of the domain of A with A(U) contained in W.
/// Always contains ker A.
template <class K>
Subspace<K> preimage_subspace(const Mat<K>& a, const Subspace<K>& w) {
    if (w.ambient() != a.rows() || !(w.field() == a.field()))
        throw std::invalid_argument("preimage_subspace: codomain dimension mismatch");
    const auto& f = a.field();
    const std::size_t n = a.cols(), k = w.dim();
    // kernel of [A | W_basis]: pairs (u, y) with A u = -W y; the u parts
    // are exactly the preimage of W
    std::vector<std::vector<K>> rows(a.rows(), std::vector<K>(n + k, f.zero()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
        for (std::size_t j = 0; j < k; ++j) rows[i][n + j] = w.basis()[j][i];
    }
    auto ker = kernel_vectors(std::move(rows), n + k, f);
    std::vector<std::vector<K>> gens;
    gens.reserve(ker.size());
    for (const auto& x : ker) gens.emplace_back(x.begin(), x.begin() + static_cast<long>(n));
    return Subspace<K>::span(n, f, std::move(gens));
}

/// Inverse of a square matrix, or nullopt when singular (RREF of [A | I]).
template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = a.rows();
    const auto& f = a.field();
    std::vector<std::vector<K>> rows(n, std::vector<K>(2 * n, f.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
        rows[i][n + i] = f.one();
    }
    const auto pivots = rref_rows(rows);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat<K> inv(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rows[i][n + j];
    return inv;
}

/// True iff the given matrices are linearly independent as vectors.
template <class K>
bool linearly_independent(const std::vector<Mat<K>>& mats) {
    if (mats.empty()) return true;
    std::vector<std::vector<K>> rows;
    rows.reserve(mats.size());
    for (const auto& m : mats) rows.push_back(m.vectorized());
    return rref_rows(rows).size() == mats.size();
}

} // namespace matspace::la
