#include "matspace/pencil.hpp"

#include "matspace/matrix_space.hpp"
#include "matspace/subspace.hpp"

#include <numeric>
#include <stdexcept>

namespace matspace::pencil {

namespace {

/// Kernel dimension of the block-Toeplitz matrix M_j whose kernel is the
/// space of homogeneous degree-j polynomial solutions x(s,t) of
/// (s A + t B) x(s,t) = 0: block rows 0..j+1, block columns 0..j, with A on
/// the diagonal and B below it.
std::size_t toeplitz_nullity(const Mat<Rat>& a, const Mat<Rat>& b, std::size_t j) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t rows = (j + 2) * m, cols = (j + 1) * n;
    Mat<Rat> t(rows, cols, a.field());
    for (std::size_t c = 0; c <= j; ++c)
        for (std::size_t bi = 0; bi < m; ++bi)
            for (std::size_t bj = 0; bj < n; ++bj) {
                t.at(c * m + bi, c * n + bj) = a.at(bi, bj);
                t.at((c + 1) * m + bi, c * n + bj) = b.at(bi, bj);
            }
    return cols - la::rank_of(t);
}

/// Right minimal indices from the nullity jumps: with nu_j the nullity of
/// M_j, the number of indices <= j is nu_j - nu_{j-1}, so each second
/// difference counts the indices equal to j.
std::vector<std::size_t> right_indices(const Mat<Rat>& a, const Mat<Rat>& b,
                                       std::size_t expected_count) {
    std::vector<std::size_t> out;
    if (expected_count == 0) return out;
    std::size_t prev_nullity = 0, prev_count = 0;
    for (std::size_t j = 0;; ++j) {
        const std::size_t nullity = toeplitz_nullity(a, b, j);
        const std::size_t count_le = nullity - prev_nullity;
        for (std::size_t r = 0; r < count_le - prev_count; ++r) out.push_back(j);
        if (count_le == expected_count) return out;
        if (j > a.cols() + a.rows() + 2)
            throw std::logic_error("right_indices: minimal index search did not terminate");
        prev_nullity = nullity;
        prev_count = count_le;
    }
}

} // namespace

PencilInvariants kronecker_minimal_indices(const Mat<Rat>& a, const Mat<Rat>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("kronecker_minimal_indices: shapes differ");
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("kronecker_minimal_indices: zero pencil");

    PencilInvariants inv;
    const bool independent = la::linearly_independent<Rat>({a, b});

    if (independent) {
        spaces::MatrixSpace<Rat> space({a, b});
        inv.normal_rank = spaces::generic_rank(space, /*seed=*/0).generic_rank;
        const auto gen = spaces::generic_element(space);
        poly::BinaryForm g;
        spaces::for_each_minor(gen, inv.normal_rank, [&](const poly::MPoly<Rat>& minor) {
            if (!minor.is_zero()) g = poly::BinaryForm::gcd(g, poly::BinaryForm::from_mpoly(minor));
            return !g.is_constant();
        });
        inv.minor_gcd = g;
        inv.minor_gcd_degree = g.is_zero() ? 0 : static_cast<std::size_t>(g.degree());
    } else {
        // degenerate pair: s A + t B = (lambda s + mu t) C for a fixed C, so
        // the raw minor gcd is (lambda s + mu t)^r times a constant. Those
        // roots are the points where the element itself vanishes, which the
        // rank semantics does not quantify over; normalized out, the gcd is
        // constant.
        const Mat<Rat>& c = a.is_zero() ? b : a;
        inv.normal_rank = la::rank_of(c);
        inv.minor_gcd = poly::BinaryForm({Rat(1)});
        inv.minor_gcd_degree = 0;
    }

    inv.right_minimal_indices = right_indices(a, b, a.cols() - inv.normal_rank);
    inv.left_minimal_indices =
        right_indices(a.transpose(), b.transpose(), a.rows() - inv.normal_rank);

    if (independent) {
        const std::size_t sum_right =
            std::accumulate(inv.right_minimal_indices.begin(), inv.right_minimal_indices.end(),
                            std::size_t{0});
        const std::size_t sum_left = std::accumulate(
            inv.left_minimal_indices.begin(), inv.left_minimal_indices.end(), std::size_t{0});
        if (sum_right + sum_left + inv.minor_gcd_degree != inv.normal_rank)
            throw std::logic_error("kronecker_minimal_indices: degree bookkeeping violated");
    }
    return inv;
}

PencilConstantRank pencil_constant_rank(const Mat<Rat>& a, const Mat<Rat>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("pencil_constant_rank: shapes differ");
    // space semantics: a 2-dimensional space requires an independent pair
    if (!la::linearly_independent<Rat>({a, b}))
        throw std::invalid_argument("pencil_constant_rank: the pair is linearly dependent; "
                                    "a pencil space needs two independent generators");
    const auto inv = kronecker_minimal_indices(a, b);
    return {inv.minor_gcd_degree == 0, inv.minor_gcd};
}

} // namespace matspace::pencil
