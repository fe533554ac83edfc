#pragma once

#include "matspace/compression.hpp"
#include "matspace/matrix_space.hpp"
#include "matspace/rng.hpp"

#include <optional>
#include <vector>

namespace matspace::fixtures {

using la::Fp;
using la::Mat;
using la::Rat;
using spaces::MatrixSpace;

inline Mat<Rat> mat_q(std::size_t m, std::size_t n, const std::vector<long>& entries) {
    Mat<Rat> a(m, n, Rat::Field{});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rat(entries[i * n + j]);
    return a;
}

/// The 3x3 skew-symmetric space: constant rank 2, not a compression space.
inline MatrixSpace<Rat> skew3() {
    return MatrixSpace<Rat>({
        mat_q(3, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0}),
        mat_q(3, 3, {0, 0, 1, 0, 0, 0, -1, 0, 0}),
        mat_q(3, 3, {0, 0, 0, 0, 0, 1, 0, -1, 0}),
    });
}

/// The bordered 4x4 space: zero 3x3 top-left block, free last row and
/// column (d = 7); the normal form of a (1,1)-compression of rank 2.
inline MatrixSpace<Rat> bordered4() {
    std::vector<Mat<Rat>> basis;
    for (std::size_t i = 0; i < 3; ++i) { // E_{i,3}
        Mat<Rat> a(4, 4, Rat::Field{});
        a.at(i, 3) = Rat(1);
        basis.push_back(std::move(a));
    }
    for (std::size_t j = 0; j < 4; ++j) { // E_{3,j}
        Mat<Rat> a(4, 4, Rat::Field{});
        a.at(3, j) = Rat(1);
        basis.push_back(std::move(a));
    }
    return MatrixSpace<Rat>(std::move(basis));
}

/// The L_2 Kronecker pencil [[s,t,0],[0,s,t]] as a 2-dimensional space.
inline MatrixSpace<Rat> l2_pencil_space() {
    return MatrixSpace<Rat>({
        mat_q(2, 3, {1, 0, 0, 0, 1, 0}),
        mat_q(2, 3, {0, 1, 0, 0, 0, 1}),
    });
}

/// The pencil diag(s, t): regular, rank drops at [1:0] and [0:1].
inline MatrixSpace<Rat> diag_pencil_space() {
    return MatrixSpace<Rat>({
        mat_q(2, 2, {1, 0, 0, 0}),
        mat_q(2, 2, {0, 0, 0, 1}),
    });
}

inline Mat<Fp> random_mat_fp(Rng& rng, std::size_t m, std::size_t n, const Fp::Field& f) {
    Mat<Fp> a(m, n, f);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Fp(rng.next_below(f.p), f.p);
    return a;
}

inline Mat<Fp> random_rank1_fp(Rng& rng, std::size_t m, std::size_t n, const Fp::Field& f) {
    while (true) {
        std::vector<Fp> u, v;
        bool uz = true, vz = true;
        for (std::size_t i = 0; i < m; ++i) {
            u.emplace_back(rng.next_below(f.p), f.p);
            uz = uz && u.back().is_zero();
        }
        for (std::size_t j = 0; j < n; ++j) {
            v.emplace_back(rng.next_below(f.p), f.p);
            vz = vz && v.back().is_zero();
        }
        if (uz || vz) continue;
        Mat<Fp> a(m, n, f);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = u[i] * v[j];
        return a;
    }
}

/// Random F_p matrix spaces of generic rank <= 2, drawn from a mix of
/// structured families (compressions of each split, skew-like primitives)
/// and fully random spaces filtered by rank. Returns nullopt when a draw
/// fails (dependent basis or rank too high); callers keep drawing.
inline std::optional<MatrixSpace<Fp>> random_low_rank_space(Rng& rng, const Fp::Field& f) {
    const std::size_t m = 2 + rng.next_below(3); // 2..4
    const std::size_t n = 2 + rng.next_below(3);
    const std::size_t d = 1 + rng.next_below(4); // 1..4
    const auto kind = rng.next_below(6);

    std::vector<Mat<Fp>> basis;
    try {
        switch (kind) {
            case 0: { // spans of rank-1 matrices
                for (std::size_t i = 0; i < d; ++i)
                    basis.push_back(random_rank1_fp(rng, m, n, f));
                break;
            }
            case 1: { // (1,1) template: columns 0..n-2 land in the first row line
                for (std::size_t i = 0; i < d; ++i) {
                    Mat<Fp> a(m, n, f);
                    for (std::size_t j = 0; j + 1 < n; ++j) a.at(0, j) = Fp(rng.next_below(f.p), f.p);
                    for (std::size_t r = 0; r < m; ++r) a.at(r, n - 1) = Fp(rng.next_below(f.p), f.p);
                    basis.push_back(std::move(a));
                }
                break;
            }
            case 2: { // (0,2) template: all images inside two fixed rows
                for (std::size_t i = 0; i < d; ++i) {
                    Mat<Fp> a(m, n, f);
                    for (std::size_t r = 0; r < std::min<std::size_t>(2, m); ++r)
                        for (std::size_t j = 0; j < n; ++j) a.at(r, j) = Fp(rng.next_below(f.p), f.p);
                    basis.push_back(std::move(a));
                }
                break;
            }
            case 3: { // (2,0) template: all kernels contain the last n-2 coordinates
                for (std::size_t i = 0; i < d; ++i) {
                    Mat<Fp> a(m, n, f);
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t j = 0; j < std::min<std::size_t>(2, n); ++j)
                            a.at(r, j) = Fp(rng.next_below(f.p), f.p);
                    basis.push_back(std::move(a));
                }
                break;
            }
            case 4: { // skew-like primitive block (3x3 inside m,n >= 3), full 3 generators
                if (m < 3 || n < 3) return std::nullopt;
                const long pats[3][9] = {{0, 1, 0, -1, 0, 0, 0, 0, 0},
                                         {0, 0, 1, 0, 0, 0, -1, 0, 0},
                                         {0, 0, 0, 0, 0, 1, 0, -1, 0}};
                for (std::size_t s = 0; s < 3; ++s) {
                    Mat<Fp> a(m, n, f);
                    for (std::size_t i = 0; i < 3; ++i)
                        for (std::size_t j = 0; j < 3; ++j)
                            a.at(i, j) = f.from_long(pats[s][i * 3 + j]);
                    basis.push_back(std::move(a));
                }
                break;
            }
            default: { // unstructured
                for (std::size_t i = 0; i < d; ++i)
                    basis.push_back(random_mat_fp(rng, m, n, f));
                break;
            }
        }
        MatrixSpace<Fp> space(std::move(basis));
        // hide any construction structure behind a random equivalence
        auto hidden = spaces::random_equivalent(space, rng.next_u64());
        if (spaces::generic_rank(hidden, 0).generic_rank > 2) return std::nullopt;
        return hidden;
    } catch (const std::invalid_argument&) {
        return std::nullopt; // dependent draw
    }
}

/// Existence of a rank-2 compression split over F_p by exhaustive search.
inline bool oracle_existence_rank2(const MatrixSpace<Fp>& s) {
    for (const auto& [k1, k2] :
         std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 1}, {2, 0}}) {
        if (k1 > s.cols() || k2 > s.rows()) continue;
        if (spaces::brute_force_compression_fp(s, k1, k2)) return true;
    }
    return false;
}

} // namespace matspace::fixtures
