#pragma once

#include "matspace/binary_form.hpp"
#include "matspace/enumerate.hpp"
#include "matspace/fp.hpp"
#include "matspace/mat.hpp"
#include "matspace/mpoly.hpp"
#include "matspace/rat.hpp"
#include "matspace/rng.hpp"
#include "matspace/subspace.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matspace::spaces {

using la::Fp;
using la::Mat;
using la::Rat;
using la::Subspace;

/// A linear space of m x n matrices, given by a basis A_1..A_d that is
/// linearly independent as vectors of length m*n.
template <class K>
class MatrixSpace {
public:
    using Field = typename K::Field;

    explicit MatrixSpace(std::vector<Mat<K>> basis) : basis_(std::move(basis)) {
        if (basis_.empty()) throw std::invalid_argument("MatrixSpace: empty basis");
        for (const auto& a : basis_)
            if (a.rows() != basis_[0].rows() || a.cols() != basis_[0].cols() ||
                !(a.field() == basis_[0].field()))
                throw std::invalid_argument("MatrixSpace: basis matrices differ in shape or field");
        if (!la::linearly_independent(basis_))
            throw std::invalid_argument("MatrixSpace: basis matrices are linearly dependent");
    }

    std::size_t rows() const { return basis_[0].rows(); }
    std::size_t cols() const { return basis_[0].cols(); }
    std::size_t dim() const { return basis_.size(); }
    const Field& field() const { return basis_[0].field(); }
    const std::vector<Mat<K>>& basis() const { return basis_; }

    /// The element sum_i coeffs[i] * A_i.
    Mat<K> evaluate(const std::vector<K>& coeffs) const {
        if (coeffs.size() != basis_.size())
            throw std::invalid_argument("MatrixSpace: coefficient count mismatch");
        Mat<K> r(rows(), cols(), field());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (!coeffs[i].is_zero()) r = r + basis_[i].scaled(coeffs[i]);
        return r;
    }

    MatrixSpace transposed() const {
        std::vector<Mat<K>> t;
        t.reserve(basis_.size());
        for (const auto& a : basis_) t.push_back(a.transpose());
        return MatrixSpace(std::move(t));
    }

private:
    std::vector<Mat<K>> basis_;
};

// ---------------------------------------------------------------------------
// Rank verdicts

enum class RankStatus {
    exact_certified,          // constant rank proved over Q (valid over C as well)
    field_exhaustive,         // every point of P^(d-1)(F_p) checked
    falsified,                // a nonzero element of smaller rank is exhibited
    exact_certified_negative, // d=2: minor gcd is nonconstant but has no rational
                              // root; the rank drop happens only at an
                              // irrational or complex point
};

inline std::string rank_status_name(RankStatus s) {
    switch (s) {
        case RankStatus::exact_certified: return "exact-certified";
        case RankStatus::field_exhaustive: return "field-exhaustive";
        case RankStatus::falsified: return "falsified";
        case RankStatus::exact_certified_negative: return "exact-certified-negative";
    }
    return "?";
}

struct ConstantRankReport {
    RankStatus status;
    std::uint64_t prime = 0;                 // field_exhaustive / F_p falsification
    std::vector<std::string> witness_coeffs; // falsified: coefficients of the drop
    std::size_t witness_rank = 0;
    std::string minor_gcd;                   // d=2 route: gcd of the k x k minors

    bool constant() const {
        return status == RankStatus::exact_certified || status == RankStatus::field_exhaustive;
    }
};

template <class K>
struct RankVerdict {
    std::size_t generic_rank = 0;
    std::vector<K> witness;             // coefficients attaining generic_rank
    bool upper_bound_certified = false; // over Q: all (k+1)-minors vanish identically
    bool exhaustive = false;            // over F_p: all projective points evaluated
    std::optional<ConstantRankReport> constant_rank;

    bool sampled_only() const { return !upper_bound_certified && !exhaustive; }
};

// ---------------------------------------------------------------------------
// Symbolic generic element (over Q)

/// Entries of A(t) = sum_i t_i A_i as linear forms in t_1..t_d.
inline std::vector<std::vector<poly::MPoly<Rat>>> generic_element(const MatrixSpace<Rat>& s) {
    const std::size_t d = s.dim();
    const Rat::Field f;
    std::vector<std::vector<poly::MPoly<Rat>>> e(
        s.rows(), std::vector<poly::MPoly<Rat>>(s.cols(), poly::MPoly<Rat>(d, f)));
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            for (std::size_t v = 0; v < d; ++v) {
                const Rat& c = s.basis()[v].at(i, j);
                if (!c.is_zero())
                    e[i][j] = e[i][j] + poly::MPoly<Rat>::variable(v, d, f).scaled(c);
            }
    return e;
}

/// All size x size minors of the generic element, in lexicographic order of
/// (row subset, column subset). fn may return false to stop early.
template <class Fn>
void for_each_minor(const std::vector<std::vector<poly::MPoly<Rat>>>& gen, std::size_t size,
                    Fn&& fn) {
    const std::size_t m = gen.size(), n = gen[0].size();
    bool stop = false;
    poly::for_each_combination(m, size, [&](const std::vector<std::size_t>& rows) {
        if (stop) return;
        poly::for_each_combination(n, size, [&](const std::vector<std::size_t>& cols) {
            if (stop) return;
            std::vector<std::vector<poly::MPoly<Rat>>> sub(size);
            for (std::size_t i = 0; i < size; ++i) {
                sub[i].reserve(size);
                for (std::size_t j = 0; j < size; ++j) sub[i].push_back(gen[rows[i]][cols[j]]);
            }
            if (!fn(poly::det_poly(sub))) stop = true;
        });
    });
}

/// First (in enumeration order) size x size minor of the generic element
/// that is not the zero polynomial, if any.
inline std::optional<poly::MPoly<Rat>> find_nonzero_minor(
    const std::vector<std::vector<poly::MPoly<Rat>>>& gen, std::size_t size) {
    std::optional<poly::MPoly<Rat>> found;
    for_each_minor(gen, size, [&](poly::MPoly<Rat> minor) {
        if (!minor.is_zero()) {
            found = std::move(minor);
            return false;
        }
        return true;
    });
    return found;
}

/// A point of a small integer grid where the (nonzero) polynomial does not
/// vanish. Such a point exists on any grid whose side exceeds the degree in
/// each variable, so the search always terminates.
inline std::vector<Rat> nonvanishing_point(const poly::MPoly<Rat>& p) {
    const std::size_t d = p.nvars();
    std::vector<std::uint32_t> side(d);
    for (std::size_t i = 0; i < d; ++i) side[i] = p.degree_in(i) + 1;
    std::vector<std::uint32_t> digit(d, 0);
    while (true) {
        std::vector<Rat> pt;
        pt.reserve(d);
        for (auto v : digit) pt.emplace_back(static_cast<long>(v));
        if (!p.eval(pt).is_zero()) return pt;
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++digit[i] < side[i]) break;
            digit[i] = 0;
            if (i == 0) throw std::logic_error("nonvanishing_point: exhausted grid");
        }
    }
}

// ---------------------------------------------------------------------------
// Generic rank

/// Generic rank over Q. Sampling proposes a maximum; with certify (the
/// default) the maximum is then confirmed symbolically: every (k+1)x(k+1)
/// minor of the generic element must be the identically-zero polynomial.
/// If one is not, a point where it does not vanish raises the proposal and
/// the loop repeats, so the certified result is exact over Q (and over C).
inline RankVerdict<Rat> generic_rank(const MatrixSpace<Rat>& s, std::uint64_t seed,
                                     bool certify = true) {
    const std::size_t d = s.dim();
    const Rat::Field f;
    RankVerdict<Rat> v;
    v.witness.assign(d, f.zero());

    auto consider = [&](const std::vector<Rat>& t) {
        const std::size_t r = la::rank_of(s.evaluate(t));
        if (r > v.generic_rank) {
            v.generic_rank = r;
            v.witness = t;
        }
    };

    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rat> t(d, f.zero());
        t[i] = f.one();
        consider(t);
    }
    Rng rng(seed);
    for (int draw = 0; draw < 8; ++draw) {
        std::vector<Rat> t(d, f.zero());
        bool all_zero = true;
        for (auto& x : t) {
            x = f.from_long(rng.next_int(-9, 9));
            all_zero = all_zero && x.is_zero();
        }
        if (all_zero) t[0] = f.one();
        consider(t);
    }

    if (!certify) return v;

    const auto gen = generic_element(s);
    const std::size_t max_rank = std::min(s.rows(), s.cols());
    while (v.generic_rank < max_rank) {
        auto minor = find_nonzero_minor(gen, v.generic_rank + 1);
        if (!minor) break;
        const auto pt = nonvanishing_point(*minor);
        consider(pt); // raises generic_rank by at least one
    }
    v.upper_bound_certified = true;
    return v;
}

/// Generic rank over F_p: exhaustive over P^(d-1)(F_p) when the point count
/// fits the budget (then exact for this field), seeded sampling otherwise.
inline RankVerdict<Fp> generic_rank(const MatrixSpace<Fp>& s, std::uint64_t seed,
                                    std::uint64_t point_budget = 2'000'000) {
    const std::size_t d = s.dim();
    const auto& f = s.field();
    RankVerdict<Fp> v;
    v.witness.assign(d, f.zero());

    auto consider = [&](const std::vector<Fp>& t) {
        const std::size_t r = la::rank_of(s.evaluate(t));
        if (r > v.generic_rank) {
            v.generic_rank = r;
            v.witness = t;
        }
    };

    if (la::projective_point_count(d, f.p) <= point_budget) {
        la::ProjectivePoints pts(d, f);
        while (auto t = pts.next()) consider(*t);
        v.exhaustive = true;
        return v;
    }

    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Fp> t(d, f.zero());
        t[i] = f.one();
        consider(t);
    }
    Rng rng(seed);
    for (int draw = 0; draw < 64; ++draw) {
        std::vector<Fp> t(d, f.zero());
        bool all_zero = true;
        for (auto& x : t) {
            x = Fp(rng.next_below(f.p), f.p);
            all_zero = all_zero && x.is_zero();
        }
        if (all_zero) t[0] = f.one();
        consider(t);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Reduction mod p

/// Entry-wise reduction of rational matrices mod p. Throws when a
/// denominator is divisible by p (the caller should pick another prime).
inline std::vector<Mat<Fp>> reduce_mats_mod_p(const std::vector<Mat<Rat>>& mats,
                                              const Fp::Field& f) {
    std::vector<Mat<Fp>> out;
    out.reserve(mats.size());
    for (const auto& a : mats) {
        Mat<Fp> b(a.rows(), a.cols(), f);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const Rat& x = a.at(i, j);
                const auto den = mpz_class(x.denominator() % f.p).get_ui();
                if (den == 0)
                    throw std::invalid_argument(
                        "reduction mod " + std::to_string(f.p) +
                        " undefined: denominator divisible by p; choose a different prime");
                mpz_class num = x.numerator() % f.p;
                if (num < 0) num += f.p;
                b.at(i, j) = Fp(num.get_ui(), f.p) / Fp(den, f.p);
            }
        out.push_back(std::move(b));
    }
    return out;
}

/// Reduction of a whole space mod p; additionally requires the reduced
/// basis to stay linearly independent.
inline MatrixSpace<Fp> reduce_mod_p(const MatrixSpace<Rat>& s, const Fp::Field& f) {
    auto mats = reduce_mats_mod_p(s.basis(), f);
    if (!la::linearly_independent(mats))
        throw std::invalid_argument("reduction mod " + std::to_string(f.p) +
                                    " degenerates the basis; choose a different prime");
    return MatrixSpace<Fp>(std::move(mats));
}

// ---------------------------------------------------------------------------
// Constant rank

namespace detail {

/// Exhaustive constant-rank scan of F_p matrices against a target rank.
/// Zero evaluations are skipped (they are the zero element of the space,
/// which the constant-rank property does not quantify over).
inline std::optional<ConstantRankReport> scan_fp_points(const std::vector<Mat<Fp>>& mats,
                                                        std::size_t target_rank,
                                                        const Fp::Field& f) {
    la::ProjectivePoints pts(mats.size(), f);
    bool any_nonzero = false;
    while (auto t = pts.next()) {
        Mat<Fp> a(mats[0].rows(), mats[0].cols(), f);
        for (std::size_t i = 0; i < mats.size(); ++i)
            if (!(*t)[i].is_zero()) a = a + mats[i].scaled((*t)[i]);
        if (a.is_zero()) continue;
        any_nonzero = true;
        const std::size_t r = la::rank_of(a);
        if (r != target_rank) {
            ConstantRankReport rep;
            rep.status = RankStatus::falsified;
            rep.prime = f.p;
            for (const auto& x : *t) rep.witness_coeffs.push_back(x.str());
            rep.witness_rank = r;
            return rep;
        }
    }
    if (!any_nonzero)
        throw std::invalid_argument("reduction mod " + std::to_string(f.p) +
                                    " kills the whole space; choose a different prime");
    return std::nullopt;
}

} // namespace detail

/// Constant-rank decision for a rational space. The upper bound (no element
/// exceeds the generic rank) is symbolic. The lower bound is exact for
/// d <= 2 via the gcd of the k x k minors as binary forms; for d >= 3 it is
/// decided by exhausting P^(d-1)(F_p) after reducing mod the given prime.
inline RankVerdict<Rat> constant_rank_verdict(const MatrixSpace<Rat>& s,
                                              std::uint64_t exhaustion_prime) {
    RankVerdict<Rat> v = generic_rank(s, /*seed=*/0, /*certify=*/true);
    const std::size_t k = v.generic_rank;

    if (s.dim() == 1) {
        // every nonzero element is a scalar multiple of A_1
        ConstantRankReport rep;
        rep.status = RankStatus::exact_certified;
        v.constant_rank = std::move(rep);
        return v;
    }

    if (s.dim() == 2) {
        const auto gen = generic_element(s);
        poly::BinaryForm g;
        for_each_minor(gen, k, [&](const poly::MPoly<Rat>& minor) {
            if (!minor.is_zero()) {
                g = poly::BinaryForm::gcd(g, poly::BinaryForm::from_mpoly(minor));
            }
            return !(g.is_constant()); // stop once the gcd is already trivial
        });
        ConstantRankReport rep;
        rep.minor_gcd = g.str();
        if (g.is_constant()) {
            rep.status = RankStatus::exact_certified;
        } else {
            const auto roots = g.rational_roots();
            if (!roots.empty()) {
                rep.status = RankStatus::falsified;
                const auto& [s0, t0] = roots.front();
                rep.witness_coeffs = {s0.str(), t0.str()};
                rep.witness_rank = la::rank_of(s.evaluate({s0, t0}));
            } else {
                rep.status = RankStatus::exact_certified_negative;
            }
        }
        v.constant_rank = std::move(rep);
        return v;
    }

    const Fp::Field fp(exhaustion_prime);
    const auto mats = reduce_mats_mod_p(s.basis(), fp);
    if (auto falsified = detail::scan_fp_points(mats, k, fp)) {
        v.constant_rank = std::move(falsified);
    } else {
        ConstantRankReport rep;
        rep.status = RankStatus::field_exhaustive;
        rep.prime = exhaustion_prime;
        v.constant_rank = std::move(rep);
    }
    return v;
}

/// Constant-rank decision for an F_p space: exhaustive over the space's own
/// field (the exhaustion_prime argument is ignored; the verdict is about
/// the field the space lives in and is exact for it).
inline RankVerdict<Fp> constant_rank_verdict(const MatrixSpace<Fp>& s,
                                             std::uint64_t /*exhaustion_prime*/ = 0) {
    RankVerdict<Fp> v = generic_rank(s, /*seed=*/0);
    if (auto falsified = detail::scan_fp_points(s.basis(), v.generic_rank, s.field())) {
        v.constant_rank = std::move(falsified);
    } else {
        ConstantRankReport rep;
        rep.status = RankStatus::field_exhaustive;
        rep.prime = s.field().p;
        v.constant_rank = std::move(rep);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Common kernel / common image

template <class K>
struct CommonSubspaces {
    Subspace<K> common_kernel; // intersection of all kernels
    Subspace<K> image_sum;     // sum of all images
};

template <class K>
CommonSubspaces<K> common_kernel_and_image(const MatrixSpace<K>& s) {
    auto ck = Subspace<K>::full(s.cols(), s.field());
    auto ci = Subspace<K>(s.rows(), s.field());
    for (const auto& a : s.basis()) {
        auto rf = la::rank_factor(a);
        ck = la::subspace_intersect(ck, rf.kernel);
        ci = la::subspace_sum(ci, rf.image);
    }
    return {std::move(ck), std::move(ci)};
}

// ---------------------------------------------------------------------------
// Random equivalence

namespace detail {

template <class K>
Mat<K> random_invertible(std::size_t n, const typename K::Field& f, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Mat<K> m(n, n, f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if constexpr (std::is_same_v<K, Fp>)
                    m.at(i, j) = Fp(rng.next_below(f.p), f.p);
                else
                    m.at(i, j) = f.from_long(rng.next_int(-2, 2));
            }
        if (la::rank_of(m) == n) return m;
    }
    throw std::logic_error("random_invertible: no invertible matrix found");
}

} // namespace detail

/// The equivalent space {P A_i Q} for seeded random invertible P, Q.
template <class K>
MatrixSpace<K> random_equivalent(const MatrixSpace<K>& s, std::uint64_t seed) {
    Rng rng(seed);
    const auto p = detail::random_invertible<K>(s.rows(), s.field(), rng);
    const auto q = detail::random_invertible<K>(s.cols(), s.field(), rng);
    std::vector<Mat<K>> out;
    out.reserve(s.dim());
    for (const auto& a : s.basis()) out.push_back(p.mul(a).mul(q));
    return MatrixSpace<K>(std::move(out));
}

} // namespace matspace::spaces
