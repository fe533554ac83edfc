#pragma once

#include "matspace/matrix_space.hpp"

#include <optional>
#include <utility>

namespace matspace::spaces {

/// Witness of the compression property: subspaces V' (codimension k1 of the
/// domain) and W' (dimension k2 of the codomain) with A(V') contained in W'
/// for every basis element, and k1 + k2 equal to the space's generic rank.
/// Everything here is exactly checkable; see verify_certificate.
template <class K>
struct CompressionCertificate {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::size_t rank = 0; // claimed rank, = k1 + k2
    Subspace<K> v_prime;
    Subspace<K> w_prime;
};

/// Containment part of the certificate check: every basis matrix maps V'
/// into W'.
template <class K>
bool maps_into(const MatrixSpace<K>& s, const Subspace<K>& v_prime, const Subspace<K>& w_prime) {
    for (const auto& a : s.basis())
        for (const auto& v : v_prime.basis())
            if (!w_prime.contains(a.apply(v))) return false;
    return true;
}

/// Exact re-check of all certificate invariants against the space: ambient
/// dimensions, codim V' = k1, dim W' = k2, k1 + k2 = rank = generic rank of
/// the space, and the containment. Pure re-check, no search.
template <class K>
bool verify_certificate(const MatrixSpace<K>& s, const CompressionCertificate<K>& c) {
    if (c.v_prime.ambient() != s.cols() || c.w_prime.ambient() != s.rows()) return false;
    if (!(c.v_prime.field() == s.field()) || !(c.w_prime.field() == s.field())) return false;
    if (c.v_prime.codim() != c.k1 || c.w_prime.dim() != c.k2) return false;
    if (c.k1 + c.k2 != c.rank) return false;
    if (generic_rank(s, /*seed=*/0).generic_rank != c.rank) return false;
    return maps_into(s, c.v_prime, c.w_prime);
}

namespace detail {

/// Deterministic shrink to a target dimension: span of the first basis
/// vectors of the canonical basis.
template <class K>
Subspace<K> shrink_to_dim(const Subspace<K>& s, std::size_t target) {
    if (s.dim() < target) throw std::logic_error("shrink_to_dim: target too large");
    std::vector<std::vector<K>> gens(s.basis().begin(), s.basis().begin() + target);
    return Subspace<K>::span(s.ambient(), s.field(), std::move(gens));
}

/// Deterministic pad to a target dimension with standard basis vectors.
template <class K>
Subspace<K> pad_to_dim(const Subspace<K>& s, std::size_t target) {
    auto out = s;
    for (std::size_t i = 0; i < s.ambient() && out.dim() < target; ++i) {
        std::vector<K> e(s.ambient(), s.field().zero());
        e[i] = s.field().one();
        if (!out.contains(e)) {
            auto gens = out.basis();
            gens.push_back(std::move(e));
            out = Subspace<K>::span(s.ambient(), s.field(), std::move(gens));
        }
    }
    if (out.dim() != target) throw std::logic_error("pad_to_dim: cannot reach target");
    return out;
}

template <class K>
std::vector<K> random_coeffs(std::size_t d, const typename K::Field& f, Rng& rng) {
    while (true) {
        std::vector<K> t(d, f.zero());
        bool all_zero = true;
        for (auto& x : t) {
            if constexpr (std::is_same_v<K, Fp>)
                x = Fp(rng.next_below(f.p), f.p);
            else
                x = f.from_long(rng.next_int(-9, 9));
            all_zero = all_zero && x.is_zero();
        }
        if (!all_zero) return t;
    }
}

} // namespace detail

/// Rank-2 (and rank-1) compression detector. Requires generic rank <= 2.
///
/// Decision cascade for generic rank k: the degenerate splits (0,k) via the
/// common image and (k,0) via the common kernel, then for k = 2 the (1,1)
/// split: candidate lines W' arise as running intersections of images of
/// random rank-2 elements, and each candidate is checked exactly via
/// V' = intersection of the preimages A_i^(-1)(W').
///
/// Returned certificates are verified before return and are unconditionally
/// sound; a nullopt return is Monte-Carlo (the (1,1) search may miss with
/// probability vanishing in `retries`).
template <class K>
std::optional<CompressionCertificate<K>> detect_compression_rank2(const MatrixSpace<K>& s,
                                                                  std::uint64_t seed,
                                                                  std::size_t retries = 16) {
    const auto verdict = generic_rank(s, seed);
    const std::size_t k = verdict.generic_rank;
    if (k > 2)
        throw std::invalid_argument("rank-2 procedure inapplicable: generic rank is " +
                                    std::to_string(k));

    const auto common = common_kernel_and_image(s);
    const auto& f = s.field();

    auto finish = [&](std::size_t k1, std::size_t k2, Subspace<K> vp,
                      Subspace<K> wp) -> std::optional<CompressionCertificate<K>> {
        CompressionCertificate<K> c{k1, k2, k1 + k2, std::move(vp), std::move(wp)};
        if (!verify_certificate(s, c)) return std::nullopt;
        return c;
    };

    // (0, k): all images fit in a k-dimensional W'
    if (common.image_sum.dim() <= k) {
        auto cert = finish(0, k, Subspace<K>::full(s.cols(), f),
                           detail::pad_to_dim(common.image_sum, k));
        if (cert) return cert;
    }
    // (k, 0): a codimension-k subspace is killed by the whole space
    if (common.common_kernel.codim() <= k) {
        auto cert = finish(k, 0, detail::shrink_to_dim(common.common_kernel, s.cols() - k),
                           Subspace<K>(s.rows(), f));
        if (cert) return cert;
    }

    if (k != 2) return std::nullopt;

    // (1, 1) via the common kernel, when it has codimension <= 1 (cannot
    // happen at generic rank 2, but the cascade is kept complete)
    if (common.common_kernel.codim() <= 1) {
        auto vp = detail::shrink_to_dim(common.common_kernel, s.cols() - 1);
        Subspace<K> wp(s.rows(), f);
        for (const auto& a : s.basis())
            for (const auto& v : vp.basis())
                wp = la::subspace_sum(wp, Subspace<K>::span(s.rows(), f, {a.apply(v)}));
        if (wp.dim() <= 1) {
            auto cert = finish(1, 1, std::move(vp), detail::pad_to_dim(wp, 1));
            if (cert) return cert;
        }
    }

    // (1, 1) via intersections of images of random rank-2 elements. Any
    // valid W' is contained in the image of every rank-2 element, so the
    // running intersection Z can only shrink onto it.
    Rng rng(seed);
    std::optional<Subspace<K>> z;
    for (std::size_t j = 0; j < retries; ++j) {
        const auto t = detail::random_coeffs<K>(s.dim(), f, rng);
        const auto b = s.evaluate(t);
        if (la::rank_of(b) != 2) continue;
        auto image = la::rank_factor(b).image;
        z = z ? la::subspace_intersect(*z, image) : std::move(image);
        if (z->dim() == 0) return std::nullopt; // no common line exists
        if (z->dim() == 1) {
            auto vp = Subspace<K>::full(s.cols(), f);
            for (const auto& a : s.basis()) vp = la::subspace_intersect(vp, la::preimage_subspace(a, *z));
            if (vp.codim() > 1) return std::nullopt; // the unique candidate fails
            if (vp.codim() == 0) vp = detail::shrink_to_dim(vp, s.cols() - 1);
            return finish(1, 1, std::move(vp), *z);
        }
    }
    return std::nullopt;
}

/// Exhaustive compression search over F_p: enumerates every pair of a
/// codimension-k1 subspace V' and a dimension-k2 subspace W' in canonical
/// order and returns the first pair the whole space compresses into.
/// Unconditionally correct over F_p. Throws BudgetExceeded when the pair
/// count passes the budget.
inline std::optional<CompressionCertificate<Fp>> brute_force_compression_fp(
    const MatrixSpace<Fp>& s, std::size_t k1, std::size_t k2,
    std::uint64_t budget = 1'000'000) {
    if (k1 > s.cols() || k2 > s.rows())
        throw std::invalid_argument("brute_force_compression_fp: split exceeds dimensions");
    const auto& f = s.field();
    const std::size_t vdim = s.cols() - k1;

    const mpz_class pairs = la::gaussian_binomial(s.cols(), vdim, f.p) *
                            la::gaussian_binomial(s.rows(), k2, f.p);
    if (pairs > budget)
        throw poly::BudgetExceeded("brute_force_compression_fp: " + pairs.get_str() +
                                   " candidate pairs exceed budget " + std::to_string(budget));

    la::GrassmannEnumerator v_enum(s.cols(), vdim, f);
    while (auto vp = v_enum.next()) {
        // images of the V' basis under all basis matrices; W' must contain
        // them all, so their span must fit in k2 dimensions at all
        std::vector<std::vector<Fp>> images;
        for (const auto& a : s.basis())
            for (const auto& v : vp->basis()) images.push_back(a.apply(v));
        const auto image_span = Subspace<Fp>::span(s.rows(), f, images);
        if (image_span.dim() > k2) continue;

        la::GrassmannEnumerator w_enum(s.rows(), k2, f);
        while (auto wp = w_enum.next()) {
            if (!wp->contains(image_span)) continue;
            return CompressionCertificate<Fp>{k1, k2, k1 + k2, *vp, *wp};
        }
    }
    return std::nullopt;
}

} // namespace matspace::spaces
