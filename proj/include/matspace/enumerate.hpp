#pragma once

#include "matspace/fp.hpp"
#include "matspace/subspace.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace matspace::la {

/// Number of points of P^{d-1}(F_p), i.e. (p^d - 1)/(p - 1).
inline mpz_class projective_point_count(std::size_t d, std::uint64_t p) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    return (pk - 1) / (static_cast<unsigned long>(p) - 1);
}

/// Gaussian binomial [n choose k]_p: the number of k-dimensional subspaces
/// of F_p^n.
inline mpz_class gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t p) {
    if (k > n) return 0;
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        mpz_class pn, pd;
        mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(n - i));
        mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(i + 1));
        num *= pn - 1;
        den *= pd - 1;
    }
    return num / den;
}

/// Enumerates the canonical representatives of P^(d-1)(F_p): coefficient
/// vectors whose first nonzero coordinate is 1, in lexicographic order of
/// (position of the leading 1, remaining digits).
class ProjectivePoints {
public:
    ProjectivePoints(std::size_t d, const Fp::Field& f) : d_(d), f_(f) {}

    std::optional<std::vector<Fp>> next() {
        while (lead_ < d_) {
            if (!started_) {
                digits_.assign(d_ - lead_ - 1, 0);
                started_ = true;
                return current();
            }
            // odometer over the tail digits, rightmost fastest
            std::size_t i = digits_.size();
            while (i > 0) {
                --i;
                if (++digits_[i] < f_.p) return current();
                digits_[i] = 0;
                if (i == 0) break;
            }
            ++lead_;
            started_ = false;
        }
        return std::nullopt;
    }

private:
    std::vector<Fp> current() const {
        std::vector<Fp> v(d_, f_.zero());
        v[lead_] = f_.one();
        for (std::size_t i = 0; i < digits_.size(); ++i)
            v[lead_ + 1 + i] = Fp(digits_[i], f_.p);
        return v;
    }

    std::size_t d_;
    Fp::Field f_;
    std::size_t lead_ = 0;
    bool started_ = false;
    std::vector<std::uint64_t> digits_;
};

/// Enumerates every k-dimensional subspace of F_p^n exactly once, as its
/// canonical echelon representative. Order: pivot-row sets lexicographically,
/// then the free entries as a base-p odometer; this is the tie-break order
/// the brute-force searches use, so their output is deterministic.
class GrassmannEnumerator {
public:
    GrassmannEnumerator(std::size_t n, std::size_t k, const Fp::Field& f)
        : n_(n), k_(k), f_(f) {
        if (k_ > n_) {
            done_ = true;
            return;
        }
        pivots_.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
        setup_free_positions();
    }

    std::optional<Subspace<Fp>> next() {
        if (done_) return std::nullopt;
        if (k_ == 0) {
            done_ = true;
            return Subspace<Fp>(n_, f_);
        }
        auto result = current();
        advance();
        return result;
    }

private:
    void setup_free_positions() {
        free_pos_.clear();
        std::vector<bool> is_pivot(n_, false);
        for (auto r : pivots_) is_pivot[r] = true;
        for (std::size_t j = 0; j < k_; ++j)
            for (std::size_t i = pivots_[j] + 1; i < n_; ++i)
                if (!is_pivot[i]) free_pos_.emplace_back(j, i);
        digits_.assign(free_pos_.size(), 0);
    }

    Subspace<Fp> current() const {
        std::vector<std::vector<Fp>> basis(k_, std::vector<Fp>(n_, f_.zero()));
        for (std::size_t j = 0; j < k_; ++j) basis[j][pivots_[j]] = f_.one();
        for (std::size_t t = 0; t < free_pos_.size(); ++t)
            basis[free_pos_[t].first][free_pos_[t].second] = Fp(digits_[t], f_.p);
        return Subspace<Fp>::span(n_, f_, std::move(basis));
    }

    void advance() {
        // odometer over free entries, rightmost fastest
        std::size_t i = digits_.size();
        while (i > 0) {
            --i;
            if (++digits_[i] < f_.p) return;
            digits_[i] = 0;
        }
        // next pivot-row combination in lexicographic order
        std::size_t j = k_;
        while (j > 0) {
            --j;
            if (pivots_[j] != j + n_ - k_) {
                ++pivots_[j];
                for (std::size_t t = j + 1; t < k_; ++t) pivots_[t] = pivots_[t - 1] + 1;
                setup_free_positions();
                return;
            }
        }
        done_ = true;
    }

    std::size_t n_, k_;
    Fp::Field f_;
    bool done_ = false;
    std::vector<std::size_t> pivots_;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos_; // (basis vector, row)
    std::vector<std::uint64_t> digits_;
};

} // namespace matspace::la
