#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace matspace::poly {

/// Sparse multivariate polynomial over an exact field K. Terms are stored
/// as exponent-vector -> nonzero coefficient in lexicographic order, which
/// keeps every operation deterministic. Desk-scale only: the minors
/// taken here have at most a few hundred terms.
template <class K>
class MPoly {
public:
    using Field = typename K::Field;
    using Expo = std::vector<std::uint32_t>;

    MPoly(std::size_t nvars, const Field& f) : nvars_(nvars), field_(f) {}

    static MPoly constant(std::size_t nvars, const K& c) {
        MPoly p(nvars, c.field());
        if (!c.is_zero()) p.terms_.emplace(Expo(nvars, 0), c);
        return p;
    }

    static MPoly variable(std::size_t idx, std::size_t nvars, const Field& f) {
        if (idx >= nvars) throw std::invalid_argument("MPoly: variable index out of range");
        MPoly p(nvars, f);
        Expo e(nvars, 0);
        e[idx] = 1;
        p.terms_.emplace(std::move(e), f.one());
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Expo, K>& terms() const { return terms_; }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) {
            std::uint32_t s = 0;
            for (auto x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    void add_term(const Expo& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator+(const MPoly& o) const {
        check(o);
        MPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MPoly operator-(const MPoly& o) const {
        check(o);
        MPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    MPoly operator-() const {
        MPoly r(nvars_, field_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    MPoly operator*(const MPoly& o) const {
        check(o);
        MPoly r(nvars_, field_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Expo e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    MPoly scaled(const K& c) const {
        MPoly r(nvars_, field_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    K eval(const std::vector<K>& point) const {
        if (point.size() != nvars_) throw std::invalid_argument("MPoly: point arity mismatch");
        K acc = field_.zero();
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    bool is_homogeneous() const {
        bool first = true;
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) {
            std::uint32_t s = 0;
            for (auto x : e) s += x;
            if (first) {
                d = s;
                first = false;
            } else if (s != d) {
                return false;
            }
        }
        return true;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += c.str();
            else if (c.is_one())
                out += mono;
            else
                out += "(" + c.str() + ")*" + mono;
        }
        return out;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check(const MPoly& o) const {
        if (nvars_ != o.nvars_ || !(field_ == o.field_))
            throw std::invalid_argument("MPoly: arity or field mismatch");
    }

    std::size_t nvars_;
    Field field_;
    std::map<Expo, K> terms_;
};

/// Determinant of a square polynomial matrix by cofactor expansion with
/// memoization over column subsets (matrix orders here are at most 7).
template <class K>
MPoly<K> det_poly(const std::vector<std::vector<MPoly<K>>>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("det_poly: empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det_poly: not square");
    const auto& f = a[0][0].field();
    const std::size_t nvars = a[0][0].nvars();
    if (n > 16) throw std::invalid_argument("det_poly: order too large");

    // memo[mask] = det of the submatrix on rows 0..popcount(mask)-1 and the
    // column set `mask`, filled bottom-up by popcount (expansion along the
    // last row of each submatrix)
    std::vector<MPoly<K>> memo(std::size_t{1} << n, MPoly<K>(nvars, f));
    memo[0] = MPoly<K>::constant(nvars, f.one());

    std::vector<std::vector<std::uint32_t>> masks_by_count(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        masks_by_count[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);

    for (std::size_t count = 1; count <= n; ++count) {
        const std::size_t row = count - 1;
        for (const auto mask : masks_by_count[count]) {
            MPoly<K> acc(nvars, f);
            std::size_t pos = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (!(mask & (1u << c))) continue;
                const std::uint32_t sub = mask & ~(1u << c);
                if (!a[row][c].is_zero() && !memo[sub].is_zero()) {
                    auto term = a[row][c] * memo[sub];
                    acc = ((row + pos) % 2 == 0) ? acc + term : acc - term;
                }
                ++pos;
            }
            memo[mask] = std::move(acc);
        }
    }
    return memo[(std::size_t{1} << n) - 1];
}

/// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace matspace::poly
