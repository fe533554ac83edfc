#include "matspace/lie.hpp"

#include "matspace/rng.hpp"

#include <stdexcept>
#include <string>

namespace matspace::lie {

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketEntry>& entries) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("LieAlgebra: dimension must be >= 1");
    table_.assign(dim * dim, std::vector<Rat>(dim, Rat()));
    for (const auto& e : entries) {
        if (e.i >= e.j || e.j >= dim)
            throw std::invalid_argument("LieAlgebra: bracket indices must satisfy i < j < dim");
        if (e.coeffs.size() != dim)
            throw std::invalid_argument("LieAlgebra: coefficient vector has wrong length");
        table_[e.i * dim + e.j] = e.coeffs;
        std::vector<Rat> neg(dim);
        for (std::size_t k = 0; k < dim; ++k) neg[k] = -e.coeffs[k];
        table_[e.j * dim + e.i] = std::move(neg);
    }
}

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("LieAlgebra: vector length mismatch");
    std::vector<Rat> out(dim_, Rat());
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const Rat c = x[i] * y[j];
            const auto& b = basis_bracket(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                if (!b[k].is_zero()) out[k] += c * b[k];
        }
    }
    return out;
}

std::vector<LieAlgebra::BracketEntry> LieAlgebra::upper_entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const auto& c = basis_bracket(i, j);
            bool nonzero = false;
            for (const auto& x : c)
                if (!x.is_zero()) {
                    nonzero = true;
                    break;
                }
            if (nonzero) out.push_back({i, j, c});
        }
    return out;
}

bool verify_lie_algebra(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    auto basis_vec = [&](std::size_t i) {
        std::vector<Rat> v(n, Rat());
        v[i] = Rat(1);
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
                auto t1 = g.bracket(g.basis_bracket(i, j), basis_vec(k));
                auto t2 = g.bracket(g.basis_bracket(j, k), basis_vec(i));
                auto t3 = g.bracket(g.basis_bracket(k, i), basis_vec(j));
                for (std::size_t a = 0; a < n; ++a)
                    if (!(t1[a] + t2[a] + t3[a]).is_zero()) return false;
            }
    return true;
}

DerivedSeries derived_series(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const Rat::Field f;
    DerivedSeries out;

    auto current = Subspace<Rat>::full(n, f);
    out.dims.push_back(current.dim());
    while (true) {
        // span of all brackets of basis pairs of the current term
        std::vector<std::vector<Rat>> gens;
        const auto& bas = current.basis();
        for (std::size_t a = 0; a < bas.size(); ++a)
            for (std::size_t b = a + 1; b < bas.size(); ++b)
                gens.push_back(g.bracket(bas[a], bas[b]));
        auto next = Subspace<Rat>::span(n, f, std::move(gens));
        out.dims.push_back(next.dim());
        if (next.dim() == 0 || next.dim() == current.dim()) break;
        current = std::move(next);
    }
    out.solvable = (out.dims.back() == 0);
    return out;
}

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(LieAlgebra algebra, std::vector<Mat<Rat>> rho)
    : algebra_(std::move(algebra)), dim_v_(rho.empty() ? 0 : rho[0].rows()), rho_(std::move(rho)) {
    if (rho_.size() != algebra_.dim())
        throw std::invalid_argument("Representation: one matrix per basis element required");
    for (const auto& m : rho_)
        if (m.rows() != dim_v_ || m.cols() != dim_v_)
            throw std::invalid_argument("Representation: matrices must be square of equal size");
}

Mat<Rat> Representation::act(const std::vector<Rat>& x) const {
    if (x.size() != algebra_.dim())
        throw std::invalid_argument("Representation: coordinate length mismatch");
    Mat<Rat> out(dim_v_, dim_v_, Rat::Field{});
    for (std::size_t i = 0; i < rho_.size(); ++i)
        if (!x[i].is_zero()) out = out + rho_[i].scaled(x[i]);
    return out;
}

bool verify_representation(const Representation& pi) {
    const auto& g = pi.algebra();
    const auto& rho = pi.rho();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            auto lhs = rho[i].mul(rho[j]) - rho[j].mul(rho[i]);
            auto rhs = pi.act(g.basis_bracket(i, j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Constructions

TriangularAlgebra upper_triangular_algebra(std::size_t n) {
    if (n == 0) throw std::invalid_argument("upper_triangular_algebra: n must be >= 1");
    const Rat::Field f;

    // basis E_ij for i <= j, in lexicographic order of (i, j)
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) basis.emplace_back(i, j);
    const std::size_t dim = basis.size();

    auto index_of = [&](std::size_t i, std::size_t j) {
        // position of E_ij in the lexicographic basis
        return i * n - i * (i - 1) / 2 + (j - i);
    };

    std::vector<LieAlgebra::BracketEntry> entries;
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = p + 1; q < dim; ++q) {
            const auto [a, b] = basis[p];
            const auto [c, d] = basis[q];
            // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
            std::vector<Rat> coeffs(dim, Rat());
            bool nonzero = false;
            if (b == c) {
                coeffs[index_of(a, d)] += Rat(1);
                nonzero = true;
            }
            if (d == a) {
                coeffs[index_of(c, b)] -= Rat(1);
                nonzero = true;
            }
            if (nonzero) entries.push_back({p, q, std::move(coeffs)});
        }
    LieAlgebra algebra(dim, entries);

    std::vector<Mat<Rat>> rho;
    rho.reserve(dim);
    for (const auto& [i, j] : basis) {
        Mat<Rat> e(n, n, f);
        e.at(i, j) = Rat(1);
        rho.push_back(std::move(e));
    }
    return {algebra, Representation(algebra, std::move(rho))};
}

LieAlgebra transport_bracket(const Mat<Rat>& phi, const LieAlgebra& target) {
    const std::size_t n = target.dim();
    if (phi.rows() != n || phi.cols() != n)
        throw std::invalid_argument("transport_bracket: phi must be square of the algebra dimension");
    const auto phi_inv = la::inverse(phi);
    if (!phi_inv) throw std::invalid_argument("transport_bracket: phi is singular");

    auto column = [&](std::size_t j) {
        std::vector<Rat> v(n, Rat());
        for (std::size_t i = 0; i < n; ++i) v[i] = phi.at(i, j);
        return v;
    };

    std::vector<LieAlgebra::BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto w = target.bracket(column(i), column(j));
            entries.push_back({i, j, phi_inv->apply(w)});
        }
    return LieAlgebra(n, entries);
}

Representation adjoint_representation(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const Rat::Field f;
    std::vector<Mat<Rat>> rho;
    rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Mat<Rat> ad(n, n, f);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = g.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) ad.at(k, j) = c[k];
        }
        rho.push_back(std::move(ad));
    }
    return Representation(g, std::move(rho));
}

// ---------------------------------------------------------------------------
// Irreducibility

IrreducibilityReport is_absolutely_irreducible(const Representation& pi) {
    const std::size_t v = pi.dim_v();
    const Rat::Field f;
    const std::size_t vec_len = v * v;

    Subspace<Rat> span(vec_len, f);
    std::vector<Mat<Rat>> members;
    auto add = [&](const Mat<Rat>& m) {
        if (span.contains(m.vectorized())) return;
        auto gens = span.basis();
        gens.push_back(m.vectorized());
        span = Subspace<Rat>::span(vec_len, f, std::move(gens));
        members.push_back(m);
    };

    add(Mat<Rat>::identity(v, f));
    for (const auto& g : pi.rho()) add(g);
    // right-multiplying the current span by the generators reaches every
    // word, so the loop closes the unital algebra they generate
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (span.dim() == vec_len) break;
        for (const auto& g : pi.rho()) add(members[i].mul(g));
    }
    return {span.dim() == vec_len, span.dim()};
}

std::optional<Subspace<Rat>> invariant_subspace_witness(const Representation& pi,
                                                        std::uint64_t seed,
                                                        std::size_t retries) {
    const std::size_t v = pi.dim_v();
    const Rat::Field f;
    if (v <= 1) return std::nullopt; // no proper nonzero subspace exists

    auto cyclic_closure = [&](std::vector<Rat> v0) {
        auto sub = Subspace<Rat>::span(v, f, {std::move(v0)});
        std::vector<std::vector<Rat>> members = sub.basis();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (sub.dim() == v) break;
            for (const auto& g : pi.rho()) {
                auto w = g.apply(members[i]);
                if (sub.contains(w)) continue;
                auto gens = sub.basis();
                gens.push_back(w);
                sub = Subspace<Rat>::span(v, f, std::move(gens));
                members.push_back(std::move(w));
            }
        }
        return sub;
    };

    std::vector<std::vector<Rat>> starts;
    for (std::size_t i = 0; i < v; ++i) {
        std::vector<Rat> e(v, Rat());
        e[i] = Rat(1);
        starts.push_back(std::move(e));
    }
    Rng rng(seed);
    for (std::size_t r = 0; r < retries; ++r) {
        std::vector<Rat> x(v, Rat());
        bool all_zero = true;
        for (auto& c : x) {
            c = Rat(rng.next_int(-4, 4));
            all_zero = all_zero && c.is_zero();
        }
        if (all_zero) x[0] = Rat(1);
        starts.push_back(std::move(x));
    }

    for (auto& v0 : starts) {
        auto sub = cyclic_closure(std::move(v0));
        if (sub.dim() > 0 && sub.dim() < v) return sub;
    }
    return std::nullopt;
}

} // namespace matspace::lie
