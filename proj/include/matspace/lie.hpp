#pragma once

#include "matspace/mat.hpp"
#include "matspace/rat.hpp"
#include "matspace/subspace.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace matspace::lie {

using la::Mat;
using la::Rat;
using la::Subspace;

/// Lie algebra over Q given by structure constants on a fixed basis
/// e_0..e_{n-1}: [e_i, e_j] = sum_k c_ij^k e_k, extended antisymmetrically.
/// Construction does not check the Jacobi identity; use verify_lie_algebra.
class LieAlgebra {
public:
    /// One bracket [e_i, e_j] (i < j, 0-based) with its coefficient vector.
    struct BracketEntry {
        std::size_t i, j;
        std::vector<Rat> coeffs;
    };

    LieAlgebra(std::size_t dim, const std::vector<BracketEntry>& entries);

    std::size_t dim() const { return dim_; }

    /// Coefficients of [e_i, e_j] for any i, j (antisymmetry built in).
    const std::vector<Rat>& basis_bracket(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    /// The nonzero upper brackets (i < j), for serialization.
    std::vector<BracketEntry> upper_entries() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Rat>> table_; // [i*dim + j] -> coeffs of [e_i, e_j]
};

/// True iff the Jacobi identity holds on every basis triple.
bool verify_lie_algebra(const LieAlgebra& g);

struct DerivedSeries {
    std::vector<std::size_t> dims; // dims of g, [g,g], ... until stabilization
    bool solvable = false;         // terminal dimension is zero
};

DerivedSeries derived_series(const LieAlgebra& g);

/// Finite-dimensional representation pi: g -> gl(V) over Q, one matrix per
/// basis element. Construction checks shapes only; the homomorphism
/// property is checked by verify_representation.
class Representation {
public:
    Representation(LieAlgebra algebra, std::vector<Mat<Rat>> rho);

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t dim_v() const { return dim_v_; }
    const std::vector<Mat<Rat>>& rho() const { return rho_; }

    /// Image of a coordinate vector of the algebra, as a matrix on V.
    Mat<Rat> act(const std::vector<Rat>& x) const;

private:
    LieAlgebra algebra_;
    std::size_t dim_v_;
    std::vector<Mat<Rat>> rho_;
};

/// Exact homomorphism check: [rho_i, rho_j] = sum_k c_ij^k rho_k for all
/// basis pairs.
bool verify_representation(const Representation& pi);

struct TriangularAlgebra {
    LieAlgebra algebra;
    Representation tautological; // the defining matrices E_ij; faithful
};

/// The Lie algebra T_n of n x n upper triangular matrices under AB - BA,
/// on the basis E_ij (i <= j, ordered lexicographically), together with its
/// tautological matrix realization.
TriangularAlgebra upper_triangular_algebra(std::size_t n);

/// Pulls the target's bracket back through the linear bijection phi
/// (source coordinates -> target coordinates), making phi a Lie-algebra
/// isomorphism by construction. Throws on singular phi.
LieAlgebra transport_bracket(const Mat<Rat>& phi, const LieAlgebra& target);

/// ad(e_i) as matrices; a representation by the Jacobi identity.
Representation adjoint_representation(const LieAlgebra& g);

struct IrreducibilityReport {
    bool irreducible = false;     // absolutely, i.e. over C
    std::size_t enveloping_dim = 0;
};

/// Burnside criterion, decided from rational data: the representation is
/// absolutely irreducible iff the unital associative algebra generated by
/// the rho_i (iterated span closure under products) has dimension
/// (dim V)^2. Deterministic and exact.
IrreducibilityReport is_absolutely_irreducible(const Representation& pi);

/// Searches for a proper nonzero invariant subspace among the cyclic
/// submodules generated by each basis vector and `retries` seeded random
/// vectors. Best effort: a nullopt does not certify irreducibility (an
/// absolutely reducible representation may have no rational invariant
/// subspace); combine with is_absolutely_irreducible.
std::optional<Subspace<Rat>> invariant_subspace_witness(const Representation& pi,
                                                        std::uint64_t seed,
                                                        std::size_t retries = 8);

} // namespace matspace::lie
