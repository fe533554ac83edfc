#pragma once

#include "matspace/compression.hpp"
#include "matspace/lie.hpp"
#include "matspace/matrix_space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace matspace::bridge {

using spaces::Fp;
using spaces::MatrixSpace;
using spaces::Rat;

/// dim of the space of global sections of O(n) on P^1: n + 1 for n >= 0
/// (the degree-n binary forms), 0 for negative n.
std::size_t sections_dim_p1(long n);

/// A solvable Lie algebra on the (n+1)-dimensional section space of O(n),
/// together with a tag naming which bracket was chosen: the bracket
/// transported from the upper-triangular algebra T_k when n+1 = k(k+1)/2,
/// or the scaling bracket [e_top, e_i] = e_i otherwise.
struct SectionAlgebra {
    lie::LieAlgebra algebra;
    std::string construction; // "triangular-transport(T_k)" or "scaling"
};

SectionAlgebra build_section_algebra(std::size_t n);

struct TrivialityPair {
    bool trivial = false;            // the bundle O(n) is trivial, i.e. n = 0
    std::size_t dim_ve = 0;          // dim of the section space
    bool has_irreducible_pair = false; // a faithful absolutely irreducible
                                       // representation exists over the
                                       // (solvable) section algebra
};

/// The executable biconditional: O(n) is trivial iff its solvable section
/// algebra admits a faithful absolutely irreducible representation, which
/// for solvable algebras happens exactly in dimension <= 1. The two sides
/// are computed independently and asserted equal.
TrivialityPair trivial_iff_irreducible_pair(long n);

enum class DegreeCase { all_trivial, all_nontrivial, mixed };

std::string degree_case_name(DegreeCase c);

struct CorrespondenceCheck {
    DegreeCase degree_case;
    bool consistent = false;
};

/// Per-summand consistency of a degree list against representations over
/// the matching section algebras: degree-0 summands must pair with
/// absolutely irreducible representations, nonzero degrees with reducible
/// ones.
CorrespondenceCheck theorem_correspondence_check(const std::vector<long>& degrees,
                                                 const std::vector<lie::Representation>& reps);

/// The fiber of the evaluation map at the point [t]: the element
/// sum t_i A_i. Throws on the zero point.
template <class K>
la::Mat<K> evaluate_phi(const MatrixSpace<K>& s, const std::vector<K>& point) {
    bool all_zero = true;
    for (const auto& x : point) all_zero = all_zero && x.is_zero();
    if (all_zero) throw std::invalid_argument("evaluate_phi: zero point");
    return s.evaluate(point);
}

/// Operational surjectivity of the evaluation map onto the claimed fiber:
/// rank of the element at every point of P^(d-1)(F_p) equals
/// claimed_fiber_dim.
bool generation_check(const MatrixSpace<Fp>& s, std::size_t claimed_fiber_dim);

/// Same check over Q at the supplied sample points.
bool generation_check(const MatrixSpace<Rat>& s, std::size_t claimed_fiber_dim,
                      const std::vector<std::vector<Rat>>& points);

/// One trivial summand of the classification, with its section algebra and
/// tautologically irreducible one-dimensional representation.
struct RepViewEntry {
    char side;               // 'L' (domain side, count k1) or 'T' (codomain side, count k2)
    SectionAlgebra algebra;  // one-dimensional
    lie::Representation rep; // one-dimensional, faithful
    bool irreducible = false;
    std::size_t enveloping_dim = 0;
};

/// Output of classify_rank2: either primitive (no certificate) or a
/// compression split with the representation-side view attached. The
/// biconditional "certificate exists iff rep_view is nonempty and
/// all-irreducible" holds by checked construction.
template <class K>
struct ClassificationReport {
    bool primitive = true;
    std::optional<std::pair<std::size_t, std::size_t>> split;
    std::optional<spaces::CompressionCertificate<K>> certificate;
    std::size_t l_side_trivial = 0; // bundle view: trivial summand counts
    std::size_t t_side_trivial = 0;
    std::vector<RepViewEntry> rep_view;
    std::uint64_t seed = 0; // reproducibility metadata
    std::size_t retries = 0;
};

namespace detail {

RepViewEntry make_trivial_summand(char side);

} // namespace detail

/// Runs the rank-2 compression detector and grounds the representation
/// side: one 1-dimensional section algebra and representation per trivial
/// summand (k1 on the L side, k2 on the T side), each verified
/// absolutely irreducible; a space with no certificate is primitive.
template <class K>
ClassificationReport<K> classify_rank2(const MatrixSpace<K>& s, std::uint64_t seed,
                                       std::size_t retries = 16) {
    ClassificationReport<K> report;
    report.seed = seed;
    report.retries = retries;
    auto cert = spaces::detect_compression_rank2(s, seed, retries);
    if (!cert) return report;

    report.primitive = false;
    report.split = {cert->k1, cert->k2};
    report.l_side_trivial = cert->k1;
    report.t_side_trivial = cert->k2;
    for (std::size_t i = 0; i < cert->k1; ++i)
        report.rep_view.push_back(detail::make_trivial_summand('L'));
    for (std::size_t i = 0; i < cert->k2; ++i)
        report.rep_view.push_back(detail::make_trivial_summand('T'));
    report.certificate = std::move(cert);

    if (report.rep_view.empty())
        throw std::logic_error("classify_rank2: certificate with empty representation view");
    for (const auto& e : report.rep_view)
        if (!e.irreducible)
            throw std::logic_error("classify_rank2: trivial summand with reducible representation");
    return report;
}

} // namespace matspace::bridge
