#include "matspace/bridge.hpp"

#include <stdexcept>

namespace matspace::bridge {

std::size_t sections_dim_p1(long n) {
    return n >= 0 ? static_cast<std::size_t>(n) + 1 : 0;
}

SectionAlgebra build_section_algebra(std::size_t n) {
    const std::size_t dim = n + 1;

    // triangular number? then transport the T_k bracket through the
    // coordinate bijection (the identity on the fixed bases)
    for (std::size_t k = 1; k * (k + 1) / 2 <= dim; ++k) {
        if (k * (k + 1) / 2 != dim) continue;
        auto tk = lie::upper_triangular_algebra(k);
        auto phi = la::Mat<Rat>::identity(dim, Rat::Field{});
        return {lie::transport_bracket(phi, tk.algebra),
                "triangular-transport(T_" + std::to_string(k) + ")"};
    }

    // scaling bracket: the top section acts as the identity on the rest
    std::vector<lie::LieAlgebra::BracketEntry> entries;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        std::vector<Rat> coeffs(dim, Rat());
        coeffs[i] = Rat(-1); // [e_i, e_top] = -e_i, i.e. [e_top, e_i] = e_i
        entries.push_back({i, dim - 1, std::move(coeffs)});
    }
    return {lie::LieAlgebra(dim, entries), "scaling"};
}

TrivialityPair trivial_iff_irreducible_pair(long n) {
    if (n < 0)
        throw std::invalid_argument(
            "trivial_iff_irreducible_pair: O(n) with n < 0 has no sections to generate by");

    TrivialityPair out;
    out.trivial = (n == 0);
    out.dim_ve = sections_dim_p1(n);

    auto section = build_section_algebra(static_cast<std::size_t>(n));
    if (!verify_lie_algebra(section.algebra))
        throw std::logic_error("trivial_iff_irreducible_pair: section algebra fails Jacobi");
    if (!derived_series(section.algebra).solvable)
        throw std::logic_error("trivial_iff_irreducible_pair: section algebra not solvable");

    // a solvable algebra has a faithful absolutely irreducible representation
    // iff its dimension is <= 1; in that case exhibit and verify one
    out.has_irreducible_pair = (out.dim_ve <= 1);
    if (out.has_irreducible_pair) {
        lie::Representation pi(section.algebra,
                               {la::Mat<Rat>::identity(1, Rat::Field{})});
        if (!lie::verify_representation(pi) || !lie::is_absolutely_irreducible(pi).irreducible)
            throw std::logic_error("trivial_iff_irreducible_pair: witness representation invalid");
    }

    if (out.trivial != out.has_irreducible_pair)
        throw std::logic_error("trivial_iff_irreducible_pair: biconditional violated");
    return out;
}

std::string degree_case_name(DegreeCase c) {
    switch (c) {
        case DegreeCase::all_trivial: return "all-trivial";
        case DegreeCase::all_nontrivial: return "all-nontrivial";
        case DegreeCase::mixed: return "mixed";
    }
    return "?";
}

CorrespondenceCheck theorem_correspondence_check(const std::vector<long>& degrees,
                                                 const std::vector<lie::Representation>& reps) {
    if (degrees.size() != reps.size())
        throw std::invalid_argument("theorem_correspondence_check: length mismatch");
    if (degrees.empty())
        throw std::invalid_argument("theorem_correspondence_check: empty decomposition");

    bool any_zero = false, any_nonzero = false;
    for (long n : degrees) {
        if (n < 0)
            throw std::invalid_argument("theorem_correspondence_check: negative degree");
        (n == 0 ? any_zero : any_nonzero) = true;
    }

    CorrespondenceCheck out;
    out.degree_case = any_zero && any_nonzero
                          ? DegreeCase::mixed
                          : (any_zero ? DegreeCase::all_trivial : DegreeCase::all_nontrivial);

    out.consistent = true;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (reps[i].algebra().dim() != sections_dim_p1(degrees[i]))
            throw std::invalid_argument(
                "theorem_correspondence_check: representation " + std::to_string(i) +
                " is not over the section algebra of its degree");
        const bool irr = lie::is_absolutely_irreducible(reps[i]).irreducible;
        const bool expected_irr = (degrees[i] == 0);
        if (irr != expected_irr) out.consistent = false;
    }
    return out;
}

bool generation_check(const MatrixSpace<Fp>& s, std::size_t claimed_fiber_dim) {
    la::ProjectivePoints pts(s.dim(), s.field());
    while (auto t = pts.next())
        if (la::rank_of(s.evaluate(*t)) != claimed_fiber_dim) return false;
    return true;
}

bool generation_check(const MatrixSpace<Rat>& s, std::size_t claimed_fiber_dim,
                      const std::vector<std::vector<Rat>>& points) {
    for (const auto& t : points)
        if (la::rank_of(evaluate_phi(s, t)) != claimed_fiber_dim) return false;
    return true;
}

namespace detail {

RepViewEntry make_trivial_summand(char side) {
    auto section = build_section_algebra(0);
    lie::Representation pi(section.algebra, {la::Mat<Rat>::identity(1, Rat::Field{})});
    if (!lie::verify_representation(pi))
        throw std::logic_error("make_trivial_summand: homomorphism check failed");
    const auto irr = lie::is_absolutely_irreducible(pi);
    return {side, std::move(section), std::move(pi), irr.irreducible, irr.enveloping_dim};
}

} // namespace detail

} // namespace matspace::bridge
