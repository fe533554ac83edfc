#pragma once

#include "matspace/bridge.hpp"
#include "matspace/compression.hpp"
#include "matspace/lie.hpp"
#include "matspace/matrix_space.hpp"
#include "matspace/pencil.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace matspace::io {

using nlohmann::ordered_json;

/// Schema or scalar violation, carrying the JSON pointer of the first
/// offending field.
struct ParseError : std::runtime_error {
    ParseError(const std::string& pointer, const std::string& message)
        : std::runtime_error(pointer + ": " + message), pointer_path(pointer) {}
    std::string pointer_path;
};

enum class InstanceKind { matrix_space, lie_algebra, representation, pencil };

std::string instance_kind_name(InstanceKind k);

using AnySpace = std::variant<spaces::MatrixSpace<la::Rat>, spaces::MatrixSpace<la::Fp>>;

/// A parsed and schema-validated instance file. Exactly one of the payload
/// members is populated, matching the kind.
struct Instance {
    InstanceKind kind;
    std::string name;    // optional metadata
    ordered_json expect; // optional expected-results object for regression
    std::optional<AnySpace> space;
    std::optional<lie::LieAlgebra> algebra;
    std::optional<lie::Representation> rep;
};

Instance parse_instance_file(const std::string& path);
/// base_dir resolves relative paths in "algebra" references.
Instance parse_instance_json(const ordered_json& j, const std::string& base_dir);

// --- serialization ------------------------------------------------------

template <class K>
ordered_json matrix_to_json(const la::Mat<K>& a) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.at(i, j).str());
    return out;
}

template <class K>
ordered_json subspace_to_json(const la::Subspace<K>& s) {
    ordered_json basis = ordered_json::array();
    for (const auto& v : s.basis()) {
        ordered_json col = ordered_json::array();
        for (const auto& x : v) col.push_back(x.str());
        basis.push_back(std::move(col));
    }
    return ordered_json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

template <class K>
ordered_json space_to_json(const spaces::MatrixSpace<K>& s) {
    ordered_json basis = ordered_json::array();
    for (const auto& a : s.basis()) basis.push_back(matrix_to_json(a));
    return ordered_json{{"field", s.field().name()},
                        {"rows", s.rows()},
                        {"cols", s.cols()},
                        {"basis", std::move(basis)}};
}

template <class K>
ordered_json verdict_to_json(const spaces::RankVerdict<K>& v) {
    ordered_json out;
    out["generic_rank"] = v.generic_rank;
    ordered_json w = ordered_json::array();
    for (const auto& x : v.witness) w.push_back(x.str());
    out["witness"] = std::move(w);
    out["upper_bound"] = v.upper_bound_certified ? "exact-certified"
                         : v.exhaustive          ? "field-exhaustive"
                                                 : "sampled-only";
    out["sampled_only"] = v.sampled_only();
    if (v.constant_rank) {
        const auto& c = *v.constant_rank;
        ordered_json cr;
        cr["status"] = spaces::rank_status_name(c.status);
        cr["constant"] = c.constant();
        if (c.prime != 0) cr["prime"] = c.prime;
        if (!c.witness_coeffs.empty()) {
            cr["counterexample"] = ordered_json{{"coefficients", c.witness_coeffs},
                                                {"rank", c.witness_rank}};
        }
        if (!c.minor_gcd.empty()) cr["minor_gcd"] = c.minor_gcd;
        out["constant_rank"] = std::move(cr);
    }
    return out;
}

template <class K>
ordered_json certificate_to_json(const spaces::CompressionCertificate<K>& c) {
    return ordered_json{{"k1", c.k1},
                        {"k2", c.k2},
                        {"rank", c.rank},
                        {"v_prime", subspace_to_json(c.v_prime)},
                        {"w_prime", subspace_to_json(c.w_prime)}};
}

/// Reads a certificate back; the field and ambient dimensions come from the
/// space it will be verified against.
template <class K>
spaces::CompressionCertificate<K> certificate_from_json(const ordered_json& j,
                                                        const typename K::Field& field);

ordered_json pencil_invariants_to_json(const pencil::PencilInvariants& inv);
ordered_json lie_to_json(const lie::LieAlgebra& g);
ordered_json representation_to_json(const lie::Representation& pi);

template <class K>
ordered_json classification_to_json(const bridge::ClassificationReport<K>& r) {
    ordered_json out;
    out["primitive"] = r.primitive;
    if (r.split) out["split"] = ordered_json::array({r.split->first, r.split->second});
    if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
    out["bundle_view"] =
        ordered_json{{"l_side_trivial", r.l_side_trivial}, {"t_side_trivial", r.t_side_trivial}};
    ordered_json reps = ordered_json::array();
    for (const auto& e : r.rep_view) {
        reps.push_back(ordered_json{{"side", std::string(1, e.side)},
                                    {"algebra_dim", e.algebra.algebra.dim()},
                                    {"construction", e.algebra.construction},
                                    {"rho", {matrix_to_json(e.rep.rho()[0])}},
                                    {"irreducible", e.irreducible},
                                    {"enveloping_dim", e.enveloping_dim}});
    }
    out["rep_view"] = std::move(reps);
    out["metadata"] = ordered_json{{"seed", r.seed}, {"retries", r.retries}};
    return out;
}

} // namespace matspace::io
