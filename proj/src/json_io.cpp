#include "matspace/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace matspace::io {

using la::Fp;
using la::Mat;
using la::Rat;

namespace {

std::string type_name(const ordered_json& j) { return j.type_name(); }

const ordered_json& require_field(const ordered_json& j, const char* key,
                                  const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "/" + key, "missing required field");
    return *it;
}

std::size_t require_uint(const ordered_json& j, const char* key, const std::string& path) {
    const auto& v = require_field(j, key, path);
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
        throw ParseError(path + "/" + key, "expected a positive integer, got " + type_name(v));
    return v.get<std::size_t>();
}

const ordered_json& require_array(const ordered_json& j, const char* key,
                                  const std::string& path) {
    const auto& v = require_field(j, key, path);
    if (!v.is_array()) throw ParseError(path + "/" + key, "expected an array");
    return v;
}

template <class K>
K parse_scalar(const ordered_json& j, const typename K::Field& f, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "scalar must be a string");
    try {
        return f.parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

template <class K>
Mat<K> parse_matrix(const ordered_json& j, std::size_t rows, std::size_t cols,
                    const typename K::Field& f, const std::string& path) {
    if (!j.is_array() || j.size() != rows * cols)
        throw ParseError(path, "expected a row-major array of " + std::to_string(rows * cols) +
                                   " scalar strings");
    Mat<K> a(rows, cols, f);
    for (std::size_t k = 0; k < rows * cols; ++k)
        a.at(k / cols, k % cols) =
            parse_scalar<K>(j[k], f, path + "/" + std::to_string(k));
    return a;
}

template <class K>
spaces::MatrixSpace<K> parse_space_payload(const ordered_json& j, const typename K::Field& f,
                                           const std::string& path) {
    const std::size_t rows = require_uint(j, "rows", path);
    const std::size_t cols = require_uint(j, "cols", path);
    const auto& basis = require_array(j, "basis", path);
    if (basis.empty()) throw ParseError(path + "/basis", "basis must be nonempty");
    std::vector<Mat<K>> mats;
    for (std::size_t i = 0; i < basis.size(); ++i)
        mats.push_back(
            parse_matrix<K>(basis[i], rows, cols, f, path + "/basis/" + std::to_string(i)));
    try {
        return spaces::MatrixSpace<K>(std::move(mats));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + "/basis", e.what());
    }
}

AnySpace parse_any_space(const ordered_json& j, const std::string& path) {
    const auto& field_tag = require_field(j, "field", path);
    if (!field_tag.is_string()) throw ParseError(path + "/field", "expected \"Q\" or \"Fp:<p>\"");
    const std::string tag = field_tag.get<std::string>();
    if (tag == "Q") return parse_space_payload<Rat>(j, Rat::Field{}, path);
    if (tag.rfind("Fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(tag.substr(3));
        } catch (const std::exception&) {
            throw ParseError(path + "/field", "invalid modulus in \"" + tag + "\"");
        }
        try {
            return parse_space_payload<Fp>(j, Fp::Field(p), path);
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + "/field", e.what());
        }
    }
    throw ParseError(path + "/field", "unknown field tag \"" + tag + "\"");
}

lie::LieAlgebra parse_lie_payload(const ordered_json& j, const std::string& path) {
    const std::size_t dim = require_uint(j, "dim", path);
    std::vector<lie::LieAlgebra::BracketEntry> entries;
    if (auto it = j.find("brackets"); it != j.end()) {
        if (!it->is_array()) throw ParseError(path + "/brackets", "expected an array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string epath = path + "/brackets/" + std::to_string(k);
            const auto& e = (*it)[k];
            if (!e.is_object()) throw ParseError(epath, "expected an object {i, j, coeffs}");
            const std::size_t i = require_uint(e, "i", epath); // 1-based
            const std::size_t jj = require_uint(e, "j", epath);
            if (i >= jj || jj > dim)
                throw ParseError(epath, "bracket indices must satisfy 1 <= i < j <= dim");
            const auto& coeffs = require_array(e, "coeffs", epath);
            if (coeffs.size() != dim)
                throw ParseError(epath + "/coeffs",
                                 "expected " + std::to_string(dim) + " coefficients");
            std::vector<Rat> c;
            for (std::size_t t = 0; t < dim; ++t)
                c.push_back(parse_scalar<Rat>(coeffs[t], Rat::Field{},
                                              epath + "/coeffs/" + std::to_string(t)));
            entries.push_back({i - 1, jj - 1, std::move(c)});
        }
    }
    try {
        return lie::LieAlgebra(dim, entries);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + "/brackets", e.what());
    }
}

lie::Representation parse_rep_payload(const ordered_json& j, const std::string& base_dir,
                                      const std::string& path) {
    const auto& alg = require_field(j, "algebra", path);
    std::optional<lie::LieAlgebra> algebra;
    if (alg.is_object()) {
        algebra = parse_lie_payload(alg, path + "/algebra");
    } else if (alg.is_string()) {
        const auto ref = std::filesystem::path(base_dir) / alg.get<std::string>();
        Instance inst = parse_instance_file(ref.string());
        if (inst.kind != InstanceKind::lie_algebra || !inst.algebra)
            throw ParseError(path + "/algebra",
                             "referenced file is not a lie-algebra instance: " + ref.string());
        algebra = std::move(*inst.algebra);
    } else {
        throw ParseError(path + "/algebra", "expected an inline object or a path string");
    }

    const std::size_t dim_v = require_uint(j, "dimV", path);
    const auto& rho_json = require_array(j, "rho", path);
    if (rho_json.size() != algebra->dim())
        throw ParseError(path + "/rho", "expected one matrix per basis element (" +
                                            std::to_string(algebra->dim()) + ")");
    std::vector<Mat<Rat>> rho;
    for (std::size_t k = 0; k < rho_json.size(); ++k)
        rho.push_back(parse_matrix<Rat>(rho_json[k], dim_v, dim_v, Rat::Field{},
                                        path + "/rho/" + std::to_string(k)));
    return lie::Representation(std::move(*algebra), std::move(rho));
}

} // namespace

std::string instance_kind_name(InstanceKind k) {
    switch (k) {
        case InstanceKind::matrix_space: return "matrix-space";
        case InstanceKind::lie_algebra: return "lie-algebra";
        case InstanceKind::representation: return "representation";
        case InstanceKind::pencil: return "pencil";
    }
    return "?";
}

Instance parse_instance_json(const ordered_json& j, const std::string& base_dir) {
    if (!j.is_object()) throw ParseError("", "instance must be a JSON object");
    const auto& kind_json = require_field(j, "kind", "");
    if (!kind_json.is_string()) throw ParseError("/kind", "expected a string");
    const std::string kind = kind_json.get<std::string>();

    Instance inst;
    if (auto it = j.find("name"); it != j.end() && it->is_string())
        inst.name = it->get<std::string>();
    if (auto it = j.find("expect"); it != j.end()) {
        if (!it->is_object()) throw ParseError("/expect", "expected an object");
        inst.expect = *it;
    }

    if (kind == "matrix-space" || kind == "pencil") {
        inst.kind = (kind == "pencil") ? InstanceKind::pencil : InstanceKind::matrix_space;
        inst.space = parse_any_space(j, "");
        const std::size_t d =
            std::visit([](const auto& s) { return s.dim(); }, *inst.space);
        if (inst.kind == InstanceKind::pencil && d != 2)
            throw ParseError("/basis", "a pencil instance needs exactly 2 basis matrices");
    } else if (kind == "lie-algebra") {
        inst.kind = InstanceKind::lie_algebra;
        inst.algebra = parse_lie_payload(j, "");
    } else if (kind == "representation") {
        inst.kind = InstanceKind::representation;
        inst.rep = parse_rep_payload(j, base_dir, "");
    } else {
        throw ParseError("/kind", "unknown instance kind \"" + kind + "\"");
    }
    return inst;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return parse_instance_json(j, std::filesystem::path(path).parent_path().string());
}

// --- serialization ------------------------------------------------------

namespace {

template <class K>
la::Subspace<K> subspace_from_json(const ordered_json& j, const typename K::Field& f,
                                   const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected a subspace object");
    const auto& ambient_json = require_field(j, "ambient", path);
    if (!ambient_json.is_number_integer() || ambient_json.get<std::int64_t>() <= 0)
        throw ParseError(path + "/ambient", "expected a positive size");
    const std::size_t ambient = ambient_json.get<std::size_t>();
    const auto& basis = require_array(j, "basis", path);
    std::vector<std::vector<K>> vecs;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        if (!basis[c].is_array() || basis[c].size() != ambient)
            throw ParseError(path + "/basis/" + std::to_string(c),
                             "expected a vector of length " + std::to_string(ambient));
        std::vector<K> v;
        for (std::size_t i = 0; i < ambient; ++i)
            v.push_back(parse_scalar<K>(basis[c][i], f,
                                        path + "/basis/" + std::to_string(c) + "/" +
                                            std::to_string(i)));
        vecs.push_back(std::move(v));
    }
    return la::Subspace<K>::span(ambient, f, std::move(vecs));
}

} // namespace

namespace {

std::size_t require_size(const ordered_json& j, const char* key, const std::string& path) {
    const auto& v = require_field(j, key, path);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ParseError(path + "/" + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

} // namespace

template <class K>
spaces::CompressionCertificate<K> certificate_from_json(const ordered_json& j,
                                                        const typename K::Field& field) {
    if (!j.is_object()) throw ParseError("", "certificate must be a JSON object");
    const std::size_t k1 = require_size(j, "k1", "");
    const std::size_t k2 = require_size(j, "k2", "");
    const std::size_t rank = j.contains("rank") ? require_size(j, "rank", "") : k1 + k2;
    return spaces::CompressionCertificate<K>{
        k1, k2, rank,
        subspace_from_json<K>(require_field(j, "v_prime", ""), field, "/v_prime"),
        subspace_from_json<K>(require_field(j, "w_prime", ""), field, "/w_prime")};
}

template spaces::CompressionCertificate<Rat> certificate_from_json<Rat>(const ordered_json&,
                                                                        const Rat::Field&);
template spaces::CompressionCertificate<Fp> certificate_from_json<Fp>(const ordered_json&,
                                                                      const Fp::Field&);

ordered_json pencil_invariants_to_json(const pencil::PencilInvariants& inv) {
    return ordered_json{{"normal_rank", inv.normal_rank},
                        {"right_minimal_indices", inv.right_minimal_indices},
                        {"left_minimal_indices", inv.left_minimal_indices},
                        {"minor_gcd_degree", inv.minor_gcd_degree},
                        {"minor_gcd", inv.minor_gcd.str()}};
}

ordered_json lie_to_json(const lie::LieAlgebra& g) {
    ordered_json brackets = ordered_json::array();
    for (const auto& e : g.upper_entries()) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : e.coeffs) coeffs.push_back(c.str());
        brackets.push_back(
            ordered_json{{"i", e.i + 1}, {"j", e.j + 1}, {"coeffs", std::move(coeffs)}});
    }
    return ordered_json{{"dim", g.dim()}, {"brackets", std::move(brackets)}};
}

ordered_json representation_to_json(const lie::Representation& pi) {
    ordered_json rho = ordered_json::array();
    for (const auto& m : pi.rho()) rho.push_back(matrix_to_json(m));
    return ordered_json{{"algebra", lie_to_json(pi.algebra())},
                        {"dimV", pi.dim_v()},
                        {"rho", std::move(rho)}};
}

} // namespace matspace::io
