#include "matspace/cli.hpp"

#include "matspace/bridge.hpp"
#include "matspace/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace matspace::cli {

namespace {

using io::AnySpace;
using io::Instance;
using io::InstanceKind;
using io::ordered_json;
using la::Fp;
using la::Rat;
using spaces::MatrixSpace;

struct Options {
    std::string instance_path;
    std::string field;             // "", "q", "fp:<p>"
    std::uint64_t prime = 101;     // exhaustion prime for constant-rank
    std::uint64_t seed = 0;
    std::size_t retries = 16;
    bool json_compact = false;
    bool quiet = false;
    std::uint64_t budget = 1'000'000;
    bool strict_expect = false;
    bool force = false;

    // command-specific
    std::size_t k1 = 0, k2 = 0; // oracle
    std::string verify_path;    // compression --verify
    long sections_dim_n = 0;    // bridge
    long triviality_n = 0;
    long section_algebra_n = 0;
    std::size_t generation_dim = 0;
};

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- shared helpers ------------------------------------------------------

Instance load_instance(const Options& o) {
    Instance inst = io::parse_instance_file(o.instance_path);
    if (o.field.empty() || !inst.space) return inst;

    if (o.field == "q") {
        if (std::holds_alternative<MatrixSpace<Fp>>(*inst.space))
            throw CliError("cannot lift a prime-field instance to Q");
        return inst;
    }
    if (o.field.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(o.field.substr(3));
        } catch (const std::exception&) {
            throw CliError("invalid --field value \"" + o.field + "\"");
        }
        const Fp::Field f(p); // validates odd prime
        if (auto* q = std::get_if<MatrixSpace<Rat>>(&*inst.space)) {
            inst.space = spaces::reduce_mod_p(*q, f);
        } else {
            const auto& s = std::get<MatrixSpace<Fp>>(*inst.space);
            if (s.field().p != p)
                throw CliError("instance is over " + s.field().name() +
                               "; cannot convert between prime fields");
        }
        return inst;
    }
    throw CliError("invalid --field value \"" + o.field + "\" (use q or fp:<p>)");
}

void check_desk_guard(std::size_t rows, std::size_t cols, std::size_t d, const Options& o) {
    if (o.force) return;
    if (rows > 6 || cols > 6 || d > 4)
        throw CliError("desk-scale guard: symbolic minors refused for rows/cols > 6 or more "
                       "than 4 generators (here " +
                       std::to_string(rows) + "x" + std::to_string(cols) + ", d = " +
                       std::to_string(d) + "); pass --force to override");
}

int finish(const ordered_json& report, const Instance* inst, const Options& o, std::ostream& out,
           std::ostream& err, const std::string& human) {
    out << (o.json_compact ? report.dump() : report.dump(2)) << "\n";
    if (!o.quiet && !human.empty()) err << human << "\n";

    if (o.strict_expect && inst && inst->expect.is_object()) {
        std::string diag;
        std::function<bool(const ordered_json&, const ordered_json&, const std::string&)> match =
            [&](const ordered_json& expect, const ordered_json& actual,
                const std::string& path) -> bool {
            for (auto it = expect.begin(); it != expect.end(); ++it) {
                const std::string sub = path + "/" + it.key();
                if (!actual.contains(it.key())) {
                    diag = sub + ": missing in report";
                    return false;
                }
                const auto& a = actual.at(it.key());
                if (it.value().is_object() && a.is_object()) {
                    if (!match(it.value(), a, sub)) return false;
                } else if (it.value() != a) {
                    diag = sub + ": expected " + it.value().dump() + ", got " + a.dump();
                    return false;
                }
            }
            return true;
        };
        if (!match(inst->expect, report, "")) {
            err << "expectation mismatch: " << diag << "\n";
            return 2;
        }
    }
    return 0;
}

// --- analyses ------------------------------------------------------------

template <class K>
ordered_json space_report(const MatrixSpace<K>& s, const Options& o, bool with_pencil) {
    if constexpr (std::is_same_v<K, Rat>) check_desk_guard(s.rows(), s.cols(), s.dim(), o);

    ordered_json out;
    out["field"] = s.field().name();
    out["rows"] = s.rows();
    out["cols"] = s.cols();
    out["dim"] = s.dim();

    const auto verdict = spaces::constant_rank_verdict(s, o.prime);
    out["rank"] = io::verdict_to_json(verdict);

    const auto common = spaces::common_kernel_and_image(s);
    out["common_kernel_dim"] = common.common_kernel.dim();
    out["image_sum_dim"] = common.image_sum.dim();

    if (with_pencil) {
        if constexpr (std::is_same_v<K, Rat>) {
            const auto inv = pencil::kronecker_minimal_indices(s.basis()[0], s.basis()[1]);
            out["pencil_invariants"] = io::pencil_invariants_to_json(inv);
        }
    }

    if (verdict.generic_rank <= 2) {
        out["classification"] =
            io::classification_to_json(bridge::classify_rank2(s, o.seed, o.retries));
    } else {
        out["classification"] = ordered_json{
            {"skipped", "generic rank " + std::to_string(verdict.generic_rank) + " exceeds 2"}};
    }
    return out;
}

ordered_json lie_report(const lie::LieAlgebra& g) {
    ordered_json out;
    out["dim"] = g.dim();
    out["jacobi"] = lie::verify_lie_algebra(g);
    const auto series = lie::derived_series(g);
    out["derived_dims"] = series.dims;
    out["solvable"] = series.solvable;
    return out;
}

ordered_json rep_report(const lie::Representation& pi, const Options& o) {
    ordered_json out;
    out["algebra_dim"] = pi.algebra().dim();
    out["dimV"] = pi.dim_v();
    out["homomorphism"] = lie::verify_representation(pi);
    const auto irr = lie::is_absolutely_irreducible(pi);
    out["irreducible"] = irr.irreducible;
    out["enveloping_dim"] = irr.enveloping_dim;
    if (auto w = lie::invariant_subspace_witness(pi, o.seed, o.retries))
        out["invariant_subspace"] = io::subspace_to_json(*w);
    else
        out["invariant_subspace"] = nullptr;
    return out;
}

// --- commands ------------------------------------------------------------

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(o);
    ordered_json report;
    report["kind"] = io::instance_kind_name(inst.kind);
    if (!inst.name.empty()) report["name"] = inst.name;
    std::string human;

    switch (inst.kind) {
        case InstanceKind::matrix_space:
        case InstanceKind::pencil: {
            const bool with_pencil = inst.kind == InstanceKind::pencil &&
                                     std::holds_alternative<MatrixSpace<Rat>>(*inst.space);
            std::visit(
                [&](const auto& s) { report.update(space_report(s, o, with_pencil)); },
                *inst.space);
            std::ostringstream h;
            h << "generic rank " << report["rank"]["generic_rank"] << "; constant-rank status "
              << report["rank"]["constant_rank"]["status"].get<std::string>();
            if (report["classification"].contains("primitive"))
                h << (report["classification"]["primitive"].get<bool>()
                          ? "; primitive (no rank-2 compression)"
                          : "; compression space");
            human = h.str();
            break;
        }
        case InstanceKind::lie_algebra: {
            report.update(lie_report(*inst.algebra));
            human = std::string("Jacobi ") +
                    (report["jacobi"].get<bool>() ? "holds" : "fails") +
                    (report["solvable"].get<bool>() ? "; solvable" : "; not solvable");
            break;
        }
        case InstanceKind::representation: {
            report.update(rep_report(*inst.rep, o));
            human = std::string("homomorphism ") +
                    (report["homomorphism"].get<bool>() ? "holds" : "fails") +
                    (report["irreducible"].get<bool>() ? "; absolutely irreducible"
                                                       : "; reducible");
            break;
        }
    }
    return finish(report, &inst, o, out, err, human);
}

int cmd_constant_rank(const Options& o, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(o);
    if (!inst.space) throw CliError("constant-rank needs a matrix-space or pencil instance");
    ordered_json report;
    std::visit(
        [&](const auto& s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, MatrixSpace<Rat>>)
                check_desk_guard(s.rows(), s.cols(), s.dim(), o);
            report = io::verdict_to_json(spaces::constant_rank_verdict(s, o.prime));
            report["field"] = s.field().name();
        },
        *inst.space);
    const std::string human =
        "constant-rank status " + report["constant_rank"]["status"].get<std::string>();
    return finish(report, &inst, o, out, err, human);
}

int cmd_compression(const Options& o, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(o);
    if (!inst.space) throw CliError("compression needs a matrix-space or pencil instance");

    if (!o.verify_path.empty()) {
        std::ifstream in(o.verify_path);
        if (!in) throw CliError("cannot open certificate file: " + o.verify_path);
        ordered_json j = ordered_json::parse(in);
        // accept a raw certificate, a compression report, or an analyze report
        if (j.contains("classification")) j = j["classification"];
        if (j.contains("certificate")) j = j["certificate"];
        ordered_json report;
        std::visit(
            [&](const auto& s) {
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>, MatrixSpace<Rat>>) {
                    auto cert = io::certificate_from_json<Rat>(j, s.field());
                    report["verified"] = spaces::verify_certificate(s, cert);
                } else {
                    auto cert = io::certificate_from_json<Fp>(j, s.field());
                    report["verified"] = spaces::verify_certificate(s, cert);
                }
            },
            *inst.space);
        return finish(report, &inst, o, out, err,
                      report["verified"].get<bool>() ? "certificate verified"
                                                     : "certificate rejected");
    }

    ordered_json report;
    std::visit(
        [&](const auto& s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, MatrixSpace<Rat>>)
                check_desk_guard(s.rows(), s.cols(), s.dim(), o);
            report = io::classification_to_json(bridge::classify_rank2(s, o.seed, o.retries));
        },
        *inst.space);
    const std::string human = report["primitive"].get<bool>()
                                  ? "primitive: no rank-2 compression"
                                  : "compression space; split (" +
                                        report["split"][0].dump() + ", " +
                                        report["split"][1].dump() + ")";
    return finish(report, &inst, o, out, err, human);
}

int cmd_pencil_invariants(const Options& o, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(o);
    if (!inst.space) throw CliError("pencil-invariants needs a pencil instance");
    const auto* s = std::get_if<MatrixSpace<Rat>>(&*inst.space);
    if (!s) throw CliError("pencil invariants are computed over Q");
    if (s->dim() != 2) throw CliError("pencil-invariants needs exactly 2 basis matrices");
    check_desk_guard(s->rows(), s->cols(), s->dim(), o);
    const auto inv = pencil::kronecker_minimal_indices(s->basis()[0], s->basis()[1]);
    ordered_json report = io::pencil_invariants_to_json(inv);
    report["constant_rank"] = (inv.minor_gcd_degree == 0);
    return finish(report, &inst, o, out, err,
                  "normal rank " + std::to_string(inv.normal_rank) + "; minor gcd degree " +
                      std::to_string(inv.minor_gcd_degree));
}

int cmd_lie_check(const Options& o, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(o);
    if (!inst.algebra) throw CliError("lie-check needs a lie-algebra instance");
    ordered_json report = lie_report(*inst.algebra);
    return finish(report, &inst, o, out, err,
                  std::string(report["jacobi"].get<bool>() ? "Jacobi holds" : "Jacobi fails") +
                      (report["solvable"].get<bool>() ? "; solvable" : "; not solvable"));
}

int cmd_irreducible(const Options& o, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(o);
    if (!inst.rep) throw CliError("irreducible needs a representation instance");
    ordered_json report = rep_report(*inst.rep, o);
    return finish(report, &inst, o, out, err,
                  report["irreducible"].get<bool>()
                      ? "absolutely irreducible"
                      : "reducible (enveloping dimension " +
                            std::to_string(report["enveloping_dim"].get<std::size_t>()) + ")");
}

int cmd_bridge(const Options& o, bool has_sections, bool has_triviality, bool has_algebra,
               bool has_generation, std::ostream& out, std::ostream& err) {
    if (has_sections) {
        ordered_json report = bridge::sections_dim_p1(o.sections_dim_n);
        return finish(report, nullptr, o, out, err,
                      "dim of sections of O(" + std::to_string(o.sections_dim_n) + ") on P^1");
    }
    if (has_triviality) {
        const auto pair = bridge::trivial_iff_irreducible_pair(o.triviality_n);
        ordered_json report{{"n", o.triviality_n},
                            {"trivial", pair.trivial},
                            {"dim_VE", pair.dim_ve},
                            {"has_irreducible_pair", pair.has_irreducible_pair}};
        return finish(report, nullptr, o, out, err,
                      pair.trivial ? "trivial bundle; irreducible pair exists"
                                   : "nontrivial bundle; no irreducible pair");
    }
    if (has_algebra) {
        if (o.section_algebra_n < 0) throw CliError("--section-algebra needs n >= 0");
        const auto sa = bridge::build_section_algebra(static_cast<std::size_t>(o.section_algebra_n));
        const auto series = lie::derived_series(sa.algebra);
        ordered_json report{{"n", o.section_algebra_n},
                            {"construction", sa.construction},
                            {"derived_dims", series.dims},
                            {"solvable", series.solvable},
                            {"algebra", io::lie_to_json(sa.algebra)}};
        return finish(report, nullptr, o, out, err, "section algebra built: " + sa.construction);
    }

    if (has_generation) {
        if (o.instance_path.empty())
            throw CliError("--generation-check needs a matrix-space instance");
        Instance gi = load_instance(o);
        if (!gi.space) throw CliError("--generation-check needs a matrix-space instance");
        const auto* s = std::get_if<MatrixSpace<Fp>>(&*gi.space);
        if (!s)
            throw CliError("the generation check exhausts a prime field; supply an F_p "
                           "instance or --field fp:<p>");
        const bool generated = bridge::generation_check(*s, o.generation_dim);
        ordered_json report{{"claimed_fiber_dim", o.generation_dim},
                            {"prime", s->field().p},
                            {"generated", generated}};
        return finish(report, &gi, o, out, err,
                      generated ? "generated at every point of projective space"
                                : "a fiber drops below the claimed dimension");
    }

    // classification of a matrix-space instance through the dictionary
    if (o.instance_path.empty())
        throw CliError("bridge needs an instance or one of --sections-dim, --triviality, "
                       "--section-algebra");
    Instance inst = load_instance(o);
    if (!inst.space) throw CliError("bridge classification needs a matrix-space instance");
    ordered_json report;
    std::visit(
        [&](const auto& s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, MatrixSpace<Rat>>)
                check_desk_guard(s.rows(), s.cols(), s.dim(), o);
            report = io::classification_to_json(bridge::classify_rank2(s, o.seed, o.retries));
        },
        *inst.space);
    return finish(report, &inst, o, out, err,
                  report["primitive"].get<bool>() ? "primitive" : "compression space");
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
    Instance inst = load_instance(o);
    if (!inst.space) throw CliError("oracle needs a matrix-space instance");
    const auto* s = std::get_if<MatrixSpace<Fp>>(&*inst.space);
    if (!s)
        throw CliError("the oracle enumerates over a prime field; supply an F_p instance or "
                       "--field fp:<p>");
    ordered_json report{{"k1", o.k1}, {"k2", o.k2}};
    auto cert = spaces::brute_force_compression_fp(*s, o.k1, o.k2, o.budget);
    report["found"] = cert.has_value();
    if (cert) report["certificate"] = io::certificate_to_json(*cert);
    return finish(report, &inst, o, out, err,
                  cert ? "certificate found by exhaustive search" : "no certificate exists");
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analyzer for linear spaces of matrices"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* cmd, bool with_instance) {
        if (with_instance)
            cmd->add_option("instance", o.instance_path, "instance JSON file");
        cmd->add_option("--field", o.field, "coerce the instance field: q or fp:<p>");
        cmd->add_option("--prime", o.prime, "exhaustion prime for constant-rank (default 101)");
        cmd->add_option("--seed", o.seed, "seed for all randomized procedures (default 0)");
        cmd->add_option("--retries", o.retries, "random retries in detectors (default 16)");
        cmd->add_flag("--json", o.json_compact, "compact single-line JSON output");
        cmd->add_flag("--quiet", o.quiet, "suppress the human-readable summary on stderr");
        cmd->add_option("--budget", o.budget, "enumeration budget (default 10^6)");
        cmd->add_flag("--strict-expect", o.strict_expect,
                      "exit 2 when the instance's expect block mismatches the report");
        cmd->add_flag("--force", o.force, "override the desk-scale symbolic guard");
        return cmd;
    };

    auto* analyze = add_common(app.add_subcommand("analyze", "full pipeline for an instance"), true);
    analyze->get_option("instance")->required();
    auto* constant_rank =
        add_common(app.add_subcommand("constant-rank", "generic + constant rank verdict"), true);
    constant_rank->get_option("instance")->required();
    auto* compression =
        add_common(app.add_subcommand("compression", "rank-2 compression detection"), true);
    compression->get_option("instance")->required();
    compression->add_option("--verify", o.verify_path,
                            "verify a certificate JSON against the instance");
    auto* pinv = add_common(
        app.add_subcommand("pencil-invariants", "Kronecker data of a 2-generator space"), true);
    pinv->get_option("instance")->required();
    auto* lie_check =
        add_common(app.add_subcommand("lie-check", "Jacobi + derived series"), true);
    lie_check->get_option("instance")->required();
    auto* irreducible = add_common(
        app.add_subcommand("irreducible", "absolute irreducibility of a representation"), true);
    irreducible->get_option("instance")->required();
    auto* bridge_cmd = add_common(
        app.add_subcommand("bridge", "bundle/representation dictionary operations"), true);
    auto* opt_sections =
        bridge_cmd->add_option("--sections-dim", o.sections_dim_n, "dim of sections of O(n)");
    auto* opt_triviality = bridge_cmd->add_option(
        "--triviality", o.triviality_n, "triviality <-> irreducible-pair check for O(n)");
    auto* opt_section_algebra = bridge_cmd->add_option(
        "--section-algebra", o.section_algebra_n, "build the solvable section algebra of O(n)");
    auto* opt_generation = bridge_cmd->add_option(
        "--generation-check", o.generation_dim,
        "check the fiber rank at every point of projective space over F_p");
    auto* oracle = add_common(
        app.add_subcommand("oracle", "exhaustive F_p compression search"), true);
    oracle->get_option("instance")->required();
    auto* opt_k1 = oracle->add_option("--k1", o.k1, "codimension of V'");
    auto* opt_k2 = oracle->add_option("--k2", o.k2, "dimension of W'");
    opt_k1->required();
    opt_k2->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(o, out, err);
        if (app.got_subcommand(constant_rank)) return cmd_constant_rank(o, out, err);
        if (app.got_subcommand(compression)) return cmd_compression(o, out, err);
        if (app.got_subcommand(pinv)) return cmd_pencil_invariants(o, out, err);
        if (app.got_subcommand(lie_check)) return cmd_lie_check(o, out, err);
        if (app.got_subcommand(irreducible)) return cmd_irreducible(o, out, err);
        if (app.got_subcommand(bridge_cmd))
            return cmd_bridge(o, opt_sections->count() > 0, opt_triviality->count() > 0,
                              opt_section_algebra->count() > 0, opt_generation->count() > 0,
                              out, err);
        if (app.got_subcommand(oracle)) return cmd_oracle(o, out, err);
        err << "unknown command\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace matspace::cli
