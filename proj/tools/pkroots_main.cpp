#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "pkroots/certificate.hpp"
#include "pkroots/version.hpp"
#include "pkroots/words.hpp"

namespace {

using namespace pkroots;

constexpr int kExitCovered = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct CommonArgs {
    std::string spec_path;
    std::string element;
    long k = 0;
    long kmax = 0;
    std::string series = "superdiag";
    long cap = 0;
    std::string out_path;
    std::string verify_path;
    bool element_level = false;
    bool csv = false;
};

void emit(const ordered_json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw validation_error("cannot write output file: " + out_path);
        out << text;
    }
}

TriangularGroup load_context(const CommonArgs& args) {
    GroupSpec spec = load_group_spec(args.spec_path);
    if (args.cap > 0) spec.enumeration_cap = args.cap;
    return TriangularGroup::validate(std::move(spec));
}

int run_verify(const CommonArgs& args) {
    GroupSpec spec = load_group_spec(args.spec_path);
    std::ifstream in(args.verify_path);
    if (!in) throw validation_error("cannot open certificate file: " + args.verify_path);
    ordered_json cert;
    try {
        cert = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(args.verify_path + ": " + e.what());
    }
    VerifyResult res = verify_certificate(spec, cert);
    ordered_json out;
    out["tool"] = std::string(kToolName) + " " + kToolVersion;
    out["kind"] = "verification";
    out["certificate"] = args.verify_path;
    out["checks"] = res.checks;
    if (!res.accepted.empty()) out["accepted_without_recomputation"] = res.accepted;
    out["failures"] = res.failures;
    out["verified"] = res.ok;
    emit(out, args.out_path);
    return res.ok ? kExitCovered : kExitNegative;
}

std::vector<long> admissible_ks(const Field& f, long kmax, std::vector<long>* skipped) {
    std::vector<long> ks;
    for (long k = 1; k <= kmax; ++k) {
        if (f.characteristic() != 0 && k % f.characteristic() == 0) {
            if (skipped) skipped->push_back(k);
            continue;
        }
        ks.push_back(k);
    }
    return ks;
}

int cmd_analyze(const CommonArgs& args) {
    if (!args.verify_path.empty()) return run_verify(args);
    TriangularGroup ctx = load_context(args);
    RootsEngine engine(ctx, strategy_from_name(args.series));
    Matrix x = parse_element(ctx, args.element);
    QueryInfo q{ctx.spec().name.empty() ? args.spec_path : ctx.spec().name, args.element,
                args.k, args.series, args.element_level ? "element" : "coset"};

    if (args.element_level) {
        std::vector<long> ks;
        if (args.kmax > 0)
            ks = admissible_ks(ctx.field(), args.kmax, nullptr);
        else
            ks = {args.k};
        std::unique_ptr<EnumeratedGroup> enumerated;
        if (ctx.finite_mode())
            enumerated = std::make_unique<EnumeratedGroup>(
                enumerate_group(ctx, ctx.spec().enumeration_cap));
        auto probe = engine.multi_k_probe(x, ks, enumerated.get());
        std::map<long, Matrix> sample_roots;
        if (enumerated) {
            int xi = enumerated->index_of(x);
            for (const auto& [k, res] : probe) {
                if (res != ProbeResult::InImage) continue;
                PowerImage img = power_image(*enumerated, k);
                if (!img.roots[size_t(xi)].empty())
                    sample_roots.emplace(k, enumerated->elements[size_t(img.roots[size_t(xi)][0])]);
            }
        }
        emit(probe_to_json(engine, x, probe, q, sample_roots), args.out_path);
        bool all_in = true, any_out = false;
        for (const auto& [k, res] : probe) {
            all_in = all_in && res == ProbeResult::InImage;
            any_out = any_out || res == ProbeResult::NotInImage;
        }
        return all_in ? kExitCovered : (any_out ? kExitNegative : kExitError);
    }

    Certificate cert = engine.coset_root_decision(x, args.k);
    emit(certificate_to_json(engine, cert, q), args.out_path);
    return cert.decision ? kExitCovered : kExitNegative;
}

int cmd_root(const CommonArgs& args) {
    if (!args.verify_path.empty()) return run_verify(args);
    TriangularGroup ctx = load_context(args);
    RootsEngine engine(ctx, strategy_from_name(args.series));
    Matrix target = parse_element(ctx, args.element);
    QueryInfo q{ctx.spec().name.empty() ? args.spec_path : ctx.spec().name, args.element,
                args.k, args.series, "coset"};
    Certificate cert = engine.coset_root_decision(target, args.k);
    std::optional<Matrix> root;
    if (cert.decision)
        root = engine.construct_root(target, Matrix::identity(ctx.field(), ctx.dim()),
                                     *cert.witness, args.k);
    emit(certificate_to_json(engine, cert, q, Matrix::identity(ctx.field(), ctx.dim()), root),
         args.out_path);
    return cert.decision ? kExitCovered : kExitNegative;
}

int cmd_regular(const CommonArgs& args) {
    if (!args.verify_path.empty()) return run_verify(args);
    TriangularGroup ctx = load_context(args);
    RootsEngine engine(ctx, strategy_from_name(args.series));
    Matrix g = parse_element(ctx, args.element);
    QueryInfo q{ctx.spec().name.empty() ? args.spec_path : ctx.spec().name, args.element,
                args.k, args.series, "coset"};
    RegularityReport rep = engine.pk_regularity(g, args.k);
    emit(regularity_to_json(engine, rep, q), args.out_path);
    return rep.regular ? kExitCovered : kExitNegative;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_oracle(const CommonArgs& args) {
    TriangularGroup ctx = load_context(args);
    if (!ctx.finite_mode())
        throw unsupported_error("the oracle command requires a finite-field spec");
    RootsEngine engine(ctx, strategy_from_name(args.series));
    EnumeratedGroup e = enumerate_group(ctx, ctx.spec().enumeration_cap);
    std::vector<long> skipped;
    std::vector<long> ks = admissible_ks(ctx.field(), args.kmax, &skipped);
    CompareReport rep = compare_all(
        e, ks, [&](const Matrix& x, long k) { return engine.coset_root_decision(x, k).decision; });

    if (args.csv) {
        std::cout << "class,k,criterion,oracle,match,pk_size\n";
        for (const auto& row : rep.rows)
            std::cout << "\"" << row.cls.str() << "\"," << row.k << "," << yesno(row.criterion)
                      << "," << yesno(row.truth) << "," << (row.match ? "ok" : "MISMATCH") << ","
                      << row.pk_size << "\n";
        for (long k : skipped)
            std::cout << "\"(skipped)\"," << k << ",,,not coprime to characteristic,\n";
    } else {
        size_t cw = 5;
        for (const auto& row : rep.rows) cw = std::max(cw, row.cls.str().size());
        auto pad = [](std::string s, size_t w) {
            s.resize(std::max(s.size(), w), ' ');
            return s;
        };
        std::cout << pad("class", cw) << "  k  criterion  oracle  match  |P_k|\n";
        for (const auto& row : rep.rows)
            std::cout << pad(row.cls.str(), cw) << "  " << row.k << "  "
                      << pad(yesno(row.criterion), 9) << "  " << pad(yesno(row.truth), 6) << "  "
                      << pad(row.match ? "ok" : "MISMATCH", 5) << "  " << row.pk_size << "\n";
        for (long k : skipped)
            std::cout << "k=" << k << " skipped: not coprime to characteristic "
                      << ctx.field().characteristic() << "\n";
        std::cout << "group order " << e.size() << ", " << rep.rows.size() << " comparisons, "
                  << (rep.all_match ? "all matched" : "MISMATCHES FOUND") << "\n";
    }
    return rep.all_match ? kExitCovered : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) +
                 " - exact k-th roots and power-map analysis for triangular matrix groups"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    CommonArgs args;
    auto add_common = [&](CLI::App* cmd, bool needs_element, bool needs_k) {
        cmd->add_option("spec", args.spec_path, "group spec file (JSON)")->required();
        if (needs_element)
            cmd->add_option("--element", args.element,
                            "element expression, e.g. \"g1^2*n(1,0)\" or a matrix literal");
        if (needs_k) cmd->add_option("--k", args.k, "power-map exponent");
        cmd->add_option("--series", args.series, "central series strategy: superdiag | refined")
            ->check(CLI::IsMember({"superdiag", "refined"}));
        cmd->add_option("--cap", args.cap, "enumeration cap override");
        cmd->add_option("--out", args.out_path, "also write the output to this file");
        cmd->add_option("--verify", args.verify_path,
                        "re-check a previously emitted certificate against this spec");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "decide whether the coset xN lies in the k-th power image");
    add_common(analyze, true, true);
    analyze->add_flag("--element-level", args.element_level,
                      "probe the element itself instead of its coset");
    analyze->add_option("--kmax", args.kmax, "probe all admissible k up to this bound");

    CLI::App* root = app.add_subcommand("root", "construct an explicit k-th root with certificate");
    add_common(root, true, true);

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "cross-check the criterion against exhaustive enumeration");
    add_common(oracle_cmd, false, false);
    oracle_cmd->add_option("--kmax", args.kmax, "check all admissible k up to this bound")
        ->required();
    oracle_cmd->add_flag("--csv", args.csv, "emit the comparison table as CSV");

    CLI::App* regular = app.add_subcommand(
        "regular", "test whether an element has nontrivial k-th roots of unity in its layer spectra");
    add_common(regular, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (app.got_subcommand(analyze)) {
            if (args.verify_path.empty()) {
                if (args.element.empty()) throw validation_error("--element is required");
                if (args.k < 1 && args.kmax < 1) throw validation_error("--k is required");
                if (args.k < 1) args.k = 1;
            }
            return cmd_analyze(args);
        }
        if (app.got_subcommand(root)) {
            if (args.verify_path.empty()) {
                if (args.element.empty()) throw validation_error("--element is required");
                if (args.k < 1) throw validation_error("--k is required");
            }
            return cmd_root(args);
        }
        if (app.got_subcommand(oracle_cmd)) {
            if (args.kmax < 1) throw validation_error("--kmax must be positive");
            return cmd_oracle(args);
        }
        if (app.got_subcommand(regular)) {
            if (args.verify_path.empty()) {
                if (args.element.empty()) throw validation_error("--element is required");
                if (args.k < 1) throw validation_error("--k is required");
            }
            return cmd_regular(args);
        }
    } catch (const pkroots::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
