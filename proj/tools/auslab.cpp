#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "auslab/auslander.hpp"
#include "auslab/corpus.hpp"
#include "auslab/error.hpp"

using namespace auslab;

namespace {

// 0 ok / holds / verified, 1 fails / refuted, 2 bad input, 3 inconclusive.
int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Holds: return 0;
        case Verdict::Fails: return 1;
        case Verdict::Inconclusive: return 3;
    }
    return 2;
}

int exit_code(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::Verified: return 0;
        case TheoremVerdict::Refuted: return 1;
        case TheoremVerdict::ConsistentUnderCap: return 3;
    }
    return 2;
}

AlgebraPtr load(const std::string& path) { return std::make_shared<StructureAlgebra>(load_algebra(path)); }

// Line of the "mult i j" entry in the file, if present.
std::optional<std::size_t> mult_line(const std::string& path, std::size_t i, std::size_t j) {
    std::ifstream in(path);
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        std::istringstream is(line);
        std::string key;
        long long a = -1, b = -1;
        if (is >> key >> a >> b && key == "mult" && a == (long long)i && b == (long long)j) return n;
    }
    return std::nullopt;
}

std::optional<std::size_t> unit_line(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        std::istringstream is(line);
        std::string key;
        if (is >> key && key == "unit") return n;
    }
    return std::nullopt;
}

int cmd_validate(const std::string& path) {
    auto A = load_algebra(path);
    auto v = validate(A);
    if (v.empty()) {
        std::cout << "ok\t" << A.name() << "\tdim " << A.dim() << "\tp " << A.field().p() << '\n';
        return 0;
    }
    for (const auto& x : v) {
        std::optional<std::size_t> line;
        if (x.kind == AlgebraViolation::Kind::Associativity)
            line = mult_line(path, x.i, x.j);
        else if (x.kind != AlgebraViolation::Kind::Shape)
            line = unit_line(path);
        std::cerr << path << ':' << (line ? std::to_string(*line) : "?") << ": " << x.describe() << '\n';
    }
    return 2;
}

int cmd_analyze(const std::string& path, std::size_t max_degree, std::optional<std::size_t> cap, std::uint64_t seed,
                bool strict) {
    auto A = load(path);
    Engine E(A, seed);
    auto P = E.rfd_profile(max_degree, cap.value_or(max_degree + 3));
    std::cout << "i\trfd\tdim\n";
    bool open = false;
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
        std::cout << i << '\t' << P.entries[i].str() << '\t' << P.term_dims[i] << '\n';
        open |= P.entries[i].is_at_least();
    }
    return strict && open ? 3 : 0;
}

int cmd_tri(const std::string& path, std::size_t t, const std::string& out) {
    if (t < 1) throw ParseError("--t must be at least 1");
    auto A = load_algebra(path);
    auto T = t == 1 ? A : lower_triangular(A, t);
    std::ofstream os(out);
    if (!os) throw ParseError("cannot write " + out);
    os << serialize_algebra(T);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Injective resolutions of finite-dimensional algebras and their triangular matrix extensions"};
    app.require_subcommand(1);
    std::string file;
    std::uint64_t seed = 0xA05;
    std::optional<std::size_t> cap;

    auto* validate_cmd = app.add_subcommand("validate", "check the associativity and unit axioms");
    validate_cmd->add_option("file", file)->required();

    std::size_t max_degree = 0;
    bool strict = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "projective dimensions of the minimal injective resolution");
    analyze_cmd->add_option("file", file)->required();
    analyze_cmd->add_option("--max-degree", max_degree)->required();
    analyze_cmd->add_option("--cap", cap);
    analyze_cmd->add_option("--seed", seed);
    analyze_cmd->add_flag("--strict", strict, "exit 3 if an entry is only bounded below");

    std::size_t n = 0, k = 0, l = 0, t = 2, max_n = 2;
    auto* check_cmd = app.add_subcommand("check", "test a homological condition");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--cap", cap);
    check_cmd->require_subcommand(1);
    auto* gnk_cmd = check_cmd->add_subcommand("gnk", "pd I^i <= i + k for i < n");
    gnk_cmd->add_option("--n", n)->required();
    gnk_cmd->add_option("--k", k)->required();
    auto* lnop_cmd = check_cmd->add_subcommand("lnop", "pd I^i <= l - 1 for i < n");
    lnop_cmd->add_option("--l", l)->required();
    lnop_cmd->add_option("--n", n)->required();
    auto* dominant_cmd = check_cmd->add_subcommand("dominant", "dominant numbers up to --max");
    dominant_cmd->add_option("--max", max_n)->required();
    for (auto* c : {gnk_cmd, lnop_cmd, dominant_cmd}) c->add_option("--cap", cap);

    std::string out;
    auto* tri_cmd = app.add_subcommand("tri", "write the lower triangular matrix algebra T_t");
    tri_cmd->add_option("file", file)->required();
    tri_cmd->add_option("--t", t)->required();
    tri_cmd->add_option("-o", out)->required();

    auto* verify_cmd = app.add_subcommand("verify", "compare an algebra with its triangular matrix extensions");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--cap", cap);
    verify_cmd->require_subcommand(1);
    auto* formula_cmd = verify_cmd->add_subcommand("thm36", "pd I^i(T_t) = max(pd I^i, pd I^(i-1) + 1)");
    formula_cmd->alias("profile-formula");
    formula_cmd->add_option("--t", t)->required();
    formula_cmd->add_option("--max-degree", max_degree)->required();
    auto* gorenstein_cmd = verify_cmd->add_subcommand("thm37", "G_n(k) holds for A iff for T_t(A)");
    gorenstein_cmd->alias("gorenstein-transfer");
    gorenstein_cmd->add_option("--n", n)->required();
    gorenstein_cmd->add_option("--k", k)->required();
    gorenstein_cmd->add_option("--t", t)->required();
    auto* op_cmd = verify_cmd->add_subcommand("cor38", "(l,n)^op conditions and dominant numbers under T_t");
    op_cmd->alias("op-transfer");
    op_cmd->add_option("--l", l)->required();
    op_cmd->add_option("--n", n)->required();
    op_cmd->add_option("--t", t)->required();
    op_cmd->add_option("--max", max_n, "largest dominant number compared")->capture_default_str();
    for (auto* c : {formula_cmd, gorenstein_cmd, op_cmd}) c->add_option("--cap", cap);

    std::string filter, manifest;
    std::size_t jobs = 1;
    auto* corpus_cmd = app.add_subcommand("corpus", "named algebras with expected results");
    corpus_cmd->require_subcommand(1);
    auto* run_cmd = corpus_cmd->add_subcommand("run", "run every matching entry");
    run_cmd->add_option("--filter", filter, "glob on entry names");
    run_cmd->add_option("--jobs", jobs);
    run_cmd->add_option("--manifest", manifest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) return cmd_validate(file);
        if (*analyze_cmd) return cmd_analyze(file, max_degree, cap, seed, strict);
        if (*tri_cmd) return cmd_tri(file, t, out);
        if (*check_cmd) {
            CheckSession s(seed);
            auto A = load(file);
            ConditionReport R;
            if (*gnk_cmd)
                R = is_Gnk(s, A, n, k, cap.value_or(n + k + 3));
            else if (*lnop_cmd)
                R = is_ln_op(s, A, l, n, cap.value_or(l + n + 3));
            else
                R = dominant_numbers(s, A, max_n, cap.value_or(max_n + 3));
            std::cout << R.serialize();
            return exit_code(R.verdict);
        }
        if (*verify_cmd) {
            if (t < 1) throw ParseError("--t must be at least 1");
            CheckSession s(seed);
            auto A = load(file);
            TheoremReport R;
            if (*formula_cmd)
                R = verify_profile_formula(s, A, t, max_degree, cap.value_or(max_degree + 3));
            else if (*gorenstein_cmd)
                R = verify_gorenstein_transfer(s, A, n, k, t, cap.value_or(n + k + 3));
            else
                R = verify_op_transfer(s, A, l, n, t, max_n, cap.value_or(l + n + 3));
            std::cout << R.serialize();
            return exit_code(R.verdict);
        }
        if (*run_cmd) {
            auto path = manifest.empty() ? default_manifest() : std::filesystem::path(manifest);
            auto entries = load_manifest(path);
            if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
            auto t0 = std::chrono::steady_clock::now();
            auto results = run_corpus(entries, filter, jobs, path.parent_path());
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cout << format_results(results);
            std::cerr << "wall time " << secs << " s\n";
            for (const auto& r : results)
                if (!r.pass()) return 1;
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidAlgebra& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return 3;
    } catch (const CapExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
