#include "auslab/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "auslab/auslander.hpp"
#include "auslab/error.hpp"
#include "auslab/triple.hpp"

namespace auslab {

// Constructor expressions ----------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Splits "name(a, b(c, d))" into name and top-level arguments.
std::pair<std::string, std::vector<std::string>> split_call(const std::string& text) {
    std::string s = trim(text);
    auto open = s.find('(');
    if (open == std::string::npos) return {s, {}};
    if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + s + "'");
    std::vector<std::string> args;
    int depth = 0;
    std::string cur;
    for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
        if (c == ',' && depth == 0) {
            args.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    if (!trim(cur).empty() || !args.empty()) args.push_back(trim(cur));
    return {trim(s.substr(0, open)), args};
}

std::uint64_t to_uint(const std::string& s) {
    try {
        std::size_t used = 0;
        auto v = std::stoull(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("expected a non-negative integer, got '" + s + "'");
}

void arity(const std::string& name, const std::vector<std::string>& args, std::size_t n) {
    if (args.size() != n)
        throw ParseError(name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
}

}  // namespace

AlgebraPtr build_algebra(const std::string& expr, const std::filesystem::path& base_dir) {
    auto [name, args] = split_call(expr);
    auto make = [](StructureAlgebra A) { return std::make_shared<StructureAlgebra>(std::move(A)); };
    if (name == "field") {
        arity(name, args, 1);
        return make(field_algebra(to_uint(args[0])));
    }
    if (name == "trunc") {
        arity(name, args, 2);
        return make(truncated_polynomial(to_uint(args[0]), to_uint(args[1])));
    }
    if (name == "matrix") {
        arity(name, args, 2);
        return make(matrix_algebra(to_uint(args[0]), to_uint(args[1])));
    }
    if (name == "path_a2") {
        arity(name, args, 1);
        return make(path_algebra_A2(to_uint(args[0])));
    }
    if (name == "lrsz") {
        arity(name, args, 1);
        return make(local_rad_square_zero(to_uint(args[0])));
    }
    if (name == "product") {
        arity(name, args, 2);
        return make(product(*build_algebra(args[0], base_dir), *build_algebra(args[1], base_dir)));
    }
    if (name == "tri") {
        arity(name, args, 2);
        return make(lower_triangular(*build_algebra(args[0], base_dir), to_uint(args[1])));
    }
    if (name == "opposite") {
        arity(name, args, 1);
        return make(opposite(*build_algebra(args[0], base_dir)));
    }
    if (name == "corner") {
        arity(name, args, 1);
        auto A = build_algebra(args[0], base_dir);
        return make(corner_extension(triangular_data(A, A, regular_bimodule(A))));
    }
    if (name == "file") {
        arity(name, args, 1);
        std::filesystem::path p(args[0]);
        if (p.is_relative()) p = base_dir / p;
        return make(load_algebra(p.string()));
    }
    throw ParseError("unknown constructor '" + name + "'");
}

// Manifest -----------------------------------------------------------------------------

std::vector<CorpusEntry> parse_manifest(const std::string& text) {
    std::vector<CorpusEntry> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || trim(line)[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, '\t');) cols.push_back(trim(c));
        if (cols.size() != 5)
            throw ParseError("manifest line " + std::to_string(line_no) + ": expected 5 tab-separated columns");
        CorpusEntry e;
        e.name = cols[0];
        e.constructor = cols[1];
        e.cap = to_uint(cols[2]);
        std::stringstream cs(cols[3]);
        for (std::string c; std::getline(cs, c, ';');)
            if (!trim(c).empty()) e.checks.push_back(trim(c));
        e.provenance = cols[4];
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifest " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

std::filesystem::path default_manifest() { return std::filesystem::path(AUSLAB_SOURCE_DIR) / "corpus" / "manifest.tsv"; }

// Checks -----------------------------------------------------------------------------------

namespace {

struct Check {
    std::string kind;
    std::vector<std::size_t> args;
    std::optional<std::string> expected;
};

Check parse_check(const std::string& text) {
    Check c;
    std::string head = text;
    if (auto eq = text.find('='); eq != std::string::npos) {
        c.expected = trim(text.substr(eq + 1));
        head = text.substr(0, eq);
    }
    auto [name, args] = split_call(head);
    c.kind = name;
    for (const auto& a : args) c.args.push_back(to_uint(a));
    return c;
}

std::string join_dims(const std::vector<ExtDim>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
    return s;
}

std::string join_sizes(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s.empty() ? "none" : s;
}

std::size_t count_items(const std::string& list) { return std::count(list.begin(), list.end(), ',') + 1; }

struct Evaluator {
    AlgebraPtr A;
    std::size_t cap;
    std::uint64_t seed;
    CheckSession session;
    std::unique_ptr<TriangularContext> t2;

    Evaluator(AlgebraPtr a, std::size_t c, std::uint64_t s) : A(std::move(a)), cap(c), seed(s), session(s) {}

    TriangularContext& lambda() {
        if (!t2) t2 = std::make_unique<TriangularContext>(triangular_data(A, A, regular_bimodule(A)), seed);
        return *t2;
    }

    void need(const Check& c, std::size_t n) {
        if (c.args.size() != n)
            throw ParseError("check " + c.kind + " takes " + std::to_string(n) + " argument(s)");
    }

    // Returns (pass, detail).
    std::pair<bool, std::string> run(const Check& c) {
        auto expect = [&](const std::string& got) -> std::pair<bool, std::string> {
            if (!c.expected) throw ParseError("check " + c.kind + " needs an expected value");
            return {got == *c.expected, "got " + got};
        };
        const std::string& k = c.kind;
        if (k == "validate") {
            auto v = validate(*A);
            return {v.empty(), v.empty() ? "ok" : v.front().describe()};
        }
        if (k == "roundtrip") {
            std::string once = serialize_algebra(*A);
            std::string twice = serialize_algebra(parse_algebra(once, A->name()));
            return {once == twice, once == twice ? "identical" : "serialization differs"};
        }
        if (k == "profile") {
            if (!c.expected) throw ParseError("profile needs expected entries");
            auto P = session.engine(A).rfd_profile(count_items(*c.expected) - 1, cap);
            return expect(join_dims(P.entries));
        }
        if (k == "dims") {
            if (!c.expected) throw ParseError("dims needs expected dimensions");
            auto P = session.engine(A).rfd_profile(count_items(*c.expected) - 1, cap);
            return expect(join_sizes(P.term_dims));
        }
        if (k == "gnk") {
            need(c, 2);
            return expect(to_string(is_Gnk(session, A, c.args[0], c.args[1], cap).verdict));
        }
        if (k == "lnop") {
            need(c, 2);
            return expect(to_string(is_ln_op(session, A, c.args[0], c.args[1], cap).verdict));
        }
        if (k == "dominant") {
            need(c, 1);
            auto R = dominant_numbers(session, A, c.args[0], cap);
            std::string got = join_sizes(R.dominant);
            if (!R.undecided.empty()) got += " undecided " + join_sizes(R.undecided);
            return expect(got);
        }
        if (k == "gnk_lnop") {
            need(c, 2);
            return expect(to_string(gnk_iff_lnop(session, A, c.args[0], c.args[1], cap).verdict));
        }
        if (k == "formula") {
            need(c, 2);
            return expect(to_string(verify_profile_formula(session, A, c.args[0], c.args[1], cap).verdict));
        }
        if (k == "transfer") {
            need(c, 3);
            return expect(
                to_string(verify_gorenstein_transfer(session, A, c.args[0], c.args[1], c.args[2], cap).verdict));
        }
        if (k == "optransfer") {
            need(c, 4);
            return expect(to_string(
                verify_op_transfer(session, A, c.args[0], c.args[1], c.args[2], c.args[3], cap).verdict));
        }
        if (k == "monotone") {
            need(c, 2);
            auto base = session.engine(A).rfd_profile(c.args[1], cap).entries;
            auto tri = session.engine(session.triangular(A, c.args[0])).rfd_profile(c.args[1], cap).entries;
            for (std::size_t i = 0; i < base.size(); ++i)
                if (less_equal(base[i], tri[i]) == std::optional<bool>(false))
                    return {false, "index " + std::to_string(i) + ": " + base[i].str() + " > " + tri[i].str()};
            return {true, join_dims(base) + " <= " + join_dims(tri)};
        }
        if (k == "gorenstein") {
            need(c, 2);
            for (std::size_t n = 1; n <= c.args[1]; ++n) {
                auto T = verify_gorenstein_transfer(session, A, n, 0, c.args[0], cap);
                if (T.verdict == TheoremVerdict::Refuted) return {false, "n=" + std::to_string(n) + " disagrees"};
            }
            return {true, "agree"};
        }
        if (k == "pd_routes") {
            need(c, 1);
            auto& E = session.engine(A);
            std::size_t compared = 0;
            for (const auto& M : sample_modules(A, seed, c.args[0])) {
                auto a = E.projective_dimension(M, cap), b = E.projective_dimension_by_ext(M, cap);
                if (!(a == b)) return {false, "module of dim " + std::to_string(M.dim()) + ": " + a.str() + " vs " + b.str()};
                ++compared;
            }
            return {true, std::to_string(compared) + " modules"};
        }
        if (k == "flat_triples") {
            need(c, 1);
            auto& C = lambda();
            std::size_t flat = 0, total = 0;
            for (const auto& T : random_triples(C.data(), seed, c.args[0])) {
                bool lhs = is_flat_triple(C, T).flat();
                if (lhs != C.Lambda().is_projective(triple_to_module(C.data(), T)))
                    return {false, "triple " + std::to_string(total) + " disagrees"};
                flat += lhs;
                ++total;
            }
            return {true, std::to_string(total) + " triples, " + std::to_string(flat) + " flat"};
        }
        if (k == "triple_resolutions") {
            need(c, 1);
            auto& C = lambda();
            const auto& D = C.data();
            auto I0 = C.R().minimal_injective_resolution(regular_module(D.R), 0).terms[0];
            auto r1 = injective_triple_resolution(C, I0, c.args[0]);
            if (!r1.exact() || !r1.termwise_flat(C)) return {false, "injective triple resolution"};
            for (const auto& row : injective_triple_criteria(C, I0, 2, cap))
                if (!row.agrees()) return {false, "injective criterion k=" + std::to_string(row.k)};
            std::vector<RightModule> Es{regular_module(D.S)};
            for (const auto& S : C.S().simples()) Es.push_back(S);
            for (const auto& E : Es) {
                auto r2 = corner_triple_resolution(C, E, c.args[0]);
                if (!r2.exact() || !r2.termwise_flat(C)) return {false, "corner triple resolution"};
                for (const auto& row : corner_triple_criteria(C, E, 2, cap))
                    if (row.lhs != row.rhs) return {false, "corner criterion k=" + std::to_string(row.k)};
            }
            return {true, "exact and flat"};
        }
        if (k == "bass_shape") {
            need(c, 1);
            auto& C = lambda();
            auto reg = C.Lambda().injective_multiplicities(regular_module(C.data().Lambda), c.args[0]);
            for (std::size_t i = 0; i <= c.args[0]; ++i) {
                auto parts = predicted_injective_summands(C, i);
                for (const auto& P : parts)
                    if (!C.Lambda().is_injective(P)) return {false, "summand not injective at i=" + std::to_string(i)};
                auto got = C.Lambda().injective_multiplicities(direct_sum(C.data().Lambda, parts), 0)[0];
                if (got != reg[i]) return {false, "Bass numbers differ at i=" + std::to_string(i)};
            }
            return {true, "match"};
        }
        if (k == "gamma") {
            need(c, 1);
            auto& C = lambda();
            auto G = std::make_shared<StructureAlgebra>(corner_extension(C.data()));
            auto PL = session.engine(C.data().Lambda).rfd_profile(c.args[0], cap).entries;
            auto PG = session.engine(G).rfd_profile(c.args[0], cap).entries;
            for (std::size_t i = 0; i < PL.size(); ++i)
                for (std::size_t b = 0; b < cap; ++b) {
                    auto x = at_most(PL[i], b), y = at_most(PG[i], b);
                    if (x && y && *x != *y) return {false, "index " + std::to_string(i) + " bound " + std::to_string(b)};
                }
            return {true, join_dims(PL) + " ~ " + join_dims(PG)};
        }
        throw ParseError("unknown check '" + k + "'");
    }
};

}  // namespace

bool EntryResult::pass() const {
    if (!error.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

EntryResult run_entry(const CorpusEntry& e, const std::filesystem::path& base_dir, std::uint64_t seed) {
    EntryResult r;
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto A = std::make_shared<StructureAlgebra>(build_algebra(e.constructor, base_dir)->with_name(e.name));
        Evaluator ev(A, e.cap, seed);
        for (const auto& text : e.checks) {
            CheckOutcome out;
            out.check = text;
            try {
                auto [pass, detail] = ev.run(parse_check(text));
                out.pass = pass;
                out.detail = detail;
            } catch (const std::exception& ex) {
                out.pass = false;
                out.detail = ex.what();
            }
            r.checks.push_back(std::move(out));
        }
    } catch (const std::exception& ex) {
        r.error = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<EntryResult> run_corpus(const std::vector<CorpusEntry>& entries, const std::string& filter,
                                    std::size_t jobs, const std::filesystem::path& base_dir, std::uint64_t seed) {
    std::vector<const CorpusEntry*> chosen;
    for (const auto& e : entries)
        if (filter.empty() || fnmatch(filter.c_str(), e.name.c_str(), 0) == 0) chosen.push_back(&e);
    std::vector<EntryResult> results(chosen.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < chosen.size();) results[i] = run_entry(*chosen[i], base_dir, seed);
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, chosen.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return results;
}

std::string format_results(const std::vector<EntryResult>& results) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::size_t ok = std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.pass; });
        os << r.name << '\t' << (r.pass() ? "PASS" : "FAIL") << '\t' << ok << '/' << r.checks.size() << '\n';
        if (!r.error.empty()) os << "  error\t" << r.error << '\n';
        for (const auto& c : r.checks)
            if (!c.pass) os << "  " << c.check << '\t' << c.detail << '\n';
        failed += !r.pass();
    }
    os << "entries\t" << results.size() << "\tfailed\t" << failed << '\n';
    return os.str();
}

}  // namespace auslab
