#include "auslab/auslander.hpp"

#include <iomanip>
#include <sstream>

namespace auslab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::Verified: return "verified";
        case TheoremVerdict::Refuted: return "refuted";
        case TheoremVerdict::ConsistentUnderCap: return "consistent-under-cap";
    }
    return "?";
}

namespace {

std::string join(const std::vector<ExtDim>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
    return s.empty() ? "none" : s;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s.empty() ? "none" : s;
}

std::string render(const std::map<std::string, std::string>& kv) {
    std::string out;
    for (const auto& [k, v] : kv) out += k + "\t" + v + "\n";
    return out;
}

std::string index_label(std::size_t i) {
    std::ostringstream os;
    os << 'i' << std::setw(2) << std::setfill('0') << i;
    return os.str();
}

Verdict conjunction(const std::vector<Verdict>& vs) {
    bool open = false;
    for (auto v : vs) {
        if (v == Verdict::Fails) return Verdict::Fails;
        if (v == Verdict::Inconclusive) open = true;
    }
    return open ? Verdict::Inconclusive : Verdict::Holds;
}

TheoremVerdict agreement(Verdict a, Verdict b) {
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return TheoremVerdict::ConsistentUnderCap;
    return a == b ? TheoremVerdict::Verified : TheoremVerdict::Refuted;
}

TheoremVerdict implication(Verdict p, Verdict q) {
    if (p == Verdict::Fails || q == Verdict::Holds) return TheoremVerdict::Verified;
    if (p == Verdict::Holds && q == Verdict::Fails) return TheoremVerdict::Refuted;
    return TheoremVerdict::ConsistentUnderCap;
}

TheoremVerdict overall(const std::vector<ComparisonRow>& rows) {
    TheoremVerdict v = TheoremVerdict::Verified;
    for (const auto& r : rows) {
        if (r.status == TheoremVerdict::Refuted) return r.status;
        if (r.status == TheoremVerdict::ConsistentUnderCap) v = r.status;
    }
    return v;
}

// Shared loop of the G_n(k) and (l,n)^op checks: entry i must be at most bound(i).
template <class Bound>
void bounded_entries(ConditionReport& R, Engine& E, std::size_t n, Bound bound) {
    bool open = false;
    for (std::size_t i = 0; i < n; ++i) {
        ExtDim e = E.rfd_entry(i, R.cap);
        R.witness.push_back(e);
        auto b = bound(i);
        auto ok = b.has_value() ? at_most(e, *b) : std::optional<bool>(e.is_minus_infinity());
        if (!ok.has_value()) {
            open = true;
        } else if (!*ok) {
            R.verdict = Verdict::Fails;
            R.violated_index = i;
            return;
        }
    }
    R.verdict = open ? Verdict::Inconclusive : Verdict::Holds;
}

std::optional<bool> dominant_at(const std::vector<ExtDim>& entries, std::size_t n) {
    bool open = false;
    for (std::size_t i = 0; i < n; ++i) {
        auto lt = less_than(entries[i], entries[n]);
        if (!lt.has_value())
            open = true;
        else if (!*lt)
            return false;
    }
    if (open) return std::nullopt;
    return true;
}

std::vector<ExtDim> entries_upto(Engine& E, std::size_t max_n, std::size_t cap) {
    std::vector<ExtDim> out;
    for (std::size_t i = 0; i <= max_n; ++i) out.push_back(E.rfd_entry(i, cap));
    return out;
}

}  // namespace

std::string ConditionReport::serialize() const {
    std::map<std::string, std::string> kv{{"algebra", algebra},
                                          {"cap", std::to_string(cap)},
                                          {"condition", condition},
                                          {"verdict", to_string(verdict)},
                                          {"witness", join(witness)}};
    for (const auto& [k, v] : parameters) kv["param." + k] = std::to_string(v);
    if (condition == "dominant") {
        kv["dominant"] = join(dominant);
        kv["undecided"] = join(undecided);
    } else {
        kv["violated_index"] = violated_index ? std::to_string(*violated_index) : "none";
        if (violated_index) kv["violated_value"] = witness[*violated_index].str();
    }
    return render(kv);
}

std::string TheoremReport::serialize() const {
    std::map<std::string, std::string> kv{{"algebra", algebra},
                                          {"cap", std::to_string(cap)},
                                          {"t", std::to_string(t)},
                                          {"theorem", theorem},
                                          {"verdict", to_string(verdict)}};
    for (const auto& [k, v] : parameters) kv["param." + k] = std::to_string(v);
    for (const auto& r : rows) kv["row." + r.label] = r.lhs + " | " + r.rhs + " | " + to_string(r.status);
    for (std::size_t i = 0; i < notes.size(); ++i) kv["note." + std::to_string(i)] = notes[i];
    return render(kv);
}

bool consistent(const ExtDim& a, const ExtDim& b) {
    if (a.is_at_least() && b.is_at_least()) return true;
    if (a.is_at_least()) return b.is_finite() && b.value() >= a.value();
    if (b.is_at_least()) return a.is_finite() && a.value() >= b.value();
    return a == b;
}

Engine& CheckSession::engine(const AlgebraPtr& A) {
    for (auto& [B, E] : engines_)
        if (same_algebra(A, B)) return *E;
    engines_.emplace_back(A, std::make_unique<Engine>(A, seed_));
    return *engines_.back().second;
}

AlgebraPtr CheckSession::triangular(const AlgebraPtr& A, std::size_t t) {
    for (auto& [B, s, T] : triangular_)
        if (s == t && same_algebra(A, B)) return T;
    auto T = t == 1 ? A : std::make_shared<StructureAlgebra>(lower_triangular(*A, t));
    triangular_.emplace_back(A, t, T);
    return T;
}

ConditionReport is_Gnk(CheckSession& s, const AlgebraPtr& A, std::size_t n, std::size_t k, std::size_t cap) {
    ConditionReport R;
    R.condition = "gnk";
    R.algebra = A->name();
    R.parameters = {{"n", n}, {"k", k}};
    R.cap = cap;
    bounded_entries(R, s.engine(A), n, [k](std::size_t i) { return std::optional<std::size_t>(i + k); });
    return R;
}

ConditionReport is_ln_op(CheckSession& s, const AlgebraPtr& A, std::size_t l, std::size_t n, std::size_t cap) {
    ConditionReport R;
    R.condition = "lnop";
    R.algebra = A->name();
    R.parameters = {{"l", l}, {"n", n}};
    R.cap = cap;
    // l = 0 asks for pd <= -1, which only the zero module meets.
    bounded_entries(R, s.engine(A), n, [l](std::size_t) -> std::optional<std::size_t> {
        if (l == 0) return std::nullopt;
        return l - 1;
    });
    return R;
}

ConditionReport dominant_numbers(CheckSession& s, const AlgebraPtr& A, std::size_t max_n, std::size_t cap) {
    ConditionReport R;
    R.condition = "dominant";
    R.algebra = A->name();
    R.parameters = {{"max", max_n}};
    R.cap = cap;
    R.witness = entries_upto(s.engine(A), max_n, cap);
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto d = dominant_at(R.witness, n);
        if (!d.has_value())
            R.undecided.push_back(n);
        else if (*d)
            R.dominant.push_back(n);
    }
    R.verdict = R.undecided.empty() ? Verdict::Holds : Verdict::Inconclusive;
    return R;
}

TheoremReport gnk_iff_lnop(CheckSession& s, const AlgebraPtr& A, std::size_t n, std::size_t k, std::size_t cap) {
    TheoremReport T;
    T.theorem = "gnk-lnop";
    T.algebra = A->name();
    T.parameters = {{"n", n}, {"k", k}};
    T.cap = cap;
    Verdict lhs = is_Gnk(s, A, n, k, cap).verdict;
    std::vector<Verdict> parts;
    for (std::size_t i = 1; i <= n; ++i) parts.push_back(is_ln_op(s, A, k + i, i, cap).verdict);
    Verdict rhs = conjunction(parts);
    T.rows.push_back({"equivalence", to_string(lhs), to_string(rhs), agreement(lhs, rhs)});
    T.verdict = overall(T.rows);
    return T;
}

TheoremReport verify_profile_formula(CheckSession& s, const AlgebraPtr& A, std::size_t t, std::size_t max_degree,
                                     std::size_t cap) {
    TheoremReport T;
    T.theorem = "profile-formula";
    T.algebra = A->name();
    T.t = t;
    T.parameters = {{"max_degree", max_degree}};
    T.cap = cap;
    auto base = s.engine(A).rfd_profile(max_degree, cap).entries;
    auto tri = s.engine(s.triangular(A, t)).rfd_profile(max_degree, cap).entries;
    for (std::size_t i = 0; i <= max_degree; ++i) {
        ExtDim previous = i == 0 ? ExtDim::minus_infinity() : base[i - 1];
        // T_1(A) = A, so the shift only appears for t >= 2.
        ExtDim rhs = t == 1 ? base[i] : max(base[i], previous.plus_one());
        TheoremVerdict status;
        if (tri[i] == rhs && !rhs.is_at_least())
            status = TheoremVerdict::Verified;
        else if (consistent(tri[i], rhs))
            status = TheoremVerdict::ConsistentUnderCap;
        else
            status = TheoremVerdict::Refuted;
        T.rows.push_back({index_label(i), tri[i].str(), rhs.str(), status});
    }
    T.verdict = overall(T.rows);
    return T;
}

TheoremReport verify_gorenstein_transfer(CheckSession& s, const AlgebraPtr& A, std::size_t n, std::size_t k,
                                         std::size_t t, std::size_t cap) {
    TheoremReport T;
    T.theorem = "gorenstein-transfer";
    T.algebra = A->name();
    T.t = t;
    T.parameters = {{"n", n}, {"k", k}};
    T.cap = cap;
    auto base = is_Gnk(s, A, n, k, cap);
    auto tri = is_Gnk(s, s.triangular(A, t), n, k, cap);
    T.rows.push_back({"gnk", to_string(base.verdict), to_string(tri.verdict), agreement(base.verdict, tri.verdict)});
    T.verdict = overall(T.rows);
    if (T.verdict == TheoremVerdict::Refuted)
        T.notes.push_back("T_t(A) is built from the free faithful bimodule A^(t-1); no hypothesis can fail, "
                          "so a refutation points at the implementation");
    return T;
}

TheoremReport verify_op_transfer(CheckSession& s, const AlgebraPtr& A, std::size_t l, std::size_t n, std::size_t t,
                                 std::size_t max_n, std::size_t cap) {
    TheoremReport T;
    T.theorem = "op-transfer";
    T.algebra = A->name();
    T.t = t;
    T.parameters = {{"l", l}, {"n", n}, {"max_n", max_n}};
    T.cap = cap;
    AlgebraPtr TA = s.triangular(A, t);
    Verdict base_l = is_ln_op(s, A, l, n, cap).verdict;
    Verdict tri_l1 = is_ln_op(s, TA, l + 1, n, cap).verdict;
    Verdict tri_l = is_ln_op(s, TA, l, n, cap).verdict;
    T.rows.push_back({"forward", to_string(base_l), to_string(tri_l1), implication(base_l, tri_l1)});
    T.rows.push_back({"converse", to_string(tri_l), to_string(base_l), implication(tri_l, base_l)});

    auto base_entries = entries_upto(s.engine(A), max_n, cap);
    auto tri_entries = entries_upto(s.engine(TA), max_n + 1, cap);
    for (std::size_t m = 0; m <= max_n; ++m) {
        auto d = dominant_at(base_entries, m);
        auto e = dominant_at(tri_entries, m + 1);
        auto as_verdict = [](std::optional<bool> x) {
            return !x.has_value() ? Verdict::Inconclusive : (*x ? Verdict::Holds : Verdict::Fails);
        };
        Verdict p = as_verdict(d), q = as_verdict(e);
        T.rows.push_back({"dominant" + index_label(m).substr(1), to_string(p), to_string(q), implication(p, q)});
    }
    T.verdict = overall(T.rows);
    return T;
}

}  // namespace auslab
