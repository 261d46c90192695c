#pragma once
// Auslander-type conditions read off the profile of projective dimensions of
// the terms I^i(A) of the minimal injective resolution of A_A, and checks of
// how they transfer from A to the lower triangular matrix algebras T_t(A).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "auslab/homological.hpp"

namespace auslab {

enum class Verdict { Holds, Fails, Inconclusive };
enum class TheoremVerdict { Verified, Refuted, ConsistentUnderCap };

std::string to_string(Verdict v);
std::string to_string(TheoremVerdict v);

struct ConditionReport {
    std::string condition;  // "gnk", "lnop" or "dominant"
    std::string algebra;
    std::map<std::string, std::size_t> parameters;
    std::size_t cap = 0;
    Verdict verdict = Verdict::Holds;
    /// Profile entries examined, from index 0. Checks stop at the first
    /// violated index.
    std::vector<ExtDim> witness;
    std::optional<std::size_t> violated_index;
    // dominant only
    std::vector<std::size_t> dominant;
    std::vector<std::size_t> undecided;

    /// One key<TAB>value per line, keys sorted.
    std::string serialize() const;
};

struct ComparisonRow {
    std::string label;
    std::string lhs, rhs;
    TheoremVerdict status = TheoremVerdict::Verified;
};

struct TheoremReport {
    std::string theorem;  // "profile-formula", "gorenstein-transfer", "op-transfer", "gnk-lnop"
    std::string algebra;
    std::size_t t = 1;
    std::map<std::string, std::size_t> parameters;
    std::size_t cap = 0;
    std::vector<ComparisonRow> rows;
    std::vector<std::string> notes;
    TheoremVerdict verdict = TheoremVerdict::Verified;

    std::string serialize() const;
};

/// Engines and triangular algebras shared between checks, keyed by algebra
/// content. Not thread-safe.
class CheckSession {
public:
    explicit CheckSession(std::uint64_t seed = 0xA05) : seed_(seed) {}
    std::uint64_t seed() const noexcept { return seed_; }
    Engine& engine(const AlgebraPtr& A);
    /// lower_triangular(A, t), built once per (A, t).
    AlgebraPtr triangular(const AlgebraPtr& A, std::size_t t);

private:
    std::uint64_t seed_;
    std::vector<std::pair<AlgebraPtr, std::unique_ptr<Engine>>> engines_;
    std::vector<std::tuple<AlgebraPtr, std::size_t, AlgebraPtr>> triangular_;
};

/// pd I^i(A) <= i + k for 0 <= i < n.
ConditionReport is_Gnk(CheckSession& s, const AlgebraPtr& A, std::size_t n, std::size_t k, std::size_t cap);
/// pd I^i(A) <= l - 1 for 0 <= i < n.
ConditionReport is_ln_op(CheckSession& s, const AlgebraPtr& A, std::size_t l, std::size_t n, std::size_t cap);
/// All n <= max_n with entry i < entry n for every i < n.
ConditionReport dominant_numbers(CheckSession& s, const AlgebraPtr& A, std::size_t max_n, std::size_t cap);

/// G_n(k) against the conjunction of the (k+i, i)^op conditions, 1 <= i <= n.
TheoremReport gnk_iff_lnop(CheckSession& s, const AlgebraPtr& A, std::size_t n, std::size_t k, std::size_t cap);
/// pd I^i(T_t(A)) = max(pd I^i(A), pd I^{i-1}(A) + 1) for 0 <= i <= max_degree,
/// the two sides computed on separate engines.
TheoremReport verify_profile_formula(CheckSession& s, const AlgebraPtr& A, std::size_t t,
                                     std::size_t max_degree, std::size_t cap);
/// A is G_n(k) iff T_t(A) is.
TheoremReport verify_gorenstein_transfer(CheckSession& s, const AlgebraPtr& A, std::size_t n, std::size_t k,
                                         std::size_t t, std::size_t cap);
/// (l,n)^op for A implies (l+1,n)^op for T_t(A); (l,n)^op for T_t(A) implies
/// (l,n)^op for A; each dominant n <= max_n of A gives the dominant number
/// n+1 of T_t(A).
TheoremReport verify_op_transfer(CheckSession& s, const AlgebraPtr& A, std::size_t l, std::size_t n,
                                 std::size_t t, std::size_t max_n, std::size_t cap);

/// Interval reading of censored values: a and b could be the same number.
bool consistent(const ExtDim& a, const ExtDim& b);

}  // namespace auslab
