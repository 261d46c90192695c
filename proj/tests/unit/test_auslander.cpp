#include "auslab/auslander.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace auslab;
using namespace testing_support;

namespace {

auto fin(std::size_t n) { return ExtDim::finite(n); }
const auto ninf = ExtDim::minus_infinity();

// Conditions evaluated straight from a profile computed by the Bass route on
// a separate engine.
Verdict gnk_from(const std::vector<ExtDim>& P, std::size_t n, std::size_t k) {
    bool open = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (P[i].is_minus_infinity()) continue;
        if (P[i].value() > i + k) return Verdict::Fails;
        if (P[i].is_at_least()) open = true;
    }
    return open ? Verdict::Inconclusive : Verdict::Holds;
}

}  // namespace

TEST_CASE("G_n(k) examples") {
    CheckSession s;
    auto F2 = ptr(field_algebra(2));
    for (std::size_t n : {1u, 3u, 5u})
        for (std::size_t k : {0u, 2u}) CHECK(is_Gnk(s, F2, n, k, 6).verdict == Verdict::Holds);
    CHECK(is_Gnk(s, ptr(truncated_polynomial(2, 2)), 4, 0, 6).verdict == Verdict::Holds);
    auto L = is_Gnk(s, ptr(local_rad_square_zero(2)), 1, 2, 6);
    CHECK(L.verdict == Verdict::Fails);
    REQUIRE(L.violated_index.has_value());
    CHECK(*L.violated_index == 0);
    CHECK(L.witness[0] == ExtDim::at_least(6));
    // A censored entry below the bound decides nothing.
    auto open = is_Gnk(s, ptr(local_rad_square_zero(2)), 1, 8, 6);
    CHECK(open.verdict == Verdict::Inconclusive);
    CHECK_FALSE(open.violated_index.has_value());
}

TEST_CASE("(l,n)^op examples") {
    CheckSession s;
    auto F2 = ptr(field_algebra(2));
    auto T2 = ptr(lower_triangular(field_algebra(2), 2));
    CHECK(is_ln_op(s, F2, 1, 4, 6).verdict == Verdict::Holds);
    CHECK(is_ln_op(s, T2, 3, 0, 6).verdict == Verdict::Holds);
    CHECK(is_ln_op(s, ptr(local_rad_square_zero(2)), 0, 0, 6).verdict == Verdict::Holds);
    auto R = is_ln_op(s, T2, 1, 2, 6);
    CHECK(R.verdict == Verdict::Fails);
    CHECK(R.violated_index == std::optional<std::size_t>(1));
    CHECK(R.witness[1] == fin(1));
    CHECK(is_ln_op(s, T2, 2, 2, 6).verdict == Verdict::Holds);
    CHECK(is_ln_op(s, F2, 0, 1, 6).verdict == Verdict::Fails);
}

TEST_CASE("dominant numbers") {
    CheckSession s;
    auto F2 = dominant_numbers(s, ptr(field_algebra(2)), 3, 6);
    CHECK(F2.dominant == std::vector<std::size_t>{0});
    CHECK(F2.undecided.empty());
    auto T2 = dominant_numbers(s, ptr(lower_triangular(field_algebra(2), 2)), 3, 6);
    CHECK(T2.dominant == std::vector<std::size_t>{0, 1});
    auto TT = dominant_numbers(s, ptr(lower_triangular(lower_triangular(field_algebra(2), 2), 2)), 3, 6);
    CHECK(TT.dominant == std::vector<std::size_t>{0, 1, 2});
    auto L = dominant_numbers(s, ptr(local_rad_square_zero(2)), 2, 4);
    CHECK(L.dominant == std::vector<std::size_t>{0});
    CHECK(L.undecided == std::vector<std::size_t>{1, 2});
    CHECK(L.verdict == Verdict::Inconclusive);
}

TEST_CASE("G_n(k) against the (k+i,i)^op family") {
    CheckSession s;
    struct Case {
        AlgebraPtr A;
        std::size_t n, k;
        Verdict both;
    };
    std::vector<Case> cases{{ptr(field_algebra(2)), 3, 0, Verdict::Holds},
                            {ptr(lower_triangular(field_algebra(2), 2)), 2, 0, Verdict::Holds},
                            {ptr(local_rad_square_zero(2)), 1, 0, Verdict::Fails}};
    for (auto& c : cases) {
        auto T = gnk_iff_lnop(s, c.A, c.n, c.k, 6);
        CHECK(T.verdict == TheoremVerdict::Verified);
        CHECK(T.rows[0].lhs == to_string(c.both));
        CHECK(T.rows[0].rhs == to_string(c.both));
    }
    for (const auto& A : small_algebras())
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::size_t k = 0; k <= 2; ++k) CHECK(gnk_iff_lnop(s, A, n, k, 6).verdict != TheoremVerdict::Refuted);
}

TEST_CASE("condition checks agree with the Bass-route profile") {
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        CheckSession s;
        Engine other(A, 99);
        auto P = other.rfd_bass(3, 6);
        for (std::size_t n = 0; n <= 4; ++n)
            for (std::size_t k = 0; k <= 2; ++k) CHECK(is_Gnk(s, A, n, k, 6).verdict == gnk_from(P, n, k));
    }
}

TEST_CASE("profile formula") {
    CheckSession s;
    auto F2 = ptr(field_algebra(2));
    auto R = verify_profile_formula(s, F2, 2, 3, 6);
    CHECK(R.verdict == TheoremVerdict::Verified);
    REQUIRE(R.rows.size() == 4);
    CHECK(R.rows[1].lhs == "1");
    CHECK(R.rows[2].lhs == "-inf");
    auto D = verify_profile_formula(s, ptr(truncated_polynomial(2, 2)), 2, 2, 6);
    CHECK(D.verdict == TheoremVerdict::Verified);
    CHECK(D.rows[0].rhs == "0");
    CHECK(D.rows[1].rhs == "1");
    CHECK(D.rows[2].rhs == "-inf");
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        CHECK(verify_profile_formula(s, A, 1, 2, 5).verdict != TheoremVerdict::Refuted);
    }
    auto L = verify_profile_formula(s, ptr(local_rad_square_zero(2)), 2, 1, 5);
    CHECK(L.verdict == TheoremVerdict::ConsistentUnderCap);
}

TEST_CASE("profile monotone under triangular extension") {
    CheckSession s;
    for (const auto& A : small_algebras()) {
        if (A->dim() > 4) continue;
        INFO(A->name());
        auto base = s.engine(A).rfd_profile(3, 4).entries;
        for (std::size_t t : {2u, 3u}) {
            auto tri = s.engine(s.triangular(A, t)).rfd_profile(3, 4).entries;
            for (std::size_t i = 0; i <= 3; ++i) CHECK(less_equal(base[i], tri[i]) != std::optional<bool>(false));
        }
    }
}

TEST_CASE("Gorenstein transfer") {
    CheckSession s;
    CHECK(verify_gorenstein_transfer(s, ptr(field_algebra(2)), 2, 0, 3, 6).verdict == TheoremVerdict::Verified);
    auto L = verify_gorenstein_transfer(s, ptr(local_rad_square_zero(2)), 1, 1, 2, 6);
    CHECK(L.verdict == TheoremVerdict::Verified);
    CHECK(L.rows[0].lhs == "fails");
    auto D = verify_gorenstein_transfer(s, ptr(truncated_polynomial(3, 3)), 3, 0, 2, 6);
    CHECK(D.verdict == TheoremVerdict::Verified);
    CHECK(D.rows[0].lhs == "holds");
}

TEST_CASE("(l,n)^op transfer and dominant shift") {
    CheckSession s;
    auto F2 = ptr(field_algebra(2));
    auto R = verify_op_transfer(s, F2, 1, 2, 2, 2, 6);
    CHECK(R.verdict == TheoremVerdict::Verified);
    CHECK(R.rows[0].lhs == "holds");
    CHECK(R.rows[0].rhs == "holds");
    // dominant 0 of F_2 gives dominant 1 of T_2(F_2)
    CHECK(R.rows[2].label == "dominant00");
    CHECK(R.rows[2].lhs == "holds");
    CHECK(R.rows[2].rhs == "holds");
    auto C = verify_op_transfer(s, F2, 2, 2, 2, 1, 6);
    CHECK(C.rows[1].lhs == "holds");
    CHECK(C.rows[1].status == TheoremVerdict::Verified);
}

TEST_CASE("reports are deterministic") {
    auto T2 = ptr(lower_triangular(field_algebra(2), 2));
    CheckSession a, b;
    CHECK(is_Gnk(a, T2, 3, 0, 6).serialize() == is_Gnk(b, T2, 3, 0, 6).serialize());
    CHECK(dominant_numbers(a, T2, 3, 6).serialize() == dominant_numbers(b, T2, 3, 6).serialize());
    CHECK(verify_profile_formula(a, T2, 2, 3, 6).serialize() == verify_profile_formula(b, T2, 2, 3, 6).serialize());
    auto text = is_ln_op(a, T2, 1, 2, 6).serialize();
    CHECK(text ==
          "algebra\tT2(F2)\ncap\t6\ncondition\tlnop\nparam.l\t1\nparam.n\t2\nverdict\tfails\n"
          "violated_index\t1\nviolated_value\t1\nwitness\t0,1\n");
}
