#include "auslab/error.hpp"
#include "auslab/homological.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace auslab;
using namespace testing_support;

namespace {

// Ext^1(M, N) = coker(Hom(P, N) -> Hom(K, N)) for a projective cover
// 0 -> K -> P -> M -> 0, computed with the generic Hom solver.
std::size_t ext1_by_hom(Engine& E, const RightModule& M, const RightModule& N) {
    auto cov = E.projective_cover(M);
    Subspace K = Subspace::span(left_nullspace(cov.matrix));
    auto ker = submodule(cov.source, K).source;
    return hom_dim(ker, N) + hom_dim(M, N) - hom_dim(cov.source, N);
}

RightModule syzygy(Engine& E, const RightModule& M) {
    auto cov = E.projective_cover(M);
    return submodule(cov.source, Subspace::span(left_nullspace(cov.matrix))).source;
}

}  // namespace

TEST_CASE("extended dimensions") {
    auto m = ExtDim::minus_infinity();
    CHECK(m.plus_one() == m);
    CHECK(ExtDim::finite(2).plus_one() == ExtDim::finite(3));
    CHECK(ExtDim::at_least(4).plus_one() == ExtDim::at_least(5));
    CHECK(max(m, ExtDim::finite(0)) == ExtDim::finite(0));
    CHECK(max(ExtDim::finite(7), ExtDim::at_least(3)) == ExtDim::at_least(7));
    CHECK(max(ExtDim::finite(1), ExtDim::finite(3)) == ExtDim::finite(3));
    CHECK(m.str() == "-inf");
    CHECK(m.str(true) == "-1");
    CHECK(ExtDim::at_least(6).str() == ">=6");
    CHECK(*at_most(m, 0));
    CHECK_FALSE(*at_most(ExtDim::at_least(6), 2));
    CHECK_FALSE(at_most(ExtDim::at_least(2), 4).has_value());
    CHECK(*less_than(m, ExtDim::finite(0)));
    CHECK_FALSE(*less_than(ExtDim::finite(0), m));
    CHECK(*less_than(ExtDim::finite(1), ExtDim::at_least(2)));
    CHECK_FALSE(less_than(ExtDim::at_least(2), ExtDim::at_least(3)).has_value());
}

TEST_CASE("idempotents and indecomposable projectives") {
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        Engine E(A);
        std::size_t total = 0;
        for (std::size_t j = 0; j < E.simples().size(); ++j) {
            const Vec& e = E.idempotents()[j];
            CHECK(A->multiply(e, e) == e);
            const auto& P = E.indecomposable_projective(j);
            CHECK(validate_module(P).empty());
            auto t = top(P, E.radical()).target;
            CHECK(is_isomorphic(t, E.simples()[j]));
            const auto& S = E.simples()[j];
            total += S.dim() / hom_dim(S, S) * P.dim();
            // E(S_j) has simple socle S_j.
            const auto& I = E.indecomposable_injective(j);
            CHECK(is_isomorphic(socle(I, E.radical()).source, S));
        }
        // A_A is the sum of the P_j with multiplicity dim S_j / dim End S_j.
        CHECK(total == A->dim());
    }
}

TEST_CASE("envelope and cover examples") {
    auto D = ptr(truncated_polynomial(2, 2));
    Engine E(D);
    auto reg = regular_module(D);
    auto env = E.injective_envelope(reg);
    CHECK(env.target.dim() == 2);
    CHECK(rank(env.matrix) == 2);
    const auto& S = E.simples()[0];
    CHECK(E.injective_envelope(S).target.dim() == 2);
    CHECK(E.injective_envelope(zero_module(D)).target.dim() == 0);
    CHECK(E.projective_cover(S).source.dim() == 2);
    CHECK(E.projective_cover(reg).source.dim() == 2);

    auto T = ptr(lower_triangular(field_algebra(2), 2));  // E11, E21, E22
    Engine ET(T);
    for (const auto& Sj : ET.simples()) {
        // The simple on which E22 acts as 1 has a 2-dimensional cover.
        bool at_22 = !Sj.act(2).is_zero();
        CHECK(ET.projective_cover(Sj).source.dim() == (at_22 ? 2u : 1u));
    }
}

TEST_CASE("envelopes and covers on sample modules") {
    std::mt19937_64 rng(21);
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        Engine E(A);
        const Subspace& J = E.radical();
        for (const auto& M : sample_modules(A, rng)) {
            auto env = E.injective_envelope(M);
            CHECK(is_homomorphism(M, env.target, env.matrix));
            CHECK(rank(env.matrix) == M.dim());
            Subspace image = Subspace::span(env.matrix.rows() ? env.matrix : Mat(A->field(), 0, env.target.dim()));
            CHECK(image.contains(socle_subspace(env.target, J)));
            CHECK(socle_subspace(env.target, J).dim() == socle_subspace(M, J).dim());
            for (const auto& S : E.simples()) CHECK(ext1_by_hom(E, S, env.target) == 0);

            auto cov = E.projective_cover(M);
            CHECK(is_homomorphism(cov.source, M, cov.matrix));
            CHECK(rank(cov.matrix) == M.dim());
            Subspace ker = Subspace::span(left_nullspace(cov.matrix));
            CHECK(radical_of_module(cov.source, J).contains(ker));
            for (const auto& S : E.simples()) CHECK(ext1_by_hom(E, cov.source, S) == 0);
        }
    }
}

TEST_CASE("Ext agrees with the Hom-cokernel formula and dimension shifting") {
    std::mt19937_64 rng(8);
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        Engine E(A);
        auto mods = sample_modules(A, rng, 2);
        for (const auto& M : mods)
            for (const auto& N : mods) {
                if (M.dim() * N.dim() > 200) continue;
                CHECK(E.ext_dim(M, N, 0) == hom_dim(M, N));
                CHECK(E.ext_dim(M, N, 1) == ext1_by_hom(E, M, N));
                if (M.dim() > 0) CHECK(E.ext_dim(M, N, 2) == ext1_by_hom(E, syzygy(E, M), N));
            }
    }
}

TEST_CASE("Ext examples") {
    auto D = ptr(truncated_polynomial(2, 2));
    Engine E(D);
    const auto& S = E.simples()[0];
    for (std::size_t i = 0; i <= 4; ++i) CHECK(E.ext_dim(S, S, i) == 1);
    auto reg = regular_module(D);
    CHECK(E.ext_dim(reg, S, 0) == S.dim());
    CHECK(E.ext_dim(S, reg, 1) == 0);
    CHECK(E.is_injective(reg));
    CHECK(E.is_projective(reg));
    CHECK_FALSE(E.is_injective(S));
    CHECK_FALSE(E.is_projective(S));
}

TEST_CASE("resolutions") {
    auto F2 = ptr(field_algebra(2));
    auto R = minimal_injective_resolution(regular_module(F2), 2);
    CHECK(R.terms[0].dim() == 1);
    CHECK(R.terms[1].dim() == 0);

    auto D = ptr(truncated_polynomial(2, 2));
    Engine ED(D);
    auto RD = ED.minimal_injective_resolution(regular_module(D), 2);
    CHECK(RD.terms[0].dim() == 2);
    CHECK(RD.terms[1].dim() == 0);
    auto PS = ED.minimal_projective_resolution(ED.simples()[0], 4);
    for (const auto& T : PS.terms) CHECK(T.dim() == 2);

    auto T2 = ptr(lower_triangular(field_algebra(2), 2));
    Engine ET(T2);
    auto RT = ET.minimal_injective_resolution(regular_module(T2), 3);
    CHECK(RT.terms[0].dim() > 0);
    CHECK(RT.terms[1].dim() > 0);
    CHECK(RT.terms[2].dim() == 0);

    std::mt19937_64 rng(4);
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        Engine E(A);
        for (const auto& M : sample_modules(A, rng, 2)) {
            auto P = E.minimal_projective_resolution(M, 3);
            CHECK(resolution_is_exact(P));
            CHECK(resolution_is_minimal(P, E.radical()));
            auto I = E.minimal_injective_resolution(M, 3);
            CHECK(resolution_is_exact(I));
            CHECK(resolution_is_minimal(I, E.radical()));
            // Bass numbers: multiplicity of E(S_j) in I^i equals
            // dim Ext^i(S_j, M) / dim End(S_j).
            auto mult = E.injective_multiplicities(M, 2);
            for (std::size_t i = 0; i <= 2; ++i)
                for (std::size_t j = 0; j < E.simples().size(); ++j) {
                    const auto& S = E.simples()[j];
                    CHECK(mult[i][j] * hom_dim(S, S) == E.ext_dim(S, M, i));
                }
        }
    }
}

TEST_CASE("projective dimension") {
    auto F2 = ptr(field_algebra(2));
    CHECK(projective_dimension(zero_module(F2), 3) == ExtDim::minus_infinity());
    CHECK(projective_dimension(regular_module(F2), 3) == ExtDim::finite(0));
    auto D = ptr(truncated_polynomial(2, 2));
    Engine ED(D);
    CHECK(ED.projective_dimension(ED.simples()[0], 6) == ExtDim::at_least(6));
    auto T2 = ptr(lower_triangular(field_algebra(2), 2));
    Engine ET(T2);
    std::vector<ExtDim> pds;
    for (const auto& S : ET.simples()) pds.push_back(ET.projective_dimension(S, 4));
    CHECK(max(pds[0], pds[1]) == ExtDim::finite(1));

    std::mt19937_64 rng(17);
    std::size_t compared = 0;
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        Engine E(A);
        for (const auto& M : sample_modules(A, rng, 3)) {
            for (std::size_t cap : {1u, 2u, 4u}) {
                CHECK(E.projective_dimension(M, cap) == E.projective_dimension_by_ext(M, cap));
                ++compared;
            }
            CHECK(E.is_projective(M) == *at_most(E.projective_dimension(M, 2), 0));
            CHECK(E.is_injective(M) == E.is_projective(dual(M, E.opposite())));
        }
    }
    CHECK(compared >= 150);
}

TEST_CASE("profiles of small algebras") {
    auto fin = [](std::size_t n) { return ExtDim::finite(n); };
    auto ninf = ExtDim::minus_infinity();
    auto F2 = field_algebra(2);
    struct Case {
        StructureAlgebra A;
        std::vector<ExtDim> expect;
    };
    std::vector<Case> cases{
        {F2, {fin(0), ninf, ninf, ninf}},
        {field_algebra(5), {fin(0), ninf, ninf, ninf}},
        {truncated_polynomial(2, 3), {fin(0), ninf, ninf, ninf}},
        {matrix_algebra(2, 2), {fin(0), ninf, ninf, ninf}},
        {lower_triangular(F2, 2), {fin(0), fin(1), ninf, ninf}},
        {lower_triangular(field_algebra(3), 2), {fin(0), fin(1), ninf, ninf}},
        {path_algebra_A2(2), {fin(0), fin(1), ninf, ninf}},
    };
    for (auto& c : cases) {
        INFO(c.A.name());
        auto P = rfd_profile(ptr(c.A), 3, 6);
        CHECK(P.entries == c.expect);
    }
    auto L = rfd_profile(ptr(local_rad_square_zero(2)), 1, 6);
    CHECK(L.entries[0] == ExtDim::at_least(6));
}

TEST_CASE("both profile routes agree on small algebras") {
    for (const auto& A : small_algebras()) {
        INFO(A->name());
        Engine E(A);
        CHECK(E.rfd_direct(3, 5) == E.rfd_bass(3, 5));
    }
}
