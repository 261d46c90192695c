#include <cmath>
#include <random>

#include "auslab/error.hpp"
#include "auslab/module.hpp"
#include "doctest.h"

using namespace auslab;

namespace {

AlgebraPtr ptr(StructureAlgebra A) { return std::make_shared<StructureAlgebra>(std::move(A)); }

std::vector<AlgebraPtr> algebras() {
    auto F2 = field_algebra(2);
    return {ptr(F2),
            ptr(truncated_polynomial(2, 2)),
            ptr(truncated_polynomial(2, 3)),
            ptr(product(F2, F2)),
            ptr(path_algebra_A2(2)),
            ptr(local_rad_square_zero(2)),
            ptr(matrix_algebra(2, 2)),
            ptr(lower_triangular(F2, 2)),
            ptr(lower_triangular(F2, 3)),
            ptr(truncated_polynomial(3, 2)),
            ptr(lower_triangular(truncated_polynomial(2, 2), 2))};
}

// Enumerates every dim(M) x dim(N) matrix; only for tiny spaces.
std::size_t brute_force_hom_dim(const RightModule& M, const RightModule& N) {
    const std::size_t cells = M.dim() * N.dim();
    const Scalar p = M.field().p();
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= p;
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        Mat f(M.field(), M.dim(), N.dim());
        std::size_t c = code;
        for (std::size_t i = 0; i < cells; ++i, c /= p) f.mutable_data()[i] = Scalar(c % p);
        bool ok = true;
        for (std::size_t i = 0; i < M.algebra()->dim() && ok; ++i) ok = M.act(i) * f == f * N.act(i);
        count += ok;
    }
    return static_cast<std::size_t>(std::llround(std::log(double(count)) / std::log(double(p))));
}

// Cyclic submodule of v under every basis element, by naive iteration.
std::size_t naive_cyclic_dim(const RightModule& M, const Vec& v) {
    Subspace U = Subspace::span(Mat::from_row_vectors(M.field(), M.dim(), {v}));
    while (true) {
        Mat rows = U.basis();
        for (std::size_t i = 0; i < M.algebra()->dim(); ++i) rows = vstack(rows, U.basis() * M.act(i));
        Subspace V = Subspace::span(rows);
        if (V.dim() == U.dim()) return U.dim();
        U = V;
    }
}

bool brute_force_simple(const RightModule& M) {
    if (M.dim() == 0) return false;
    const Scalar p = M.field().p();
    std::size_t total = 1;
    for (std::size_t i = 0; i < M.dim(); ++i) total *= p;
    for (std::size_t code = 1; code < total; ++code) {
        Vec v(M.dim());
        std::size_t c = code;
        for (auto& x : v) x = Scalar(c % p), c /= p;
        if (naive_cyclic_dim(M, v) < M.dim()) return false;
    }
    return true;
}

std::vector<RightModule> test_modules(const AlgebraPtr& A, std::mt19937_64& rng) {
    RightModule reg = regular_module(A);
    std::vector<RightModule> out{reg, dual(dual(reg, opposite_ptr(A)), A)};
    std::uniform_int_distribution<Scalar> coin(0, A->field().p() - 1);
    for (int k = 0; k < 3; ++k) {
        Vec v(A->dim());
        for (auto& x : v) x = coin(rng);
        Subspace U = spin(reg, {v});
        out.push_back(submodule(reg, U).source);
        out.push_back(quotient(reg, U).target);
    }
    for (auto& S : simple_modules(A)) out.push_back(S);
    return out;
}

Vec e(std::size_t d, std::size_t i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("regular modules") {
    auto F2 = ptr(field_algebra(2));
    auto R = regular_module(F2);
    CHECK(R.dim() == 1);
    CHECK(R.act(0) == Mat::identity(F2->field(), 1));
    auto D = ptr(truncated_polynomial(2, 2));
    CHECK(regular_module(D).act(1) == Mat::from_rows(D->field(), {{0, 1}, {0, 0}}));
    for (const auto& A : algebras()) CHECK(validate_module(regular_module(A)).empty());
}

TEST_CASE("hom spaces agree with brute force enumeration") {
    std::mt19937_64 rng(5);
    for (const auto& A : algebras()) {
        if (A->field().p() != 2) continue;
        auto mods = test_modules(A, rng);
        for (const auto& M : mods)
            for (const auto& N : mods) {
                if (M.dim() * N.dim() > 12) continue;
                auto H = hom_space(M, N);
                for (const auto& f : H) CHECK(is_homomorphism(M, N, f));
                CHECK(H.size() == brute_force_hom_dim(M, N));
            }
    }
}

TEST_CASE("hom space examples") {
    for (const auto& A : algebras()) {
        auto R = regular_module(A);
        CHECK(hom_dim(R, R) == A->dim());
        CHECK(hom_dim(R, zero_module(A)) == 0);
    }
    auto D = ptr(truncated_polynomial(2, 2));
    auto S = simple_modules(D);
    REQUIRE(S.size() == 1);
    CHECK(hom_dim(S[0], regular_module(D)) == 1);
}

TEST_CASE("simplicity agrees with brute force") {
    std::mt19937_64 rng(9);
    for (const auto& A : algebras())
        for (const auto& M : test_modules(A, rng)) {
            if (M.dim() > 8) continue;
            CHECK(is_simple(M) == brute_force_simple(M));
        }
}

TEST_CASE("composition factors") {
    auto D = ptr(truncated_polynomial(2, 2));
    auto c = chop(regular_module(D));
    REQUIRE(c.size() == 1);
    CHECK(c[0].multiplicity == 2);
    CHECK(c[0].simple.dim() == 1);

    auto T = ptr(lower_triangular(field_algebra(2), 2));
    auto ct = chop(regular_module(T));
    REQUIRE(ct.size() == 2);
    std::size_t total = 0;
    for (auto& f : ct) total += f.multiplicity;
    CHECK(total == 3);

    // Jordan-Hoelder: multiplicities do not depend on the seed.
    std::mt19937_64 rng(3);
    for (const auto& A : algebras())
        for (const auto& M : test_modules(A, rng)) {
            auto a = chop(M, 1), b = chop(M, 77);
            REQUIRE(a.size() == b.size());
            for (const auto& f : a) {
                bool found = false;
                for (const auto& g : b)
                    if (simples_isomorphic(f.simple, g.simple)) {
                        CHECK(f.multiplicity == g.multiplicity);
                        found = true;
                    }
                CHECK(found);
            }
        }
}

TEST_CASE("simple modules") {
    auto F2 = field_algebra(2);
    CHECK(simple_modules(ptr(product(F2, F2))).size() == 2);
    auto M2 = simple_modules(ptr(matrix_algebra(2, 2)));
    REQUIRE(M2.size() == 1);
    CHECK(M2[0].dim() == 2);
    auto T = simple_modules(ptr(lower_triangular(F2, 2)));
    REQUIRE(T.size() == 2);
    CHECK(T[0].dim() == 1);
    CHECK(T[1].dim() == 1);
    CHECK_FALSE(is_isomorphic(T[0], T[1]));
    for (const auto& A : algebras()) {
        auto S = simple_modules(A);
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = 0; j < S.size(); ++j) CHECK(simples_isomorphic(S[i], S[j]) == (i == j));
    }
}

TEST_CASE("radical") {
    auto F2 = field_algebra(2);
    CHECK(radical(ptr(product(F2, F2))).dim() == 0);
    auto D = ptr(truncated_polynomial(2, 2));
    CHECK(radical(D) == Subspace::span(Mat::from_rows(D->field(), {{0, 1}})));
    auto T = ptr(lower_triangular(F2, 2));  // E11, E21, E22
    Subspace J = radical(T);
    CHECK(J == Subspace::span(Mat::from_rows(T->field(), {{0, 1, 0}})));
    CHECK(is_zero_vec(T->multiply(e(3, 1), e(3, 1))));

    for (const auto& A : algebras()) {
        INFO(A->name());
        Subspace rad = radical(A);
        // Two-sided ideal.
        for (std::size_t k = 0; k < rad.dim(); ++k)
            for (std::size_t i = 0; i < A->dim(); ++i) {
                CHECK(rad.contains(A->multiply(rad.basis().row(k), e(A->dim(), i))));
                CHECK(rad.contains(A->multiply(e(A->dim(), i), rad.basis().row(k))));
            }
        // Nilpotent: J^d = 0.
        Mat power = rad.basis();
        for (std::size_t step = 0; step < A->dim() && power.rows(); ++step) {
            std::vector<Vec> next;
            for (std::size_t r = 0; r < power.rows(); ++r)
                for (std::size_t k = 0; k < rad.dim(); ++k)
                    next.push_back(A->multiply(power.row(r), rad.basis().row(k)));
            power = Subspace::span(Mat::from_row_vectors(A->field(), A->dim(), next)).basis();
        }
        CHECK(power.rows() == 0);
        // Wedderburn: dim A/J = sum over simples of dim(S)^2 / dim End(S).
        std::size_t semisimple = 0;
        for (const auto& S : simple_modules(A)) semisimple += S.dim() * S.dim() / hom_dim(S, S);
        CHECK(A->dim() - rad.dim() == semisimple);
    }
}

TEST_CASE("socle and top") {
    auto C = ptr(truncated_polynomial(2, 3));
    auto R = regular_module(C);
    auto soc = socle(R);
    CHECK(soc.source.dim() == 1);
    CHECK(soc.matrix == Mat::from_rows(C->field(), {{0, 0, 1}}));
    CHECK(top(R).target.dim() == 1);

    std::mt19937_64 rng(1);
    for (const auto& A : algebras()) {
        Subspace J = radical(A);
        AlgebraPtr Aop = opposite_ptr(A);
        Subspace Jop = radical(Aop);
        auto mods = test_modules(A, rng);
        for (const auto& M : mods) {
            auto s = socle(M, J).source, t = top(M, J).target;
            for (const auto& [f, _] : chop(s)) CHECK(socle(f, J).source.dim() == f.dim());
            CHECK(chop(s).size() <= chop(M).size());
            // Socle of a semisimple module is everything.
            CHECK(socle(s, J).source.dim() == s.dim());
            CHECK(top(t, J).target.dim() == t.dim());
            // Duality exchanges socle and top.
            RightModule DM = dual(M, Aop);
            CHECK(is_isomorphic(socle(DM, Jop).source, dual(t, Aop)));
            CHECK(dual(DM, A) == M);
            for (const auto& S : simple_modules(A)) CHECK(hom_dim(S, M) == hom_dim(S, s));
        }
        // Additivity on a direct sum.
        auto sum = direct_sum(mods[0], mods[2]);
        CHECK(socle(sum, J).source.dim() == socle(mods[0], J).source.dim() + socle(mods[2], J).source.dim());
    }
}

TEST_CASE("duality of the regular module") {
    for (const auto& A : algebras()) {
        AlgebraPtr Aop = opposite_ptr(A);
        auto D = dual(regular_module(A), Aop);
        CHECK(validate_module(D).empty());
        CHECK(D.dim() == A->dim());
        auto lhs = socle(D).source;
        auto rhs = dual(top(regular_module(A)).target, Aop);
        CHECK(is_isomorphic(lhs, rhs));
    }
    auto z = dual(zero_module(ptr(field_algebra(2))));
    CHECK(z.dim() == 0);
}

TEST_CASE("annihilators and direct sums") {
    for (const auto& A : algebras()) CHECK(annihilator(regular_module(A)).dim() == 0);
    auto F2 = field_algebra(2);
    auto P = ptr(product(F2, F2));
    for (const auto& S : simple_modules(P)) {
        auto ann = annihilator(S);
        CHECK(ann.dim() == 1);
        // Exactly one of the two idempotents kills S.
        CHECK(ann.contains(e(2, 0)) != ann.contains(e(2, 1)));
    }
    auto R = regular_module(P);
    CHECK(direct_sum(R, R).dim() == 4);
}

TEST_CASE("tensor products over a base algebra") {
    auto S = ptr(truncated_polynomial(2, 2));
    auto reg = regular_bimodule(S);
    auto YS = regular_module(S);
    auto t = tensor_over(YS, reg);
    CHECK(t.module.dim() == S->dim());
    CHECK(is_isomorphic(t.module, YS));
    for (const auto& Y : simple_modules(S)) {
        auto ty = tensor_over(Y, reg);
        CHECK(is_isomorphic(ty.module, Y));
    }

    // Over T_2(F_2): the relation span computed directly from every basis element.
    auto F2 = ptr(field_algebra(2));
    auto T = ptr(lower_triangular(*F2, 2));
    BimoduleData M = row_vector_bimodule(T, ptr(lower_triangular(*T, 1).with_matrix_labels({{1, 1, 0}, {1, 1, 1}, {1, 1, 2}})), 1);
    for (const auto& Y : simple_modules(T)) {
        auto ty = tensor_over(Y, M);
        std::vector<Vec> rels;
        for (std::size_t s = 0; s < T->dim(); ++s)
            for (std::size_t c = 0; c < Y.dim(); ++c)
                for (std::size_t b = 0; b < M.dim; ++b) {
                    Vec r(Y.dim() * M.dim, 0);
                    for (std::size_t c2 = 0; c2 < Y.dim(); ++c2) r[c2 * M.dim + b] = Y.act(s)(c, c2);
                    for (std::size_t b2 = 0; b2 < M.dim; ++b2)
                        r[c * M.dim + b2] = T->field().sub(r[c * M.dim + b2], M.left_action[s](b2, b));
                    rels.push_back(r);
                }
        std::size_t rel_rank = rank(Mat::from_row_vectors(T->field(), Y.dim() * M.dim, rels));
        CHECK(ty.module.dim() == Y.dim() * M.dim - rel_rank);
        CHECK(validate_module(ty.module).empty());
    }
}

TEST_CASE("module text format") {
    auto A = ptr(lower_triangular(field_algebra(3), 2));
    auto M = regular_module(A);
    auto text = serialize_module(M, "T");
    auto resolve = [&](const std::string& n) { return n == "T" ? A : nullptr; };
    CHECK(parse_module(text, resolve) == M);
    CHECK_THROWS_AS(parse_module("module-of U\nmdim 1\n", resolve), ParseError);
    CHECK_THROWS_AS(parse_module("module-of T\nmdim 1\nact 0\n1\nact 1\n1\nact 2\n1\n", resolve), InvalidModule);
}
