#include "auslab/algebra.hpp"
#include "auslab/error.hpp"
#include "doctest.h"

using namespace auslab;

namespace {

AlgebraPtr ptr(StructureAlgebra A) { return std::make_shared<StructureAlgebra>(std::move(A)); }

Vec e(std::size_t d, std::size_t i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

std::vector<StructureAlgebra> small_corpus() {
    auto F2 = ptr(field_algebra(2));
    auto D2 = ptr(truncated_polynomial(2, 2));
    return {field_algebra(2),           field_algebra(3),
            truncated_polynomial(2, 3), truncated_polynomial(5, 2),
            product(*F2, *F2),          path_algebra_A2(3),
            local_rad_square_zero(2),   matrix_algebra(2, 2),
            lower_triangular(*F2, 3),   lower_triangular(*D2, 2),
            iterated_triangular(D2, 3), triangular_from_bimodule(F2, F2, regular_bimodule(F2))};
}

}  // namespace

TEST_CASE("validate detects axiom violations") {
    CHECK(validate(field_algebra(2)).empty());
    CHECK(validate(lower_triangular(field_algebra(2), 3)).empty());

    // F_2 x F_2 on idempotents e0, e1, with e1*e1 corrupted to e0.
    PrimeField F(2);
    std::vector<Vec> table{{1, 0}, {0, 0}, {0, 0}, {0, 1}};
    CHECK(validate(StructureAlgebra(F, 2, table, {1, 1}, "F2xF2")).empty());
    table[3] = {1, 0};
    StructureAlgebra bad(F, 2, table, {1, 1}, "broken");
    auto v = validate(bad);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == AlgebraViolation::Kind::Associativity);
    CHECK(v.front().i == 0);
    CHECK(v.front().j == 1);
    CHECK(v.front().l == 1);
}

TEST_CASE("constructor outputs satisfy the axioms") {
    for (const auto& A : small_corpus()) {
        INFO(A.name());
        CHECK(validate(A).empty());
        CHECK(validate(opposite(A)).empty());
        CHECK(opposite(opposite(A)).same_table(A));
        CHECK(opposite(A).dim() == A.dim());
    }
}

TEST_CASE("opposite of commutative and triangular algebras") {
    auto A = truncated_polynomial(3, 3);
    CHECK(opposite(A).same_table(A));
    auto T = lower_triangular(field_algebra(2), 2);  // basis E11, E21, E22
    CHECK(Vec(T.product(1, 0).begin(), T.product(1, 0).end()) == e(3, 1));
    auto Top = opposite(T);
    CHECK(Vec(Top.product(0, 1).begin(), Top.product(0, 1).end()) == e(3, 1));
}

TEST_CASE("truncated polynomials and corpus constructors") {
    CHECK(truncated_polynomial(2, 1).dim() == 1);
    auto D = truncated_polynomial(2, 2);
    CHECK(is_zero_vec(D.product(1, 1)));
    auto C = truncated_polynomial(3, 3);
    CHECK(Vec(C.product(1, 1).begin(), C.product(1, 1).end()) == e(3, 2));
    CHECK(is_zero_vec(C.product(1, 2)));

    auto F2 = field_algebra(2);
    auto P = product(F2, F2);
    CHECK(P.unit() == Vec{1, 1});
    auto L = local_rad_square_zero(2);
    CHECK(L.dim() == 3);
    CHECK(is_zero_vec(L.product(1, 2)));
    CHECK(is_zero_vec(L.product(1, 1)));
    auto M = matrix_algebra(2, 2);
    CHECK(Vec(M.product(1, 2).begin(), M.product(1, 2).end()) == e(4, 0));
    CHECK(path_algebra_A2(2).dim() == 3);
}

TEST_CASE("lower triangular matrix rings") {
    auto F2 = field_algebra(2);
    auto T1 = lower_triangular(F2, 1);
    CHECK(T1.same_table(F2));
    auto T = lower_triangular(F2, 2);  // E11, E21, E22
    CHECK(T.dim() == 3);
    CHECK(T.unit() == Vec{1, 0, 1});
    CHECK(Vec(T.product(1, 0).begin(), T.product(1, 0).end()) == e(3, 1));
    CHECK(is_zero_vec(T.product(0, 1)));
    REQUIRE(T.block_idempotents().has_value());
    CHECK((*T.block_idempotents())[0] == e(3, 0));
    CHECK((*T.block_idempotents())[1] == e(3, 2));
    CHECK(lower_triangular(truncated_polynomial(2, 2), 3).dim() == 12);

    // Matrix-unit rule checked against explicit matrices over F_3.
    auto T3 = lower_triangular(field_algebra(3), 3);
    const auto& labels = T3.matrix_labels();
    for (std::size_t x = 0; x < T3.dim(); ++x)
        for (std::size_t y = 0; y < T3.dim(); ++y) {
            Vec expect(T3.dim(), 0);
            if (labels[x].col == labels[y].row)
                for (std::size_t z = 0; z < T3.dim(); ++z)
                    if (labels[z].row == labels[x].row && labels[z].col == labels[y].col) expect[z] = 1;
            CHECK(Vec(T3.product(x, y).begin(), T3.product(x, y).end()) == expect);
        }
}

TEST_CASE("triangular rings from bimodules") {
    auto R = ptr(truncated_polynomial(2, 2));
    auto Lam = triangular_from_bimodule(R, R, regular_bimodule(R));
    CHECK(Lam.dim() == 6);
    CHECK(validate(Lam).empty());
    auto idem = *Lam.block_idempotents();
    CHECK(Lam.multiply(idem[0], idem[0]) == idem[0]);
    CHECK(Lam.multiply(idem[1], idem[1]) == idem[1]);
    CHECK(is_zero_vec(Lam.multiply(idem[0], idem[1])));

    auto F2 = ptr(field_algebra(2));
    auto Z = triangular_from_bimodule(F2, F2, zero_bimodule(F2, F2));
    CHECK(Z.same_table(product(*F2, *F2)));

    BimoduleData broken = regular_bimodule(R);
    broken.right_action[1] = Mat::identity(R->field(), 2);
    CHECK_FALSE(validate_bimodule(broken).empty());
    CHECK_THROWS_AS(triangular_from_bimodule(R, R, broken), InvalidBimodule);
}

TEST_CASE("iterated triangular rings are relabelled lower triangular rings") {
    for (auto base : {field_algebra(2), truncated_polynomial(3, 2)}) {
        auto A = ptr(base);
        for (std::size_t t = 1; t <= 3; ++t) {
            auto It = iterated_triangular(A, t);
            auto T = lower_triangular(*A, t);
            REQUIRE(It.dim() == T.dim());
            CHECK(validate(It).empty());
            // Map basis elements through their matrix-unit labels.
            std::vector<std::size_t> to_T(It.dim());
            for (std::size_t x = 0; x < It.dim(); ++x)
                for (std::size_t y = 0; y < T.dim(); ++y)
                    if (It.matrix_labels()[x] == T.matrix_labels()[y]) to_T[x] = y;
            for (std::size_t x = 0; x < It.dim(); ++x)
                for (std::size_t y = 0; y < It.dim(); ++y) {
                    auto lhs = It.product(x, y);
                    auto rhs = T.product(to_T[x], to_T[y]);
                    for (std::size_t z = 0; z < It.dim(); ++z) CHECK(lhs[z] == rhs[to_T[z]]);
                }
        }
    }
}

TEST_CASE("algebra text format round trips") {
    for (const auto& A : small_corpus()) {
        auto text = serialize_algebra(A);
        auto B = parse_algebra(text, A.name());
        CHECK(B.same_table(A));
        CHECK(serialize_algebra(B) == text);
    }
    auto A = parse_algebra("# dual numbers\np 2\ndim 2\nunit 1 0\nmult 0 0 1 0\nmult 0 1 0 1\nmult 1 0 0 3\n", "d");
    CHECK(Vec(A.product(1, 0).begin(), A.product(1, 0).end()) == Vec{0, 1});
    CHECK(is_zero_vec(A.product(1, 1)));
    CHECK_THROWS_AS(parse_algebra("p 2\ndim 1\nunit 1\nmult 0 0 1\nmult 0 0 1\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_algebra("p 4\ndim 1\nunit 1\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_algebra("p 2\ndim 1\nunit 1 0\n", "x"), ParseError);
}
