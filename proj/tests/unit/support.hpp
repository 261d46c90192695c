#pragma once

#include <random>

#include "auslab/module.hpp"

namespace testing_support {

using namespace auslab;

inline AlgebraPtr ptr(StructureAlgebra A) { return std::make_shared<StructureAlgebra>(std::move(A)); }

/// Small algebras with a mix of semisimple, self-injective, hereditary and
/// infinite-global-dimension behaviour.
inline std::vector<AlgebraPtr> small_algebras() {
    auto F2 = field_algebra(2);
    return {ptr(F2),
            ptr(field_algebra(3)),
            ptr(truncated_polynomial(2, 2)),
            ptr(truncated_polynomial(2, 3)),
            ptr(truncated_polynomial(3, 2)),
            ptr(product(F2, F2)),
            ptr(matrix_algebra(2, 2)),
            ptr(path_algebra_A2(2)),
            ptr(local_rad_square_zero(2)),
            ptr(lower_triangular(F2, 2)),
            ptr(lower_triangular(F2, 3)),
            ptr(lower_triangular(truncated_polynomial(2, 2), 2))};
}

/// Cyclic submodules and quotients of the regular module, their sums, and the
/// simples.
inline std::vector<RightModule> sample_modules(const AlgebraPtr& A, std::mt19937_64& rng, int cyclic = 3) {
    RightModule reg = regular_module(A);
    std::vector<RightModule> out{reg};
    std::uniform_int_distribution<Scalar> coin(0, A->field().p() - 1);
    for (int k = 0; k < cyclic; ++k) {
        Vec v(A->dim());
        for (auto& x : v) x = coin(rng);
        Subspace U = spin(reg, {v});
        out.push_back(submodule(reg, U).source);
        out.push_back(quotient(reg, U).target);
    }
    for (auto& S : simple_modules(A)) out.push_back(S);
    out.push_back(direct_sum(out[1], out.back()));
    return out;
}

}  // namespace testing_support
