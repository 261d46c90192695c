#pragma once
// Finite-dimensional right modules over a StructureAlgebra. A module is a row
// space F_p^m with one action matrix per algebra basis element: v.e_i = v Act_i.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "auslab/algebra.hpp"

namespace auslab {

class RightModule {
public:
    RightModule() = default;
    /// Does not validate; use validate_module for untrusted input.
    RightModule(AlgebraPtr A, std::size_t dim, std::vector<Mat> action);

    const AlgebraPtr& algebra() const noexcept { return A_; }
    const PrimeField& field() const { return A_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const Mat& act(std::size_t i) const { return action_[i]; }
    const std::vector<Mat>& actions() const noexcept { return action_; }

    /// Matrix of x -> x.a for an algebra element a given by coefficients.
    Mat action_of(std::span<const Scalar> a) const;

    friend bool operator==(const RightModule& M, const RightModule& N) {
        return same_algebra(M.A_, N.A_) && M.dim_ == N.dim_ && M.action_ == N.action_;
    }

private:
    AlgebraPtr A_;
    std::size_t dim_ = 0;
    std::vector<Mat> action_;
};

/// Problems with the module axioms; empty when M is a unital right module.
std::vector<std::string> validate_module(const RightModule& M);

struct ModuleMap {
    RightModule source, target;
    Mat matrix;  // dim(source) x dim(target)
};

bool is_homomorphism(const RightModule& M, const RightModule& N, const Mat& f);

RightModule zero_module(const AlgebraPtr& A);
RightModule regular_module(const AlgebraPtr& A);
RightModule direct_sum(const RightModule& M, const RightModule& N);
RightModule direct_sum(const AlgebraPtr& A, const std::vector<RightModule>& parts);

/// Smallest submodule containing the given vectors.
Subspace spin(const RightModule& M, const std::vector<Vec>& vectors);
Subspace spin(const RightModule& M, const Mat& rows);
bool is_submodule(const RightModule& M, const Subspace& U);

/// The submodule on U's echelon basis, with its inclusion map.
ModuleMap submodule(const RightModule& M, const Subspace& U);
/// M/U on the basis of non-pivot unit vectors, with the projection map.
ModuleMap quotient(const RightModule& M, const Subspace& U);

/// Basis of Hom_A(M, N) as dim(M) x dim(N) matrices.
std::vector<Mat> hom_space(const RightModule& M, const RightModule& N);
std::size_t hom_dim(const RightModule& M, const RightModule& N);

/// Linear dual over the opposite algebra: actions are transposed. When Aop is
/// given it is used as the algebra of the result.
RightModule dual(const RightModule& M, const AlgebraPtr& Aop = nullptr);
AlgebraPtr opposite_ptr(const AlgebraPtr& A);

/// {a in A : M.a = 0} as a subspace of A.
Subspace annihilator(const RightModule& M);

/// Y (x)_S M for a right S-module Y and an S-R-bimodule M, together with the
/// surjection Y (x)_k M -> Y (x)_S M (basis y_c (x) m_b at index c*dim M + b).
struct TensorProduct {
    RightModule module;
    Mat surjection;
};
TensorProduct tensor_over(const RightModule& Y, const BimoduleData& M);

// Radical, socle, top ---------------------------------------------------------

/// Jacobson radical J(A) as a subspace of A.
Subspace radical(const AlgebraPtr& A, std::uint64_t seed = 0xA05);
/// M.J for a radical basis J.
Subspace radical_of_module(const RightModule& M, const Subspace& J);
Subspace socle_subspace(const RightModule& M, const Subspace& J);
ModuleMap socle(const RightModule& M, const Subspace& J);
ModuleMap top(const RightModule& M, const Subspace& J);
ModuleMap socle(const RightModule& M);
ModuleMap top(const RightModule& M);

// MeatAxe-style decomposition ---------------------------------------------------

/// A proper nonzero submodule, or nullopt when M is simple (or zero).
/// Throws Inconclusive if no certificate could be produced within bounds.
std::optional<Subspace> find_proper_submodule(const RightModule& M, std::uint64_t seed = 0xA05);
bool is_simple(const RightModule& M, std::uint64_t seed = 0xA05);

struct CompositionFactor {
    RightModule simple;
    std::size_t multiplicity;
};
/// Composition factors grouped by isomorphism class, in order of first appearance.
std::vector<CompositionFactor> chop(const RightModule& M, std::uint64_t seed = 0xA05);
/// Pairwise non-isomorphic simple modules, one per factor of A_A.
std::vector<RightModule> simple_modules(const AlgebraPtr& A, std::uint64_t seed = 0xA05);

/// For simple S and T: isomorphic iff Hom(S, T) != 0.
bool simples_isomorphic(const RightModule& S, const RightModule& T);
bool is_isomorphic(const RightModule& M, const RightModule& N, std::uint64_t seed = 0xA05);

/// Deterministic test population: A_A, cyclic submodules and quotients of
/// A_A spun from random vectors, the simples, and a direct sum.
std::vector<RightModule> sample_modules(const AlgebraPtr& A, std::uint64_t seed, std::size_t cyclic = 3);

// Text format -------------------------------------------------------------------

using AlgebraResolver = std::function<AlgebraPtr(const std::string&)>;
RightModule parse_module(const std::string& text, const AlgebraResolver& resolve);
std::string serialize_module(const RightModule& M, const std::string& algebra_name);

}  // namespace auslab
