#pragma once
// Right modules over Lambda = [[R, 0], [M, S]] as triples (X, Y, f) with
// X over R, Y over S and f: Y (x)_S M -> X an R-homomorphism. The module on
// X (+) Y has (x, y).[[r, 0], [m, s]] = (x r + f(y (x) m), y s).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "auslab/homological.hpp"

namespace auslab {

struct TriangularData {
    AlgebraPtr R, S, Lambda;
    BimoduleData M;  // left S, right R
    std::size_t r() const { return R->dim(); }
    std::size_t m() const { return M.dim; }
    std::size_t s() const { return S->dim(); }
};

TriangularData triangular_data(const AlgebraPtr& R, const AlgebraPtr& S, const BimoduleData& M);
/// T_t(A) split as [[T_{t-1}(A), 0], [A^{(t-1)}, A]]; t >= 2.
TriangularData triangular_extension(const AlgebraPtr& A, std::size_t t);

/// e.Lambda for e = e_S, as an S-Lambda-bimodule, and the algebra
/// [[Lambda, 0], [e.Lambda, S]] built from it.
BimoduleData corner_row_bimodule(const TriangularData& D);
StructureAlgebra corner_extension(const TriangularData& D);

/// M as a right R-module.
RightModule right_module_of(const BimoduleData& M);
/// M as a right module over Sop, the opposite of its left algebra.
RightModule left_module_of(const BimoduleData& M, const AlgebraPtr& Sop);

struct Triple {
    RightModule X, Y;
    TensorProduct YM;
    Mat f;  // dim(Y (x)_S M) x dim X
};

/// Builds the triple from the values of f on pure tensors y_c (x) m_b, given
/// as the rows (c * dim M + b) of `pure`. Throws InvalidModule if they do not
/// descend to Y (x)_S M.
Triple make_triple(const TriangularData& D, RightModule X, RightModule Y, const Mat& pure);
/// f on pure tensors.
Mat pure_tensor_form(const Triple& T);
std::vector<std::string> validate_triple(const TriangularData& D, const Triple& T);

RightModule triple_to_module(const TriangularData& D, const Triple& T);
Triple module_to_triple(const TriangularData& D, const RightModule& N);
/// Rows are the bases of N.eR then N.eS; an isomorphism
/// triple_to_module(module_to_triple(N)) -> N.
Mat block_basis(const TriangularData& D, const RightModule& N);

/// g (x) 1_M between two tensor products with M.
Mat tensor_map(const TensorProduct& from, const TensorProduct& to, const Mat& g);

/// Hom_R(M, I) over S with (alpha.s)(x) = alpha(s.x); `maps` holds the
/// homomorphism of each basis vector as a dim M x dim I matrix.
struct StarModule {
    RightModule module;
    std::vector<Mat> maps;
};
StarModule star(const RightModule& I, const BimoduleData& M);

struct AdjointTriple {
    RightModule X, Y;
    StarModule hom;  // Hom_R(M, X)
    Mat phi;         // dim Y x dim Hom_R(M, X)
};
AdjointTriple adjoint_form(const TriangularData& D, const Triple& T);
Triple from_adjoint(const TriangularData& D, const AdjointTriple& A);

/// Evaluation star(I) (x)_S M -> I, alpha (x) x -> alpha(x).
struct XiMap {
    StarModule hom;
    TensorProduct tensor;
    Mat matrix;
    bool epic = false;
    ModuleMap kernel;  // inclusion of Ker xi
};
XiMap xi_map(const RightModule& I, const BimoduleData& M);

/// (I, star(I)) with the evaluation map.
Triple injective_triple(const TriangularData& D, const RightModule& I);
/// (0, E) with the zero map.
Triple corner_triple(const TriangularData& D, const RightModule& E);
Triple zero_triple(const TriangularData& D);

/// Triples (X, Y, f) over sample modules with random f, plus the triples of
/// a few projective Lambda-modules.
std::vector<Triple> random_triples(const TriangularData& D, std::uint64_t seed, std::size_t count);

/// Engines for R, S and Lambda, built on demand.
class TriangularContext {
public:
    explicit TriangularContext(TriangularData D, std::uint64_t seed = 0xA05);
    ~TriangularContext();
    const TriangularData& data() const noexcept { return D_; }
    Engine& R();
    Engine& S();
    Engine& Lambda();

private:
    TriangularData D_;
    std::uint64_t seed_;
    std::unique_ptr<Engine> R_, S_, L_;
};

/// Standing assumptions on M for the flat resolutions below.
struct Hypotheses {
    bool faithful = false;           // annihilator of M_R is 0
    bool right_projective = false;   // M_R projective
    bool endomorphisms = false;      // S -> End_R(M) bijective
    bool left_projective = false;    // _S M projective
    bool dual_projective = false;    // Hom_R(M, R) projective over S
    std::vector<std::string> failures() const;
};
Hypotheses check_hypotheses(TriangularContext& C);

struct FlatVerdict {
    bool y_projective = false;
    bool f_monic = false;
    bool coker_projective = false;
    bool flat() const { return y_projective && f_monic && coker_projective; }
};
FlatVerdict is_flat_triple(TriangularContext& C, const Triple& T);

/// Which projective the X-side summand of a cover step covers: X itself, or
/// only the cokernel of f composed with the Y-side cover.
enum class XSummand { CoverOfX, CoverOfCokernel };

/// One step 0 -> K -> F -> T -> 0 with
/// F = (P(Y) (x) M (+) Q, P(Y)) on the map (1, 0).
struct CoverStep {
    Triple flat;
    Mat psi_x, psi_y;  // F -> T, blockwise
    Triple kernel;
    Mat kernel_x, kernel_y;  // inclusions K -> F
    std::size_t x_summand_dim = 0;
    /// 0 -> Ker f -> Coker f_1 -> Q -> Coker f -> 0 exact.
    bool snake_exact = false;
};
CoverStep cover_step(TriangularContext& C, const Triple& T, XSummand policy = XSummand::CoverOfX);

struct TripleResolution {
    Triple resolved;
    std::vector<CoverStep> steps;
    MinResolution modules;  // over Lambda
    bool terminated = false;  // last kernel is zero
    std::vector<std::size_t> y_dims, x_summand_dims;
    bool exact() const;
    bool termwise_flat(TriangularContext& C) const;
};

/// Resolution of (I, star(I)) for injective I over R. Throws
/// HypothesisViolation if the hypotheses fail and NotEpic if the evaluation
/// map is not onto.
TripleResolution injective_triple_resolution(TriangularContext& C, const RightModule& I, std::size_t max_degree);
/// Resolution of (0, E) for E over S.
TripleResolution corner_triple_resolution(TriangularContext& C, const RightModule& E, std::size_t max_degree);

/// pd bounds on both sides of the dimension criteria, per k:
/// pd (I, star I) <= k  vs  pd Ker xi <= k-1 and pd star(I) <= k;
/// pd (0, E) <= k       vs  pd E <= k-1.
struct DimensionCriterion {
    std::size_t k;
    std::optional<bool> lhs, rhs;
    bool agrees() const { return lhs.has_value() && rhs.has_value() && *lhs == *rhs; }
};
std::vector<DimensionCriterion> injective_triple_criteria(TriangularContext& C, const RightModule& I,
                                                          std::size_t max_k, std::size_t cap);
std::vector<DimensionCriterion> corner_triple_criteria(TriangularContext& C, const RightModule& E,
                                                       std::size_t max_k, std::size_t cap);

/// The summands (I^i(R), *I^i(R)), (I^i(M), *I^i(M)) and, for i >= 1,
/// (0, I^{i-1}(*R)) as Lambda-modules.
std::vector<RightModule> predicted_injective_summands(TriangularContext& C, std::size_t i);

/// x <= bound with bound = -1 read as "is the zero module".
std::optional<bool> at_most_signed(const ExtDim& x, long bound);

}  // namespace auslab
