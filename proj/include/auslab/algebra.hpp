#pragma once
// Finite-dimensional unital associative algebras over F_p, given by structure
// constants, and bimodules between them.

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "auslab/linalg.hpp"

namespace auslab {

class StructureAlgebra;
using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// Position of a basis element inside a matrix ring: E_{row,col} (x) e_{coeff}.
/// Rows and columns are 1-based as in the usual matrix-unit notation.
struct MatrixUnitLabel {
    std::size_t row = 0, col = 0, coeff = 0;
    friend bool operator==(const MatrixUnitLabel&, const MatrixUnitLabel&) = default;
};

class StructureAlgebra {
public:
    /// `table[(i * dim + j)]` is the coefficient vector of e_i * e_j.
    StructureAlgebra(PrimeField F, std::size_t dim, std::vector<Vec> table, Vec unit,
                     std::string name);

    const PrimeField& field() const noexcept { return F_; }
    std::size_t dim() const noexcept { return dim_; }
    const Vec& unit() const noexcept { return unit_; }
    const std::string& name() const noexcept { return name_; }

    /// Coefficients of e_i * e_j.
    std::span<const Scalar> product(std::size_t i, std::size_t j) const {
        return {table_.data() + (i * dim_ + j) * dim_, dim_};
    }
    Vec multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
    Vec basis_vector(std::size_t i) const;

    /// Matrix of x -> x * e_i (row convention); the action of e_i on A_A.
    const Mat& right_multiplication(std::size_t i) const { return right_mult_[i]; }
    /// Matrix of x -> e_i * x (row convention).
    const Mat& left_multiplication(std::size_t i) const { return left_mult_[i]; }

    /// Basis indices that generate A as a unital algebra.
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }

    /// Block idempotents (e_R, e_S) recorded by the triangular constructors.
    const std::optional<std::array<Vec, 2>>& block_idempotents() const noexcept {
        return block_idempotents_;
    }
    /// Matrix-unit labels recorded by the triangular-matrix constructors.
    const std::vector<MatrixUnitLabel>& matrix_labels() const noexcept { return labels_; }

    std::uint64_t fingerprint() const noexcept { return fingerprint_; }
    /// Same field, dimension, unit and multiplication table.
    bool same_table(const StructureAlgebra& other) const;

    StructureAlgebra with_name(std::string name) const;
    StructureAlgebra with_block_idempotents(Vec e_first, Vec e_second) const;
    StructureAlgebra with_matrix_labels(std::vector<MatrixUnitLabel> labels) const;

private:
    void derive();

    PrimeField F_;
    std::size_t dim_;
    std::vector<Scalar> table_;
    Vec unit_;
    std::string name_;
    std::vector<Mat> right_mult_, left_mult_;
    std::vector<std::size_t> generators_;
    std::optional<std::array<Vec, 2>> block_idempotents_;
    std::vector<MatrixUnitLabel> labels_;
    std::uint64_t fingerprint_ = 0;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct AlgebraViolation {
    enum class Kind { Associativity, LeftUnit, RightUnit, Shape };
    Kind kind;
    std::size_t i = 0, j = 0, l = 0;
    std::string describe() const;
};

/// Empty when the associativity and unit axioms hold. Violations are listed in
/// lexicographic order of the offending indices.
std::vector<AlgebraViolation> validate(const StructureAlgebra& A);

StructureAlgebra opposite(const StructureAlgebra& A);

// Corpus constructors ---------------------------------------------------------

StructureAlgebra field_algebra(std::uint64_t p);
/// F_p[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
StructureAlgebra truncated_polynomial(std::uint64_t p, std::size_t n);
StructureAlgebra product(const StructureAlgebra& A, const StructureAlgebra& B);
/// Path algebra of 1 -> 2 on the basis e_1, e_2, a (paths compose left to right).
StructureAlgebra path_algebra_A2(std::uint64_t p);
/// F_p[x,y]/(x,y)^2 on the basis 1, x, y.
StructureAlgebra local_rad_square_zero(std::uint64_t p);
/// M_n(F_p) on matrix units E_{ij}, index i*n + j.
StructureAlgebra matrix_algebra(std::uint64_t p, std::size_t n);

/// T_t(A): basis E_{ij} (x) e_a for 1 <= j <= i <= t, ordered lexicographically
/// by (i, j, a). Records the corner idempotents of the block form
/// [[T_{t-1}(A), 0], [A^{(t-1)}, A]].
StructureAlgebra lower_triangular(const StructureAlgebra& A, std::size_t t);

// Bimodules -------------------------------------------------------------------

/// A left S, right R bimodule on F_p^dim. The left action of S-basis element
/// s is s.x = L_s x on column vectors; the right action of R-basis element r
/// is x.r = x R_r on row vectors.
struct BimoduleData {
    AlgebraPtr left;   // S
    AlgebraPtr right;  // R
    std::size_t dim = 0;
    std::vector<Mat> left_action;
    std::vector<Mat> right_action;
};

std::vector<std::string> validate_bimodule(const BimoduleData& M);
/// R as an R-R-bimodule.
BimoduleData regular_bimodule(const AlgebraPtr& R);
/// The zero S-R-bimodule.
BimoduleData zero_bimodule(const AlgebraPtr& S, const AlgebraPtr& R);
/// Row vectors R^{(k)} with left R action and right action of a matrix-labelled
/// algebra T (each basis element of T carries a MatrixUnitLabel over R).
BimoduleData row_vector_bimodule(const AlgebraPtr& R, const AlgebraPtr& T, std::size_t k);

/// Lambda = [[R, 0], [M, S]] on the basis R, then M, then S. Throws
/// InvalidBimodule when M fails validation.
StructureAlgebra triangular_from_bimodule(const AlgebraPtr& R, const AlgebraPtr& S,
                                          const BimoduleData& M);

/// T_t(A) built by iterating one-step block extensions:
/// T_k = [[T_{k-1}, 0], [A^{(k-1)}, A]]. Carries matrix-unit labels.
StructureAlgebra iterated_triangular(const AlgebraPtr& A, std::size_t t);

// Text format -----------------------------------------------------------------

StructureAlgebra parse_algebra(const std::string& text, const std::string& name);
StructureAlgebra load_algebra(const std::string& path);
std::string serialize_algebra(const StructureAlgebra& A);

}  // namespace auslab
