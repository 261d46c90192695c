#pragma once
// Dense exact linear algebra over prime fields F_p.
//
// Conventions: vectors are rows. A matrix acting on a row vector v is applied
// as v * A. All entries are kept reduced into [0, p).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace auslab {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

class PrimeField {
public:
    PrimeField() = default;
    /// Throws NotPrime unless 2 <= p <= 2^31-1 and p is prime.
    explicit PrimeField(std::uint64_t p);

    Scalar p() const noexcept { return p_; }
    Scalar reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const noexcept {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Scalar>(s >= p_ ? s - p_ : s);
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept {
        return static_cast<Scalar>((std::uint64_t(a) * b) % p_);
    }
    Scalar inv(Scalar a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    Scalar p_ = 2;
};

bool is_prime(std::uint64_t n);

/// Multiplicative inverse; throws ZeroInverse when a = 0 mod p.
Scalar ff_inv(Scalar a, const PrimeField& F);

class Mat {
public:
    Mat() = default;
    Mat(PrimeField F, std::size_t rows, std::size_t cols);
    Mat(PrimeField F, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Mat identity(PrimeField F, std::size_t n);
    /// Builds from integer literals, reducing each mod p.
    static Mat from_rows(PrimeField F, std::initializer_list<std::initializer_list<long long>> rows);
    static Mat from_row_vectors(PrimeField F, std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return F_; }

    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }
    const std::vector<Scalar>& data() const noexcept { return data_; }
    std::span<Scalar> mutable_data() noexcept { return data_; }

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    PrimeField F_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat operator*(const Mat& A, const Mat& B);
Mat operator+(const Mat& A, const Mat& B);
Mat operator-(const Mat& A, const Mat& B);
Mat scaled(const Mat& A, Scalar c);
Mat transpose(const Mat& A);
/// (A (x) B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l].
Mat kron(const Mat& A, const Mat& B);
Mat vstack(const Mat& A, const Mat& B);
Mat hstack(const Mat& A, const Mat& B);
Mat block_diagonal(const std::vector<Mat>& blocks);
Mat select_columns(const Mat& A, std::span<const std::size_t> cols);
Mat select_rows(const Mat& A, std::span<const std::size_t> rows);
Mat submatrix(const Mat& A, std::size_t r0, std::size_t nrows, std::size_t c0, std::size_t ncols);
/// Sum of c_k * mats[k]; all mats share a shape.
Mat linear_combination(const std::vector<Mat>& mats, std::span<const Scalar> coeffs,
                       PrimeField F, std::size_t rows, std::size_t cols);

Vec vec_mat(std::span<const Scalar> v, const Mat& A);
Vec mat_vec(const Mat& A, std::span<const Scalar> v);
Vec flatten(const Mat& A);
Mat unflatten(PrimeField F, std::span<const Scalar> v, std::size_t rows, std::size_t cols);
bool is_zero_vec(std::span<const Scalar> v);

/// dst += c * src (mod p).
void axpy(std::span<Scalar> dst, std::span<const Scalar> src, Scalar c, const PrimeField& F);

struct Rref {
    Mat reduced;                      // zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const noexcept { return pivots.size(); }
};

Rref rref(Mat A);
std::size_t rank(const Mat& A);
/// Rows form a basis of {v : A v^T = 0}.
Mat nullspace(const Mat& A);
/// Rows form a basis of {v : v A = 0}.
Mat left_nullspace(const Mat& A);
/// Some x with A x = b, or nullopt when b is not in the column space.
std::optional<Vec> solve(const Mat& A, std::span<const Scalar> b);
/// Some x with x A = b.
std::optional<Vec> solve_left(const Mat& A, std::span<const Scalar> b);
std::optional<Mat> inverse(const Mat& A);

/// A subspace of F_p^n kept as a reduced row echelon basis. Coordinates of a
/// member v with respect to that basis are simply v restricted to the pivots.
class Subspace {
public:
    Subspace() = default;
    Subspace(PrimeField F, std::size_t ambient);

    static Subspace span(const Mat& rows);
    static Subspace full(PrimeField F, std::size_t n);

    std::size_t dim() const noexcept { return pivots_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    const PrimeField& field() const noexcept { return F_; }
    const Mat& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::vector<std::size_t> nonpivots() const;

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;
    /// v minus the unique member of the subspace agreeing with v on the pivots.
    Vec reduce(std::span<const Scalar> v) const;
    /// Coordinates of a member (v restricted to the pivot columns).
    Vec coords(std::span<const Scalar> v) const;
    Mat coords_of_rows(const Mat& rows) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    PrimeField F_;
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& U, const Subspace& V);
Subspace subspace_intersection(const Subspace& U, const Subspace& V);
/// Rows extending U's echelon basis to a basis of V (a basis of V/U).
/// Throws NotASubspacePair unless U is contained in V.
Mat quotient_basis(const Subspace& U, const Subspace& V);

/// Incremental echelon form. Vectors are reduced against stored rows in
/// insertion order, so no back substitution is needed for membership tests.
/// Optionally tracks how every stored row is written in terms of the vectors
/// that were added.
class EchelonBuilder {
public:
    EchelonBuilder(PrimeField F, std::size_t ambient, bool track = false);

    /// Reduces v; returns true (and stores it) if it was independent.
    bool add(std::span<const Scalar> v);
    Vec reduce(std::span<const Scalar> v) const;
    /// With tracking: coefficients c such that v = sum c_i * added_i, or nullopt.
    std::optional<Vec> express(std::span<const Scalar> v) const;

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    Subspace subspace() const;

private:
    PrimeField F_;
    std::size_t ambient_;
    bool track_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec> combos_;  // rows_[i] = sum combos_[i][j] * added_j
    std::size_t added_ = 0;
};

}  // namespace auslab
