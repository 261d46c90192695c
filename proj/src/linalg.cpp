#include "auslab/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "auslab/error.hpp"

namespace auslab {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p > 0x7fffffffULL || !is_prime(p))
        throw NotPrime("modulus " + std::to_string(p) + " is not a prime in [2, 2^31-1]");
    p_ = static_cast<Scalar>(p);
}

Scalar PrimeField::inv(Scalar a) const {
    a %= p_;
    if (a == 0) throw ZeroInverse("0 has no inverse mod " + std::to_string(p_));
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

Scalar ff_inv(Scalar a, const PrimeField& F) { return F.inv(a); }

// ---------------------------------------------------------------------------

Mat::Mat(PrimeField F, std::size_t rows, std::size_t cols)
    : F_(F), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(PrimeField F, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : F_(F), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw DimensionMismatch("entry count " + std::to_string(data_.size()) + " != " +
                                std::to_string(rows) + "x" + std::to_string(cols));
    for (auto& x : data_) x %= F_.p();
}

Mat Mat::identity(PrimeField F, std::size_t n) {
    Mat I(F, n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

Mat Mat::from_rows(PrimeField F, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Mat A(F, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged row list");
        std::size_t j = 0;
        for (long long x : row) A(i, j++) = F.reduce(x);
        ++i;
    }
    return A;
}

Mat Mat::from_row_vectors(PrimeField F, std::size_t cols, const std::vector<Vec>& rows) {
    Mat A(F, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), A.row(i).begin());
    }
    return A;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

// ---------------------------------------------------------------------------

void axpy(std::span<Scalar> dst, std::span<const Scalar> src, Scalar c, const PrimeField& F) {
    if (c == 0) return;
    const Scalar p = F.p();
    const std::size_t n = dst.size();
    Scalar* d = dst.data();
    const Scalar* s = src.data();
    if (p == 2) {
        for (std::size_t k = 0; k < n; ++k) d[k] ^= s[k];
    } else if (p < (1u << 16)) {
        for (std::size_t k = 0; k < n; ++k) d[k] = (d[k] + c * s[k]) % p;
    } else {
        for (std::size_t k = 0; k < n; ++k)
            d[k] = static_cast<Scalar>((std::uint64_t(d[k]) + std::uint64_t(c) * s[k]) % p);
    }
}

namespace {

void require_same_field(const Mat& A, const Mat& B, const char* op) {
    if (!(A.field() == B.field()))
        throw DimensionMismatch(std::string(op) + ": operands over different fields");
}

// Number of products (p-1)^2 that fit in a uint64 accumulator.
std::size_t accumulation_budget(Scalar p) {
    std::uint64_t sq = std::uint64_t(p - 1) * (p - 1);
    if (sq == 0) return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(std::numeric_limits<std::uint64_t>::max() / sq) - 1;
}

}  // namespace

Mat operator*(const Mat& A, const Mat& B) {
    require_same_field(A, B, "multiply");
    if (A.cols() != B.rows())
        throw DimensionMismatch("multiply " + std::to_string(A.rows()) + "x" +
                                std::to_string(A.cols()) + " by " + std::to_string(B.rows()) +
                                "x" + std::to_string(B.cols()));
    const PrimeField& F = A.field();
    const Scalar p = F.p();
    const std::size_t n = A.rows(), m = A.cols(), q = B.cols();
    Mat C(F, n, q);
    if (n == 0 || q == 0 || m == 0) return C;
    if (p == 2) {
        for (std::size_t i = 0; i < n; ++i) {
            Scalar* c = C.row(i).data();
            for (std::size_t k = 0; k < m; ++k) {
                if (A(i, k) == 0) continue;
                const Scalar* b = B.row(k).data();
                for (std::size_t j = 0; j < q; ++j) c[j] ^= b[j];
            }
        }
        return C;
    }
    const std::size_t budget = accumulation_budget(p);
    std::vector<std::uint64_t> acc(q);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        std::size_t used = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint64_t a = A(i, k);
            if (a == 0) continue;
            const Scalar* b = B.row(k).data();
            for (std::size_t j = 0; j < q; ++j) acc[j] += a * b[j];
            if (++used == budget) {
                for (auto& x : acc) x %= p;
                used = 0;
            }
        }
        Scalar* c = C.row(i).data();
        for (std::size_t j = 0; j < q; ++j) c[j] = static_cast<Scalar>(acc[j] % p);
    }
    return C;
}

Mat operator+(const Mat& A, const Mat& B) {
    require_same_field(A, B, "add");
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionMismatch("add: shapes differ");
    Mat C = A;
    axpy(C.mutable_data(), B.data(), 1,
         A.field());
    return C;
}

Mat operator-(const Mat& A, const Mat& B) {
    require_same_field(A, B, "subtract");
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("subtract: shapes differ");
    Mat C = A;
    axpy(C.mutable_data(), B.data(),
         A.field().neg(1), A.field());
    return C;
}

Mat scaled(const Mat& A, Scalar c) {
    Mat C(A.field(), A.rows(), A.cols());
    c %= A.field().p();
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A.field().mul(A(i, j), c);
    return C;
}

Mat transpose(const Mat& A) {
    Mat T(A.field(), A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
    return T;
}

Mat kron(const Mat& A, const Mat& B) {
    require_same_field(A, B, "kron");
    const PrimeField& F = A.field();
    Mat K(F, A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            Scalar a = A(i, j);
            if (a == 0) continue;
            for (std::size_t k = 0; k < B.rows(); ++k)
                for (std::size_t l = 0; l < B.cols(); ++l)
                    K(i * B.rows() + k, j * B.cols() + l) = F.mul(a, B(k, l));
        }
    return K;
}

Mat vstack(const Mat& A, const Mat& B) {
    if (A.rows() == 0 && A.cols() == 0) return B;
    if (B.rows() == 0 && B.cols() == 0) return A;
    require_same_field(A, B, "vstack");
    if (A.cols() != B.cols()) throw DimensionMismatch("vstack: column counts differ");
    std::vector<Scalar> d = A.data();
    d.insert(d.end(), B.data().begin(), B.data().end());
    return Mat(A.field(), A.rows() + B.rows(), A.cols(), std::move(d));
}

Mat hstack(const Mat& A, const Mat& B) {
    require_same_field(A, B, "hstack");
    if (A.rows() != B.rows()) throw DimensionMismatch("hstack: row counts differ");
    Mat C(A.field(), A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::copy(A.row(i).begin(), A.row(i).end(), C.row(i).begin());
        std::copy(B.row(i).begin(), B.row(i).end(), C.row(i).begin() + A.cols());
    }
    return C;
}

Mat block_diagonal(const std::vector<Mat>& blocks) {
    PrimeField F = blocks.empty() ? PrimeField() : blocks.front().field();
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    Mat D(F, r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            std::copy(b.row(i).begin(), b.row(i).end(), D.row(r0 + i).begin() + c0);
        r0 += b.rows();
        c0 += b.cols();
    }
    return D;
}

Mat select_columns(const Mat& A, std::span<const std::size_t> cols) {
    Mat C(A.field(), A.rows(), cols.size());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) C(i, j) = A(i, cols[j]);
    return C;
}

Mat select_rows(const Mat& A, std::span<const std::size_t> rows) {
    Mat C(A.field(), rows.size(), A.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(A.row(rows[i]).begin(), A.row(rows[i]).end(), C.row(i).begin());
    return C;
}

Mat submatrix(const Mat& A, std::size_t r0, std::size_t nrows, std::size_t c0, std::size_t ncols) {
    if (r0 + nrows > A.rows() || c0 + ncols > A.cols())
        throw DimensionMismatch("submatrix out of range");
    Mat C(A.field(), nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) C(i, j) = A(r0 + i, c0 + j);
    return C;
}

Mat linear_combination(const std::vector<Mat>& mats, std::span<const Scalar> coeffs, PrimeField F,
                       std::size_t rows, std::size_t cols) {
    Mat C(F, rows, cols);
    std::span<Scalar> out = C.mutable_data();
    for (std::size_t k = 0; k < mats.size() && k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (mats[k].rows() != rows || mats[k].cols() != cols)
            throw DimensionMismatch("linear_combination: shape mismatch");
        axpy(out, mats[k].data(), coeffs[k], F);
    }
    return C;
}

Vec vec_mat(std::span<const Scalar> v, const Mat& A) {
    if (v.size() != A.rows()) throw DimensionMismatch("vec_mat: length mismatch");
    Vec out(A.cols(), 0);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) axpy(out, A.row(k), v[k], A.field());
    return out;
}

Vec mat_vec(const Mat& A, std::span<const Scalar> v) {
    if (v.size() != A.cols()) throw DimensionMismatch("mat_vec: length mismatch");
    const PrimeField& F = A.field();
    Vec out(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < A.cols(); ++j) acc = (acc + std::uint64_t(A(i, j)) * v[j]) % F.p();
        out[i] = static_cast<Scalar>(acc);
    }
    return out;
}

Vec flatten(const Mat& A) { return A.data(); }

Mat unflatten(PrimeField F, std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
    return Mat(F, rows, cols, std::vector<Scalar>(v.begin(), v.end()));
}

bool is_zero_vec(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

// ---------------------------------------------------------------------------

Rref rref(Mat A) {
    const PrimeField F = A.field();
    const std::size_t n = A.rows(), m = A.cols();
    std::vector<Scalar> buf = A.data();
    auto row = [&](std::size_t i) { return std::span<Scalar>(buf.data() + i * m, m); };
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t sel = r;
        while (sel < n && buf[sel * m + c] == 0) ++sel;
        if (sel == n) continue;
        if (sel != r) std::swap_ranges(row(sel).begin(), row(sel).end(), row(r).begin());
        Scalar lead = buf[r * m + c];
        if (lead != 1) {
            Scalar li = F.inv(lead);
            for (auto& x : row(r)) x = F.mul(x, li);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            Scalar f = buf[i * m + c];
            if (f) axpy(row(i), row(r), F.neg(f), F);
        }
        pivots.push_back(c);
        ++r;
    }
    buf.resize(r * m);
    return Rref{Mat(F, r, m, std::move(buf)), std::move(pivots)};
}

std::size_t rank(const Mat& A) {
    // echelon (not reduced) is enough for the rank
    EchelonBuilder eb(A.field(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) eb.add(A.row(i));
    return eb.rank();
}

Mat nullspace(const Mat& A) {
    const PrimeField& F = A.field();
    Rref R = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : R.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(A.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < R.pivots.size(); ++r) v[R.pivots[r]] = F.neg(R.reduced(r, f));
        basis.push_back(std::move(v));
    }
    return Mat::from_row_vectors(F, A.cols(), basis);
}

Mat left_nullspace(const Mat& A) { return nullspace(transpose(A)); }

std::optional<Vec> solve(const Mat& A, std::span<const Scalar> b) {
    if (b.size() != A.rows())
        throw DimensionMismatch("solve: rhs length " + std::to_string(b.size()) + " vs " +
                                std::to_string(A.rows()) + " rows");
    Mat bcol(A.field(), A.rows(), 1, Vec(b.begin(), b.end()));
    Rref R = rref(hstack(A, bcol));
    const std::size_t n = A.cols();
    if (!R.pivots.empty() && R.pivots.back() == n) return std::nullopt;
    Vec x(n, 0);
    for (std::size_t r = 0; r < R.pivots.size(); ++r) x[R.pivots[r]] = R.reduced(r, n);
    return x;
}

std::optional<Vec> solve_left(const Mat& A, std::span<const Scalar> b) {
    return solve(transpose(A), b);
}

std::optional<Mat> inverse(const Mat& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = A.rows();
    Rref R = rref(hstack(A, Mat::identity(A.field(), n)));
    if (R.rank() < n || (n > 0 && R.pivots[n - 1] != n - 1)) return std::nullopt;
    return submatrix(R.reduced, 0, n, n, n);
}

// ---------------------------------------------------------------------------

Subspace::Subspace(PrimeField F, std::size_t ambient)
    : F_(F), ambient_(ambient), basis_(F, 0, ambient) {}

Subspace Subspace::span(const Mat& rows) {
    Subspace S(rows.field(), rows.cols());
    Rref R = rref(rows);
    S.basis_ = std::move(R.reduced);
    S.pivots_ = std::move(R.pivots);
    return S;
}

Subspace Subspace::full(PrimeField F, std::size_t n) { return span(Mat::identity(F, n)); }

std::vector<std::size_t> Subspace::nonpivots() const {
    std::vector<bool> piv(ambient_, false);
    for (auto c : pivots_) piv[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!piv[c]) out.push_back(c);
    return out;
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: wrong length");
    Vec w(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        Scalar c = w[pivots_[r]];
        if (c) axpy(w, basis_.row(r), F_.neg(c), F_);
    }
    return w;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient differs");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Vec Subspace::coords(std::span<const Scalar> v) const {
    Vec c(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
}

Mat Subspace::coords_of_rows(const Mat& rows) const { return select_columns(rows, pivots_); }

Subspace subspace_sum(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient()) throw DimensionMismatch("subspace_sum: ambient differs");
    return Subspace::span(vstack(U.basis(), V.basis()));
}

Subspace subspace_intersection(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient())
        throw DimensionMismatch("subspace_intersection: ambient differs");
    if (U.dim() == 0 || V.dim() == 0) return Subspace(U.field(), U.ambient());
    // (a, b) with a U = b V  <=>  (a, -b) in the left kernel of [U; V]
    Mat K = left_nullspace(vstack(U.basis(), V.basis()));
    Mat a = submatrix(K, 0, K.rows(), 0, U.dim());
    return Subspace::span(a * U.basis());
}

Mat quotient_basis(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient()) throw NotASubspacePair("ambient dimensions differ");
    if (!V.contains(U)) throw NotASubspacePair("U is not contained in V");
    EchelonBuilder eb(U.field(), U.ambient());
    for (std::size_t i = 0; i < U.dim(); ++i) eb.add(U.basis().row(i));
    std::vector<Vec> extra;
    for (std::size_t i = 0; i < V.dim(); ++i)
        if (eb.add(V.basis().row(i))) extra.push_back(V.basis().row_vec(i));
    return Mat::from_row_vectors(U.field(), U.ambient(), extra);
}

// ---------------------------------------------------------------------------

EchelonBuilder::EchelonBuilder(PrimeField F, std::size_t ambient, bool track)
    : F_(F), ambient_(ambient), track_(track) {}

Vec EchelonBuilder::reduce(std::span<const Scalar> v) const {
    Vec w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = w[pivots_[i]];
        if (c) axpy(w, rows_[i], F_.neg(c), F_);
    }
    return w;
}

bool EchelonBuilder::add(std::span<const Scalar> v) {
    if (v.size() != ambient_) throw DimensionMismatch("EchelonBuilder::add: wrong length");
    Vec w(v.begin(), v.end());
    Vec combo;
    if (track_) {
        combo.assign(added_ + 1, 0);
        combo[added_] = 1;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = w[pivots_[i]];
        if (!c) continue;
        Scalar nc = F_.neg(c);
        axpy(w, rows_[i], nc, F_);
        if (track_) {
            const Vec& ci = combos_[i];
            for (std::size_t j = 0; j < ci.size(); ++j)
                if (ci[j]) combo[j] = F_.add(combo[j], F_.mul(nc, ci[j]));
        }
    }
    auto it = std::find_if(w.begin(), w.end(), [](Scalar x) { return x != 0; });
    if (it == w.end()) return false;
    std::size_t piv = static_cast<std::size_t>(it - w.begin());
    Scalar li = F_.inv(*it);
    if (li != 1) {
        for (auto& x : w) x = F_.mul(x, li);
        for (auto& x : combo) x = F_.mul(x, li);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    if (track_) combos_.push_back(std::move(combo));
    ++added_;
    return true;
}

std::optional<Vec> EchelonBuilder::express(std::span<const Scalar> v) const {
    if (!track_) throw Error("Usage", "EchelonBuilder::express requires tracking");
    Vec w(v.begin(), v.end());
    Vec out(added_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = w[pivots_[i]];
        if (!c) continue;
        axpy(w, rows_[i], F_.neg(c), F_);
        const Vec& ci = combos_[i];
        for (std::size_t j = 0; j < ci.size(); ++j)
            if (ci[j]) out[j] = F_.add(out[j], F_.mul(c, ci[j]));
    }
    if (!is_zero_vec(w)) return std::nullopt;
    return out;
}

Subspace EchelonBuilder::subspace() const {
    return Subspace::span(Mat::from_row_vectors(F_, ambient_, rows_));
}

}  // namespace auslab
