#include "auslab/algebra.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "auslab/error.hpp"

namespace auslab {

StructureAlgebra::StructureAlgebra(PrimeField F, std::size_t dim, std::vector<Vec> table, Vec unit,
                                   std::string name)
    : F_(F), dim_(dim), unit_(std::move(unit)), name_(std::move(name)) {
    if (dim == 0) throw InvalidAlgebra("dimension must be at least 1");
    if (table.size() != dim * dim)
        throw DimensionMismatch("multiplication table needs dim^2 entries");
    if (unit_.size() != dim) throw DimensionMismatch("unit has wrong length");
    table_.assign(dim * dim * dim, 0);
    for (std::size_t k = 0; k < dim * dim; ++k) {
        if (table[k].size() != dim) throw DimensionMismatch("product vector has wrong length");
        for (std::size_t l = 0; l < dim; ++l) table_[k * dim + l] = F.reduce(table[k][l]);
    }
    for (auto& u : unit_) u = F.reduce(u);
    derive();
}

void StructureAlgebra::derive() {
    const std::size_t d = dim_;
    right_mult_.assign(d, Mat(F_, d, d));
    left_mult_.assign(d, Mat(F_, d, d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            auto ki = product(k, i), ik = product(i, k);
            std::copy(ki.begin(), ki.end(), right_mult_[i].row(k).begin());
            std::copy(ik.begin(), ik.end(), left_mult_[i].row(k).begin());
        }

    // Greedy generating set: the unital subalgebra generated by a set of basis
    // elements is the closure of span{1} under right multiplication by them.
    generators_.clear();
    auto closure = [&]() {
        EchelonBuilder span(F_, d);
        std::vector<Vec> queue{unit_};
        span.add(unit_);
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (std::size_t g : generators_) {
                Vec w = vec_mat(queue[q], right_mult_[g]);
                if (span.add(w)) queue.push_back(std::move(w));
            }
        return span;
    };
    EchelonBuilder current = closure();
    for (std::size_t i = 0; i < d && current.rank() < d; ++i) {
        if (is_zero_vec(current.reduce(basis_vector(i)))) continue;
        generators_.push_back(i);
        current = closure();
    }

    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) { h = (h ^ x) * 1099511628211ull; };
    mix(F_.p());
    mix(d);
    for (Scalar s : unit_) mix(s);
    for (Scalar s : table_) mix(s);
    fingerprint_ = h;
}

Vec StructureAlgebra::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
    Vec out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            axpy(out, product(i, j), F_.mul(a[i], b[j]), F_);
        }
    }
    return out;
}

Vec StructureAlgebra::basis_vector(std::size_t i) const {
    Vec v(dim_, 0);
    v[i] = 1;
    return v;
}

bool StructureAlgebra::same_table(const StructureAlgebra& o) const {
    return F_ == o.F_ && dim_ == o.dim_ && fingerprint_ == o.fingerprint_ && unit_ == o.unit_ &&
           table_ == o.table_;
}

StructureAlgebra StructureAlgebra::with_name(std::string name) const {
    StructureAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

StructureAlgebra StructureAlgebra::with_block_idempotents(Vec e_first, Vec e_second) const {
    StructureAlgebra copy = *this;
    copy.block_idempotents_ = std::array<Vec, 2>{std::move(e_first), std::move(e_second)};
    return copy;
}

StructureAlgebra StructureAlgebra::with_matrix_labels(std::vector<MatrixUnitLabel> labels) const {
    if (labels.size() != dim_) throw DimensionMismatch("one label per basis element required");
    StructureAlgebra copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_table(*b);
}

std::string AlgebraViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Associativity:
            os << "associativity fails at (" << i << "," << j << "," << l << ")";
            break;
        case Kind::LeftUnit: os << "1*e_" << i << " != e_" << i; break;
        case Kind::RightUnit: os << "e_" << i << "*1 != e_" << i; break;
        case Kind::Shape: os << "malformed table"; break;
    }
    return os.str();
}

std::vector<AlgebraViolation> validate(const StructureAlgebra& A) {
    std::vector<AlgebraViolation> out;
    const std::size_t d = A.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto ij = A.product(i, j);
            for (std::size_t l = 0; l < d; ++l) {
                // (e_i e_j) e_l  versus  e_i (e_j e_l)
                Vec lhs = vec_mat(ij, A.right_multiplication(l));
                Vec rhs = vec_mat(A.product(j, l), A.left_multiplication(i));
                if (lhs != rhs)
                    out.push_back({AlgebraViolation::Kind::Associativity, i, j, l});
            }
        }
    for (std::size_t i = 0; i < d; ++i) {
        Vec e = A.basis_vector(i);
        if (A.multiply(A.unit(), e) != e) out.push_back({AlgebraViolation::Kind::LeftUnit, i});
        if (A.multiply(e, A.unit()) != e) out.push_back({AlgebraViolation::Kind::RightUnit, i});
    }
    return out;
}

StructureAlgebra opposite(const StructureAlgebra& A) {
    const std::size_t d = A.dim();
    std::vector<Vec> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto ji = A.product(j, i);
            table[i * d + j].assign(ji.begin(), ji.end());
        }
    std::string name = A.name();
    if (name.size() > 3 && name.ends_with("^op"))
        name.resize(name.size() - 3);
    else
        name += "^op";
    return StructureAlgebra(A.field(), d, std::move(table), A.unit(), name);
}

StructureAlgebra field_algebra(std::uint64_t p) {
    return truncated_polynomial(p, 1).with_name("F" + std::to_string(p));
}

StructureAlgebra truncated_polynomial(std::uint64_t p, std::size_t n) {
    PrimeField F(p);
    if (n == 0) throw InvalidAlgebra("truncation degree must be at least 1");
    std::vector<Vec> table(n * n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) table[i * n + j][i + j] = 1;
    Vec unit(n, 0);
    unit[0] = 1;
    return StructureAlgebra(F, n, std::move(table), std::move(unit),
                            "F" + std::to_string(p) + "[x]/(x^" + std::to_string(n) + ")");
}

StructureAlgebra product(const StructureAlgebra& A, const StructureAlgebra& B) {
    if (!(A.field() == B.field())) throw AlgebraMismatch("product of algebras over different fields");
    const std::size_t a = A.dim(), b = B.dim(), d = a + b;
    std::vector<Vec> table(d * d, Vec(d, 0));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) {
            auto s = A.product(i, j);
            std::copy(s.begin(), s.end(), table[i * d + j].begin());
        }
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) {
            auto s = B.product(i, j);
            std::copy(s.begin(), s.end(), table[(a + i) * d + a + j].begin() + a);
        }
    Vec unit(A.unit());
    unit.insert(unit.end(), B.unit().begin(), B.unit().end());
    return StructureAlgebra(A.field(), d, std::move(table), std::move(unit),
                            A.name() + " x " + B.name());
}

StructureAlgebra path_algebra_A2(std::uint64_t p) {
    PrimeField F(p);
    // e1 = 0, e2 = 1, a = 2 with e1 a = a = a e2.
    std::vector<Vec> table(9, Vec(3, 0));
    table[0 * 3 + 0][0] = 1;
    table[1 * 3 + 1][1] = 1;
    table[0 * 3 + 2][2] = 1;
    table[2 * 3 + 1][2] = 1;
    return StructureAlgebra(F, 3, std::move(table), Vec{1, 1, 0}, "A2(F" + std::to_string(p) + ")");
}

StructureAlgebra local_rad_square_zero(std::uint64_t p) {
    PrimeField F(p);
    std::vector<Vec> table(9, Vec(3, 0));
    for (std::size_t i = 0; i < 3; ++i) {
        table[0 * 3 + i][i] = 1;
        table[i * 3 + 0][i] = 1;
    }
    return StructureAlgebra(F, 3, std::move(table), Vec{1, 0, 0},
                            "F" + std::to_string(p) + "[x,y]/(x,y)^2");
}

StructureAlgebra matrix_algebra(std::uint64_t p, std::size_t n) {
    PrimeField F(p);
    if (n == 0) throw InvalidAlgebra("matrix size must be at least 1");
    const std::size_t d = n * n;
    std::vector<Vec> table(d * d, Vec(d, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) table[(i * n + j) * d + (j * n + l)][i * n + l] = 1;
    Vec unit(d, 0);
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
    return StructureAlgebra(F, d, std::move(table), std::move(unit),
                            "M" + std::to_string(n) + "(F" + std::to_string(p) + ")");
}

namespace {

// Algebra on basis labels (row, col, coeff) multiplying as matrix units over A.
StructureAlgebra labelled_matrix_algebra(const StructureAlgebra& A,
                                         const std::vector<MatrixUnitLabel>& labels,
                                         std::string name) {
    const std::size_t d = labels.size(), a = A.dim();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> block_start;
    for (std::size_t k = 0; k < d; ++k)
        if (labels[k].coeff == 0) block_start[{labels[k].row, labels[k].col}] = k;
    std::vector<Vec> table(d * d, Vec(d, 0));
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const auto& L = labels[x];
            const auto& R = labels[y];
            if (L.col != R.row) continue;
            auto it = block_start.find({L.row, R.col});
            if (it == block_start.end()) throw InvalidAlgebra("matrix-unit labels are not closed");
            auto ab = A.product(L.coeff, R.coeff);
            for (std::size_t c = 0; c < a; ++c) table[x * d + y][it->second + c] = ab[c];
        }
    Vec unit(d, 0);
    for (const auto& [pos, start] : block_start)
        if (pos.first == pos.second)
            for (std::size_t c = 0; c < a; ++c) unit[start + c] = A.unit()[c];
    return StructureAlgebra(A.field(), d, std::move(table), std::move(unit), std::move(name))
        .with_matrix_labels(labels);
}

Vec diagonal_sum(const std::vector<MatrixUnitLabel>& labels, const Vec& unit,
                 std::size_t from, std::size_t to) {
    Vec e(labels.size(), 0);
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k].row == labels[k].col && labels[k].row >= from && labels[k].row <= to)
            e[k] = unit[labels[k].coeff];
    return e;
}

}  // namespace

StructureAlgebra lower_triangular(const StructureAlgebra& A, std::size_t t) {
    if (t == 0) throw InvalidAlgebra("triangular size must be at least 1");
    std::vector<MatrixUnitLabel> labels;
    for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            for (std::size_t c = 0; c < A.dim(); ++c) labels.push_back({i, j, c});
    StructureAlgebra T = labelled_matrix_algebra(
        A, labels, "T" + std::to_string(t) + "(" + A.name() + ")");
    if (t == 1) return T;
    return T.with_block_idempotents(diagonal_sum(labels, A.unit(), 1, t - 1),
                                    diagonal_sum(labels, A.unit(), t, t));
}

std::vector<std::string> validate_bimodule(const BimoduleData& M) {
    std::vector<std::string> out;
    if (!M.left || !M.right) return {"missing algebra"};
    const auto& S = *M.left;
    const auto& R = *M.right;
    const PrimeField F = R.field();
    if (!(S.field() == F)) return {"algebras over different fields"};
    if (M.left_action.size() != S.dim()) return {"need one left action matrix per S basis element"};
    if (M.right_action.size() != R.dim()) return {"need one right action matrix per R basis element"};
    for (const auto& L : M.left_action)
        if (L.rows() != M.dim || L.cols() != M.dim) return {"left action matrix has wrong shape"};
    for (const auto& X : M.right_action)
        if (X.rows() != M.dim || X.cols() != M.dim) return {"right action matrix has wrong shape"};

    auto combine = [&](const std::vector<Mat>& mats, std::span<const Scalar> c) {
        return linear_combination(mats, c, F, M.dim, M.dim);
    };
    if (!combine(M.left_action, S.unit()).is_identity()) out.push_back("left unit does not act as identity");
    if (!combine(M.right_action, R.unit()).is_identity()) out.push_back("right unit does not act as identity");
    // Column convention on the left: L_{s s'} = L_s L_{s'}.
    for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j)
            if (combine(M.left_action, S.product(i, j)) != M.left_action[i] * M.left_action[j])
                out.push_back("left action not multiplicative at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    // Row convention on the right: R_{r r'} = R_r R_{r'}.
    for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j)
            if (combine(M.right_action, R.product(i, j)) != M.right_action[i] * M.right_action[j])
                out.push_back("right action not multiplicative at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    // (s.x).r = s.(x.r): on rows x, s.x = x L_s^T.
    for (std::size_t i = 0; i < S.dim(); ++i) {
        Mat LT = transpose(M.left_action[i]);
        for (std::size_t j = 0; j < R.dim(); ++j)
            if (LT * M.right_action[j] != M.right_action[j] * LT)
                out.push_back("actions do not commute at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
    return out;
}

BimoduleData regular_bimodule(const AlgebraPtr& R) {
    BimoduleData M{R, R, R->dim(), {}, {}};
    for (std::size_t i = 0; i < R->dim(); ++i) {
        // e_i . x as a column: column k holds e_i e_k.
        M.left_action.push_back(transpose(R->left_multiplication(i)));
        M.right_action.push_back(R->right_multiplication(i));
    }
    return M;
}

BimoduleData zero_bimodule(const AlgebraPtr& S, const AlgebraPtr& R) {
    BimoduleData M{S, R, 0, {}, {}};
    M.left_action.assign(S->dim(), Mat(S->field(), 0, 0));
    M.right_action.assign(R->dim(), Mat(R->field(), 0, 0));
    return M;
}

BimoduleData row_vector_bimodule(const AlgebraPtr& R, const AlgebraPtr& T, std::size_t k) {
    const auto& labels = T->matrix_labels();
    if (labels.size() != T->dim()) throw InvalidBimodule("right algebra carries no matrix-unit labels");
    const std::size_t a = R->dim(), m = k * a;
    const PrimeField F = R->field();
    BimoduleData M{R, T, m, {}, {}};
    // Basis (q, c): position q (1-based) holding e_c, index (q-1)*a + c.
    for (std::size_t s = 0; s < a; ++s) {
        Mat L(F, m, m);
        for (std::size_t q = 0; q < k; ++q)
            for (std::size_t c = 0; c < a; ++c) {
                auto sc = R->product(s, c);
                for (std::size_t e = 0; e < a; ++e) L(q * a + e, q * a + c) = sc[e];
            }
        M.left_action.push_back(std::move(L));
    }
    for (const auto& lab : labels) {
        if (lab.row > k || lab.col > k) throw InvalidBimodule("label outside the row length");
        Mat X(F, m, m);
        for (std::size_t c = 0; c < a; ++c) {
            auto cb = R->product(c, lab.coeff);
            for (std::size_t e = 0; e < a; ++e) X((lab.row - 1) * a + c, (lab.col - 1) * a + e) = cb[e];
        }
        M.right_action.push_back(std::move(X));
    }
    return M;
}

StructureAlgebra triangular_from_bimodule(const AlgebraPtr& R, const AlgebraPtr& S,
                                          const BimoduleData& M) {
    if (!same_algebra(M.right, R) || !same_algebra(M.left, S))
        throw InvalidBimodule("bimodule algebras do not match R and S");
    auto problems = validate_bimodule(M);
    if (!problems.empty()) throw InvalidBimodule(problems.front());
    const std::size_t r = R->dim(), m = M.dim, s = S->dim(), d = r + m + s;
    std::vector<Vec> table(d * d, Vec(d, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto v = R->product(i, j);
            std::copy(v.begin(), v.end(), table[i * d + j].begin());
        }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            auto v = S->product(i, j);
            std::copy(v.begin(), v.end(), table[(r + m + i) * d + r + m + j].begin() + r + m);
        }
    for (std::size_t x = 0; x < m; ++x) {
        // m_x . r_j
        for (std::size_t j = 0; j < r; ++j) {
            auto row = M.right_action[j].row(x);
            std::copy(row.begin(), row.end(), table[(r + x) * d + j].begin() + r);
        }
        // s_i . m_x: column x of L_i.
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t y = 0; y < m; ++y)
                table[(r + m + i) * d + r + x][r + y] = M.left_action[i](y, x);
    }
    Vec eR(d, 0), eS(d, 0);
    for (std::size_t i = 0; i < r; ++i) eR[i] = R->unit()[i];
    for (std::size_t i = 0; i < s; ++i) eS[r + m + i] = S->unit()[i];
    Vec unit(d, 0);
    for (std::size_t i = 0; i < d; ++i) unit[i] = R->field().add(eR[i], eS[i]);
    StructureAlgebra L(R->field(), d, std::move(table), std::move(unit),
                       "[[" + R->name() + ",0],[M," + S->name() + "]]");
    return L.with_block_idempotents(std::move(eR), std::move(eS));
}

StructureAlgebra iterated_triangular(const AlgebraPtr& A, std::size_t t) {
    if (t == 0) throw InvalidAlgebra("triangular size must be at least 1");
    std::vector<MatrixUnitLabel> base_labels;
    for (std::size_t c = 0; c < A->dim(); ++c) base_labels.push_back({1, 1, c});
    AlgebraPtr current = std::make_shared<StructureAlgebra>(A->with_matrix_labels(base_labels));
    for (std::size_t k = 2; k <= t; ++k) {
        BimoduleData M = row_vector_bimodule(A, current, k - 1);
        StructureAlgebra next = triangular_from_bimodule(current, A, M);
        std::vector<MatrixUnitLabel> labels = current->matrix_labels();
        for (std::size_t q = 1; q < k; ++q)
            for (std::size_t c = 0; c < A->dim(); ++c) labels.push_back({k, q, c});
        for (std::size_t c = 0; c < A->dim(); ++c) labels.push_back({k, k, c});
        current = std::make_shared<StructureAlgebra>(
            next.with_matrix_labels(std::move(labels))
                .with_name("T" + std::to_string(k) + "'(" + A->name() + ")"));
    }
    return *current;
}

// Text format -------------------------------------------------------------------

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

long long parse_int(const std::string& s, std::size_t line_no) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + s + "'");
    }
}

}  // namespace

StructureAlgebra parse_algebra(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::optional<PrimeField> F;
    std::optional<std::size_t> dim;
    std::optional<Vec> unit;
    std::map<std::pair<std::size_t, std::size_t>, Vec> mult;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    auto read_vec = [&](const std::vector<std::string>& tok, std::size_t from) {
        if (tok.size() - from != *dim) throw fail("expected " + std::to_string(*dim) + " coefficients");
        Vec v(*dim);
        for (std::size_t k = 0; k < *dim; ++k) v[k] = F->reduce(parse_int(tok[from + k], line_no));
        return v;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto tok = tokens(line);
        if (tok.empty()) continue;
        const std::string& key = tok[0];
        if (key == "p") {
            if (F || tok.size() != 2) throw fail("malformed or repeated 'p' line");
            long long p = parse_int(tok[1], line_no);
            if (p < 2) throw fail("modulus must be a prime");
            try {
                F = PrimeField(static_cast<std::uint64_t>(p));
            } catch (const NotPrime& e) {
                throw fail(e.what());
            }
        } else if (key == "dim") {
            if (dim || tok.size() != 2) throw fail("malformed or repeated 'dim' line");
            long long d = parse_int(tok[1], line_no);
            if (d < 1) throw fail("dimension must be at least 1");
            dim = static_cast<std::size_t>(d);
        } else if (key == "unit") {
            if (!F || !dim) throw fail("'unit' before 'p' and 'dim'");
            if (unit) throw fail("repeated 'unit' line");
            unit = read_vec(tok, 1);
        } else if (key == "mult") {
            if (!F || !dim) throw fail("'mult' before 'p' and 'dim'");
            if (tok.size() < 3) throw fail("malformed 'mult' line");
            long long i = parse_int(tok[1], line_no), j = parse_int(tok[2], line_no);
            if (i < 0 || j < 0 || std::size_t(i) >= *dim || std::size_t(j) >= *dim)
                throw fail("basis index out of range");
            auto keyij = std::make_pair(std::size_t(i), std::size_t(j));
            if (mult.count(keyij)) throw fail("duplicate product line");
            mult[keyij] = read_vec(tok, 3);
        } else {
            throw fail("unknown keyword '" + key + "'");
        }
    }
    if (!F) throw ParseError("missing 'p' line");
    if (!dim) throw ParseError("missing 'dim' line");
    if (!unit) throw ParseError("missing 'unit' line");
    std::vector<Vec> table(*dim * *dim, Vec(*dim, 0));
    for (auto& [ij, v] : mult) table[ij.first * *dim + ij.second] = std::move(v);
    return StructureAlgebra(*F, *dim, std::move(table), std::move(*unit), name);
}

StructureAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name.resize(dot);
    return parse_algebra(ss.str(), name);
}

std::string serialize_algebra(const StructureAlgebra& A) {
    std::ostringstream os;
    os << "p " << A.field().p() << "\n";
    os << "dim " << A.dim() << "\n";
    os << "unit";
    for (Scalar s : A.unit()) os << ' ' << s;
    os << "\n";
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            os << "mult " << i << ' ' << j;
            for (Scalar s : A.product(i, j)) os << ' ' << s;
            os << "\n";
        }
    return os.str();
}

}  // namespace auslab
