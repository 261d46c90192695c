#include "auslab/triple.hpp"

#include <random>

#include "auslab/error.hpp"

namespace auslab {

namespace {

Mat empty_rows(const PrimeField& F, std::size_t cols) { return Mat(F, 0, cols); }

Subspace row_span(const Mat& A, std::size_t ambient) {
    if (A.rows() == 0) return Subspace::span(empty_rows(A.field(), ambient));
    return Subspace::span(A);
}

// Rows s_j with s_j . surj = e_j.
Mat section(const Mat& surj) {
    const std::size_t q = surj.cols();
    Mat out(surj.field(), q, surj.rows());
    for (std::size_t j = 0; j < q; ++j) {
        Vec e(q, 0);
        e[j] = 1;
        auto v = solve_left(surj, e);
        if (!v) throw DimensionMismatch("section of a map that is not onto");
        std::copy(v->begin(), v->end(), out.row(j).begin());
    }
    return out;
}

Mat unit_rows(const PrimeField& F, std::size_t n) { return Mat::identity(F, n); }

// The pure tensor y (x) m_b as a vector of Y (x)_k M.
Vec pure_tensor(std::span<const Scalar> y, std::size_t b, std::size_t m) {
    Vec v(y.size() * m, 0);
    for (std::size_t c = 0; c < y.size(); ++c) v[c * m + b] = y[c];
    return v;
}

// Some phi in Hom(P, X) with phi . proj = target, for P projective.
Mat lift_through(const RightModule& P, const RightModule& X, const Mat& proj, const Mat& target) {
    const PrimeField F = X.field();
    if (P.dim() == 0) return Mat(F, 0, X.dim());
    auto H = hom_space(P, X);
    Mat system(F, H.size(), P.dim() * proj.cols());
    for (std::size_t k = 0; k < H.size(); ++k) {
        Vec v = flatten(H[k] * proj);
        std::copy(v.begin(), v.end(), system.row(k).begin());
    }
    auto c = solve_left(system, flatten(target));
    if (!c) throw HypothesisViolation("cover does not lift; the source is not projective");
    return linear_combination(H, *c, F, P.dim(), X.dim());
}

}  // namespace

// Blocks -------------------------------------------------------------------------

TriangularData triangular_data(const AlgebraPtr& R, const AlgebraPtr& S, const BimoduleData& M) {
    auto L = std::make_shared<StructureAlgebra>(triangular_from_bimodule(R, S, M));
    return {R, S, L, M};
}

TriangularData triangular_extension(const AlgebraPtr& A, std::size_t t) {
    if (t < 2) throw InvalidAlgebra("triangular extension needs t >= 2");
    auto R = std::make_shared<StructureAlgebra>(iterated_triangular(A, t - 1));
    BimoduleData M = row_vector_bimodule(A, R, t - 1);
    auto L = std::make_shared<StructureAlgebra>(
        triangular_from_bimodule(R, A, M).with_name("T" + std::to_string(t) + "(" + A->name() + ")"));
    return {R, A, L, M};
}

BimoduleData corner_row_bimodule(const TriangularData& D) {
    const auto& L = D.Lambda;
    const PrimeField F = L->field();
    const auto& idem = L->block_idempotents();
    if (!idem) throw BlockMismatch("Lambda carries no block idempotents");
    Mat left_e = linear_combination([&] {
        std::vector<Mat> ms;
        for (std::size_t i = 0; i < L->dim(); ++i) ms.push_back(L->left_multiplication(i));
        return ms;
    }(), (*idem)[1], F, L->dim(), L->dim());
    Subspace U = row_span(left_e, L->dim());
    auto restrict = [&](const Mat& act) { return U.coords_of_rows(U.basis() * act); };
    BimoduleData B{D.S, L, U.dim(), {}, {}};
    for (std::size_t i = 0; i < D.s(); ++i)
        B.left_action.push_back(transpose(restrict(L->left_multiplication(D.r() + D.m() + i))));
    for (std::size_t i = 0; i < L->dim(); ++i) B.right_action.push_back(restrict(L->right_multiplication(i)));
    return B;
}

StructureAlgebra corner_extension(const TriangularData& D) {
    return triangular_from_bimodule(D.Lambda, D.S, corner_row_bimodule(D))
        .with_name("[[" + D.Lambda->name() + ",0],[eL," + D.S->name() + "]]");
}

RightModule right_module_of(const BimoduleData& M) { return RightModule(M.right, M.dim, M.right_action); }

RightModule left_module_of(const BimoduleData& M, const AlgebraPtr& Sop) {
    std::vector<Mat> act;
    for (const auto& L : M.left_action) act.push_back(transpose(L));
    return RightModule(Sop, M.dim, std::move(act));
}

// Triples -------------------------------------------------------------------------

Triple make_triple(const TriangularData& D, RightModule X, RightModule Y, const Mat& pure) {
    if (!same_algebra(X.algebra(), D.R) || !same_algebra(Y.algebra(), D.S))
        throw BlockMismatch("triple components live over the wrong algebras");
    TensorProduct YM = tensor_over(Y, D.M);
    if (pure.rows() != Y.dim() * D.m() || pure.cols() != X.dim())
        throw DimensionMismatch("pure tensor form has the wrong shape");
    Mat f = YM.module.dim() ? section(YM.surjection) * pure : Mat(X.field(), 0, X.dim());
    if (!(YM.surjection * f == pure)) throw InvalidModule("map is not balanced over S");
    return {std::move(X), std::move(Y), std::move(YM), std::move(f)};
}

Mat pure_tensor_form(const Triple& T) {
    if (T.YM.surjection.rows() == 0) return Mat(T.X.field(), 0, T.X.dim());
    if (T.f.rows() == 0) return Mat(T.X.field(), T.YM.surjection.rows(), T.X.dim());
    return T.YM.surjection * T.f;
}

std::vector<std::string> validate_triple(const TriangularData& D, const Triple& T) {
    std::vector<std::string> out;
    if (!same_algebra(T.X.algebra(), D.R)) out.push_back("X is not over R");
    if (!same_algebra(T.Y.algebra(), D.S)) out.push_back("Y is not over S");
    if (!out.empty()) return out;
    if (!is_homomorphism(T.YM.module, T.X, T.f)) out.push_back("f does not commute with the R-action");
    for (auto& p : validate_module(triple_to_module(D, T))) out.push_back("module: " + p);
    return out;
}

RightModule triple_to_module(const TriangularData& D, const Triple& T) {
    if (!same_algebra(T.X.algebra(), D.R) || !same_algebra(T.Y.algebra(), D.S))
        throw BlockMismatch("triple does not match the blocks of Lambda");
    const PrimeField F = D.R->field();
    const std::size_t x = T.X.dim(), y = T.Y.dim(), n = x + y, m = D.m();
    Mat pure = pure_tensor_form(T);
    std::vector<Mat> act;
    for (std::size_t i = 0; i < D.r(); ++i) {
        Mat A(F, n, n);
        for (std::size_t a = 0; a < x; ++a)
            for (std::size_t b = 0; b < x; ++b) A(a, b) = T.X.act(i)(a, b);
        act.push_back(std::move(A));
    }
    for (std::size_t b = 0; b < m; ++b) {
        Mat A(F, n, n);
        for (std::size_t c = 0; c < y; ++c)
            for (std::size_t a = 0; a < x; ++a) A(x + c, a) = pure(c * m + b, a);
        act.push_back(std::move(A));
    }
    for (std::size_t i = 0; i < D.s(); ++i) {
        Mat A(F, n, n);
        for (std::size_t a = 0; a < y; ++a)
            for (std::size_t b = 0; b < y; ++b) A(x + a, x + b) = T.Y.act(i)(a, b);
        act.push_back(std::move(A));
    }
    return RightModule(D.Lambda, n, std::move(act));
}

namespace {

struct Corner {
    Subspace U;
    RightModule module;
};

// N.e with the action of the block algebra B sitting at Lambda indices offset..
Corner corner(const RightModule& N, const Vec& e, const AlgebraPtr& B, std::size_t offset) {
    Subspace U = row_span(N.action_of(e), N.dim());
    std::vector<Mat> act;
    for (std::size_t i = 0; i < B->dim(); ++i) {
        Mat img = U.basis() * N.act(offset + i);
        act.push_back(U.dim() ? U.coords_of_rows(img) : Mat(N.field(), 0, 0));
    }
    return {U, RightModule(B, U.dim(), std::move(act))};
}

}  // namespace

Triple module_to_triple(const TriangularData& D, const RightModule& N) {
    if (!same_algebra(N.algebra(), D.Lambda)) throw BlockMismatch("module is not over Lambda");
    const auto& idem = D.Lambda->block_idempotents();
    if (!idem) throw BlockMismatch("Lambda carries no block idempotents");
    Corner X = corner(N, (*idem)[0], D.R, 0);
    Corner Y = corner(N, (*idem)[1], D.S, D.r() + D.m());
    const std::size_t m = D.m();
    Mat pure(N.field(), Y.U.dim() * m, X.U.dim());
    for (std::size_t c = 0; c < Y.U.dim(); ++c)
        for (std::size_t b = 0; b < m; ++b) {
            Vec v = vec_mat(Y.U.basis().row(c), N.act(D.r() + b));
            Vec w = X.U.coords(v);
            std::copy(w.begin(), w.end(), pure.row(c * m + b).begin());
        }
    return make_triple(D, std::move(X.module), std::move(Y.module), pure);
}

Mat block_basis(const TriangularData& D, const RightModule& N) {
    const auto& idem = D.Lambda->block_idempotents();
    if (!idem) throw BlockMismatch("Lambda carries no block idempotents");
    Subspace X = row_span(N.action_of((*idem)[0]), N.dim());
    Subspace Y = row_span(N.action_of((*idem)[1]), N.dim());
    return vstack(X.basis(), Y.basis());
}

Mat tensor_map(const TensorProduct& from, const TensorProduct& to, const Mat& g) {
    const PrimeField F = g.field();
    const std::size_t a = from.module.dim(), b = to.module.dim();
    if (a == 0 || b == 0) return Mat(F, a, b);
    const std::size_t m = from.surjection.rows() / std::max<std::size_t>(g.rows(), 1);
    return section(from.surjection) * kron(g, unit_rows(F, m)) * to.surjection;
}

// Hom-module and adjunction ------------------------------------------------------

StarModule star(const RightModule& I, const BimoduleData& M) {
    const PrimeField F = I.field();
    RightModule MR = right_module_of(M);
    auto maps = hom_space(MR, I);
    const std::size_t h = maps.size();
    Mat stacked(F, h, M.dim * I.dim());
    for (std::size_t k = 0; k < h; ++k) {
        Vec v = flatten(maps[k]);
        std::copy(v.begin(), v.end(), stacked.row(k).begin());
    }
    std::vector<Mat> act;
    for (std::size_t s = 0; s < M.left->dim(); ++s) {
        Mat A(F, h, h);
        Mat Lt = transpose(M.left_action[s]);
        for (std::size_t k = 0; k < h; ++k) {
            auto c = solve_left(stacked, flatten(Lt * maps[k]));
            if (!c) throw InvalidBimodule("left action does not preserve Hom_R(M, I)");
            std::copy(c->begin(), c->end(), A.row(k).begin());
        }
        act.push_back(std::move(A));
    }
    return {RightModule(M.left, h, std::move(act)), std::move(maps)};
}

AdjointTriple adjoint_form(const TriangularData& D, const Triple& T) {
    StarModule H = star(T.X, D.M);
    const PrimeField F = T.X.field();
    const std::size_t m = D.m(), y = T.Y.dim(), h = H.maps.size();
    Mat pure = pure_tensor_form(T);
    Mat stacked(F, h, m * T.X.dim());
    for (std::size_t k = 0; k < h; ++k) {
        Vec v = flatten(H.maps[k]);
        std::copy(v.begin(), v.end(), stacked.row(k).begin());
    }
    Mat phi(F, y, h);
    for (std::size_t c = 0; c < y; ++c) {
        Mat alpha = submatrix(pure, c * m, m, 0, T.X.dim());
        auto coeff = solve_left(stacked, flatten(alpha));
        if (!coeff) throw InvalidModule("f is not R-linear in the second factor");
        std::copy(coeff->begin(), coeff->end(), phi.row(c).begin());
    }
    return {T.X, T.Y, std::move(H), std::move(phi)};
}

Triple from_adjoint(const TriangularData& D, const AdjointTriple& A) {
    const PrimeField F = A.X.field();
    const std::size_t m = D.m(), x = A.X.dim();
    Mat pure(F, A.Y.dim() * m, x);
    for (std::size_t c = 0; c < A.Y.dim(); ++c) {
        Mat alpha = linear_combination(A.hom.maps, A.phi.row(c), F, m, x);
        for (std::size_t b = 0; b < m; ++b) std::copy(alpha.row(b).begin(), alpha.row(b).end(), pure.row(c * m + b).begin());
    }
    return make_triple(D, A.X, A.Y, pure);
}

XiMap xi_map(const RightModule& I, const BimoduleData& M) {
    XiMap out;
    out.hom = star(I, M);
    out.tensor = tensor_over(out.hom.module, M);
    const PrimeField F = I.field();
    const std::size_t m = M.dim, h = out.hom.maps.size();
    Mat pure(F, h * m, I.dim());
    for (std::size_t k = 0; k < h; ++k)
        for (std::size_t b = 0; b < m; ++b)
            std::copy(out.hom.maps[k].row(b).begin(), out.hom.maps[k].row(b).end(), pure.row(k * m + b).begin());
    out.matrix = out.tensor.module.dim() ? section(out.tensor.surjection) * pure : Mat(F, 0, I.dim());
    out.epic = rank(out.matrix) == I.dim();
    out.kernel = submodule(out.tensor.module, row_span(left_nullspace(out.matrix), out.tensor.module.dim()));
    return out;
}

Triple injective_triple(const TriangularData& D, const RightModule& I) {
    XiMap xi = xi_map(I, D.M);
    return {I, xi.hom.module, std::move(xi.tensor), std::move(xi.matrix)};
}

Triple corner_triple(const TriangularData& D, const RightModule& E) {
    RightModule X = zero_module(D.R);
    return make_triple(D, X, E, Mat(E.field(), E.dim() * D.m(), 0));
}

Triple zero_triple(const TriangularData& D) { return corner_triple(D, zero_module(D.S)); }

std::vector<Triple> random_triples(const TriangularData& D, std::uint64_t seed, std::size_t count) {
    auto Xs = sample_modules(D.R, seed, 2);
    auto Ys = sample_modules(D.S, seed + 1, 2);
    Xs.push_back(zero_module(D.R));
    Ys.push_back(zero_module(D.S));
    const PrimeField F = D.R->field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar> coin(0, F.p() - 1);
    std::vector<Triple> out;
    for (std::size_t n = 0; out.size() < count; ++n) {
        const auto& X = Xs[(n * 7 + 3) % Xs.size()];
        const auto& Y = Ys[(n * 5 + 1) % Ys.size()];
        TensorProduct YM = tensor_over(Y, D.M);
        Mat f(F, YM.module.dim(), X.dim());
        if (n % 3 != 0 && YM.module.dim() && X.dim()) {
            auto H = hom_space(YM.module, X);
            Vec c(H.size());
            for (auto& x : c) x = coin(rng);
            if (!H.empty()) f = linear_combination(H, c, F, YM.module.dim(), X.dim());
        }
        out.push_back({X, Y, std::move(YM), std::move(f)});
    }
    out.push_back(module_to_triple(D, regular_module(D.Lambda)));
    for (const auto& e : *D.Lambda->block_idempotents()) {
        auto reg = regular_module(D.Lambda);
        out.push_back(module_to_triple(D, submodule(reg, spin(reg, {e})).source));
    }
    return out;
}

// Context and hypotheses -------------------------------------------------------------

TriangularContext::TriangularContext(TriangularData D, std::uint64_t seed) : D_(std::move(D)), seed_(seed) {}
TriangularContext::~TriangularContext() = default;

Engine& TriangularContext::R() {
    if (!R_) R_ = std::make_unique<Engine>(D_.R, seed_);
    return *R_;
}
Engine& TriangularContext::S() {
    if (!S_) S_ = std::make_unique<Engine>(D_.S, seed_);
    return *S_;
}
Engine& TriangularContext::Lambda() {
    if (!L_) L_ = std::make_unique<Engine>(D_.Lambda, seed_);
    return *L_;
}

std::vector<std::string> Hypotheses::failures() const {
    std::vector<std::string> out;
    if (!faithful) out.push_back("M_R is not faithful");
    if (!right_projective) out.push_back("M_R is not projective");
    if (!endomorphisms) out.push_back("S does not act as End_R(M)");
    if (!left_projective) out.push_back("_S M is not projective");
    if (!dual_projective) out.push_back("Hom_R(M, R) is not projective over S");
    return out;
}

Hypotheses check_hypotheses(TriangularContext& C) {
    const auto& D = C.data();
    Hypotheses H;
    RightModule MR = right_module_of(D.M);
    H.faithful = annihilator(MR).dim() == 0;
    H.right_projective = C.R().is_projective(MR);
    {
        const PrimeField F = D.R->field();
        bool ok = hom_dim(MR, MR) == D.s();
        Mat flat(F, D.s(), D.m() * D.m());
        for (std::size_t s = 0; s < D.s() && ok; ++s) {
            Mat e = transpose(D.M.left_action[s]);
            ok = is_homomorphism(MR, MR, e);
            Vec v = flatten(e);
            std::copy(v.begin(), v.end(), flat.row(s).begin());
        }
        H.endomorphisms = ok && rank(flat) == D.s();
    }
    H.left_projective = C.S().is_projective(left_module_of(D.M, C.S().opposite()));
    H.dual_projective = C.S().is_projective(star(regular_module(D.R), D.M).module);
    return H;
}

// Flatness and cover steps -------------------------------------------------------------

FlatVerdict is_flat_triple(TriangularContext& C, const Triple& T) {
    FlatVerdict v;
    v.y_projective = C.S().is_projective(T.Y);
    v.f_monic = rank(T.f) == T.YM.module.dim();
    Subspace image = row_span(T.f, T.X.dim());
    v.coker_projective = C.R().is_projective(quotient(T.X, image).target);
    return v;
}

namespace {

// Exactness of 0 -> A -a-> B -b-> C -c-> D -> 0 given as row-vector maps.
bool four_term_exact(std::size_t A, std::size_t B, std::size_t Cd, std::size_t Dd, const Mat& a, const Mat& b,
                     const Mat& c) {
    std::size_t ra = A && B ? rank(a) : 0, rb = B && Cd ? rank(b) : 0, rc = Cd && Dd ? rank(c) : 0;
    if (A && B && Cd && !(a * b).is_zero()) return false;
    if (B && Cd && Dd && !(b * c).is_zero()) return false;
    return ra == A && ra + rb == B && rb + rc == Cd && rc == Dd;
}

}  // namespace

CoverStep cover_step(TriangularContext& C, const Triple& T, XSummand policy) {
    const auto& D = C.data();
    const PrimeField F = D.R->field();
    const std::size_t m = D.m();

    ModuleMap covY = C.S().projective_cover(T.Y);
    const RightModule& PY = covY.source;
    TensorProduct PYM = tensor_over(PY, D.M);
    Mat P = tensor_map(PYM, T.YM, covY.matrix);  // pi(Y) (x) 1
    Mat h1 = PYM.module.dim() && T.YM.module.dim() ? P * T.f : Mat(F, PYM.module.dim(), T.X.dim());

    RightModule Q;
    Mat piQ;
    if (policy == XSummand::CoverOfX) {
        ModuleMap covX = C.R().projective_cover(T.X);
        Q = covX.source;
        piQ = covX.matrix;
    } else {
        ModuleMap coker = quotient(T.X, row_span(h1, T.X.dim()));
        ModuleMap covC = C.R().projective_cover(coker.target);
        Q = covC.source;
        piQ = lift_through(Q, T.X, coker.matrix, covC.matrix);
    }

    CoverStep st;
    st.x_summand_dim = Q.dim();
    RightModule XF = direct_sum(PYM.module, Q);
    Mat pure(F, PY.dim() * m, XF.dim());
    for (std::size_t r = 0; r < PY.dim() * m; ++r)
        for (std::size_t c = 0; c < PYM.module.dim(); ++c) pure(r, c) = PYM.surjection(r, c);
    st.flat = make_triple(D, XF, PY, pure);
    st.psi_x = vstack(h1, piQ);
    st.psi_y = covY.matrix;

    Subspace Kx = row_span(left_nullspace(st.psi_x), XF.dim());
    Subspace Ky = row_span(left_nullspace(st.psi_y), PY.dim());
    ModuleMap inX = submodule(XF, Kx), inY = submodule(PY, Ky);
    st.kernel_x = inX.matrix;
    st.kernel_y = inY.matrix;
    Mat flat_pure = pure_tensor_form(st.flat);
    Mat kpure(F, Ky.dim() * m, Kx.dim());
    for (std::size_t c = 0; c < Ky.dim(); ++c)
        for (std::size_t b = 0; b < m; ++b) {
            Vec v = vec_mat(pure_tensor(Ky.basis().row(c), b, m), flat_pure);
            Vec w = Kx.coords(v);
            std::copy(w.begin(), w.end(), kpure.row(c * m + b).begin());
        }
    st.kernel = make_triple(D, inX.source, inY.source, kpure);

    // 0 -> Ker f -> Coker f_1 -> Q -> Coker f -> 0
    const std::size_t pym = PYM.module.dim(), q = Q.dim();
    Subspace kerf = row_span(left_nullspace(T.f), T.YM.module.dim());
    ModuleMap cok1 = quotient(inX.source, row_span(st.kernel.f, Kx.dim()));
    ModuleMap cokf = quotient(T.X, row_span(T.f, T.X.dim()));
    const std::size_t c1 = cok1.target.dim();
    Mat a(F, kerf.dim(), c1);
    for (std::size_t k = 0; k < kerf.dim(); ++k) {
        auto w = solve_left(P, kerf.basis().row(k));
        if (!w) return st;
        Vec lifted(XF.dim(), 0);
        std::copy(w->begin(), w->end(), lifted.begin());
        Vec cls = vec_mat(Kx.coords(lifted), cok1.matrix);
        std::copy(cls.begin(), cls.end(), a.row(k).begin());
    }
    Mat b(F, c1, q);
    if (c1) {
        Mat reps = section(cok1.matrix) * Kx.basis();
        for (std::size_t r = 0; r < c1; ++r)
            for (std::size_t j = 0; j < q; ++j) b(r, j) = reps(r, pym + j);
    }
    Mat c = q && cokf.target.dim() ? piQ * cokf.matrix : Mat(F, q, cokf.target.dim());
    st.snake_exact = four_term_exact(kerf.dim(), c1, q, cokf.target.dim(), a, b, c);
    return st;
}

// Resolutions ---------------------------------------------------------------------------

bool TripleResolution::exact() const {
    if (!resolution_is_exact(modules)) return false;
    for (const auto& s : steps)
        if (!s.snake_exact) return false;
    if (terminated && !modules.terms.empty()) {
        const Mat& last = modules.maps.empty() ? modules.augmentation : modules.maps.back();
        if (modules.terms.back().dim() && rank(last) != modules.terms.back().dim()) return false;
    }
    return true;
}

bool TripleResolution::termwise_flat(TriangularContext& C) const {
    for (const auto& s : steps)
        if (!is_flat_triple(C, s.flat).flat()) return false;
    return true;
}

namespace {

Mat block_map(const Mat& x, const Mat& y) {
    const PrimeField F = x.field();
    Mat out(F, x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) out(x.rows() + i, x.cols() + j) = y(i, j);
    return out;
}

bool is_zero_triple(const Triple& T) { return T.X.dim() == 0 && T.Y.dim() == 0; }

TripleResolution iterate(TriangularContext& C, Triple start, std::size_t max_degree) {
    const auto& D = C.data();
    TripleResolution R;
    R.resolved = std::move(start);
    R.modules.direction = MinResolution::Direction::Projective;
    R.modules.resolved = triple_to_module(D, R.resolved);
    if (is_zero_triple(R.resolved)) {
        R.terminated = true;
        R.modules.augmentation = Mat(D.R->field(), 0, 0);
        return R;
    }
    const Triple* current = &R.resolved;
    Mat previous_inclusion;
    for (std::size_t i = 0; i <= max_degree; ++i) {
        R.steps.push_back(cover_step(C, *current, i == 0 ? XSummand::CoverOfCokernel : XSummand::CoverOfX));
        const CoverStep& st = R.steps.back();
        R.modules.terms.push_back(triple_to_module(D, st.flat));
        R.y_dims.push_back(st.flat.Y.dim());
        R.x_summand_dims.push_back(st.x_summand_dim);
        Mat psi = block_map(st.psi_x, st.psi_y);
        if (i == 0)
            R.modules.augmentation = psi;
        else
            R.modules.maps.push_back(psi * previous_inclusion);
        previous_inclusion = block_map(st.kernel_x, st.kernel_y);
        current = &st.kernel;
        if (is_zero_triple(st.kernel)) {
            R.terminated = true;
            break;
        }
    }
    return R;
}

}  // namespace

TripleResolution injective_triple_resolution(TriangularContext& C, const RightModule& I, std::size_t max_degree) {
    auto failures = check_hypotheses(C).failures();
    if (!failures.empty()) throw HypothesisViolation(failures.front());
    XiMap xi = xi_map(I, C.data().M);
    if (!xi.epic) throw NotEpic("evaluation map onto I fails to be surjective");
    return iterate(C, injective_triple(C.data(), I), max_degree);
}

TripleResolution corner_triple_resolution(TriangularContext& C, const RightModule& E, std::size_t max_degree) {
    auto H = check_hypotheses(C);
    if (!H.dual_projective) throw HypothesisViolation("Hom_R(M, R) is not projective over S");
    if (!H.left_projective) throw HypothesisViolation("_S M is not projective");
    return iterate(C, corner_triple(C.data(), E), max_degree);
}

std::optional<bool> at_most_signed(const ExtDim& x, long bound) {
    if (bound < 0) return x.is_minus_infinity();
    return at_most(x, static_cast<std::size_t>(bound));
}

namespace {

std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
    if ((a && !*a) || (b && !*b)) return false;
    if (a && b) return true;
    return std::nullopt;
}

}  // namespace

std::vector<DimensionCriterion> injective_triple_criteria(TriangularContext& C, const RightModule& I,
                                                          std::size_t max_k, std::size_t cap) {
    const auto& D = C.data();
    XiMap xi = xi_map(I, D.M);
    ExtDim whole = C.Lambda().projective_dimension(triple_to_module(D, injective_triple(D, I)), cap);
    ExtDim ker = C.R().projective_dimension(xi.kernel.source, cap);
    ExtDim st = C.S().projective_dimension(xi.hom.module, cap);
    std::vector<DimensionCriterion> out;
    for (std::size_t k = 0; k <= max_k; ++k)
        out.push_back({k, at_most(whole, k), both(at_most_signed(ker, long(k) - 1), at_most(st, k))});
    return out;
}

std::vector<DimensionCriterion> corner_triple_criteria(TriangularContext& C, const RightModule& E,
                                                       std::size_t max_k, std::size_t cap) {
    const auto& D = C.data();
    ExtDim whole = C.Lambda().projective_dimension(triple_to_module(D, corner_triple(D, E)), cap + 1);
    ExtDim e = C.S().projective_dimension(E, cap);
    std::vector<DimensionCriterion> out;
    for (std::size_t k = 0; k <= max_k; ++k) out.push_back({k, at_most(whole, k), at_most_signed(e, long(k) - 1)});
    return out;
}

std::vector<RightModule> predicted_injective_summands(TriangularContext& C, std::size_t i) {
    const auto& D = C.data();
    std::vector<RightModule> out;
    auto IR = C.R().minimal_injective_resolution(regular_module(D.R), i);
    out.push_back(triple_to_module(D, injective_triple(D, IR.terms[i])));
    auto IM = C.R().minimal_injective_resolution(right_module_of(D.M), i);
    out.push_back(triple_to_module(D, injective_triple(D, IM.terms[i])));
    if (i >= 1) {
        RightModule dualR = star(regular_module(D.R), D.M).module;
        auto IS = C.S().minimal_injective_resolution(dualR, i - 1);
        out.push_back(triple_to_module(D, corner_triple(D, IS.terms[i - 1])));
    }
    return out;
}

}  // namespace auslab
