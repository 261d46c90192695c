#include "auslab/homological.hpp"

#include <map>
#include <random>
#include <sstream>

#include "auslab/error.hpp"

namespace auslab {

// ExtDim ----------------------------------------------------------------------

ExtDim ExtDim::plus_one() const {
    switch (tag_) {
        case Tag::MinusInfinity: return *this;
        case Tag::Finite: return finite(value_ + 1);
        case Tag::AtLeast: return at_least(value_ + 1);
    }
    return *this;
}

std::string ExtDim::str(bool minus_one_for_zero) const {
    switch (tag_) {
        case Tag::MinusInfinity: return minus_one_for_zero ? "-1" : "-inf";
        case Tag::Finite: return std::to_string(value_);
        case Tag::AtLeast: return ">=" + std::to_string(value_);
    }
    return "?";
}

ExtDim max(const ExtDim& a, const ExtDim& b) {
    if (a.is_minus_infinity()) return b;
    if (b.is_minus_infinity()) return a;
    std::size_t v = std::max(a.value(), b.value());
    if (a.is_at_least() || b.is_at_least()) return ExtDim::at_least(v);
    return ExtDim::finite(v);
}

std::optional<bool> at_most(const ExtDim& x, std::size_t bound) {
    switch (x.tag()) {
        case ExtDim::Tag::MinusInfinity: return true;
        case ExtDim::Tag::Finite: return x.value() <= bound;
        case ExtDim::Tag::AtLeast:
            if (x.value() > bound) return false;
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<bool> less_than(const ExtDim& x, const ExtDim& y) {
    if (y.is_minus_infinity()) return false;
    if (x.is_minus_infinity()) return true;
    if (x.is_finite() && y.is_finite()) return x.value() < y.value();
    if (x.is_finite() && y.is_at_least()) {
        if (x.value() < y.value()) return true;
        return std::nullopt;
    }
    if (x.is_at_least() && y.is_finite()) {
        if (x.value() >= y.value()) return false;
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<bool> less_equal(const ExtDim& x, const ExtDim& y) {
    if (x.is_minus_infinity()) return true;
    if (y.is_minus_infinity()) return false;
    if (x.is_finite() && y.is_finite()) return x.value() <= y.value();
    if (x.is_finite() && y.is_at_least()) {
        if (x.value() <= y.value()) return true;
        return std::nullopt;
    }
    if (x.is_at_least() && y.is_finite()) {
        if (x.value() > y.value()) return false;
        return std::nullopt;
    }
    return std::nullopt;
}

// Engine internals --------------------------------------------------------------

namespace {

Vec unit_vec(std::size_t d, std::size_t i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

Mat left_action_of(const StructureAlgebra& A, std::span<const Scalar> a) {
    Mat L(A.field(), A.dim(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (a[i]) axpy(L.mutable_data(), A.left_multiplication(i).data(), a[i], A.field());
    return L;
}

// Smallest set of basis vectors of J generating it as a one-sided ideal.
std::vector<Vec> ideal_generators(const StructureAlgebra& A, const Subspace& J, bool left) {
    std::vector<Vec> gens;
    EchelonBuilder span(A.field(), A.dim());
    for (std::size_t k = 0; k < J.dim(); ++k) {
        Vec b = J.basis().row_vec(k);
        if (is_zero_vec(span.reduce(b))) continue;
        gens.push_back(b);
        span.add(b);
        for (std::size_t i = 0; i < A.dim(); ++i)
            span.add(vec_mat(b, left ? A.left_multiplication(i) : A.right_multiplication(i)));
    }
    return gens;
}

/// Everything the resolution machinery needs about one algebra.
struct Side {
    AlgebraPtr alg;
    PrimeField F;
    std::size_t d = 0;
    std::vector<std::size_t> gens;
    Subspace J;
    std::vector<Vec> J_left, J_right;
    std::vector<RightModule> simples;
    std::vector<Vec> idem;
    std::vector<Mat> Pbasis;  // rows in algebra coordinates, row 0 = e_j
    std::vector<Mat> Pcoord;  // v * Pcoord[j] = coordinates of v in e_j A
    std::vector<RightModule> P;
    std::vector<Vec> elements;            // registered algebra elements
    std::vector<std::vector<Mat>> elemP;  // elemP[j][id]: action on e_j A
    std::vector<std::size_t> pbasis_offset;

    std::size_t id_idem(std::size_t j) const { return d + j; }
    std::size_t id_jleft(std::size_t k) const { return d + idem.size() + k; }
    std::size_t id_pbasis(std::size_t j, std::size_t s) const { return pbasis_offset[j] + s; }

    std::size_t r() const { return simples.size(); }
    std::size_t pdim(std::size_t j) const { return Pbasis[j].rows(); }

    void finish() {
        F = alg->field();
        d = alg->dim();
        gens = alg->generators();
        J_left = ideal_generators(*alg, J, true);
        J_right = ideal_generators(*alg, J, false);
        Pbasis.clear();
        Pcoord.clear();
        P.clear();
        for (const auto& e : idem) {
            EchelonBuilder eb(F, d);
            std::vector<Vec> raw;
            Mat L = left_action_of(*alg, e);
            eb.add(e);
            raw.push_back(e);
            for (std::size_t t = 0; t < d; ++t)
                if (eb.add(L.row(t))) raw.push_back(L.row_vec(t));
            Mat B = Mat::from_row_vectors(F, d, raw);
            auto piv = rref(B).pivots;
            Mat C = *inverse(select_columns(B, piv));
            Mat E(F, d, piv.size());
            for (std::size_t s = 0; s < piv.size(); ++s) E(piv[s], s) = 1;
            Mat coord = E * C;
            std::vector<Mat> act;
            for (std::size_t i = 0; i < d; ++i) act.push_back(B * alg->right_multiplication(i) * coord);
            P.emplace_back(alg, B.rows(), std::move(act));
            Pbasis.push_back(std::move(B));
            Pcoord.push_back(std::move(coord));
        }
        elements.clear();
        for (std::size_t i = 0; i < d; ++i) elements.push_back(unit_vec(d, i));
        for (const auto& e : idem) elements.push_back(e);
        for (const auto& g : J_left) elements.push_back(g);
        pbasis_offset.clear();
        for (std::size_t j = 0; j < idem.size(); ++j) {
            pbasis_offset.push_back(elements.size());
            for (std::size_t s = 0; s < Pbasis[j].rows(); ++s) elements.push_back(Pbasis[j].row_vec(s));
        }
        elemP.assign(idem.size(), {});
        for (std::size_t j = 0; j < idem.size(); ++j)
            for (const auto& a : elements) elemP[j].push_back(P[j].action_of(a));
    }
};

class Ambient {
public:
    virtual ~Ambient() = default;
    virtual std::size_t dim() const = 0;
    virtual Vec apply(std::span<const Scalar> v, std::size_t id) const = 0;
};

class ModuleAmbient final : public Ambient {
public:
    ModuleAmbient(const Side& S, const RightModule& M)
        : S_(S), M_(M), cache_(S.elements.size()) {}
    std::size_t dim() const override { return M_.dim(); }
    Vec apply(std::span<const Scalar> v, std::size_t id) const override {
        if (id < S_.d) return vec_mat(v, M_.act(id));
        if (!cache_[id]) cache_[id] = M_.action_of(S_.elements[id]);
        return vec_mat(v, *cache_[id]);
    }

private:
    const Side& S_;
    const RightModule& M_;
    mutable std::vector<std::optional<Mat>> cache_;
};

class ProjAmbient final : public Ambient {
public:
    ProjAmbient(const Side& S, std::vector<std::size_t> summands) : S_(S), summands_(std::move(summands)) {
        for (std::size_t j : summands_) {
            offsets_.push_back(dim_);
            dim_ += S_.pdim(j);
        }
    }
    std::size_t dim() const override { return dim_; }
    Vec apply(std::span<const Scalar> v, std::size_t id) const override {
        Vec out(dim_, 0);
        for (std::size_t k = 0; k < summands_.size(); ++k) {
            const Mat& X = S_.elemP[summands_[k]][id];
            const std::size_t o = offsets_[k], s = X.rows();
            std::span<Scalar> dst(out.data() + o, s);
            for (std::size_t a = 0; a < s; ++a)
                if (v[o + a]) axpy(dst, X.row(a), v[o + a], S_.F);
        }
        return out;
    }
    const std::vector<std::size_t>& summands() const { return summands_; }
    const std::vector<std::size_t>& offsets() const { return offsets_; }

private:
    const Side& S_;
    std::vector<std::size_t> summands_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
};

struct Step {
    std::vector<std::size_t> summands;  // index j of each summand e_j A
    std::vector<Vec> y;                 // image of each generator e_j, in ambient coordinates
    std::size_t cover_dim = 0;
    Mat images;                         // cover_dim x dim(ambient)
    Mat kernel;                         // rows in cover coordinates
};

void spin_into(const Side& S, const Ambient& X, EchelonBuilder& G, const Vec& y) {
    std::vector<Vec> queue{y};
    G.add(y);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (std::size_t g : S.gens) {
            Vec w = X.apply(queue[q], g);
            if (G.add(w)) queue.push_back(std::move(w));
        }
}

// Projective cover of the submodule U (rows) of X; images and kernel optional.
Step cover(const Side& S, const Ambient& X, const Mat& U, bool with_kernel) {
    Step st;
    const std::size_t u = U.rows();
    EchelonBuilder G(S.F, X.dim());
    for (std::size_t r = 0; r < u && G.rank() < u; ++r)
        for (std::size_t k = 0; k < S.J_left.size(); ++k) G.add(X.apply(U.row(r), S.id_jleft(k)));
    for (std::size_t j = 0; j < S.r() && G.rank() < u; ++j)
        for (std::size_t r = 0; r < u && G.rank() < u; ++r) {
            Vec y = X.apply(U.row(r), S.id_idem(j));
            if (is_zero_vec(G.reduce(y))) continue;
            spin_into(S, X, G, y);
            st.summands.push_back(j);
            st.y.push_back(std::move(y));
            st.cover_dim += S.pdim(j);
        }
    if (G.rank() != u) throw Error("Internal", "projective cover generators do not span the module");
    if (!with_kernel) return st;
    st.images = Mat(S.F, st.cover_dim, X.dim());
    std::size_t row = 0;
    for (std::size_t k = 0; k < st.summands.size(); ++k) {
        const std::size_t j = st.summands[k];
        for (std::size_t s = 0; s < S.pdim(j); ++s, ++row) {
            Vec img = X.apply(st.y[k], S.id_pbasis(j, s));
            std::copy(img.begin(), img.end(), st.images.row(row).begin());
        }
    }
    st.kernel = st.cover_dim == u ? Mat(S.F, 0, st.cover_dim) : left_nullspace(st.images);
    return st;
}

// Minimal projective resolution of M: steps[i] covers the i-th syzygy. Stops
// after max_steps steps or once a kernel vanishes. With last_without_kernel,
// the final allowed step only records its cover.
std::vector<Step> resolve(const Side& S, const RightModule& M, std::size_t max_steps,
                          bool last_without_kernel) {
    std::vector<Step> steps;
    if (M.dim() == 0 || max_steps == 0) return steps;
    std::unique_ptr<Ambient> X = std::make_unique<ModuleAmbient>(S, M);
    Mat U = Mat::identity(S.F, M.dim());
    while (steps.size() < max_steps) {
        bool last = steps.size() + 1 == max_steps;
        Step st = cover(S, *X, U, !(last && last_without_kernel));
        bool done = st.cover_dim == U.rows();
        if (!(last && last_without_kernel) && !done) {
            X = std::make_unique<ProjAmbient>(S, st.summands);
            U = st.kernel;
        }
        steps.push_back(std::move(st));
        if (done) break;
    }
    return steps;
}

RightModule materialize(const Side& S, const std::vector<std::size_t>& summands) {
    std::vector<RightModule> parts;
    for (std::size_t j : summands) parts.push_back(S.P[j]);
    return direct_sum(S.alg, parts);
}

// Primitive idempotent e with S.e != 0, by Fitting splitting of e A until its
// top is simple.
Vec primitive_idempotent(const Side& S, const RightModule& regular, const RightModule& simple,
                         std::mt19937_64& rng) {
    const auto& A = *S.alg;
    const PrimeField F = S.F;
    std::uniform_int_distribution<Scalar> coin(0, F.p() - 1);
    Vec e = A.unit();
    for (std::size_t depth = 0; depth <= A.dim(); ++depth) {
        Subspace eA = Subspace::span(left_action_of(A, e));
        auto sub = submodule(regular, eA).source;
        auto t = top(sub, S.J).target;
        if (is_simple(t, rng())) return e;
        bool split = false;
        for (int attempt = 0; attempt < 256 && !split; ++attempt) {
            Vec x(A.dim());
            for (auto& c : x) c = coin(rng);
            Vec a = A.multiply(A.multiply(e, x), e);
            Mat L = left_action_of(A, a);
            Subspace image = eA;
            while (true) {
                Subspace next = Subspace::span(image.dim() ? image.basis() * L : Mat(F, 0, A.dim()));
                if (next.dim() == image.dim()) break;
                image = next;
            }
            if (image.dim() == 0 || image.dim() == eA.dim()) continue;
            Mat LN = Mat::identity(F, A.dim());
            for (std::size_t k = 0; k < eA.dim(); ++k) LN = LN * L;
            Mat kc = left_nullspace(eA.basis() * LN);
            Mat kernel = kc * eA.basis();
            auto coeff = solve_left(vstack(image.basis(), kernel), e);
            if (!coeff) throw Error("Internal", "Fitting decomposition failed");
            Vec u(A.dim(), 0);
            for (std::size_t k = 0; k < image.dim(); ++k) axpy(u, image.basis().row(k), (*coeff)[k], F);
            Vec w = e;
            axpy(w, u, F.neg(1), F);
            e = simple.action_of(u).is_zero() ? w : u;
            split = true;
        }
        if (!split) throw Inconclusive("could not split a decomposable projective");
    }
    throw Error("Internal", "idempotent splitting did not terminate");
}

}  // namespace

struct Engine::Impl {
    std::uint64_t seed;
    Side side[2];  // 0: A, 1: A^op
    std::vector<RightModule> injectives;
    RightModule regular;
    // Minimal projective resolution of D(A_A) over A^op (the dual of the
    // minimal injective resolution of A_A).
    std::vector<Step> reg_inj_steps;
    std::size_t reg_inj_degree = 0;
    bool reg_inj_complete = false;
    std::vector<RightModule> reg_inj_terms;
    std::map<std::pair<std::size_t, std::size_t>, ExtDim> hull_pd;
    std::map<std::pair<std::size_t, std::size_t>, ExtDim> entry_pd;
    std::vector<std::vector<Step>> simple_res;  // resolutions of simples over A
    std::size_t simple_res_depth = 0;

    int side_of(const RightModule& M) const {
        if (same_algebra(M.algebra(), side[0].alg)) return 0;
        if (same_algebra(M.algebra(), side[1].alg)) return 1;
        throw AlgebraMismatch("module is not over the engine's algebra or its opposite");
    }

    void ensure_regular_injective(std::size_t degree) {
        if (reg_inj_complete || (!reg_inj_steps.empty() && reg_inj_degree >= degree)) return;
        RightModule D = dual(regular, side[1].alg);
        reg_inj_steps = resolve(side[1], D, degree + 1, false);
        reg_inj_degree = degree;
        reg_inj_complete = reg_inj_steps.size() < degree + 1 ||
                           (!reg_inj_steps.empty() && reg_inj_steps.back().kernel.rows() == 0);
        reg_inj_terms.clear();
    }
};

Engine::Engine(AlgebraPtr A, std::uint64_t seed) : impl_(std::make_unique<Impl>()) {
    auto& I = *impl_;
    I.seed = seed;
    if (!validate(*A).empty()) throw InvalidAlgebra("algebra fails the axioms: " + validate(*A).front().describe());
    Side& S = I.side[0];
    Side& T = I.side[1];
    S.alg = A;
    T.alg = opposite_ptr(A);
    S.F = T.F = A->field();
    S.simples = simple_modules(A, seed);
    Subspace J = Subspace::full(A->field(), A->dim());
    for (const auto& s : S.simples) J = subspace_intersection(J, annihilator(s));
    S.J = T.J = J;
    I.regular = regular_module(A);
    std::mt19937_64 rng(seed);
    for (const auto& s : S.simples) S.idem.push_back(primitive_idempotent(S, I.regular, s, rng));
    for (const auto& s : S.simples) T.simples.push_back(dual(s, T.alg));
    T.idem = S.idem;
    S.finish();
    T.finish();
    for (std::size_t j = 0; j < S.r(); ++j) I.injectives.push_back(dual(T.P[j], A));
}

Engine::~Engine() = default;

const AlgebraPtr& Engine::algebra() const { return impl_->side[0].alg; }
const AlgebraPtr& Engine::opposite() const { return impl_->side[1].alg; }
const Subspace& Engine::radical() const { return impl_->side[0].J; }
const std::vector<RightModule>& Engine::simples() const { return impl_->side[0].simples; }
const std::vector<RightModule>& Engine::opposite_simples() const { return impl_->side[1].simples; }
const std::vector<Vec>& Engine::idempotents() const { return impl_->side[0].idem; }
const RightModule& Engine::indecomposable_projective(std::size_t j) const { return impl_->side[0].P.at(j); }
const RightModule& Engine::indecomposable_injective(std::size_t j) const { return impl_->injectives.at(j); }

ModuleMap Engine::projective_cover(const RightModule& M) {
    const Side& S = impl_->side[impl_->side_of(M)];
    if (M.dim() == 0) return {zero_module(S.alg), M, Mat(S.F, 0, 0)};
    ModuleAmbient X(S, M);
    Step st = cover(S, X, Mat::identity(S.F, M.dim()), true);
    return {materialize(S, st.summands), M, st.images};
}

ModuleMap Engine::injective_envelope(const RightModule& M) {
    int s = impl_->side_of(M);
    const Side& S = impl_->side[s];
    const Side& T = impl_->side[1 - s];
    if (M.dim() == 0) return {M, zero_module(S.alg), Mat(S.F, 0, 0)};
    RightModule D = dual(M, T.alg);
    ModuleAmbient X(T, D);
    Step st = cover(T, X, Mat::identity(S.F, M.dim()), true);
    return {M, dual(materialize(T, st.summands), S.alg), transpose(st.images)};
}

MinResolution Engine::minimal_projective_resolution(const RightModule& M, std::size_t max_degree) {
    const Side& S = impl_->side[impl_->side_of(M)];
    auto steps = resolve(S, M, max_degree + 1, false);
    MinResolution R{MinResolution::Direction::Projective, M, {}, Mat(S.F, 0, M.dim()), {}};
    for (std::size_t i = 0; i <= max_degree; ++i)
        R.terms.push_back(i < steps.size() ? materialize(S, steps[i].summands) : zero_module(S.alg));
    if (!steps.empty()) R.augmentation = steps[0].images;
    for (std::size_t i = 0; i < max_degree; ++i)
        R.maps.push_back(i + 1 < steps.size() ? steps[i + 1].images
                                              : Mat(S.F, R.terms[i + 1].dim(), R.terms[i].dim()));
    return R;
}

MinResolution Engine::minimal_injective_resolution(const RightModule& M, std::size_t max_degree) {
    int s = impl_->side_of(M);
    const Side& S = impl_->side[s];
    const Side& T = impl_->side[1 - s];
    RightModule D = dual(M, T.alg);
    auto steps = resolve(T, D, max_degree + 1, false);
    MinResolution R{MinResolution::Direction::Injective, M, {}, Mat(S.F, M.dim(), 0), {}};
    for (std::size_t i = 0; i <= max_degree; ++i)
        R.terms.push_back(i < steps.size() ? dual(materialize(T, steps[i].summands), S.alg)
                                           : zero_module(S.alg));
    if (!steps.empty()) R.augmentation = transpose(steps[0].images);
    for (std::size_t i = 0; i < max_degree; ++i)
        R.maps.push_back(i + 1 < steps.size() ? transpose(steps[i + 1].images)
                                              : Mat(S.F, R.terms[i].dim(), R.terms[i + 1].dim()));
    return R;
}

std::vector<std::size_t> Engine::top_multiplicities(const RightModule& M) {
    const Side& S = impl_->side[impl_->side_of(M)];
    std::vector<std::size_t> mult(S.r(), 0);
    if (M.dim() == 0) return mult;
    ModuleAmbient X(S, M);
    for (std::size_t j : cover(S, X, Mat::identity(S.F, M.dim()), false).summands) ++mult[j];
    return mult;
}

namespace {

// Hom(P, N) for P = sum of e_j A is sum of N e_j; the coboundary induced by
// the step covering the previous syzygy.
struct HomData {
    std::vector<Subspace> Nej;  // N e_j per j
};

std::size_t hom_from_projective_dim(const HomData& H, const std::vector<std::size_t>& summands) {
    std::size_t total = 0;
    for (std::size_t j : summands) total += H.Nej[j].dim();
    return total;
}

// Rank of Hom(P_{i-1}, N) -> Hom(P_i, N), where `st` covers a submodule of
// P_{i-1} = sum over prev_summands.
std::size_t coboundary_rank(const Side& S, const RightModule& N, const HomData& H,
                            const std::vector<std::size_t>& prev_summands, const Step& st) {
    std::size_t rows = hom_from_projective_dim(H, prev_summands);
    std::size_t cols = hom_from_projective_dim(H, st.summands);
    if (rows == 0 || cols == 0) return 0;
    Mat Phi(S.F, rows, cols);
    std::vector<std::size_t> row_off, col_off, block_off;
    for (std::size_t l = 0, r = 0, b = 0; l < prev_summands.size(); ++l) {
        row_off.push_back(r);
        block_off.push_back(b);
        r += H.Nej[prev_summands[l]].dim();
        b += S.pdim(prev_summands[l]);
    }
    for (std::size_t k = 0, c = 0; k < st.summands.size(); ++k) {
        col_off.push_back(c);
        c += H.Nej[st.summands[k]].dim();
    }
    for (std::size_t k = 0; k < st.summands.size(); ++k) {
        const Subspace& target = H.Nej[st.summands[k]];
        if (target.dim() == 0) continue;
        for (std::size_t l = 0; l < prev_summands.size(); ++l) {
            const std::size_t jl = prev_summands[l];
            const Subspace& source = H.Nej[jl];
            if (source.dim() == 0) continue;
            std::span<const Scalar> block(st.y[k].data() + block_off[l], S.pdim(jl));
            if (is_zero_vec(block)) continue;
            Vec c = vec_mat(block, S.Pbasis[jl]);
            Mat act = N.action_of(c);
            for (std::size_t b = 0; b < source.dim(); ++b) {
                Vec img = vec_mat(source.basis().row(b), act);
                Vec coords = target.coords(img);
                for (std::size_t t = 0; t < coords.size(); ++t) Phi(row_off[l] + b, col_off[k] + t) = coords[t];
            }
        }
    }
    return rank(Phi);
}

HomData hom_data(const Side& S, const RightModule& N) {
    HomData H;
    for (const auto& e : S.idem) H.Nej.push_back(Subspace::span(N.action_of(e)));
    return H;
}

// Ext^i(M, N) from the first i+2 steps of the minimal resolution of M.
std::size_t ext_from_steps(const Side& S, const RightModule& M, const RightModule& N,
                           const std::vector<Step>& steps, std::size_t i) {
    HomData H = hom_data(S, N);
    if (M.dim() == 0 || N.dim() == 0) return 0;
    if (i >= steps.size()) return 0;
    std::size_t hom_i = hom_from_projective_dim(H, steps[i].summands);
    std::size_t rank_in = 0, rank_out = 0;
    if (i > 0) rank_in = coboundary_rank(S, N, H, steps[i - 1].summands, steps[i]);
    if (i + 1 < steps.size()) rank_out = coboundary_rank(S, N, H, steps[i].summands, steps[i + 1]);
    return hom_i - rank_in - rank_out;
}

}  // namespace

std::size_t Engine::ext_dim(const RightModule& M, const RightModule& N, std::size_t i) {
    if (!same_algebra(M.algebra(), N.algebra())) throw AlgebraMismatch("Ext between modules over different algebras");
    int s = impl_->side_of(M);
    const Side& S = impl_->side[s];
    auto steps = resolve(S, M, i + 2, false);
    return ext_from_steps(S, M, N, steps, i);
}

ExtDim Engine::projective_dimension(const RightModule& M, std::size_t cap) {
    if (cap == 0) throw Error("Usage", "cap must be at least 1");
    const Side& S = impl_->side[impl_->side_of(M)];
    if (M.dim() == 0) return ExtDim::minus_infinity();
    auto steps = resolve(S, M, cap, true);
    const Step& last = steps.back();
    if (steps.size() < cap) return ExtDim::finite(steps.size() - 1);
    // steps.size() == cap: the last step covered the (cap-1)-th syzygy.
    std::size_t syzygy_dim = steps.size() == 1 ? M.dim() : steps[steps.size() - 2].kernel.rows();
    if (last.cover_dim == syzygy_dim) return ExtDim::finite(cap - 1);
    return ExtDim::at_least(cap);
}

ExtDim Engine::projective_dimension_by_ext(const RightModule& M, std::size_t cap) {
    if (cap == 0) throw Error("Usage", "cap must be at least 1");
    int s = impl_->side_of(M);
    const Side& S = impl_->side[s];
    if (M.dim() == 0) return ExtDim::minus_infinity();
    auto steps = resolve(S, M, cap + 1, false);
    for (std::size_t n = 0; n < cap; ++n) {
        bool vanish = true;
        for (const auto& simple : S.simples)
            if (ext_from_steps(S, M, simple, steps, n + 1) != 0) {
                vanish = false;
                break;
            }
        if (vanish) return ExtDim::finite(n);
    }
    return ExtDim::at_least(cap);
}

bool Engine::is_projective(const RightModule& M) {
    const Side& S = impl_->side[impl_->side_of(M)];
    auto steps = resolve(S, M, 3, false);
    for (const auto& simple : S.simples)
        if (ext_from_steps(S, M, simple, steps, 1) != 0) return false;
    return true;
}

bool Engine::is_injective(const RightModule& M) {
    const Side& S = impl_->side[impl_->side_of(M)];
    for (const auto& simple : S.simples)
        if (ext_dim(simple, M, 1) != 0) return false;
    return true;
}

std::vector<std::vector<std::size_t>> Engine::injective_multiplicities(const RightModule& M,
                                                                       std::size_t max_degree) {
    int s = impl_->side_of(M);
    const Side& T = impl_->side[1 - s];
    auto steps = resolve(T, dual(M, T.alg), max_degree + 1, false);
    std::vector<std::vector<std::size_t>> out(max_degree + 1, std::vector<std::size_t>(T.r(), 0));
    for (std::size_t i = 0; i < steps.size(); ++i)
        for (std::size_t j : steps[i].summands) ++out[i][j];
    return out;
}

const std::vector<RightModule>& Engine::regular_injective_terms(std::size_t max_degree) {
    auto& I = *impl_;
    I.ensure_regular_injective(max_degree);
    if (I.reg_inj_terms.size() < max_degree + 1) {
        I.reg_inj_terms.clear();
        for (std::size_t i = 0; i <= max_degree; ++i)
            I.reg_inj_terms.push_back(i < I.reg_inj_steps.size()
                                          ? dual(materialize(I.side[1], I.reg_inj_steps[i].summands),
                                                 I.side[0].alg)
                                          : zero_module(I.side[0].alg));
    }
    return I.reg_inj_terms;
}

ExtDim Engine::injective_hull_pd(std::size_t j, std::size_t cap) {
    auto key = std::make_pair(j, cap);
    auto it = impl_->hull_pd.find(key);
    if (it != impl_->hull_pd.end()) return it->second;
    ExtDim v = projective_dimension(impl_->injectives.at(j), cap);
    impl_->hull_pd.emplace(key, v);
    return v;
}

ExtDim Engine::rfd_entry(std::size_t i, std::size_t cap) {
    auto key = std::make_pair(i, cap);
    auto it = impl_->entry_pd.find(key);
    if (it != impl_->entry_pd.end()) return it->second;
    const auto& terms = regular_injective_terms(i);
    ExtDim v = projective_dimension(terms[i], cap);
    impl_->entry_pd.emplace(key, v);
    return v;
}

std::vector<ExtDim> Engine::rfd_direct(std::size_t max_degree, std::size_t cap) {
    std::vector<ExtDim> out;
    regular_injective_terms(max_degree);
    for (std::size_t i = 0; i <= max_degree; ++i) out.push_back(rfd_entry(i, cap));
    return out;
}

std::vector<ExtDim> Engine::rfd_bass(std::size_t max_degree, std::size_t cap) {
    auto& I = *impl_;
    const Side& S = I.side[0];
    if (I.simple_res_depth < max_degree + 2) {
        I.simple_res.clear();
        for (const auto& simple : S.simples) I.simple_res.push_back(resolve(S, simple, max_degree + 2, false));
        I.simple_res_depth = max_degree + 2;
    }
    std::vector<ExtDim> out;
    for (std::size_t i = 0; i <= max_degree; ++i) {
        ExtDim entry = ExtDim::minus_infinity();
        for (std::size_t j = 0; j < S.r(); ++j)
            if (ext_from_steps(S, S.simples[j], I.regular, I.simple_res[j], i) > 0)
                entry = max(entry, injective_hull_pd(j, cap));
        out.push_back(entry);
    }
    return out;
}

RfdProfile Engine::rfd_profile(std::size_t max_degree, std::size_t cap) {
    RfdProfile P;
    P.algebra = algebra()->name();
    P.cap = cap;
    auto direct = rfd_direct(max_degree, cap);
    auto bass = rfd_bass(max_degree, cap);
    for (std::size_t i = 0; i <= max_degree; ++i)
        if (!(direct[i] == bass[i]))
            throw RouteMismatch("entry " + std::to_string(i) + " of " + P.algebra + ": direct " +
                                direct[i].str() + " vs Bass " + bass[i].str());
    P.entries = direct;
    for (const auto& T : regular_injective_terms(max_degree)) P.term_dims.push_back(T.dim());
    P.term_dims.resize(max_degree + 1);
    return P;
}

// Wrappers ------------------------------------------------------------------------

namespace {
AlgebraPtr base_of(const RightModule& M) { return M.algebra(); }
}  // namespace

ModuleMap injective_envelope(const RightModule& M) { return Engine(base_of(M)).injective_envelope(M); }
ModuleMap projective_cover(const RightModule& M) { return Engine(base_of(M)).projective_cover(M); }
MinResolution minimal_injective_resolution(const RightModule& M, std::size_t max_degree) {
    return Engine(base_of(M)).minimal_injective_resolution(M, max_degree);
}
MinResolution minimal_projective_resolution(const RightModule& M, std::size_t max_degree) {
    return Engine(base_of(M)).minimal_projective_resolution(M, max_degree);
}
std::size_t ext_dim(const RightModule& M, const RightModule& N, std::size_t i) {
    return Engine(base_of(M)).ext_dim(M, N, i);
}
ExtDim projective_dimension(const RightModule& M, std::size_t cap) {
    return Engine(base_of(M)).projective_dimension(M, cap);
}
bool is_injective(const RightModule& M) { return Engine(base_of(M)).is_injective(M); }
bool is_projective(const RightModule& M) { return Engine(base_of(M)).is_projective(M); }
RfdProfile rfd_profile(const AlgebraPtr& A, std::size_t max_degree, std::size_t cap) {
    return Engine(A).rfd_profile(max_degree, cap);
}

// Checks --------------------------------------------------------------------------

bool resolution_is_exact(const MinResolution& R) {
    const auto& T = R.terms;
    if (T.empty()) return true;
    auto hom = [](const RightModule& a, const RightModule& b, const Mat& f) { return is_homomorphism(a, b, f); };
    if (R.direction == MinResolution::Direction::Projective) {
        if (!hom(T[0], R.resolved, R.augmentation)) return false;
        if (rank(R.augmentation) != R.resolved.dim()) return false;
        for (std::size_t i = 0; i < R.maps.size(); ++i) {
            if (!hom(T[i + 1], T[i], R.maps[i])) return false;
            const Mat& next = i == 0 ? R.augmentation : R.maps[i - 1];
            if (T[i + 1].dim() && T[i].dim() && !(R.maps[i] * next).is_zero()) return false;
            if (T[i].dim() - rank(next) != rank(R.maps[i])) return false;
        }
    } else {
        if (!hom(R.resolved, T[0], R.augmentation)) return false;
        if (rank(R.augmentation) != R.resolved.dim()) return false;
        for (std::size_t i = 0; i < R.maps.size(); ++i) {
            if (!hom(T[i], T[i + 1], R.maps[i])) return false;
            const Mat& prev = i == 0 ? R.augmentation : R.maps[i - 1];
            if (prev.rows() && T[i + 1].dim() && !(prev * R.maps[i]).is_zero()) return false;
            if (T[i].dim() - rank(R.maps[i]) != rank(prev)) return false;
        }
    }
    return true;
}

bool resolution_is_minimal(const MinResolution& R, const Subspace& J) {
    const auto& T = R.terms;
    if (R.direction == MinResolution::Direction::Projective) {
        for (std::size_t i = 0; i < T.size(); ++i) {
            const Mat& f = i == 0 ? R.augmentation : R.maps[i - 1];
            if (T[i].dim() == 0) continue;
            Subspace kernel = Subspace::span(left_nullspace(f));
            if (!radical_of_module(T[i], J).contains(kernel)) return false;
        }
    } else {
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (T[i].dim() == 0) continue;
            Subspace soc = socle_subspace(T[i], J);
            const Mat& prev = i == 0 ? R.augmentation : R.maps[i - 1];
            Subspace image = Subspace::span(prev.rows() ? prev : Mat(prev.field(), 0, T[i].dim()));
            if (!image.contains(soc)) return false;
        }
    }
    return true;
}

}  // namespace auslab
