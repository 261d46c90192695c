#include "auslab/module.hpp"

#include <random>
#include <sstream>

#include "auslab/error.hpp"

namespace auslab {

RightModule::RightModule(AlgebraPtr A, std::size_t dim, std::vector<Mat> action)
    : A_(std::move(A)), dim_(dim), action_(std::move(action)) {
    if (!A_) throw InvalidModule("module without algebra");
    if (action_.size() != A_->dim())
        throw InvalidModule("need one action matrix per algebra basis element");
    for (const auto& X : action_)
        if (X.rows() != dim_ || X.cols() != dim_ || !(X.field() == A_->field()))
            throw InvalidModule("action matrix has wrong shape or field");
}

Mat RightModule::action_of(std::span<const Scalar> a) const {
    return linear_combination(action_, a, field(), dim_, dim_);
}

std::vector<std::string> validate_module(const RightModule& M) {
    std::vector<std::string> out;
    const auto& A = *M.algebra();
    if (!M.action_of(A.unit()).is_identity()) out.push_back("unit does not act as identity");
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (M.act(i) * M.act(j) != M.action_of(A.product(i, j)))
                out.push_back("action not multiplicative at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    return out;
}

bool is_homomorphism(const RightModule& M, const RightModule& N, const Mat& f) {
    if (!same_algebra(M.algebra(), N.algebra())) return false;
    if (f.rows() != M.dim() || f.cols() != N.dim()) return false;
    for (std::size_t i = 0; i < M.algebra()->dim(); ++i)
        if (M.act(i) * f != f * N.act(i)) return false;
    return true;
}

RightModule zero_module(const AlgebraPtr& A) {
    return RightModule(A, 0, std::vector<Mat>(A->dim(), Mat(A->field(), 0, 0)));
}

RightModule regular_module(const AlgebraPtr& A) {
    std::vector<Mat> act;
    for (std::size_t i = 0; i < A->dim(); ++i) act.push_back(A->right_multiplication(i));
    return RightModule(A, A->dim(), std::move(act));
}

RightModule direct_sum(const RightModule& M, const RightModule& N) {
    if (!same_algebra(M.algebra(), N.algebra())) throw AlgebraMismatch("direct sum over different algebras");
    return direct_sum(M.algebra(), {M, N});
}

RightModule direct_sum(const AlgebraPtr& A, const std::vector<RightModule>& parts) {
    std::size_t total = 0;
    for (const auto& P : parts) {
        if (!same_algebra(P.algebra(), A)) throw AlgebraMismatch("direct sum over different algebras");
        total += P.dim();
    }
    std::vector<Mat> act;
    for (std::size_t i = 0; i < A->dim(); ++i) {
        std::vector<Mat> blocks;
        for (const auto& P : parts) blocks.push_back(P.act(i));
        act.push_back(blocks.empty() ? Mat(A->field(), 0, 0) : block_diagonal(blocks));
    }
    return RightModule(A, total, std::move(act));
}

Subspace spin(const RightModule& M, const std::vector<Vec>& vectors) {
    EchelonBuilder span(M.field(), M.dim());
    std::vector<Vec> queue;
    for (const auto& v : vectors)
        if (span.add(v)) queue.push_back(v);
    const auto& gens = M.algebra()->generators();
    for (std::size_t q = 0; q < queue.size() && span.rank() < M.dim(); ++q)
        for (std::size_t g : gens) {
            Vec w = vec_mat(queue[q], M.act(g));
            if (span.add(w)) queue.push_back(std::move(w));
        }
    return span.subspace();
}

Subspace spin(const RightModule& M, const Mat& rows) {
    std::vector<Vec> v;
    for (std::size_t i = 0; i < rows.rows(); ++i) v.push_back(rows.row_vec(i));
    return spin(M, v);
}

bool is_submodule(const RightModule& M, const Subspace& U) {
    for (std::size_t g : M.algebra()->generators())
        for (std::size_t k = 0; k < U.dim(); ++k)
            if (!U.contains(vec_mat(U.basis().row(k), M.act(g)))) return false;
    return true;
}

ModuleMap submodule(const RightModule& M, const Subspace& U) {
    if (U.ambient() != M.dim()) throw DimensionMismatch("subspace lives in the wrong space");
    const std::size_t k = U.dim();
    if (k == 0) return {zero_module(M.algebra()), M, Mat(M.field(), 0, M.dim())};
    std::vector<Mat> act;
    for (std::size_t i = 0; i < M.algebra()->dim(); ++i) {
        Mat img = U.basis() * M.act(i);
        for (std::size_t r = 0; r < k; ++r)
            if (!U.contains(img.row(r))) throw InvalidModule("subspace is not a submodule");
        act.push_back(U.coords_of_rows(img));
    }
    RightModule S(M.algebra(), k, std::move(act));
    return {std::move(S), M, U.basis()};
}

ModuleMap quotient(const RightModule& M, const Subspace& U) {
    if (U.ambient() != M.dim()) throw DimensionMismatch("subspace lives in the wrong space");
    const auto free = U.nonpivots();
    const std::size_t q = free.size(), m = M.dim();
    const PrimeField F = M.field();
    Mat proj(F, m, q);
    for (std::size_t r = 0; r < m; ++r) {
        Vec e(m, 0);
        e[r] = 1;
        Vec red = U.reduce(e);
        for (std::size_t c = 0; c < q; ++c) proj(r, c) = red[free[c]];
    }
    std::vector<Mat> act;
    for (std::size_t i = 0; i < M.algebra()->dim(); ++i) {
        Mat X(F, q, q);
        for (std::size_t c = 0; c < q; ++c) {
            Vec img = vec_mat(M.act(i).row(free[c]), proj);
            std::copy(img.begin(), img.end(), X.row(c).begin());
        }
        act.push_back(std::move(X));
    }
    RightModule Q(M.algebra(), q, std::move(act));
    return {M, std::move(Q), std::move(proj)};
}

std::vector<Mat> hom_space(const RightModule& M, const RightModule& N) {
    if (!same_algebra(M.algebra(), N.algebra())) throw AlgebraMismatch("Hom between modules over different algebras");
    const PrimeField F = M.field();
    const std::size_t m = M.dim(), n = N.dim();
    if (m == 0 || n == 0) return {};
    const auto& gens = M.algebra()->generators();

    // Standard basis of M by spinning unit vectors. The image of tree vector t
    // is u L_t where u stacks the unknown images of the seeds.
    EchelonBuilder tree(F, m, true);
    std::vector<Vec> basis;
    std::size_t seeds = 0;
    struct Pending {
        std::size_t parent;
        std::size_t gen;
    };
    std::vector<Pending> origin;
    for (std::size_t e = 0; e < m && tree.rank() < m; ++e) {
        Vec v(m, 0);
        v[e] = 1;
        if (!tree.add(v)) continue;
        basis.push_back(v);
        origin.push_back({SIZE_MAX, seeds++});
        for (std::size_t q = basis.size() - 1; q < basis.size(); ++q)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Vec w = vec_mat(basis[q], M.act(gens[gi]));
                if (tree.add(w)) {
                    basis.push_back(std::move(w));
                    origin.push_back({q, gi});
                }
            }
    }
    const std::size_t U = seeds * n;
    std::vector<Mat> L(m);
    for (std::size_t t = 0, s = 0; t < m; ++t) {
        if (origin[t].parent == SIZE_MAX) {
            L[t] = Mat(F, U, n);
            for (std::size_t c = 0; c < n; ++c) L[t](s * n + c, c) = 1;
            ++s;
        } else {
            L[t] = L[origin[t].parent] * N.act(gens[origin[t].gen]);
        }
    }
    // Every (tree vector, generator) pair gives the constraint
    // L_t Act^N_g = sum_k c_k L_k where b_t Act^M_g = sum_k c_k b_k.
    EchelonBuilder constraints(F, U);
    for (std::size_t t = 0; t < m && constraints.rank() < U; ++t)
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Vec w = vec_mat(basis[t], M.act(gens[gi]));
            Vec c = *tree.express(w);
            Mat D = L[t] * N.act(gens[gi]);
            for (std::size_t k = 0; k < m; ++k)
                if (c[k]) {
                    Scalar nc = F.neg(c[k]);
                    axpy(D.mutable_data(), L[k].data(), nc, F);
                }
            Mat DT = transpose(D);
            for (std::size_t r = 0; r < n; ++r) constraints.add(DT.row(r));
        }
    Subspace C = constraints.subspace();
    Mat sol = nullspace(C.dim() == 0 ? Mat(F, 0, U) : C.basis());
    Mat B = Mat::from_row_vectors(F, m, basis);
    Mat Binv = *inverse(B);
    std::vector<Mat> out;
    for (std::size_t r = 0; r < sol.rows(); ++r) {
        Mat images(F, m, n);
        for (std::size_t t = 0; t < m; ++t) {
            Vec img = vec_mat(sol.row(r), L[t]);
            std::copy(img.begin(), img.end(), images.row(t).begin());
        }
        out.push_back(Binv * images);
    }
    return out;
}

std::size_t hom_dim(const RightModule& M, const RightModule& N) { return hom_space(M, N).size(); }

AlgebraPtr opposite_ptr(const AlgebraPtr& A) { return std::make_shared<StructureAlgebra>(opposite(*A)); }

RightModule dual(const RightModule& M, const AlgebraPtr& Aop) {
    AlgebraPtr B = Aop ? Aop : opposite_ptr(M.algebra());
    if (B->dim() != M.algebra()->dim()) throw AlgebraMismatch("opposite algebra has the wrong dimension");
    std::vector<Mat> act;
    for (const auto& X : M.actions()) act.push_back(transpose(X));
    return RightModule(B, M.dim(), std::move(act));
}

Subspace annihilator(const RightModule& M) {
    const std::size_t d = M.algebra()->dim(), m = M.dim();
    Mat K(M.field(), d, m * m);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& data = M.act(i).data();
        std::copy(data.begin(), data.end(), K.row(i).begin());
    }
    return Subspace::span(left_nullspace(K));
}

TensorProduct tensor_over(const RightModule& Y, const BimoduleData& M) {
    if (!same_algebra(Y.algebra(), M.left)) throw AlgebraMismatch("module and bimodule left algebra differ");
    const PrimeField F = Y.field();
    const std::size_t y = Y.dim(), m = M.dim, total = y * m;
    const auto& R = M.right;
    Mat Iy = Mat::identity(F, y), Im = Mat::identity(F, m);
    std::vector<Mat> act;
    for (std::size_t r = 0; r < R->dim(); ++r) act.push_back(kron(Iy, M.right_action[r]));
    RightModule big(R, total, std::move(act));
    EchelonBuilder rel(F, total);
    for (std::size_t s : M.left->generators()) {
        Mat relations = kron(Y.act(s), Im) - kron(Iy, transpose(M.left_action[s]));
        for (std::size_t r = 0; r < total; ++r) rel.add(relations.row(r));
    }
    auto q = quotient(big, rel.subspace());
    return {std::move(q.target), std::move(q.matrix)};
}

// Radical, socle, top -----------------------------------------------------------

Subspace radical(const AlgebraPtr& A, std::uint64_t seed) {
    Subspace J = Subspace::full(A->field(), A->dim());
    for (const auto& S : simple_modules(A, seed)) J = subspace_intersection(J, annihilator(S));
    return J;
}

Subspace radical_of_module(const RightModule& M, const Subspace& J) {
    EchelonBuilder span(M.field(), M.dim());
    for (std::size_t k = 0; k < J.dim() && span.rank() < M.dim(); ++k) {
        Mat X = M.action_of(J.basis().row(k));
        for (std::size_t r = 0; r < X.rows(); ++r) span.add(X.row(r));
    }
    return span.subspace();
}

Subspace socle_subspace(const RightModule& M, const Subspace& J) {
    if (J.dim() == 0 || M.dim() == 0) return Subspace::full(M.field(), M.dim());
    Mat H = M.action_of(J.basis().row(0));
    for (std::size_t k = 1; k < J.dim(); ++k) H = hstack(H, M.action_of(J.basis().row(k)));
    return Subspace::span(left_nullspace(H));
}

ModuleMap socle(const RightModule& M, const Subspace& J) { return submodule(M, socle_subspace(M, J)); }
ModuleMap top(const RightModule& M, const Subspace& J) { return quotient(M, radical_of_module(M, J)); }
ModuleMap socle(const RightModule& M) { return socle(M, radical(M.algebra())); }
ModuleMap top(const RightModule& M) { return top(M, radical(M.algebra())); }

// MeatAxe-style decomposition ------------------------------------------------------

namespace {

constexpr std::size_t kRandomDraws = 64;
constexpr std::uint64_t kMaxEnumeration = 1u << 14;

std::uint64_t projective_points(std::uint64_t p, std::size_t k) {
    std::uint64_t total = 0, power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total += power;
        if (total > kMaxEnumeration) return kMaxEnumeration + 1;
        power *= p;
    }
    return total;
}

// Calls f on one representative of every line in the row space of `basis`
// until f returns true.
template <class Fn>
bool for_each_projective_point(const Mat& basis, Fn&& f) {
    const PrimeField F = basis.field();
    const std::size_t k = basis.rows();
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<Scalar> coeff(k - lead - 1, 0);
        while (true) {
            Vec v = basis.row_vec(lead);
            for (std::size_t j = 0; j < coeff.size(); ++j)
                if (coeff[j]) axpy(v, basis.row(lead + 1 + j), coeff[j], F);
            if (f(v)) return true;
            std::size_t j = 0;
            while (j < coeff.size() && ++coeff[j] == F.p()) coeff[j++] = 0;
            if (j == coeff.size()) break;
        }
    }
    return false;
}

bool proper(const Subspace& U, std::size_t m) { return U.dim() > 0 && U.dim() < m; }

// Submodule of M cut out by a proper submodule W of the dual.
Subspace annihilated_by(const Subspace& W, std::size_t m, const PrimeField& F) {
    return Subspace::span(nullspace(W.dim() == 0 ? Mat(F, 0, m) : W.basis()));
}

}  // namespace

std::optional<Subspace> find_proper_submodule(const RightModule& M, std::uint64_t seed) {
    const std::size_t m = M.dim();
    if (m <= 1) return std::nullopt;
    const auto& A = *M.algebra();
    const PrimeField F = A.field();
    RightModule D = dual(M, M.algebra());  // spinning only needs transposed matrices

    std::vector<Vec> elements;
    for (std::size_t i = 0; i < A.dim(); ++i) elements.push_back(A.basis_vector(i));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar> coin(0, F.p() - 1);
    for (std::size_t r = 0; r < kRandomDraws; ++r) {
        Vec a(A.dim());
        for (auto& x : a) x = coin(rng);
        elements.push_back(std::move(a));
    }
    struct Candidate {
        Mat action;
        std::size_t nullity;
    };
    std::optional<Candidate> best;
    auto consider = [&](Mat X) -> std::optional<Subspace> {
        Mat K = left_nullspace(X);
        if (K.rows() == 0) return std::nullopt;
        Subspace U = spin(M, {K.row_vec(0)});
        if (proper(U, m)) return U;
        Mat KT = left_nullspace(transpose(X));
        Subspace W = spin(D, {KT.row_vec(0)});
        if (proper(W, m)) return annihilated_by(W, m, F);
        if (!best || K.rows() < best->nullity) best = Candidate{std::move(X), K.rows()};
        return std::nullopt;
    };
    const std::uint64_t shifts = F.p() <= 7 ? F.p() : 1;
    for (const auto& a : elements) {
        Mat X = M.action_of(a);
        for (std::uint64_t lambda = 0; lambda < shifts; ++lambda) {
            Mat Y = X;
            for (std::size_t r = 0; r < m; ++r) Y(r, r) = F.sub(Y(r, r), Scalar(lambda));
            if (auto U = consider(std::move(Y))) return U;
            if (best && best->nullity == 1) break;
        }
        if (best && best->nullity == 1) break;
    }
    if (!best) best = Candidate{Mat(F, m, m), m};
    if (projective_points(F.p(), best->nullity) > kMaxEnumeration)
        throw Inconclusive("simplicity test would enumerate too many kernel vectors");

    // Norton's criterion: M is simple iff every nonzero kernel vector of a
    // spins to M and one kernel vector of a^T spins to the dual.
    std::optional<Subspace> found;
    Mat K = left_nullspace(best->action);
    for_each_projective_point(K, [&](const Vec& v) {
        Subspace U = spin(M, {v});
        if (proper(U, m)) found = U;
        return found.has_value();
    });
    if (found) return found;
    Mat KT = left_nullspace(transpose(best->action));
    Subspace W = spin(D, {KT.row_vec(0)});
    if (proper(W, m)) return annihilated_by(W, m, F);
    return std::nullopt;
}

bool is_simple(const RightModule& M, std::uint64_t seed) {
    return M.dim() > 0 && !find_proper_submodule(M, seed).has_value();
}

bool simples_isomorphic(const RightModule& S, const RightModule& T) {
    return S.dim() == T.dim() && hom_dim(S, T) > 0;
}

namespace {

void chop_into(const RightModule& M, std::uint64_t seed, std::vector<RightModule>& out) {
    if (M.dim() == 0) return;
    auto U = find_proper_submodule(M, seed);
    if (!U) {
        out.push_back(M);
        return;
    }
    chop_into(submodule(M, *U).source, seed + 1, out);
    chop_into(quotient(M, *U).target, seed + 2, out);
}

}  // namespace

std::vector<CompositionFactor> chop(const RightModule& M, std::uint64_t seed) {
    std::vector<RightModule> pieces;
    chop_into(M, seed, pieces);
    std::vector<CompositionFactor> out;
    for (auto& S : pieces) {
        bool placed = false;
        for (auto& f : out)
            if (simples_isomorphic(f.simple, S)) {
                ++f.multiplicity;
                placed = true;
                break;
            }
        if (!placed) out.push_back({std::move(S), 1});
    }
    return out;
}

std::vector<RightModule> simple_modules(const AlgebraPtr& A, std::uint64_t seed) {
    std::vector<RightModule> out;
    for (auto& f : chop(regular_module(A), seed)) out.push_back(std::move(f.simple));
    return out;
}

bool is_isomorphic(const RightModule& M, const RightModule& N, std::uint64_t seed) {
    if (!same_algebra(M.algebra(), N.algebra())) throw AlgebraMismatch("modules over different algebras");
    if (M.dim() != N.dim()) return false;
    if (M.dim() == 0) return true;
    auto H = hom_space(M, N);
    if (H.empty()) return false;
    const PrimeField F = M.field();
    const std::size_t n = M.dim();
    auto invertible = [&](std::span<const Scalar> c) {
        return rank(linear_combination(H, c, F, n, n)) == n;
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar> coin(0, F.p() - 1);
    for (int draw = 0; draw < 256; ++draw) {
        Vec c(H.size());
        for (auto& x : c) x = coin(rng);
        if (invertible(c)) return true;
    }
    if (projective_points(F.p(), H.size()) > kMaxEnumeration)
        throw Inconclusive("no invertible homomorphism found by sampling");
    Mat coords = Mat::identity(F, H.size());
    return for_each_projective_point(coords, [&](const Vec& c) { return invertible(c); });
}

// Text format -----------------------------------------------------------------------

RightModule parse_module(const std::string& text, const AlgebraResolver& resolve) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    AlgebraPtr A;
    std::optional<std::size_t> mdim;
    std::vector<std::optional<Mat>> act;
    std::optional<std::size_t> current;
    std::size_t filled = 0;
    auto fail = [&](const std::string& msg) {
        return ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    auto number = [&](const std::string& s) -> long long {
        try {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw fail("expected an integer, got '" + s + "'");
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (current && filled < *mdim) {
            if (tok.size() != *mdim) throw fail("expected " + std::to_string(*mdim) + " entries");
            for (std::size_t c = 0; c < *mdim; ++c)
                (*act[*current])(filled, c) = A->field().reduce(number(tok[c]));
            ++filled;
            continue;
        }
        if (tok[0] == "module-of") {
            if (A || tok.size() != 2) throw fail("malformed or repeated 'module-of' line");
            A = resolve(tok[1]);
            if (!A) throw fail("unknown algebra '" + tok[1] + "'");
            act.assign(A->dim(), std::nullopt);
        } else if (tok[0] == "mdim") {
            if (!A || mdim || tok.size() != 2) throw fail("'mdim' must follow 'module-of' once");
            long long v = number(tok[1]);
            if (v < 0) throw fail("negative dimension");
            mdim = static_cast<std::size_t>(v);
        } else if (tok[0] == "act") {
            if (!mdim || tok.size() != 2) throw fail("'act' needs 'mdim' first and one index");
            long long i = number(tok[1]);
            if (i < 0 || std::size_t(i) >= A->dim()) throw fail("basis index out of range");
            if (act[i]) throw fail("duplicate action block");
            act[i] = Mat(A->field(), *mdim, *mdim);
            current = std::size_t(i);
            filled = 0;
        } else {
            throw fail("unknown keyword '" + tok[0] + "'");
        }
    }
    if (current && filled < *mdim) throw ParseError("truncated action block");
    if (!A || !mdim) throw ParseError("missing 'module-of' or 'mdim'");
    std::vector<Mat> actions;
    for (std::size_t i = 0; i < act.size(); ++i) {
        if (!act[i]) throw ParseError("missing action block for basis element " + std::to_string(i));
        actions.push_back(std::move(*act[i]));
    }
    RightModule M(A, *mdim, std::move(actions));
    auto problems = validate_module(M);
    if (!problems.empty()) throw InvalidModule(problems.front());
    return M;
}

std::string serialize_module(const RightModule& M, const std::string& algebra_name) {
    std::ostringstream os;
    os << "module-of " << algebra_name << "\n";
    os << "mdim " << M.dim() << "\n";
    for (std::size_t i = 0; i < M.actions().size(); ++i) {
        os << "act " << i << "\n";
        for (std::size_t r = 0; r < M.dim(); ++r) {
            for (std::size_t c = 0; c < M.dim(); ++c) os << (c ? " " : "") << M.act(i)(r, c);
            os << "\n";
        }
    }
    return os.str();
}

std::vector<RightModule> sample_modules(const AlgebraPtr& A, std::uint64_t seed, std::size_t cyclic) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Scalar> coin(0, A->field().p() - 1);
    RightModule reg = regular_module(A);
    std::vector<RightModule> out{reg};
    for (std::size_t k = 0; k < cyclic; ++k) {
        Vec v(A->dim());
        for (auto& x : v) x = coin(rng);
        Subspace U = spin(reg, {v});
        out.push_back(submodule(reg, U).source);
        out.push_back(quotient(reg, U).target);
    }
    for (auto& S : simple_modules(A, seed)) out.push_back(S);
    out.push_back(direct_sum(out[1], out.back()));
    return out;
}

}  // namespace auslab
