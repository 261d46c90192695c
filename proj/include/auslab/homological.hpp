#pragma once
// Minimal projective and injective resolutions, Ext, projective dimension and
// the profile of projective dimensions along the minimal injective resolution
// of the regular module.
//
// Every module here is finitely generated over a finite-dimensional algebra,
// so flat and projective dimensions agree and flat covers are projective
// covers.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "auslab/module.hpp"

namespace auslab {

/// Homological dimension with -inf for the zero module and cap-censored
/// lower bounds: AtLeast(c) means the value is >= c, possibly infinite.
class ExtDim {
public:
    enum class Tag { MinusInfinity, Finite, AtLeast };

    static ExtDim minus_infinity() { return ExtDim(Tag::MinusInfinity, 0); }
    static ExtDim finite(std::size_t n) { return ExtDim(Tag::Finite, n); }
    static ExtDim at_least(std::size_t c) { return ExtDim(Tag::AtLeast, c); }

    Tag tag() const noexcept { return tag_; }
    std::size_t value() const noexcept { return value_; }
    bool is_minus_infinity() const noexcept { return tag_ == Tag::MinusInfinity; }
    bool is_finite() const noexcept { return tag_ == Tag::Finite; }
    bool is_at_least() const noexcept { return tag_ == Tag::AtLeast; }

    /// -inf + 1 = -inf.
    ExtDim plus_one() const;
    /// "-inf", "n" or ">=c"; with minus_one_for_zero the zero module prints "-1".
    std::string str(bool minus_one_for_zero = false) const;

    friend bool operator==(const ExtDim&, const ExtDim&) = default;

private:
    ExtDim(Tag t, std::size_t v) : tag_(t), value_(v) {}
    Tag tag_;
    std::size_t value_;
};

/// Join, reading AtLeast(c) as the interval [c, inf].
ExtDim max(const ExtDim& a, const ExtDim& b);
/// x <= bound, or nullopt when censoring leaves it open.
std::optional<bool> at_most(const ExtDim& x, std::size_t bound);
/// x < y, or nullopt when censoring leaves it open.
std::optional<bool> less_than(const ExtDim& x, const ExtDim& y);
/// x <= y, or nullopt when censoring leaves it open.
std::optional<bool> less_equal(const ExtDim& x, const ExtDim& y);

struct MinResolution {
    enum class Direction { Injective, Projective };
    Direction direction;
    RightModule resolved;
    std::vector<RightModule> terms;
    /// Projective: augmentation is terms[0] -> resolved and maps[i] is
    /// terms[i+1] -> terms[i]. Injective: augmentation is resolved -> terms[0]
    /// and maps[i] is terms[i] -> terms[i+1].
    Mat augmentation;
    std::vector<Mat> maps;
};

struct RfdProfile {
    std::string algebra;
    std::size_t cap = 0;
    std::vector<ExtDim> entries;            // pd of I^i(A), i = 0..max_degree
    std::vector<std::size_t> term_dims;     // dim I^i(A)
};

/// Per-algebra analysis session. Holds the radical, simple modules, primitive
/// idempotents and indecomposable projectives of A and of its opposite, and
/// memoizes dimensions of indecomposable injectives. Not thread-safe; use one
/// engine per thread.
class Engine {
public:
    explicit Engine(AlgebraPtr A, std::uint64_t seed = 0xA05);
    ~Engine();
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const AlgebraPtr& algebra() const;
    const AlgebraPtr& opposite() const;
    const Subspace& radical() const;
    /// Simple modules over A, pairwise non-isomorphic.
    const std::vector<RightModule>& simples() const;
    /// Duals of simples(), the simple modules over the opposite algebra.
    const std::vector<RightModule>& opposite_simples() const;
    /// Primitive idempotents e_j with top(e_j A) = simples()[j].
    const std::vector<Vec>& idempotents() const;
    /// e_j A as a module over A.
    const RightModule& indecomposable_projective(std::size_t j) const;
    /// D(e_j A^op) = E(simples()[j]) as a module over A.
    const RightModule& indecomposable_injective(std::size_t j) const;

    /// Modules may live over A or over its opposite.
    ModuleMap projective_cover(const RightModule& M);
    /// The map M -> E(M).
    ModuleMap injective_envelope(const RightModule& M);
    MinResolution minimal_projective_resolution(const RightModule& M, std::size_t max_degree);
    MinResolution minimal_injective_resolution(const RightModule& M, std::size_t max_degree);

    /// Multiplicity of the projective cover of each simple in top(M).
    std::vector<std::size_t> top_multiplicities(const RightModule& M);
    std::size_t ext_dim(const RightModule& M, const RightModule& N, std::size_t i);

    /// From the length of the minimal projective resolution.
    ExtDim projective_dimension(const RightModule& M, std::size_t cap);
    /// From vanishing of Ext^{n+1}(M, S) over all simples S.
    ExtDim projective_dimension_by_ext(const RightModule& M, std::size_t cap);

    bool is_projective(const RightModule& M);
    bool is_injective(const RightModule& M);

    /// Multiplicities of E(S_j) in I^i(M), i = 0..max_degree, from the dual
    /// projective resolution over the opposite algebra.
    std::vector<std::vector<std::size_t>> injective_multiplicities(const RightModule& M,
                                                                   std::size_t max_degree);
    /// I^i(A_A) for i = 0..max_degree.
    const std::vector<RightModule>& regular_injective_terms(std::size_t max_degree);
    /// pd E(S_j), memoized per cap.
    ExtDim injective_hull_pd(std::size_t j, std::size_t cap);

    /// Direct route: pd of each I^i(A_A).
    std::vector<ExtDim> rfd_direct(std::size_t max_degree, std::size_t cap);
    /// Bass route: max of pd E(S) over simples S with Ext^i(S, A_A) != 0.
    std::vector<ExtDim> rfd_bass(std::size_t max_degree, std::size_t cap);
    /// Both routes; throws RouteMismatch if they differ.
    RfdProfile rfd_profile(std::size_t max_degree, std::size_t cap);
    /// Lazily extended profile entry i (direct route only), for early exits.
    ExtDim rfd_entry(std::size_t i, std::size_t cap);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Convenience wrappers that build a fresh engine.

ModuleMap injective_envelope(const RightModule& M);
ModuleMap projective_cover(const RightModule& M);
MinResolution minimal_injective_resolution(const RightModule& M, std::size_t max_degree);
MinResolution minimal_projective_resolution(const RightModule& M, std::size_t max_degree);
std::size_t ext_dim(const RightModule& M, const RightModule& N, std::size_t i);
ExtDim projective_dimension(const RightModule& M, std::size_t cap);
bool is_injective(const RightModule& M);
bool is_projective(const RightModule& M);
RfdProfile rfd_profile(const AlgebraPtr& A, std::size_t max_degree, std::size_t cap);

/// Exactness of a resolution at every computed position, and minimality
/// (socle(I^i) inside ker d^i, or ker of each cover inside T.J).
bool resolution_is_exact(const MinResolution& R);
bool resolution_is_minimal(const MinResolution& R, const Subspace& J);

}  // namespace auslab
