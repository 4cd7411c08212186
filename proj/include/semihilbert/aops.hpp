/**
 * @file aops.hpp
 * @brief Operators on a semi-Hilbertian space: A-adjoints, class membership,
 *        the A-operator seminorm and the A-numerical radius.
 *
 * Seminorm and radius are computed through the reduced matrix
 * A^{1/2} T (A^{1/2})^+, which represents T on ran(A^{1/2}) with the
 * ordinary inner product: <Tx, x>_A = <R y, y> for y = A^{1/2} x.
 */

#pragma once

#include "space.hpp"

#include <limits>
#include <string_view>

namespace semihilbert {

namespace detail {
inline double relative_residual(const CMatrix& residual, const CMatrix& reference)
{
    return spectral_norm(residual) / std::max(1.0, spectral_norm(reference));
}
} // namespace detail

/// T is in B_A(H) iff ran(T* A) is contained in ran(A).
inline bool in_b_a(const SemiHilbertSpace& space, const CMatrix& t)
{
    detail::require_operator(space, t, "T");
    const CMatrix tsa = t.adjoint() * space.A();
    const CMatrix leak = tsa - space.projA() * tsa;
    return detail::relative_residual(leak, tsa) <= space.tol();
}

/// T is in B_{A^{1/2}}(H) iff T sends ker A into ker A^{1/2}.
inline bool in_b_a_half(const SemiHilbertSpace& space, const CMatrix& t)
{
    detail::require_operator(space, t, "T");
    const CMatrix st = space.sqrtA() * t;
    const CMatrix leak = st - st * space.projA();
    return detail::relative_residual(leak, st) <= space.tol();
}

/// T^{#A} = A^+ T* A, the distinguished solution of A X = T* A.
inline CMatrix a_adjoint(const SemiHilbertSpace& space, const CMatrix& t)
{
    if (!in_b_a(space, t)) {
        throw Error(ErrorKind::NotInBA, "T has no A-adjoint: ran(T* A) is not inside ran(A)");
    }
    return space.pinvA() * t.adjoint() * space.A();
}

/// A T is Hermitian.
inline bool is_a_selfadjoint(const SemiHilbertSpace& space, const CMatrix& t)
{
    detail::require_operator(space, t, "T");
    const CMatrix at = space.A() * t;
    return detail::relative_residual(at - at.adjoint(), at) <= space.tol();
}

/// A T is Hermitian positive semidefinite.
inline bool is_a_positive(const SemiHilbertSpace& space, const CMatrix& t)
{
    if (!is_a_selfadjoint(space, t)) {
        return false;
    }
    const EigenDecomposition e = detail::eig_unchecked(hermitian_part(space.A() * t));
    const double top = e.eigenvalues.front();
    const double bottom = e.eigenvalues.back();
    return bottom >= -space.tol() * std::max(top, 0.0);
}

/// A^{1/2} T (A^{1/2})^+.
inline CMatrix reduced_matrix(const SemiHilbertSpace& space, const CMatrix& t)
{
    if (!in_b_a_half(space, t)) {
        throw Error(ErrorKind::NotInBAHalf, "T is not A-bounded: it moves ker A out of ker A^{1/2}");
    }
    return space.sqrtA() * t * space.pinvSqrtA();
}

enum class RadiusMethod { reduction, sample_oracle, grid_oracle };

constexpr std::string_view to_string(RadiusMethod m) noexcept
{
    switch (m) {
    case RadiusMethod::reduction: return "reduction";
    case RadiusMethod::sample_oracle: return "sample_oracle";
    case RadiusMethod::grid_oracle: return "grid_oracle";
    }
    return "unknown";
}

/// A seminorm or radius that is infinite outside B_{A^{1/2}}(H).
class RadiusResult {
public:
    static RadiusResult finite(double value, RadiusMethod method = RadiusMethod::reduction)
    {
        return RadiusResult(value, method);
    }
    static RadiusResult infinite(RadiusMethod method = RadiusMethod::reduction)
    {
        return RadiusResult(std::numeric_limits<double>::infinity(), method);
    }

    bool is_finite() const noexcept { return std::isfinite(value_); }
    double value() const noexcept { return value_; }
    RadiusMethod method() const noexcept { return method_; }

    /// Finite value or throws NotInBAHalf.
    double require_finite() const
    {
        if (!is_finite()) {
            throw Error(ErrorKind::NotInBAHalf, "quantity is infinite for this operator");
        }
        return value_;
    }

private:
    RadiusResult(double value, RadiusMethod method) : value_(value), method_(method) {}

    double value_;
    RadiusMethod method_;
};

/// ||T||_A = sup { ||Tx||_A : ||x||_A = 1 }.
inline RadiusResult a_op_norm(const SemiHilbertSpace& space, const CMatrix& t)
{
    if (!in_b_a_half(space, t)) {
        return RadiusResult::infinite();
    }
    return RadiusResult::finite(spectral_norm(space.sqrtA() * t * space.pinvSqrtA()));
}

/// w_A(T) = sup { |<Tx, x>_A| : ||x||_A = 1 }.
inline RadiusResult a_numerical_radius(const SemiHilbertSpace& space, const CMatrix& t)
{
    if (!in_b_a_half(space, t)) {
        return RadiusResult::infinite();
    }
    return RadiusResult::finite(numerical_radius(space.sqrtA() * t * space.pinvSqrtA()));
}

/// Lower bound for w_A(T) from random A-unit vectors; never uses the reduction.
inline double oracle_a_numrad_sample(const SemiHilbertSpace& space, const CMatrix& t, std::size_t samples,
                                     std::uint64_t seed)
{
    detail::require_operator(space, t, "T");
    if (space.rank() == 0) {
        throw Error(ErrorKind::DegenerateSpace, "rank(A) = 0: the A-unit sphere is empty");
    }
    if (!in_b_a_half(space, t)) {
        throw Error(ErrorKind::NotInBAHalf, "sampling oracle needs T in B_{A^{1/2}}");
    }
    Rng rng(seed);
    double best = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        CVector x = space.projA() * rng.gaussian_vector(space.dim());
        const double len = a_norm_vec(space, x);
        if (!(len > 0.0)) {
            continue;
        }
        x *= 1.0 / len;
        best = std::max(best, std::abs(a_inner(space, t * x, x)));
    }
    return best;
}

/// W^r for an A-positive W supported on ran(A), via the PSD reduced matrix.
inline CMatrix a_positive_power(const SemiHilbertSpace& space, const CMatrix& w, double r)
{
    detail::require_operator(space, w, "W");
    if (!(r >= 1.0) || !std::isfinite(r)) {
        throw Error(ErrorKind::InvalidParams, "power r must be >= 1");
    }
    if (!is_a_positive(space, w)) {
        throw Error(ErrorKind::NotAPositive, "W is not A-positive");
    }
    const CMatrix& p = space.projA();
    if (detail::relative_residual(w - w * p, w) > space.tol() ||
        detail::relative_residual(w - p * w, w) > space.tol()) {
        throw Error(ErrorKind::NotSupportedOnRange, "W leaks outside ran(A)");
    }
    if (r == 1.0) {
        return w;
    }
    const CMatrix reduced = hermitian_part(space.sqrtA() * w * space.pinvSqrtA());
    const EigenDecomposition e = detail::eig_unchecked(reduced);
    const CMatrix powered = detail::reassemble(e, [r](double l) { return l > 0.0 ? std::pow(l, r) : 0.0; });
    return space.pinvSqrtA() * powered * space.sqrtA();
}

/// An operator bound to its space with membership and A-adjoint resolved at construction.
class AOperator {
public:
    AOperator(const SemiHilbertSpace& space, CMatrix t) : space_(&space), t_(std::move(t))
    {
        detail::require_operator(space, t_, "T");
        in_ba_ = in_b_a(space, t_);
        in_ba_half_ = in_ba_ || in_b_a_half(space, t_);
        if (in_ba_) {
            adjoint_ = space.pinvA() * t_.adjoint() * space.A();
        }
    }

    const SemiHilbertSpace& space() const noexcept { return *space_; }
    const CMatrix& matrix() const noexcept { return t_; }
    bool in_BA() const noexcept { return in_ba_; }
    bool in_BA_half() const noexcept { return in_ba_half_; }

    const CMatrix& adjoint() const
    {
        if (!in_ba_) {
            throw Error(ErrorKind::NotInBA, "operator has no A-adjoint");
        }
        return adjoint_;
    }

    RadiusResult norm() const { return a_op_norm(*space_, t_); }
    RadiusResult numerical_radius() const { return a_numerical_radius(*space_, t_); }

private:
    const SemiHilbertSpace* space_;
    CMatrix t_;
    bool in_ba_ = false;
    bool in_ba_half_ = false;
    CMatrix adjoint_;
};

} // namespace semihilbert
