#pragma once

#include "linalg.hpp"

#include <cstdint>
#include <random>

namespace semihilbert {

/// Seeded source of the Gaussian and uniform draws used by every generator.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Complex standard normal: E|z|^2 = 1.
    Complex complex_normal()
    {
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    std::size_t uniform_index(std::size_t lo, std::size_t hi)
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
    }

    std::uint64_t next_seed() { return engine_(); }

    CMatrix gaussian_matrix(std::size_t rows, std::size_t cols)
    {
        CMatrix m(rows, cols);
        for (auto& z : m.entries()) {
            z = complex_normal();
        }
        return m;
    }

    CVector gaussian_vector(std::size_t n)
    {
        CVector v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = complex_normal();
        }
        return v;
    }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

inline constexpr double kDefaultSpaceTolerance = 1e-9;

/// C^n with the semi-inner product <x, y>_A = y* A x induced by a PSD weight A.
///
/// Immutable once built. Caches A^{1/2}, A^+, (A^{1/2})^+ and the range
/// projection P_A, all taken from one eigendecomposition so that they agree
/// on which eigenvalues count as range (lambda > n * eps * lambda_max).
class SemiHilbertSpace {
public:
    std::size_t dim() const noexcept { return a_.rows(); }
    const CMatrix& A() const noexcept { return a_; }
    const CMatrix& sqrtA() const noexcept { return sqrt_a_; }
    const CMatrix& pinvA() const noexcept { return pinv_a_; }
    const CMatrix& pinvSqrtA() const noexcept { return pinv_sqrt_a_; }
    const CMatrix& projA() const noexcept { return proj_a_; }
    std::size_t rank() const noexcept { return rank_; }
    double tol() const noexcept { return tol_; }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

    friend SemiHilbertSpace make_space(const CMatrix& a, double tol);

private:
    SemiHilbertSpace() = default;

    CMatrix a_;
    CMatrix sqrt_a_;
    CMatrix pinv_a_;
    CMatrix pinv_sqrt_a_;
    CMatrix proj_a_;
    std::size_t rank_ = 0;
    double tol_ = kDefaultSpaceTolerance;
    std::vector<double> eigenvalues_;
};

inline SemiHilbertSpace make_space(const CMatrix& a, double tol = kDefaultSpaceTolerance)
{
    detail::require_square(a, "weight A");
    if (a.rows() == 0) {
        throw Error(ErrorKind::InvalidInput, "weight A must have positive dimension");
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw Error(ErrorKind::InvalidInput, "space tolerance must be positive");
    }
    const PsdFactorization f = psd_factorize(a);
    SemiHilbertSpace s;
    s.a_ = hermitian_part(a);
    s.sqrt_a_ = f.sqrt();
    s.pinv_a_ = f.pinv();
    s.pinv_sqrt_a_ = f.pinv_sqrt();
    s.proj_a_ = f.projector();
    s.rank_ = f.rank;
    s.tol_ = tol;
    s.eigenvalues_ = f.eig.eigenvalues;
    return s;
}

namespace detail {
inline void require_dim(const SemiHilbertSpace& space, std::size_t n, const char* what)
{
    if (n != space.dim()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(n) +
                                                      ", space has " + std::to_string(space.dim()));
    }
}
inline void require_operator(const SemiHilbertSpace& space, const CMatrix& t, const char* what)
{
    if (!t.is_square() || t.rows() != space.dim()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be " + std::to_string(space.dim()) +
                                                      "x" + std::to_string(space.dim()));
    }
}
} // namespace detail

/// <x, y>_A = <Ax, y> = y* A x; linear in x, conjugate-linear in y.
inline Complex a_inner(const SemiHilbertSpace& space, const CVector& x, const CVector& y)
{
    detail::require_dim(space, x.size(), "x");
    detail::require_dim(space, y.size(), "y");
    return dot(y, space.A() * x);
}

/// ||x||_A = ||A^{1/2} x||.
inline double a_norm_vec(const SemiHilbertSpace& space, const CVector& x)
{
    detail::require_dim(space, x.size(), "x");
    return norm2(space.sqrtA() * x);
}

/// A = G* G with complex Gaussian G. With probability `singular_prob` the
/// smallest ceil(dim/3) eigenvalues are zeroed before reassembly.
inline SemiHilbertSpace random_space(std::size_t dim, std::uint64_t seed, double singular_prob)
{
    if (dim == 0) {
        throw Error(ErrorKind::InvalidInput, "random_space needs dim >= 1");
    }
    Rng rng(seed);
    const CMatrix g = rng.gaussian_matrix(dim, dim);
    CMatrix a = hermitian_part(g.adjoint() * g);
    if (rng.uniform() < singular_prob) {
        EigenDecomposition e = herm_eig(a);
        const std::size_t drop = (dim + 2) / 3;
        for (std::size_t k = dim - drop; k < dim; ++k) {
            e.eigenvalues[k] = 0.0;
        }
        a = hermitian_part(detail::reassemble(e, [](double l) { return l; }));
    }
    return make_space(a);
}

/// Projects G onto the operators with T(ker A) in ker A, i.e. ran(T* A) in ran(A):
/// T = P G P + (I - P) G (I - P) + (I - P) G P.
inline CMatrix operator_in_BA_from(const SemiHilbertSpace& space, const CMatrix& g)
{
    detail::require_operator(space, g, "G");
    if (space.rank() == space.dim()) {
        return g;
    }
    const CMatrix& p = space.projA();
    const CMatrix q = CMatrix::identity(space.dim()) - p;
    return p * g * p + q * g * q + q * g * p;
}

inline CMatrix random_operator_in_BA(const SemiHilbertSpace& space, std::uint64_t seed)
{
    Rng rng(seed);
    return operator_in_BA_from(space, rng.gaussian_matrix(space.dim(), space.dim()));
}

} // namespace semihilbert
