/**
 * @file linalg.hpp
 * @brief Dense complex linear algebra kernel.
 *
 * Everything here works on small dense matrices (dimension up to a few
 * hundred). The Hermitian eigensolver is a cyclic complex Jacobi method;
 * the PSD square root, Moore-Penrose pseudoinverse and range projection
 * are all derived from one eigendecomposition. The classical numerical
 * radius uses an angular sweep of the Hermitian pencil
 * cos(t) Re(M) + sin(t) Im(M).
 */

#pragma once

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace semihilbert {

using Complex = std::complex<double>;

/// Dense row-major complex matrix with value semantics.
class CMatrix {
public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_) {
            throw Error(ErrorKind::InvalidInput,
                        "matrix entry count " + std::to_string(data_.size()) + " does not match " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
        }
        if (!all_finite()) {
            throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
        }
    }

    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
        if (!all_finite()) {
            throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
        }
    }

    static CMatrix identity(std::size_t n)
    {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static CMatrix diagonal(std::span<const double> values)
    {
        CMatrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            m(i, i) = values[i];
        }
        return m;
    }

    static CMatrix diagonal(std::initializer_list<double> values)
    {
        return diagonal(std::span<const double>(values.begin(), values.size()));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    bool all_finite() const noexcept
    {
        return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    CMatrix adjoint() const
    {
        CMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = std::conj((*this)(i, j));
            }
        }
        return out;
    }

    CMatrix transpose() const
    {
        CMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    CMatrix& operator+=(const CMatrix& other)
    {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += other.data_[k];
        }
        return *this;
    }

    CMatrix& operator-=(const CMatrix& other)
    {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] -= other.data_[k];
        }
        return *this;
    }

    CMatrix& operator*=(Complex s) noexcept
    {
        for (auto& z : data_) {
            z *= s;
        }
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator-(CMatrix a) { return a *= -1.0; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b)
    {
        if (a.cols_ != b.rows_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        }
        CMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) {
                    continue;
                }
                const Complex* brow = &b.data_[k * b.cols_];
                Complex* orow = &out.data_[i * out.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    orow[j] += aik * brow[j];
                }
            }
        }
        return out;
    }

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    void require_same_shape(const CMatrix& other) const
    {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Dense complex column vector.
class CVector {
public:
    CVector() = default;
    explicit CVector(std::size_t n) : data_(n) {}
    explicit CVector(std::vector<Complex> entries) : data_(std::move(entries))
    {
        for (const auto& z : data_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorKind::InvalidInput, "vector entries must be finite");
            }
        }
    }
    CVector(std::initializer_list<Complex> entries) : CVector(std::vector<Complex>(entries)) {}

    static CVector basis(std::size_t n, std::size_t k)
    {
        CVector v(n);
        v[k] = 1.0;
        return v;
    }

    std::size_t size() const noexcept { return data_.size(); }
    Complex& operator[](std::size_t i) noexcept { return data_[i]; }
    const Complex& operator[](std::size_t i) const noexcept { return data_[i]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    CVector& operator*=(Complex s) noexcept
    {
        for (auto& z : data_) {
            z *= s;
        }
        return *this;
    }
    friend CVector operator*(Complex s, CVector v) { return v *= s; }

    friend CVector operator+(CVector a, const CVector& b)
    {
        if (a.size() != b.size()) {
            throw Error(ErrorKind::DimensionMismatch, "vector sizes differ");
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] += b[i];
        }
        return a;
    }

    friend CVector operator*(const CMatrix& m, const CVector& x)
    {
        if (m.cols() != x.size()) {
            throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
        }
        CVector out(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Complex acc{};
            for (std::size_t j = 0; j < m.cols(); ++j) {
                acc += m(i, j) * x[j];
            }
            out[i] = acc;
        }
        return out;
    }

private:
    std::vector<Complex> data_;
};

/// y* x, conjugate-linear in y.
inline Complex dot(const CVector& y, const CVector& x)
{
    if (x.size() != y.size()) {
        throw Error(ErrorKind::DimensionMismatch, "vector sizes differ");
    }
    Complex acc{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(y[i]) * x[i];
    }
    return acc;
}

inline double norm2(const CVector& x) { return std::sqrt(std::max(0.0, dot(x, x).real())); }

inline double frobenius_norm(const CMatrix& m)
{
    double s = 0.0;
    for (const auto& z : m.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

inline CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

inline CMatrix kron(const CMatrix& a, const CMatrix& b)
{
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline Complex trace(const CMatrix& m)
{
    Complex t{};
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        t += m(i, i);
    }
    return t;
}

/// Eigenvalues in descending order; eigenvector k is column k.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;
};

namespace detail {

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelativeOffDiagonal = 1e-14;

/// Cyclic complex Jacobi on a Hermitian matrix stored row-major in `a`.
/// On exit the diagonal holds the eigenvalues; `v`, when given, holds the
/// accumulated unitary (columns are eigenvectors).
/// Stops once the off-diagonal Frobenius mass is below `relative_off` times the total.
inline void jacobi_diagonalize(std::vector<Complex>& a, std::size_t n, std::vector<Complex>* v,
                               double relative_off = kJacobiRelativeOffDiagonal)
{
    double total = 0.0;
    for (const auto& z : a) {
        total += std::norm(z);
    }
    const double threshold = relative_off * relative_off * total;

    for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    off += std::norm(a[i * n + j]);
                }
            }
        }
        if (off <= threshold) {
            return;
        }
        if (sweep == kJacobiMaxSweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double mag = std::sqrt(std::norm(apq));
                if (mag == 0.0) {
                    continue;
                }
                const Complex phase = apq / mag;
                const Complex phase_conj = std::conj(phase);
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double theta = (aqq - app) / (2.0 * mag);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- A J with J_pp = c, J_pq = s, J_qp = -s e^{-i phi}, J_qq = c e^{-i phi}
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a[k * n + p];
                    const Complex akq = phase_conj * a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                // A <- J* A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a[p * n + k];
                    const Complex aqk = phase * a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                a[p * n + p] = a[p * n + p].real();
                a[q * n + q] = a[q * n + q].real();

                if (v != nullptr) {
                    auto& vv = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = vv[k * n + p];
                        const Complex vkq = phase_conj * vv[k * n + q];
                        vv[k * n + p] = c * vkp - s * vkq;
                        vv[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    throw Error(ErrorKind::NoConvergence,
                "Jacobi eigensolver exceeded " + std::to_string(kJacobiMaxSweeps) + " sweeps");
}

/// Unsorted eigenvalues of a matrix assumed Hermitian; `work` is scratch.
inline void hermitian_eigenvalues_into(const CMatrix& m, std::vector<Complex>& work, std::vector<double>& out,
                                       double relative_off = kJacobiRelativeOffDiagonal)
{
    const std::size_t n = m.rows();
    work.assign(m.entries().begin(), m.entries().end());
    jacobi_diagonalize(work, n, nullptr, relative_off);
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = work[i * n + i].real();
    }
}

/// Spectral norm of a Hermitian matrix without validation.
inline double hermitian_spectral_radius(const CMatrix& h)
{
    if (h.rows() == 0) {
        return 0.0;
    }
    std::vector<Complex> work;
    std::vector<double> values;
    hermitian_eigenvalues_into(h, work, values);
    double r = 0.0;
    for (double x : values) {
        r = std::max(r, std::abs(x));
    }
    return r;
}

inline EigenDecomposition eig_unchecked(const CMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<Complex> a(m.entries().begin(), m.entries().end());
    std::vector<Complex> v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i * n + i] = 1.0;
    }
    jacobi_diagonalize(a, n, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i * n + i].real() > a[j * n + j].real();
    });

    EigenDecomposition out{std::vector<double>(n), CMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a[order[k] * n + order[k]].real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v[i * n + order[k]];
        }
    }
    return out;
}

inline void require_square(const CMatrix& m, const char* what)
{
    if (!m.is_square()) {
        throw Error(ErrorKind::NotSquare, std::string(what) + " must be square, got " +
                                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

/// V diag(f(lambda)) V*.
template <class F>
CMatrix reassemble(const EigenDecomposition& e, F&& f)
{
    const std::size_t n = e.eigenvalues.size();
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(e.eigenvalues[k]);
        if (fk == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = fk * e.eigenvectors(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vik * std::conj(e.eigenvectors(j, k));
            }
        }
    }
    return out;
}

} // namespace detail

/// Largest singular value, sqrt(lambda_max(M* M)).
inline double spectral_norm(const CMatrix& m)
{
    if (!m.all_finite()) {
        throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
    }
    if (m.empty()) {
        return 0.0;
    }
    // The smaller Gram matrix has the same nonzero spectrum.
    const CMatrix gram = m.rows() < m.cols() ? hermitian_part(m * m.adjoint()) : hermitian_part(m.adjoint() * m);
    return std::sqrt(detail::hermitian_spectral_radius(gram));
}

/// ||M - M*||_2 <= rtol * max(1, ||M||_2).
inline bool is_hermitian(const CMatrix& m, double rtol = 1e-10)
{
    if (!m.is_square()) {
        return false;
    }
    const CMatrix skew = m - m.adjoint();
    const double skew_f = frobenius_norm(skew);
    const double n = static_cast<double>(std::max<std::size_t>(m.rows(), 1));
    // Frobenius bounds the spectral norm from both sides; settle the easy cases cheaply.
    if (skew_f <= rtol * std::max(1.0, frobenius_norm(m) / std::sqrt(n))) {
        return true;
    }
    const double skew_2 = detail::hermitian_spectral_radius(Complex(0.0, 1.0) * skew);
    return skew_2 <= rtol * std::max(1.0, spectral_norm(m));
}

inline EigenDecomposition herm_eig(const CMatrix& m)
{
    detail::require_square(m, "herm_eig input");
    if (!m.all_finite()) {
        throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
    }
    if (!is_hermitian(m)) {
        throw Error(ErrorKind::NotHermitian, "herm_eig input is not Hermitian");
    }
    return detail::eig_unchecked(hermitian_part(m));
}

/// Clamping window for round-off PSD violations, relative to lambda_max.
inline constexpr double kPsdClampTolerance = 1e-10;

/// One eigendecomposition of a PSD matrix and everything derived from it.
struct PsdFactorization {
    EigenDecomposition eig;
    double lambda_max = 0.0;
    double rank_tol = 0.0;
    std::size_t rank = 0;

    bool in_range(double lambda) const noexcept { return lambda > rank_tol; }

    CMatrix sqrt() const
    {
        return detail::reassemble(eig, [&](double l) { return in_range(l) ? std::sqrt(l) : 0.0; });
    }
    CMatrix pinv() const
    {
        return detail::reassemble(eig, [&](double l) { return in_range(l) ? 1.0 / l : 0.0; });
    }
    CMatrix pinv_sqrt() const
    {
        return detail::reassemble(eig, [&](double l) { return in_range(l) ? 1.0 / std::sqrt(l) : 0.0; });
    }
    CMatrix projector() const
    {
        return detail::reassemble(eig, [&](double l) { return in_range(l) ? 1.0 : 0.0; });
    }
};

inline PsdFactorization psd_factorize(const CMatrix& a)
{
    PsdFactorization f;
    f.eig = herm_eig(a);
    const std::size_t n = a.rows();
    f.lambda_max = n == 0 ? 0.0 : f.eig.eigenvalues.front();
    if (n > 0 && f.eig.eigenvalues.back() < -kPsdClampTolerance * std::max(f.lambda_max, 0.0)) {
        throw Error(ErrorKind::NotPSD, "eigenvalue " + std::to_string(f.eig.eigenvalues.back()) +
                                           " below clamping window");
    }
    f.rank_tol = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * std::max(f.lambda_max, 0.0);
    f.rank = static_cast<std::size_t>(
        std::count_if(f.eig.eigenvalues.begin(), f.eig.eigenvalues.end(), [&](double l) { return f.in_range(l); }));
    return f;
}

/// Eigenvalues at or below the rank tolerance (including clamped negatives) map to zero.
inline CMatrix psd_sqrt(const CMatrix& a) { return psd_factorize(a).sqrt(); }
inline CMatrix pinv_psd(const CMatrix& a) { return psd_factorize(a).pinv(); }
inline CMatrix proj_range(const CMatrix& a) { return psd_factorize(a).projector(); }

/// f(M) for Hermitian M through its eigendecomposition.
template <class F>
CMatrix hermitian_function(const CMatrix& m, F&& f)
{
    return detail::reassemble(herm_eig(m), std::forward<F>(f));
}

inline constexpr std::size_t kRadiusGridPoints = 720;
inline constexpr double kRadiusAngularWidth = 1e-12;
// Grid-scan eigenvalues only pick the cell: by Weyl they are off by at most 1e-8 ||M||,
// far below the ~(pi/720)^2/8 spread between neighbouring cells.
inline constexpr double kRadiusScanOffDiagonal = 1e-8;

/// Classical numerical radius max_{|x|=1} |x* M x|.
///
/// The maximum of the spectral radius of cos(t) Re M + sin(t) Im M over
/// t in [0, pi) is located on a 720-point grid and then polished by
/// golden-section search inside the best grid cell. Hermitian input skips
/// the sweep: w(M) is then the largest eigenvalue modulus.
inline double numerical_radius(const CMatrix& m)
{
    detail::require_square(m, "numerical_radius input");
    if (!m.all_finite()) {
        throw Error(ErrorKind::InvalidInput, "matrix entries must be finite");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 0.0;
    }
    if (n == 1) {
        return std::abs(m(0, 0));
    }
    const CMatrix skew = m - m.adjoint();
    const CMatrix re = hermitian_part(m);
    if (frobenius_norm(skew) <= 64.0 * std::numeric_limits<double>::epsilon() * frobenius_norm(m)) {
        return detail::hermitian_spectral_radius(re);
    }
    const CMatrix im = Complex(0.0, 0.5) * skew;

    CMatrix pencil(n, n);
    std::vector<Complex> work;
    std::vector<double> values;
    auto spectral_radius_at = [&](double t, double relative_off = detail::kJacobiRelativeOffDiagonal) {
        const double c = std::cos(t);
        const double s = std::sin(t);
        auto out = pencil.entries();
        auto r = re.entries();
        auto i = im.entries();
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = c * r[k] + s * i[k];
        }
        detail::hermitian_eigenvalues_into(pencil, work, values, relative_off);
        double best = 0.0;
        for (double x : values) {
            best = std::max(best, std::abs(x));
        }
        return best;
    };

    const double step = std::numbers::pi / static_cast<double>(kRadiusGridPoints);
    double scan_best = -1.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < kRadiusGridPoints; ++k) {
        const double value = spectral_radius_at(step * static_cast<double>(k), kRadiusScanOffDiagonal);
        if (value > scan_best) {
            scan_best = value;
            best_k = k;
        }
    }
    double best = spectral_radius_at(step * static_cast<double>(best_k));

    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = step * static_cast<double>(best_k) - step;
    double hi = step * static_cast<double>(best_k) + step;
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = spectral_radius_at(x1);
    double f2 = spectral_radius_at(x2);
    while (hi - lo > kRadiusAngularWidth) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = spectral_radius_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = spectral_radius_at(x1);
        }
        best = std::max({best, f1, f2});
    }
    return best;
}

/// M^k for k >= 0.
inline CMatrix matrix_power(const CMatrix& m, unsigned k)
{
    detail::require_square(m, "matrix_power input");
    CMatrix result = CMatrix::identity(m.rows());
    CMatrix base = m;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

} // namespace semihilbert
