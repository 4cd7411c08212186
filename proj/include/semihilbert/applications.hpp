/**
 * @file applications.hpp
 * @brief Finite models: a discretized Sturm-Liouville operator, a linearized
 *        reaction-diffusion operator, a truncated Fock space and a thermal
 *        two-spin system.
 */

#pragma once

#include "bounds.hpp"

namespace semihilbert {

// ---------------------------------------------------------------- Sturm-Liouville

/// -(p u')' + q u on (0, 1) with Dirichlet ends and weight w, on N interior
/// points x_j = j h, h = 1/(N+1). p is sampled at the half points
/// x_{j-1/2}, j = 1..N+1; q and w at the interior points.
struct SturmConfig {
    std::size_t n = 1;
    std::vector<double> p;
    std::vector<double> q;
    std::vector<double> w;

    /// p = 1, q = 0, w = 1.
    static SturmConfig constant(std::size_t n)
    {
        return {n, std::vector<double>(n + 1, 1.0), std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
    }

    double h() const noexcept { return 1.0 / static_cast<double>(n + 1); }

    bool is_constant() const
    {
        auto all = [](const std::vector<double>& v, double x) {
            return std::all_of(v.begin(), v.end(), [x](double y) { return y == x; });
        };
        return all(p, 1.0) && all(q, 0.0) && all(w, 1.0);
    }
};

inline void validate(const SturmConfig& c)
{
    auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
    if (c.n < 1) {
        bad("Sturm grid needs N >= 1");
    }
    if (c.p.size() != c.n + 1 || c.q.size() != c.n || c.w.size() != c.n) {
        bad("Sturm samples need |p| = N + 1 and |q| = |w| = N");
    }
    for (double x : c.p) {
        if (!(x > 0.0) || !std::isfinite(x)) bad("p must be positive and finite");
    }
    for (double x : c.w) {
        if (!(x > 0.0) || !std::isfinite(x)) bad("w must be positive and finite");
    }
    for (double x : c.q) {
        if (!std::isfinite(x)) bad("q must be finite");
    }
}

struct SturmMatrices {
    CMatrix t;
    CMatrix a;
};

/// Conservative three-point scheme:
/// T_h = h^-2 tridiag(-p_{j-1/2}, p_{j-1/2} + p_{j+1/2}, -p_{j+1/2}) + diag(q), A_h = diag(w).
inline SturmMatrices sturm_matrices(const SturmConfig& c)
{
    validate(c);
    const std::size_t n = c.n;
    const double inv_h2 = 1.0 / (c.h() * c.h());
    CMatrix t(n, n);
    CMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        t(j, j) = inv_h2 * (c.p[j] + c.p[j + 1]) + c.q[j];
        if (j + 1 < n) {
            t(j, j + 1) = -inv_h2 * c.p[j + 1];
            t(j + 1, j) = -inv_h2 * c.p[j + 1];
        }
        a(j, j) = c.w[j];
    }
    return {std::move(t), std::move(a)};
}

/// 2 h^-2 (1 - cos(pi h)): the closed form as published for the constant case.
/// This is the smallest eigenvalue of the discrete Laplacian.
inline double sturm_exact_radius(std::size_t n)
{
    const double h = 1.0 / static_cast<double>(n + 1);
    return 2.0 / (h * h) * (1.0 - std::cos(std::numbers::pi * h));
}

/// 2 h^-2 (1 + cos(pi h)) = 2 h^-2 (1 - cos(N pi h)), the largest eigenvalue
/// and hence the numerical radius of the constant-coefficient T_h.
inline double sturm_largest_eigenvalue(std::size_t n)
{
    const double h = 1.0 / static_cast<double>(n + 1);
    return 2.0 / (h * h) * (1.0 + std::cos(std::numbers::pi * h));
}

struct SturmReport {
    std::size_t n = 0;
    double h = 0.0;
    bool constant = false;
    double computed = 0.0;        ///< w_A(T_h)
    double spectral_radius = 0.0; ///< of A^{1/2} T_h A^{-1/2}
    std::optional<double> exact;  ///< closed form, constant case only
    std::optional<double> largest_eigenvalue;
    BoundReport thm31;
    BoundReport in6;

    std::optional<double> rel_err() const
    {
        if (!exact) {
            return std::nullopt;
        }
        return std::abs(computed - *exact) / std::abs(*exact);
    }
    std::optional<double> rel_err_largest() const
    {
        if (!largest_eigenvalue) {
            return std::nullopt;
        }
        return std::abs(computed - *largest_eigenvalue) / std::abs(*largest_eigenvalue);
    }
};

inline SturmReport sturm_report(const SturmConfig& c)
{
    const SturmMatrices m = sturm_matrices(c);
    const SemiHilbertSpace space = make_space(m.a);
    SingleBoundContext ctx(space, m.t);
    const CMatrix reduced = hermitian_part(reduced_matrix(space, m.t));
    SturmReport r{c.n,
                  c.h(),
                  c.is_constant(),
                  ctx.w(),
                  detail::hermitian_spectral_radius(reduced),
                  std::nullopt,
                  std::nullopt,
                  ctx.evaluate(BoundId::THM31, {0.5, 1.0, 1.0, 2}),
                  ctx.evaluate(BoundId::IN6, {})};
    if (r.constant) {
        r.exact = sturm_exact_radius(c.n);
        r.largest_eigenvalue = sturm_largest_eigenvalue(c.n);
    }
    return r;
}

// ---------------------------------------------------------------- reaction-diffusion

struct ReactionDiffusionReport {
    std::size_t n = 0;
    double w_t = 0.0;         ///< w_A(Delta_h + diag(f'))
    double w_laplacian = 0.0; ///< w_A(Delta_h)
    double sup_fprime = 0.0;
    double rhs() const noexcept { return w_laplacian + sup_fprime; }
    double slack() const noexcept { return rhs() - w_t; }
    bool holds() const noexcept { return slack() >= -kBoundTolerance * std::max({1.0, w_t, rhs()}); }
};

/// Delta_h = h^-2 tridiag(1, -2, 1) on N interior points, h = 1/(N+1).
inline CMatrix discrete_laplacian(std::size_t n)
{
    const double h = 1.0 / static_cast<double>(n + 1);
    const double inv_h2 = 1.0 / (h * h);
    CMatrix d(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        d(j, j) = -2.0 * inv_h2;
        if (j + 1 < n) {
            d(j, j + 1) = inv_h2;
            d(j + 1, j) = inv_h2;
        }
    }
    return d;
}

/// Checks w_A(Delta_h + diag(f')) <= w_A(Delta_h) + max |f'| with A = diag(exp(-V)).
inline ReactionDiffusionReport reaction_diffusion_check(std::size_t n, std::span<const double> v,
                                                        std::span<const double> fprime)
{
    if (n < 1 || v.size() != n || fprime.size() != n) {
        throw Error(ErrorKind::InvalidConfig, "reaction-diffusion samples must have length N >= 1");
    }
    std::vector<double> weight(n);
    double sup = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(v[j]) || !std::isfinite(fprime[j])) {
            throw Error(ErrorKind::InvalidConfig, "reaction-diffusion samples must be finite");
        }
        weight[j] = std::exp(-v[j]);
        sup = std::max(sup, std::abs(fprime[j]));
    }
    const SemiHilbertSpace space = make_space(CMatrix::diagonal(std::span<const double>(weight)));
    const CMatrix lap = discrete_laplacian(n);
    const CMatrix t = lap + CMatrix::diagonal(fprime);
    return {n, a_numerical_radius(space, t).require_finite(), a_numerical_radius(space, lap).require_finite(), sup};
}

// ---------------------------------------------------------------- Fock space

struct FockOperators {
    CMatrix a;
    CMatrix adag;
    CMatrix number;
};

/// Ladder operators on span{|0>, ..., |nmax>}: a|n> = sqrt(n)|n-1>.
inline FockOperators fock_operators(std::size_t nmax)
{
    if (nmax < 2) {
        throw Error(ErrorKind::InvalidConfig, "Fock truncation needs nmax >= 2");
    }
    const std::size_t d = nmax + 1;
    CMatrix a(d, d);
    for (std::size_t k = 1; k < d; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    CMatrix adag = a.adjoint();
    CMatrix number = adag * a;
    return {std::move(a), std::move(adag), std::move(number)};
}

inline constexpr double kFockClaimedPairing = 2.0;

struct FockReport {
    std::size_t nmax = 0;
    bool in_b_a = false;
    bool in_b_a_half = false;
    RadiusResult w = RadiusResult::infinite();
    double pairing = 0.0;           ///< <N (a + a^dag)|1>, |1>>
    double commutator_defect = 0.0; ///< ([a, a^dag])_{nmax, nmax}
    ClaimRow pairing_claim;
};

/// A = N (singular: |0> spans ker N), T = a + a^dag.
inline FockReport fock_report(std::size_t nmax)
{
    const FockOperators ops = fock_operators(nmax);
    const SemiHilbertSpace space = make_space(ops.number);
    const CMatrix t = ops.a + ops.adag;
    const CVector one = CVector::basis(nmax + 1, 1);
    const double pairing = a_inner(space, t * one, one).real();
    const CMatrix comm = ops.a * ops.adag - ops.adag * ops.a;
    return {nmax,
            in_b_a(space, t),
            in_b_a_half(space, t),
            a_numerical_radius(space, t),
            pairing,
            comm(nmax, nmax).real(),
            ClaimRow{"<N(a+a^dag)|1>,|1>>", kFockClaimedPairing, pairing, 1e-9}};
}

// ---------------------------------------------------------------- two spins

inline CMatrix pauli_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline CMatrix pauli_y() { return CMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
inline CMatrix pauli_z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

struct SpinConfig {
    double j = 1.0;
    double b = 0.0;
    double beta = 0.0;
};

/// H = J (sx (x) sx + sy (x) sy) + B (sz (x) I + I (x) sz).
inline CMatrix spin_hamiltonian(const SpinConfig& c)
{
    if (!std::isfinite(c.j) || !std::isfinite(c.b)) {
        throw Error(ErrorKind::InvalidConfig, "spin couplings must be finite");
    }
    const CMatrix id = CMatrix::identity(2);
    return c.j * (kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y())) +
           c.b * (kron(pauli_z(), id) + kron(id, pauli_z()));
}

/// exp(-beta H) / tr exp(-beta H); beta = 0 gives I/n exactly.
inline CMatrix thermal_state(const CMatrix& h, double beta)
{
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw Error(ErrorKind::InvalidConfig, "inverse temperature must be >= 0");
    }
    const std::size_t n = h.rows();
    const EigenDecomposition e = herm_eig(h);
    if (beta == 0.0) {
        return (1.0 / static_cast<double>(n)) * CMatrix::identity(n);
    }
    // Shift by lambda_min so the largest weight is exactly 1.
    const double lmin = e.eigenvalues.back();
    double z = 0.0;
    for (double l : e.eigenvalues) {
        z += std::exp(-beta * (l - lmin));
    }
    return hermitian_part(detail::reassemble(e, [&](double l) { return std::exp(-beta * (l - lmin)) / z; }));
}

/// Published values for J = 1, B = 0, beta -> 0.
struct SpinClaims {
    static constexpr double n_sum = 0.5;
    static constexpr double w_square = 0.25;
    static constexpr double thm31_rhs = 0.0288;
    static constexpr double w_upper = 0.41;
    static constexpr double norm = 0.5;
};

struct SpinReport {
    SpinConfig config;
    CMatrix rho;
    bool in_b_a = false;
    RadiusResult w = RadiusResult::infinite(); ///< w_rho(S)
    RadiusResult norm = RadiusResult::infinite();
    std::optional<double> n_sum;    ///< ||S# S + S S#||_rho
    std::optional<double> w_square; ///< w_rho(S^2)
    std::optional<BoundReport> thm31;
    std::vector<ClaimRow> claims;
};

/// A = rho, S = sx (x) I, THM31 at alpha = 0.5, beta = 1.
inline SpinReport spin_report(const SpinConfig& c)
{
    SpinReport r;
    r.config = c;
    r.rho = thermal_state(spin_hamiltonian(c), c.beta);
    const SemiHilbertSpace space = make_space(r.rho);
    const CMatrix s = kron(pauli_x(), CMatrix::identity(2));
    r.in_b_a = in_b_a(space, s);
    r.w = a_numerical_radius(space, s);
    r.norm = a_op_norm(space, s);
    if (!r.in_b_a) {
        return r;
    }
    SingleBoundContext ctx(space, s);
    r.n_sum = ctx.n_sum();
    r.w_square = ctx.radius_of_power(2);
    r.thm31 = ctx.evaluate(BoundId::THM31, {0.5, 1.0, 1.0, 2});
    const double rhs = r.thm31->rhs();
    using K = ClaimRow::Kind;
    r.claims = {
        {"||S#S+SS#||_rho", SpinClaims::n_sum, *r.n_sum, 5e-3, K::approx},
        {"w_rho(S^2)", SpinClaims::w_square, *r.w_square, 5e-3, K::approx},
        {"THM31 rhs", SpinClaims::thm31_rhs, rhs, 5e-4, K::approx},
        {"THM31 rhs^(1/4)", SpinClaims::w_upper, std::pow(rhs, 0.25), 5e-3, K::approx},
        {"w_rho(S) <= claimed bound", SpinClaims::w_upper, r.w.value(), 5e-3, K::at_most},
        {"||S||_rho", SpinClaims::norm, r.norm.value(), 5e-3, K::approx},
    };
    return r;
}

} // namespace semihilbert
