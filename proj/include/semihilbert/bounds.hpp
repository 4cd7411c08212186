/**
 * @file bounds.hpp
 * @brief Catalog of operator-level numerical radius and seminorm inequalities.
 *
 * Every bound is evaluated on the reduced matrices R(X) = A^{1/2} X (A^{1/2})^+,
 * where ||X||_A = ||R(X)||_2 and w_A(X) = w(R(X)). R is multiplicative on
 * B_{A^{1/2}}(H), so products and A-positive powers are taken after reduction.
 */

#pragma once

#include "aops.hpp"
#include "report.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string_view>

namespace semihilbert {

enum class BoundId {
    IN1_LOWER,
    IN1_UPPER,
    IN2_POWER,
    IN3,
    IN4,
    IN5_LOWER,
    IN6,
    IN7,
    IN8,
    THM31,
    THM32,
    THM_PROD_4R,
    COR_PROD,
    THM_RAHMA1,
    CF1,
    THM41,
    THM42,
    THM43,
};

inline constexpr std::array kAllBoundIds{
    BoundId::IN1_LOWER, BoundId::IN1_UPPER,   BoundId::IN2_POWER, BoundId::IN3,        BoundId::IN4,
    BoundId::IN5_LOWER, BoundId::IN6,         BoundId::IN7,       BoundId::IN8,        BoundId::THM31,
    BoundId::THM32,     BoundId::THM_PROD_4R, BoundId::COR_PROD,  BoundId::THM_RAHMA1, BoundId::CF1,
    BoundId::THM41,     BoundId::THM42,       BoundId::THM43,
};

constexpr std::string_view to_string(BoundId id) noexcept
{
    switch (id) {
    case BoundId::IN1_LOWER: return "IN1_LOWER";
    case BoundId::IN1_UPPER: return "IN1_UPPER";
    case BoundId::IN2_POWER: return "IN2_POWER";
    case BoundId::IN3: return "IN3";
    case BoundId::IN4: return "IN4";
    case BoundId::IN5_LOWER: return "IN5_LOWER";
    case BoundId::IN6: return "IN6";
    case BoundId::IN7: return "IN7";
    case BoundId::IN8: return "IN8";
    case BoundId::THM31: return "THM31";
    case BoundId::THM32: return "THM32";
    case BoundId::THM_PROD_4R: return "THM_PROD_4R";
    case BoundId::COR_PROD: return "COR_PROD";
    case BoundId::THM_RAHMA1: return "THM_RAHMA1";
    case BoundId::CF1: return "CF1";
    case BoundId::THM41: return "THM41";
    case BoundId::THM42: return "THM42";
    case BoundId::THM43: return "THM43";
    }
    return "UNKNOWN";
}

inline std::optional<BoundId> parse_bound_id(std::string_view name)
{
    for (BoundId id : kAllBoundIds) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

/// Bounds on a pair (T, S) rather than a single operator.
constexpr bool is_pair_bound(BoundId id) noexcept
{
    switch (id) {
    case BoundId::THM_PROD_4R:
    case BoundId::COR_PROD:
    case BoundId::THM_RAHMA1:
    case BoundId::CF1:
    case BoundId::THM41:
    case BoundId::THM42:
    case BoundId::THM43:
        return true;
    default:
        return false;
    }
}

constexpr ParamUse param_use(BoundId id) noexcept
{
    switch (id) {
    case BoundId::IN2_POWER: return {false, false, false, true};
    case BoundId::IN7:
    case BoundId::IN8: return {false, true, false, false};
    case BoundId::THM31: return {true, true, false, false};
    case BoundId::THM32:
    case BoundId::THM_PROD_4R:
    case BoundId::THM_RAHMA1: return {true, true, true, false};
    case BoundId::COR_PROD: return {false, false, true, false};
    case BoundId::THM42: return {true, false, false, false};
    default: return {};
    }
}

inline void validate(const BoundParams& p, ParamUse use = {true, true, true, true})
{
    if (use.alpha && !(p.alpha >= 0.0 && p.alpha <= 1.0)) {
        throw Error(ErrorKind::InvalidParams, "alpha must lie in [0, 1]");
    }
    if (use.beta && (!(p.beta >= 0.0) || !std::isfinite(p.beta))) {
        throw Error(ErrorKind::InvalidParams, "beta must be >= 0");
    }
    if (use.r && (!(p.r >= 1.0) || !std::isfinite(p.r))) {
        throw Error(ErrorKind::InvalidParams, "r must be >= 1");
    }
    if (use.n && p.n < 1) {
        throw Error(ErrorKind::InvalidParams, "n must be >= 1");
    }
}

constexpr double gamma1(double alpha, double beta)
{
    return ((2.0 * beta + 1.0) * (1.0 + alpha * alpha) + 2.0 * alpha) / (1.0 + beta);
}
constexpr double gamma2(double alpha, double beta)
{
    return (1.0 - alpha) * (2.0 + (1.0 + alpha) * (1.0 + 2.0 * beta)) / (1.0 + beta);
}
constexpr double delta1(double alpha, double beta) { return (1.0 + alpha + 2.0 * beta) / (2.0 * (1.0 + beta)); }
constexpr double delta2(double alpha, double beta) { return (1.0 - alpha) / (2.0 * (1.0 + beta)); }

/// Right side c_sq * X^2 + c_mixed * X * Y of a quartic-type bound.
struct QuarticCoefficients {
    double squared = 0.0;
    double mixed = 0.0;

    friend bool operator==(const QuarticCoefficients&, const QuarticCoefficients&) = default;
};

constexpr QuarticCoefficients thm31_coefficients(double alpha, double beta)
{
    return {gamma1(alpha, beta) / 16.0, gamma2(alpha, beta) / 8.0};
}
constexpr QuarticCoefficients thm32_coefficients(double alpha, double beta)
{
    return {delta1(alpha, beta) / 4.0, delta2(alpha, beta)};
}
constexpr QuarticCoefficients in6_coefficients() { return {3.0 / 16.0, 1.0 / 8.0}; }
constexpr QuarticCoefficients in7_coefficients(double beta)
{
    return {(1.0 + 2.0 * beta) / (16.0 * (1.0 + beta)), (2.0 * beta + 3.0) / (8.0 * (1.0 + beta))};
}
constexpr QuarticCoefficients in8_coefficients(double beta)
{
    return {(1.0 + 2.0 * beta) / (8.0 * (1.0 + beta)), 1.0 / (2.0 * (1.0 + beta))};
}
constexpr QuarticCoefficients rahma1_coefficients(double alpha, double beta)
{
    return {(1.0 + alpha + 2.0 * beta) / (8.0 * (1.0 + beta)), (1.0 - alpha) / (2.0 * (1.0 + beta))};
}

inline constexpr double kBoundTolerance = 1e-7;

using BoundReport = InequalityReport<BoundId, BoundParams>;

namespace detail {

/// Power of a reduced matrix that is PSD up to round-off.
inline CMatrix reduced_psd_power(const CMatrix& reduced, double r)
{
    if (r == 1.0) {
        return hermitian_part(reduced);
    }
    return reassemble(eig_unchecked(hermitian_part(reduced)),
                      [r](double l) { return l > 0.0 ? std::pow(l, r) : 0.0; });
}

} // namespace detail

/// Lazily cached quantities of one operator T in B_A(H).
class SingleBoundContext {
public:
    SingleBoundContext(const SemiHilbertSpace& space, CMatrix t) : space_(&space), t_(std::move(t))
    {
        adjoint_ = a_adjoint(space, t_);
        reduced_ = reduced_matrix(space, t_);
    }

    const CMatrix& matrix() const noexcept { return t_; }
    const CMatrix& adjoint() const noexcept { return adjoint_; }

    double w() { return radius_of_power(1); }
    double norm()
    {
        if (!norm_) {
            norm_ = spectral_norm(reduced_);
        }
        return *norm_;
    }
    /// w_A(T^n)
    double radius_of_power(int n)
    {
        auto it = power_radius_.find(n);
        if (it == power_radius_.end()) {
            const CMatrix reduced = reduced_matrix(*space_, matrix_power(t_, static_cast<unsigned>(n)));
            it = power_radius_.emplace(n, numerical_radius(reduced)).first;
        }
        return it->second;
    }
    /// ||(T# T)^r + (T T#)^r||_A; r = 1 gives N.
    double powered_sum_norm(double r)
    {
        auto it = powered_sum_.find(r);
        if (it == powered_sum_.end()) {
            if (!left_) {
                left_ = reduced_matrix(*space_, adjoint_ * t_);
                right_ = reduced_matrix(*space_, t_ * adjoint_);
            }
            const CMatrix sum = detail::reduced_psd_power(*left_, r) + detail::reduced_psd_power(*right_, r);
            it = powered_sum_.emplace(r, spectral_norm(sum)).first;
        }
        return it->second;
    }
    double n_sum() { return powered_sum_norm(1.0); }

    BoundReport evaluate(BoundId id, const BoundParams& p)
    {
        if (is_pair_bound(id)) {
            throw Error(ErrorKind::InvalidParams, std::string(to_string(id)) + " needs two operators");
        }
        validate(p, param_use(id));
        auto report = [&](double lhs, double rhs) { return BoundReport(id, p, lhs, rhs, kBoundTolerance); };
        auto quartic = [&](QuarticCoefficients c) {
            const double big = n_sum();
            return report(std::pow(w(), 4), c.squared * big * big + c.mixed * big * radius_of_power(2));
        };
        switch (id) {
        case BoundId::IN1_LOWER: return report(0.5 * norm(), w());
        case BoundId::IN1_UPPER: return report(w(), norm());
        case BoundId::IN2_POWER: return report(radius_of_power(p.n), std::pow(w(), p.n));
        case BoundId::IN3: return report(w() * w(), 0.5 * n_sum());
        case BoundId::IN4: return report(w() * w(), 0.5 * (norm() * norm() + radius_of_power(2)));
        case BoundId::IN5_LOWER: return report(0.25 * n_sum(), w() * w());
        case BoundId::IN6: return quartic(in6_coefficients());
        case BoundId::IN7: return quartic(in7_coefficients(p.beta));
        case BoundId::THM31: return quartic(thm31_coefficients(p.alpha, p.beta));
        case BoundId::IN8: {
            const QuarticCoefficients c = in8_coefficients(p.beta);
            const double big = n_sum();
            const double w2 = radius_of_power(2);
            return report(std::pow(w(), 4), c.squared * big * big + c.mixed * w2 * w2);
        }
        case BoundId::THM32: {
            const QuarticCoefficients c = thm32_coefficients(p.alpha, p.beta);
            const double big = powered_sum_norm(p.r);
            return report(std::pow(w(), 4.0 * p.r),
                          c.squared * big * big + c.mixed * std::pow(radius_of_power(2), 2.0 * p.r));
        }
        default: break;
        }
        throw Error(ErrorKind::InvalidParams, "unhandled bound id");
    }

private:
    const SemiHilbertSpace* space_;
    CMatrix t_;
    CMatrix adjoint_;
    CMatrix reduced_;
    std::optional<double> norm_;
    std::map<int, double> power_radius_;
    std::optional<CMatrix> left_;
    std::optional<CMatrix> right_;
    std::map<double, double> powered_sum_;
};

/// Lazily cached quantities of a pair T, S in B_A(H), with M = T# T and Z = S# S.
class PairBoundContext {
public:
    PairBoundContext(const SemiHilbertSpace& space, CMatrix t, CMatrix s)
        : space_(&space), t_(std::move(t)), s_(std::move(s))
    {
        t_adj_ = a_adjoint(space, t_);
        s_adj_ = a_adjoint(space, s_);
        m_ = hermitian_part(reduced_matrix(space, t_adj_ * t_));
        z_ = hermitian_part(reduced_matrix(space, s_adj_ * s_));
    }

    double norm_t() { return cached(norm_t_, [&] { return spectral_norm(reduced_matrix(*space_, t_)); }); }
    double norm_s() { return cached(norm_s_, [&] { return spectral_norm(reduced_matrix(*space_, s_)); }); }
    double norm_sum_squared()
    {
        return cached(norm_sum_sq_, [&] {
            const double v = spectral_norm(reduced_matrix(*space_, t_ + s_));
            return v * v;
        });
    }
    double w_sum() { return cached(w_sum_, [&] { return numerical_radius(reduced_matrix(*space_, t_ + s_)); }); }
    /// w_A(S# T)
    double w_cross() { return cached(w_cross_, [&] { return numerical_radius(reduced_matrix(*space_, s_adj_ * t_)); }); }
    /// w_A(S# S T# T)
    double w_product() { return cached(w_product_, [&] { return numerical_radius(z_ * m_); }); }
    double w_m() { return cached(w_m_, [&] { return detail::hermitian_spectral_radius(m_); }); }
    double w_z() { return cached(w_z_, [&] { return detail::hermitian_spectral_radius(z_); }); }
    double norm_m_plus_z() { return cached(norm_plus_, [&] { return spectral_norm(m_ + z_); }); }
    double norm_m_minus_z() { return cached(norm_minus_, [&] { return spectral_norm(m_ - z_); }); }
    /// ||(T# T)^{2r} + (S# S)^{2r}||_A
    double k(double r)
    {
        auto it = k_.find(r);
        if (it == k_.end()) {
            const CMatrix sum = detail::reduced_psd_power(m_, 2.0 * r) + detail::reduced_psd_power(z_, 2.0 * r);
            it = k_.emplace(r, spectral_norm(sum)).first;
        }
        return it->second;
    }

    BoundReport evaluate(BoundId id, const BoundParams& p)
    {
        if (!is_pair_bound(id)) {
            throw Error(ErrorKind::InvalidParams, std::string(to_string(id)) + " takes a single operator");
        }
        validate(p, param_use(id));
        auto report = [&](double lhs, double rhs) { return BoundReport(id, p, lhs, rhs, kBoundTolerance); };
        const double half_sum_diff = 0.5 * (norm_m_plus_z() + norm_m_minus_z());
        switch (id) {
        case BoundId::THM_PROD_4R: {
            const QuarticCoefficients c = thm31_coefficients(p.alpha, p.beta);
            const double kk = k(p.r);
            return report(std::pow(w_cross(), 4.0 * p.r),
                          c.squared * kk * kk + c.mixed * kk * std::pow(w_product(), p.r));
        }
        case BoundId::COR_PROD: return report(std::pow(w_product(), p.r), 0.5 * k(p.r));
        case BoundId::THM_RAHMA1: {
            const QuarticCoefficients c = rahma1_coefficients(p.alpha, p.beta);
            const double kk = k(p.r);
            return report(std::pow(w_cross(), 4.0 * p.r),
                          c.squared * kk * kk + c.mixed * std::pow(w_product(), 2.0 * p.r));
        }
        case BoundId::CF1: return report(w_cross() * w_cross(), 0.5 * k(1.0));
        case BoundId::THM41:
            return report(norm_sum_squared(), half_sum_diff + norm_t() * norm_s() + 2.0 * w_cross());
        case BoundId::THM42:
            return report(norm_sum_squared(), std::sqrt(k(1.0) + 2.0 * w_cross() * w_cross()) +
                                                  (p.alpha + 1.0) * norm_t() * norm_s() +
                                                  (1.0 - p.alpha) * w_cross());
        case BoundId::THM43:
            return report(w_sum() * w_sum(), half_sum_diff + std::sqrt(w_m() * w_z()) + 2.0 * w_cross());
        default: break;
        }
        throw Error(ErrorKind::InvalidParams, "unhandled bound id");
    }

private:
    template <class F>
    static double cached(std::optional<double>& slot, F&& compute)
    {
        if (!slot) {
            slot = compute();
        }
        return *slot;
    }

    const SemiHilbertSpace* space_;
    CMatrix t_;
    CMatrix s_;
    CMatrix t_adj_;
    CMatrix s_adj_;
    CMatrix m_;
    CMatrix z_;
    std::optional<double> norm_t_, norm_s_, norm_sum_sq_, w_sum_, w_cross_, w_product_, w_m_, w_z_, norm_plus_,
        norm_minus_;
    std::map<double, double> k_;
};

inline BoundReport eval_single(const SemiHilbertSpace& space, const CMatrix& t, BoundId id, const BoundParams& p)
{
    if (is_pair_bound(id)) {
        throw Error(ErrorKind::InvalidParams, std::string(to_string(id)) + " needs two operators");
    }
    validate(p, param_use(id));
    return SingleBoundContext(space, t).evaluate(id, p);
}

inline BoundReport eval_pair(const SemiHilbertSpace& space, const CMatrix& t, const CMatrix& s, BoundId id,
                             const BoundParams& p)
{
    if (!is_pair_bound(id)) {
        throw Error(ErrorKind::InvalidParams, std::string(to_string(id)) + " takes a single operator");
    }
    validate(p, param_use(id));
    detail::require_operator(space, s, "S");
    return PairBoundContext(space, t, s).evaluate(id, p);
}

struct VerifyConfig {
    std::size_t trials = 1000;
    std::size_t min_dim = 2;
    std::size_t max_dim = 6;
    std::uint64_t seed = 42;
    double singular_prob = 0.5;
    ParamGrid grid;
};

inline void validate(const VerifyConfig& c)
{
    if (c.trials < 1) {
        throw Error(ErrorKind::InvalidConfig, "trials must be >= 1");
    }
    if (c.min_dim < 1 || c.min_dim > c.max_dim) {
        throw Error(ErrorKind::InvalidConfig, "dimension range must satisfy 1 <= min <= max");
    }
    if (!(c.singular_prob >= 0.0 && c.singular_prob <= 1.0)) {
        throw Error(ErrorKind::InvalidConfig, "singular probability must lie in [0, 1]");
    }
    detail::validate_grid(c.grid);
}

/// One random instance of the bound suite: a space and two operators in B_A.
struct BoundTrial {
    SemiHilbertSpace space;
    CMatrix t;
    CMatrix s;
};

/// Trial k draws everything from Rng(seed + k), independent of other trials.
inline BoundTrial make_bound_trial(const VerifyConfig& c, std::size_t k)
{
    Rng rng(c.seed + k);
    const std::size_t dim = rng.uniform_index(c.min_dim, c.max_dim);
    const std::uint64_t space_seed = rng.next_seed();
    const std::uint64_t t_seed = rng.next_seed();
    const std::uint64_t s_seed = rng.next_seed();
    SemiHilbertSpace space = random_space(dim, space_seed, c.singular_prob);
    CMatrix t = random_operator_in_BA(space, t_seed);
    CMatrix s = random_operator_in_BA(space, s_seed);
    return {std::move(space), std::move(t), std::move(s)};
}

using BoundSink = std::function<void(std::size_t trial, const BoundReport&)>;

namespace detail {

inline void update_identities(IdentityResiduals& out, const SemiHilbertSpace& space, const CMatrix& t,
                              const CMatrix& s, const CMatrix& t_adj, const CMatrix& s_adj)
{
    const CMatrix tsa = t.adjoint() * space.A();
    out.adjoint_equation = std::max(out.adjoint_equation, relative_residual(space.A() * t_adj - tsa, tsa));

    const CMatrix product_adj = a_adjoint(space, t * s);
    const CMatrix expected = s_adj * t_adj;
    out.product_rule = std::max(out.product_rule, relative_residual(product_adj - expected, expected));

    const double n = spectral_norm(reduced_matrix(space, t));
    const double n2 = spectral_norm(reduced_matrix(space, t_adj * t));
    out.norm_square = std::max(out.norm_square, std::abs(n2 - n * n) / std::max(1.0, n * n));

    const CMatrix twice = a_adjoint(space, t_adj);
    const CMatrix ptp = space.projA() * t * space.projA();
    out.double_adjoint = std::max(out.double_adjoint, relative_residual(twice - ptp, ptp));
}

} // namespace detail

/// Runs every bound over random spaces, operators and the parameter grid.
inline VerificationSummary verify_random(const VerifyConfig& c, const BoundSink& sink = {})
{
    validate(c);
    VerificationSummary summary;
    summary.kind = "bounds";
    summary.seed = c.seed;
    summary.trials = c.trials;
    summary.min_dim = c.min_dim;
    summary.max_dim = c.max_dim;
    summary.singular_prob = c.singular_prob;
    summary.grid = c.grid;
    summary.identities = IdentityResiduals{};

    std::vector<std::vector<BoundParams>> grids;
    for (BoundId id : kAllBoundIds) {
        IdStats stats;
        stats.id = std::string(to_string(id));
        stats.use = param_use(id);
        summary.per_id.push_back(std::move(stats));
        grids.push_back(c.grid.expand(param_use(id)));
    }

    for (std::size_t k = 0; k < c.trials; ++k) {
        const BoundTrial trial = make_bound_trial(c, k);
        SingleBoundContext single(trial.space, trial.t);
        PairBoundContext pair(trial.space, trial.t, trial.s);
        const std::vector<std::pair<std::string, CMatrix>> single_ops{{"A", trial.space.A()}, {"T", trial.t}};
        const std::vector<std::pair<std::string, CMatrix>> pair_ops{
            {"A", trial.space.A()}, {"T", trial.t}, {"S", trial.s}};

        for (std::size_t i = 0; i < kAllBoundIds.size(); ++i) {
            const BoundId id = kAllBoundIds[i];
            const bool is_pair = is_pair_bound(id);
            for (const BoundParams& p : grids[i]) {
                const BoundReport report = is_pair ? pair.evaluate(id, p) : single.evaluate(id, p);
                detail::record(summary, summary.per_id[i], k, report, is_pair ? pair_ops : single_ops);
                if (sink) {
                    sink(k, report);
                }
            }
        }
        detail::update_identities(*summary.identities, trial.space, trial.t, trial.s, single.adjoint(),
                                  a_adjoint(trial.space, trial.s));
    }
    return summary;
}

} // namespace semihilbert
