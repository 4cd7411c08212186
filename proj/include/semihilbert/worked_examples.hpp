#pragma once

// Published worked examples on the weight A = [[1, -1], [-1, 2]], recomputed
// and set next to the printed values.

#include "bounds.hpp"

namespace semihilbert {

struct WorkedExample {
    std::string name;
    std::vector<ClaimRow> rows;

    bool all_agree() const
    {
        return std::all_of(rows.begin(), rows.end(), [](const ClaimRow& r) { return r.agrees(); });
    }
};

inline CMatrix example_weight() { return CMatrix{{1.0, -1.0}, {-1.0, 2.0}}; }
inline CMatrix example_lower() { return CMatrix{{1.0, 0.0}, {1.0, 1.0}}; }
inline CMatrix example_upper() { return CMatrix{{1.0, 1.0}, {0.0, 1.0}}; }

/// Single operator T = [[1, 0], [1, 1]].
inline WorkedExample example_single_operator()
{
    using K = ClaimRow::Kind;
    const SemiHilbertSpace space = make_space(example_weight());
    SingleBoundContext ctx(space, example_lower());
    const CMatrix expected_adjoint{{-1.0, 4.0}, {-1.0, 3.0}};
    double adjoint_err = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            adjoint_err = std::max(adjoint_err, std::abs(ctx.adjoint()(i, j) - expected_adjoint(i, j)));
        }
    }
    const double thm31 = std::pow(ctx.evaluate(BoundId::THM31, {0.5, 1.0, 1.0, 2}).rhs(), 0.25);
    const double in6 = std::pow(ctx.evaluate(BoundId::IN6, {}).rhs(), 0.25);
    return {"single operator T = [[1,0],[1,1]]",
            {
                {"max |T# - [[-1,4],[-1,3]]|", 0.0, adjoint_err, 1e-9, K::approx},
                {"||T#T + TT#||_A", 12.385, ctx.n_sum(), 0.01, K::approx},
                {"w_A(T)", 2.0, ctx.w(), 1e-6, K::approx},
                {"w_A(T^2)", 2.3, ctx.radius_of_power(2), 0.05, K::approx},
                {"gamma1 (alpha=0.5, beta=1)", 19.0 / 8.0, gamma1(0.5, 1.0), 1e-12, K::approx},
                {"gamma2 (alpha=0.5, beta=1)", 13.0 / 8.0, gamma2(0.5, 1.0), 1e-12, K::approx},
                {"THM31 rhs^(1/4) (alpha=0.5, beta=1)", 2.31, thm31, 0.02, K::approx},
                {"IN6 rhs^(1/4)", 2.39, in6, 0.02, K::approx},
                {"w_A(T) <= THM31 rhs^(1/4)", thm31, ctx.w(), 0.0, K::at_most},
            }};
}

/// THM32 on the same operator.
inline WorkedExample example_power_refinement()
{
    using K = ClaimRow::Kind;
    const SemiHilbertSpace space = make_space(example_weight());
    SingleBoundContext ctx(space, example_lower());
    const double rhs = ctx.evaluate(BoundId::THM32, {0.5, 1.0, 1.0, 2}).rhs();
    const double quarter = 0.25 * ctx.n_sum() * ctx.n_sum();
    return {"THM32 on T = [[1,0],[1,1]]",
            {
                {"THM32 rhs (alpha=0.5, beta=1, r=1)", 34.21, rhs, 0.05, K::approx},
                {"N^2 / 4", 38.34, quarter, 0.05, K::approx},
                {"THM32 rhs^(1/4)", 2.41, std::pow(rhs, 0.25), 0.02, K::approx},
                {"delta1 (alpha=0.5, beta=1)", 0.875, delta1(0.5, 1.0), 1e-12, K::approx},
                {"delta2 (alpha=0.5, beta=1)", 0.125, delta2(0.5, 1.0), 1e-12, K::approx},
                {"THM32 rhs <= N^2 / 4", quarter, rhs, 0.0, K::at_most},
            }};
}

/// Pair T = [[1,1],[0,1]], S = [[1,0],[1,1]].
inline WorkedExample example_pair()
{
    using K = ClaimRow::Kind;
    const SemiHilbertSpace space = make_space(example_weight());
    PairBoundContext ctx(space, example_upper(), example_lower());
    const double thm41 = std::sqrt(ctx.evaluate(BoundId::THM41, {}).rhs());
    const double thm42 = std::sqrt(ctx.evaluate(BoundId::THM42, {0.5, 0.0, 1.0, 2}).rhs());
    return {"pair T = [[1,1],[0,1]], S = [[1,0],[1,1]]",
            {
                {"||T||_A", 2.618, ctx.norm_t(), 0.005, K::approx},
                {"||S||_A", 2.414, ctx.norm_s(), 0.005, K::approx},
                {"||T+S||_A^2", 10.10, ctx.norm_sum_squared(), 0.02, K::approx},
                {"||T#T + S#S||_A", 3.618, ctx.norm_m_plus_z(), 0.005, K::approx},
                {"||T#T - S#S||_A", 1.618, ctx.norm_m_minus_z(), 0.005, K::approx},
                {"w_A(S#T)", 4.405, ctx.w_cross(), 0.01, K::approx},
                {"THM41 rhs^(1/2)", 4.212, thm41, 0.01, K::approx},
                {"THM41 rhs^(1/2) < 5.032", 5.032, thm41, 0.0, K::at_most},
                {"||(T#T)^2 + (S#S)^2||_A", 17.24, ctx.k(1.0), 0.02, K::approx},
                {"THM42 rhs^(1/2) (alpha=0.5)", 4.37, thm42, 0.02, K::approx},
            }};
}

inline std::vector<WorkedExample> worked_examples()
{
    return {example_single_operator(), example_power_refinement(), example_pair()};
}

} // namespace semihilbert
