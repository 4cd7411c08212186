#include "test_support.hpp"

#include "semihilbert/bounds.hpp"

#include <catch_amalgamated.hpp>

using namespace semihilbert;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const CMatrix kWeight{{1.0, -1.0}, {-1.0, 2.0}};
const CMatrix kLower{{1.0, 0.0}, {1.0, 1.0}};
const CMatrix kUpper{{1.0, 1.0}, {0.0, 1.0}};

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidInput;
}

} // namespace

TEST_CASE("bound id names round-trip")
{
    for (BoundId id : kAllBoundIds) {
        const auto parsed = parse_bound_id(to_string(id));
        REQUIRE(parsed);
        CHECK(*parsed == id);
    }
    CHECK_FALSE(parse_bound_id("THM99"));
    CHECK(is_pair_bound(BoundId::THM41));
    CHECK_FALSE(is_pair_bound(BoundId::THM31));
}

TEST_CASE("coefficient closed forms")
{
    // gamma1 + gamma2 = 4 and delta1 + delta2 = 1 for every alpha, beta.
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (double b : {0.0, 0.5, 1.0, 10.0, 1e6}) {
            CHECK_THAT(gamma1(a, b) + gamma2(a, b), WithinAbs(4.0, 1e-12));
            CHECK_THAT(delta1(a, b) + delta2(a, b), WithinAbs(1.0, 1e-12));
        }
        CHECK(gamma2(1.0, a) == 0.0);
        CHECK(delta2(1.0, a) == 0.0);
    }
    CHECK(gamma1(0.5, 1.0) == 19.0 / 8.0);
    CHECK(gamma2(0.5, 1.0) == 13.0 / 8.0);
    CHECK(delta1(0.5, 1.0) == 7.0 / 8.0);
    CHECK(delta2(0.5, 1.0) == 1.0 / 8.0);
}

TEST_CASE("specializations are exact coefficient equalities")
{
    for (double b : {0.0, 0.5, 1.0, 10.0}) {
        CHECK(thm31_coefficients(0.0, b) == in7_coefficients(b));
        CHECK(thm32_coefficients(0.0, b) == in8_coefficients(b));
    }
    CHECK(thm31_coefficients(0.0, 0.0) == (QuarticCoefficients{1.0 / 16.0, 3.0 / 8.0}));
    CHECK(thm32_coefficients(0.0, 0.0) == (QuarticCoefficients{1.0 / 8.0, 1.0 / 2.0}));
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        CHECK(rahma1_coefficients(a, 1.0) == thm32_coefficients(a, 1.0));
    }
}

TEST_CASE("single-operator worked values")
{
    const SemiHilbertSpace s = make_space(kWeight);
    SingleBoundContext ctx(s, kLower);
    // T#T + TT# reduces to a matrix with norm 10, and w_A(T^2) = w_A([[1,0],[2,1]]) = 3.
    CHECK_THAT(ctx.n_sum(), WithinAbs(10.0, 1e-9));
    CHECK_THAT(ctx.w(), WithinAbs(2.0, 1e-9));
    CHECK_THAT(ctx.radius_of_power(2), WithinAbs(3.0, 1e-9));
    CHECK_THAT(ctx.norm(), WithinAbs(1.0 + std::sqrt(2.0), 1e-9));

    const BoundParams p{0.5, 1.0, 1.0, 2};
    // 19/128 * 100 + 13/64 * 10 * 3
    CHECK_THAT(ctx.evaluate(BoundId::THM31, p).rhs(), WithinAbs(20.9375, 1e-8));
    CHECK_THAT(ctx.evaluate(BoundId::IN6, p).rhs(), WithinAbs(22.5, 1e-8));
    // 7/32 * 100 + 1/8 * 9
    CHECK_THAT(ctx.evaluate(BoundId::THM32, p).rhs(), WithinAbs(23.0, 1e-8));
    CHECK_THAT(ctx.evaluate(BoundId::THM31, p).lhs(), WithinAbs(16.0, 1e-8));
    for (BoundId id : kAllBoundIds) {
        if (!is_pair_bound(id)) {
            CHECK(ctx.evaluate(id, p).holds());
        }
    }
    // w_A(T) <= rhs^(1/4)
    CHECK(ctx.w() <= std::pow(ctx.evaluate(BoundId::THM31, p).rhs(), 0.25));
    CHECK(eval_single(s, kLower, BoundId::IN5_LOWER, {}).holds());
}

TEST_CASE("pair worked values")
{
    const SemiHilbertSpace s = make_space(kWeight);
    PairBoundContext ctx(s, kUpper, kLower);
    CHECK_THAT(ctx.norm_t(), WithinAbs((1.0 + std::sqrt(5.0)) / 2.0, 1e-9));
    CHECK_THAT(ctx.norm_s(), WithinAbs(1.0 + std::sqrt(2.0), 1e-9));
    // w_A(S#T) = 2/sqrt(3)
    CHECK_THAT(ctx.w_cross(), WithinAbs(2.0 / std::sqrt(3.0), 1e-8));
    for (BoundId id : kAllBoundIds) {
        if (is_pair_bound(id)) {
            CHECK(ctx.evaluate(id, {0.5, 1.0, 1.0, 2}).holds());
        }
    }
}

TEST_CASE("evaluation errors")
{
    const SemiHilbertSpace s = make_space(kWeight);
    CHECK(kind_of([&] { eval_single(s, kLower, BoundId::THM31, {1.5, 1.0, 1.0, 2}); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([&] { eval_single(s, kLower, BoundId::THM31, {0.5, -1.0, 1.0, 2}); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([&] { eval_single(s, kLower, BoundId::THM32, {0.5, 1.0, 0.5, 2}); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([&] { eval_single(s, kLower, BoundId::IN2_POWER, {0.0, 0.0, 1.0, 0}); }) ==
          ErrorKind::InvalidParams);
    CHECK(kind_of([&] { eval_single(s, kLower, BoundId::THM41, {}); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([&] { eval_pair(s, kLower, kUpper, BoundId::IN6, {}); }) == ErrorKind::InvalidParams);
    // Unused parameters are not validated.
    CHECK_NOTHROW(eval_single(s, kLower, BoundId::IN6, {7.0, -3.0, 0.0, 0}));

    const SemiHilbertSpace d = make_space(CMatrix::diagonal({1.0, 0.0}));
    CHECK(kind_of([&] { eval_single(d, CMatrix{{0.0, 1.0}, {0.0, 0.0}}, BoundId::IN6, {}); }) == ErrorKind::NotInBA);
    CHECK(kind_of([&] { eval_single(s, CMatrix::identity(3), BoundId::IN6, {}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("report slack and tolerance")
{
    const BoundReport ok(BoundId::IN6, {}, 1.0, 1.0 - 5e-8, kBoundTolerance);
    CHECK(ok.holds());
    const BoundReport bad(BoundId::IN6, {}, 1.0, 1.0 - 2e-7, kBoundTolerance);
    CHECK_FALSE(bad.holds());
    const BoundReport big(BoundId::IN6, {}, 1e6, 1e6 - 0.05, kBoundTolerance);
    CHECK(big.holds());
    CHECK_THAT(big.relative_slack(), WithinAbs(-5e-8, 1e-15));
    CHECK_FALSE(BoundReport(BoundId::IN6, {}, 1e6, 1e6 - 0.2, kBoundTolerance).holds());
}

TEST_CASE("refinement chains on random operators")
{
    VerifyConfig c;
    c.trials = 150;
    c.seed = 777;
    for (std::size_t k = 0; k < c.trials; ++k) {
        const BoundTrial trial = make_bound_trial(c, k);
        SingleBoundContext single(trial.space, trial.t);
        PairBoundContext pair(trial.space, trial.t, trial.s);
        const double quarter_n2 = 0.25 * single.n_sum() * single.n_sum();
        const double k1 = pair.k(1.0);
        const double triangle = std::pow(pair.norm_t() + pair.norm_s(), 2);
        for (double a : c.grid.alpha) {
            for (double b : c.grid.beta) {
                const BoundParams p{a, b, 1.0, 2};
                CHECK(single.evaluate(BoundId::THM32, p).rhs() <= quarter_n2 * (1.0 + 1e-12));
                CHECK(pair.evaluate(BoundId::THM_RAHMA1, p).rhs() <= 0.25 * k1 * k1 * (1.0 + 1e-12));
            }
            CHECK(pair.evaluate(BoundId::THM42, {a, 0.0, 1.0, 2}).rhs() <= triangle * (1.0 + 1e-12));
        }
        for (double b : c.grid.beta) {
            CHECK_THAT(single.evaluate(BoundId::THM31, {0.0, b, 1.0, 2}).rhs(),
                       WithinRel(single.evaluate(BoundId::IN7, {0.0, b, 1.0, 2}).rhs(), 1e-13));
            CHECK_THAT(single.evaluate(BoundId::THM32, {0.0, b, 1.0, 2}).rhs(),
                       WithinRel(single.evaluate(BoundId::IN8, {0.0, b, 1.0, 2}).rhs(), 1e-13));
        }
    }
}

TEST_CASE("THM41 right side can exceed the triangle bound")
{
    // A = I, T = e11, S = e11 / 2: rhs = (1.25 + 0.75)/2 + 0.5 + 2 * 0.5 = 2.5 > (1 + 0.5)^2 = 2.25.
    const SemiHilbertSpace s = make_space(CMatrix::identity(2));
    const CMatrix t = CMatrix::diagonal({1.0, 0.0});
    const CMatrix u = CMatrix::diagonal({0.5, 0.0});
    PairBoundContext ctx(s, t, u);
    const BoundReport r = ctx.evaluate(BoundId::THM41, {});
    CHECK(r.holds());
    CHECK_THAT(r.lhs(), WithinAbs(2.25, 1e-12));
    CHECK_THAT(r.rhs(), WithinAbs(2.5, 1e-12));
    CHECK(r.rhs() > std::pow(ctx.norm_t() + ctx.norm_s(), 2));
}

TEST_CASE("verify_random on a small run")
{
    VerifyConfig c;
    c.trials = 30;
    c.seed = 5;
    std::size_t seen = 0;
    const VerificationSummary s = verify_random(c, [&](std::size_t, const BoundReport&) { ++seen; });
    CHECK(s.violations == 0);
    CHECK(s.evaluations == seen);
    CHECK(s.per_id.size() == kAllBoundIds.size());
    for (const IdStats& st : s.per_id) {
        CHECK(st.evaluations > 0);
        CHECK(st.min_slack >= -kBoundTolerance);
        REQUIRE(st.argmin);
        CHECK(st.argmin->operands.front().first == "A");
    }
    REQUIRE(s.identities);
    CHECK(s.identities->adjoint_equation < 1e-8);
    CHECK(s.identities->product_rule < 1e-8);
    CHECK(s.identities->norm_square < 1e-8);
    CHECK(s.identities->double_adjoint < 1e-8);

    const VerificationSummary again = verify_random(c);
    CHECK(again.evaluations == s.evaluations);
    for (std::size_t i = 0; i < s.per_id.size(); ++i) {
        CHECK(again.per_id[i].min_slack == s.per_id[i].min_slack);
    }
}

TEST_CASE("verify_random rejects bad configurations")
{
    VerifyConfig c;
    c.trials = 0;
    CHECK(kind_of([&] { verify_random(c); }) == ErrorKind::InvalidConfig);
    c.trials = 1;
    c.min_dim = 4;
    c.max_dim = 3;
    CHECK(kind_of([&] { verify_random(c); }) == ErrorKind::InvalidConfig);
    c.min_dim = 2;
    c.singular_prob = 1.5;
    CHECK(kind_of([&] { verify_random(c); }) == ErrorKind::InvalidConfig);
    c.singular_prob = 0.5;
    c.grid.alpha = {2.0};
    CHECK_THROWS_AS(verify_random(c), Error);
}
