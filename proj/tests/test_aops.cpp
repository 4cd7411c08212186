#include "oracles.hpp"
#include "test_support.hpp"

#include "semihilbert/aops.hpp"

#include <catch_amalgamated.hpp>

using namespace semihilbert;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using testing_support::max_abs_diff;

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

TEST_CASE("membership in B_A")
{
    const SemiHilbertSpace inv = make_space(kWeight);
    Rng rng(1);
    CHECK(in_b_a(inv, rng.gaussian_matrix(2, 2)));

    const SemiHilbertSpace d = make_space(CMatrix::diagonal({1.0, 0.0}));
    CHECK(in_b_a(d, CMatrix{{0.0, 0.0}, {1.0, 0.0}}));
    CHECK_FALSE(in_b_a(d, CMatrix{{0.0, 1.0}, {0.0, 0.0}}));
    CHECK_THROWS_AS(in_b_a(d, CMatrix::identity(3)), Error);
}

TEST_CASE("membership in B_{A^{1/2}}")
{
    const SemiHilbertSpace inv = make_space(kWeight);
    Rng rng(2);
    CHECK(in_b_a_half(inv, rng.gaussian_matrix(2, 2)));

    const SemiHilbertSpace d = make_space(CMatrix::diagonal({1.0, 0.0}));
    CHECK(in_b_a_half(d, CMatrix::identity(2)));

    const SemiHilbertSpace number = make_space(CMatrix::diagonal({0.0, 1.0, 2.0, 3.0}));
    CMatrix x(4, 4);
    for (std::size_t k = 1; k < 4; ++k) {
        x(k - 1, k) = std::sqrt(static_cast<double>(k));
        x(k, k - 1) = std::sqrt(static_cast<double>(k));
    }
    CHECK_FALSE(in_b_a_half(number, x));
    CHECK_FALSE(in_b_a(number, x));
}

TEST_CASE("B_A is contained in B_{A^{1/2}} on random singular spaces")
{
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const SemiHilbertSpace s = random_space(n, rng.next_seed(), 1.0);
        const CMatrix g = rng.gaussian_matrix(n, n);
        if (in_b_a(s, g)) {
            CHECK(in_b_a_half(s, g));
        }
        // A generic G moves ker A into ran A and is neither.
        CHECK_FALSE(in_b_a_half(s, g));
    }
}

TEST_CASE("a_adjoint worked value and classical case")
{
    const SemiHilbertSpace s = make_space(kWeight);
    CHECK(max_abs_diff(a_adjoint(s, kLower), CMatrix{{-1.0, 4.0}, {-1.0, 3.0}}) < 1e-9);

    Rng rng(4);
    const SemiHilbertSpace id = make_space(CMatrix::identity(3));
    const CMatrix t = rng.gaussian_matrix(3, 3);
    CHECK(max_abs_diff(a_adjoint(id, t), t.adjoint()) < 1e-14);

    const SemiHilbertSpace d = make_space(CMatrix::diagonal({1.0, 0.0}));
    CHECK(kind_of([&] { a_adjoint(d, CMatrix{{0.0, 1.0}, {0.0, 0.0}}); }) == ErrorKind::NotInBA);
}

TEST_CASE("A-adjoint identities on random operators")
{
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const SemiHilbertSpace s = random_space(n, rng.next_seed(), 0.5);
        const CMatrix t = random_operator_in_BA(s, rng.next_seed());
        const CMatrix u = random_operator_in_BA(s, rng.next_seed());
        const CMatrix ts = a_adjoint(s, t);
        const CMatrix us = a_adjoint(s, u);
        const double scale = std::max(1.0, spectral_norm(t.adjoint() * s.A()));
        CHECK(max_abs_diff(s.A() * ts, t.adjoint() * s.A()) < 1e-8 * scale);
        CHECK(in_b_a(s, ts));
        const CMatrix prod = a_adjoint(s, t * u);
        CHECK(max_abs_diff(prod, us * ts) < 1e-8 * std::max(1.0, spectral_norm(prod)));
        // <Tx, y>_A = <x, T# y>_A
        const CVector x = rng.gaussian_vector(n);
        const CVector y = rng.gaussian_vector(n);
        const Complex l = a_inner(s, t * x, y);
        const Complex r = a_inner(s, x, ts * y);
        CHECK(std::abs(l - r) < 1e-8 * std::max(1.0, std::abs(l)));
        // T#T and TT# are A-positive.
        CHECK(is_a_positive(s, ts * t));
        CHECK(is_a_positive(s, t * ts));
    }
}

TEST_CASE("A-selfadjoint and A-positive predicates")
{
    const SemiHilbertSpace s = make_space(kWeight);
    CHECK(is_a_selfadjoint(s, CMatrix::identity(2)));
    CHECK(is_a_positive(s, CMatrix::identity(2)));
    CHECK_FALSE(is_a_positive(s, -1.0 * CMatrix::identity(2)));
    const CMatrix ts = a_adjoint(s, kLower);
    CHECK(is_a_positive(s, ts * kLower));
    CHECK(is_a_positive(s, kLower * ts));

    const SemiHilbertSpace id = make_space(CMatrix::identity(2));
    CHECK_FALSE(is_a_selfadjoint(id, CMatrix{{0.0, 1.0}, {0.0, 0.0}}));
}

TEST_CASE("reduced_matrix")
{
    Rng rng(6);
    const CMatrix t = rng.gaussian_matrix(3, 3);
    CHECK(max_abs_diff(reduced_matrix(make_space(CMatrix::identity(3)), t), t) < 1e-14);

    const CMatrix diag{{Complex(2.0, 1.0), 0.0}, {0.0, -3.0}};
    CHECK(max_abs_diff(reduced_matrix(make_space(CMatrix::diagonal({4.0, 1.0})), diag), diag) < 1e-14);

    const SemiHilbertSpace number = make_space(CMatrix::diagonal({0.0, 1.0}));
    CHECK(kind_of([&] { reduced_matrix(number, CMatrix{{0.0, 1.0}, {1.0, 0.0}}); }) == ErrorKind::NotInBAHalf);

    // Multiplicative on B_{A^{1/2}}.
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        const SemiHilbertSpace s = random_space(n, rng.next_seed(), 1.0);
        const CMatrix a = random_operator_in_BA(s, rng.next_seed());
        const CMatrix b = random_operator_in_BA(s, rng.next_seed());
        const CMatrix lhs = reduced_matrix(s, a * b);
        CHECK(max_abs_diff(lhs, reduced_matrix(s, a) * reduced_matrix(s, b)) <
              1e-8 * std::max(1.0, spectral_norm(lhs)));
    }
}

TEST_CASE("a_op_norm worked values")
{
    const SemiHilbertSpace s = make_space(kWeight);
    // sqrt of the largest root of det(T*AT - mu A) = 0, from Eigen.
    CHECK_THAT(a_op_norm(s, kUpper).value(), WithinRel(oracle::a_norm_generalized(kWeight, kUpper), 1e-10));
    CHECK_THAT(a_op_norm(s, kLower).value(), WithinRel(1.0 + std::sqrt(2.0), 1e-10));
    CHECK_THAT(a_op_norm(s, kUpper).value(), WithinRel((1.0 + std::sqrt(5.0)) / 2.0, 1e-10));
    CHECK_THAT(a_op_norm(make_space(CMatrix::diagonal({1.0, 0.0})), CMatrix::identity(2)).value(),
               WithinAbs(1.0, 1e-12));
    CHECK_THAT(a_op_norm(s, CMatrix::identity(2)).value(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("a_op_norm matches the generalized eigenproblem on invertible weights")
{
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const SemiHilbertSpace s = random_space(n, rng.next_seed(), 0.0);
        const CMatrix t = rng.gaussian_matrix(n, n);
        CHECK_THAT(a_op_norm(s, t).value(), WithinRel(oracle::a_norm_generalized(s.A(), t), 1e-8));
    }
}

TEST_CASE("a_numerical_radius worked values")
{
    const SemiHilbertSpace s = make_space(kWeight);
    CHECK_THAT(a_numerical_radius(s, kLower).value(), WithinAbs(2.0, 1e-9));
    CHECK_THAT(a_numerical_radius(s, kLower * kLower).value(), WithinAbs(3.0, 1e-9));
    CHECK_THAT(a_numerical_radius(s, CMatrix::identity(2)).value(), WithinAbs(1.0, 1e-12));
    CHECK(a_numerical_radius(s, kLower).method() == RadiusMethod::reduction);
}

TEST_CASE("a_numerical_radius matches an Eigen pencil sweep on invertible weights")
{
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const SemiHilbertSpace s = random_space(n, rng.next_seed(), 0.0);
        const CMatrix t = rng.gaussian_matrix(n, n);
        const double w = a_numerical_radius(s, t).value();
        const double ref = oracle::a_numerical_radius_generalized(s.A(), t, 4000);
        CHECK(w >= ref * (1.0 - 1e-8));
        CHECK_THAT(w, WithinRel(ref, 1e-5));
    }
}

TEST_CASE("A-seminorm and A-numerical radius inequalities")
{
    Rng rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const SemiHilbertSpace s = random_space(n, rng.next_seed(), 0.5);
        const CMatrix t = random_operator_in_BA(s, rng.next_seed());
        const double w = a_numerical_radius(s, t).value();
        const double nrm = a_op_norm(s, t).value();
        CHECK(w <= nrm * (1.0 + 1e-10));
        CHECK(w >= 0.5 * nrm * (1.0 - 1e-10));
        // w_A(T#) = w_A(T), ||T#||_A = ||T||_A
        const CMatrix ts = a_adjoint(s, t);
        CHECK_THAT(a_numerical_radius(s, ts).value(), WithinRel(w, 1e-7));
        CHECK_THAT(a_op_norm(s, ts).value(), WithinRel(nrm, 1e-7));
        // ||T#T||_A = ||T||_A^2
        CHECK_THAT(a_op_norm(s, ts * t).value(), WithinRel(nrm * nrm, 1e-7));
    }
}

TEST_CASE("INFINITE sentinel outside B_{A^{1/2}}")
{
    const SemiHilbertSpace s = make_space(CMatrix::diagonal({0.0, 1.0}));
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const RadiusResult w = a_numerical_radius(s, x);
    CHECK_FALSE(w.is_finite());
    CHECK(std::isinf(w.value()));
    CHECK(kind_of([&] { (void)w.require_finite(); }) == ErrorKind::NotInBAHalf);
    CHECK_FALSE(a_op_norm(s, x).is_finite());

    AOperator op(s, x);
    CHECK_FALSE(op.in_BA());
    CHECK_FALSE(op.in_BA_half());
    CHECK(kind_of([&] { (void)op.adjoint(); }) == ErrorKind::NotInBA);
}

TEST_CASE("sampling oracle is a lower bound")
{
    const SemiHilbertSpace s = make_space(kWeight);
    CHECK(oracle_a_numrad_sample(s, kLower, 100000, 1) >= 1.99);
    CHECK(oracle_a_numrad_sample(s, kLower, 100000, 1) <= 2.0 + 1e-9);
    CHECK_THAT(oracle_a_numrad_sample(s, CMatrix::identity(2), 10, 3), WithinAbs(1.0, 1e-12));
    CHECK(kind_of([] { oracle_a_numrad_sample(make_space(CMatrix(2, 2)), CMatrix::identity(2), 10, 1); }) ==
          ErrorKind::DegenerateSpace);

    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const SemiHilbertSpace sp = random_space(n, rng.next_seed(), 0.5);
        const CMatrix t = random_operator_in_BA(sp, rng.next_seed());
        const double w = a_numerical_radius(sp, t).value();
        CHECK(oracle_a_numrad_sample(sp, t, 2000, rng.next_seed()) <= w + 1e-9 * std::max(1.0, w));
    }
}

TEST_CASE("a_positive_power")
{
    const SemiHilbertSpace id = make_space(CMatrix::identity(2));
    CHECK(max_abs_diff(a_positive_power(id, CMatrix::diagonal({4.0, 9.0}), 1.5), CMatrix::diagonal({8.0, 27.0})) <
          1e-12);

    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const SemiHilbertSpace s = random_space(n, rng.next_seed(), 0.5);
        const CMatrix t = random_operator_in_BA(s, rng.next_seed());
        const CMatrix w = a_adjoint(s, t) * t;
        const double scale = std::max(1.0, spectral_norm(w));
        CHECK(max_abs_diff(a_positive_power(s, w, 1.0), w) < 1e-12 * scale);
        CHECK(max_abs_diff(a_positive_power(s, w, 2.0), w * w) < 1e-8 * scale * scale);
        CHECK(max_abs_diff(a_positive_power(s, w, 3.0), w * w * w) < 1e-8 * scale * scale * scale);
    }

    const SemiHilbertSpace s = make_space(kWeight);
    CHECK(kind_of([&] { a_positive_power(s, CMatrix::identity(2), 0.5); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([&] { a_positive_power(s, -1.0 * CMatrix::identity(2), 2.0); }) == ErrorKind::NotAPositive);
    const SemiHilbertSpace d = make_space(CMatrix::diagonal({1.0, 0.0}));
    CHECK(kind_of([&] { a_positive_power(d, CMatrix::identity(2), 2.0); }) == ErrorKind::NotSupportedOnRange);
}
