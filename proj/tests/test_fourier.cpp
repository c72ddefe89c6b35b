#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cesarolab/fourier.hpp"

using namespace cesarolab;

namespace {
const QuadSpec q{};
constexpr double kSqrt2Pi = 2.5066282746310005;
}  // namespace

TEST_CASE("gaussian closed-form transform") {
    FnExpr g1 = FnExpr::gaussian(1.0);
    CHECK(std::abs(fourier_transform_at(g1, 0.0, q) - Complex(kSqrt2Pi)) < 1e-14);
    FnExpr g2 = FnExpr::gaussian(2.0);
    CHECK(std::abs(fourier_transform_at(g2, 1.0, q) - Complex(0.67847049503217647)) < 1e-14);
    // hat f(0) = integral of f for a linear combination
    FnExpr mix = FnExpr::lin_comb({Complex(1.0), Complex(0.5)}, {g1, g2});
    Complex mass = fourier_transform_at(mix, 0.0, q);
    CHECK(std::abs(mass - Complex(kSqrt2Pi + 0.5 * 2.0 * kSqrt2Pi)) < 1e-13);
    CHECK_THROWS_AS(fourier_transform_at(FnExpr::exponential(Complex(1.0)), 0.0, q), DomainError);
}

TEST_CASE("transform grid materialization") {
    FnExpr g1 = FnExpr::gaussian(1.0);
    std::vector<double> freqs = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
    GridFn hat = fourier_transform(g1, q, &freqs);
    for (size_t i = 0; i < freqs.size(); ++i) {
        double want = kSqrt2Pi * std::exp(-freqs[i] * freqs[i] / 2.0);
        CHECK(std::abs(hat.values()[i] - Complex(want)) < 1e-13);
    }
}

TEST_CASE("riemann-lebesgue shadow") {
    FnExpr g1 = FnExpr::gaussian(1.0);
    CHECK(std::abs(fourier_transform_at(g1, 30.0, q)) < 1e-4);
}

TEST_CASE("group intertwining residuals") {
    FnExpr g1 = FnExpr::gaussian(1.0);
    CHECK(verify_group_intertwine(0.0, 2.0, g1, q) < 1e-10);
    CHECK(verify_group_intertwine(0.5, 2.0, g1, q) < 1e-7);
    FnExpr g2 = FnExpr::gaussian(2.0);
    CHECK(verify_group_intertwine(-1.0, 1.5, g2, q) < 1e-6);
    CHECK_THROWS_AS(verify_group_intertwine(0.5, 3.0, g1, q), ParameterError);
}

TEST_CASE("even-image transform against the frozen intertwine references") {
    // hat(C_1 G)(1) = 0.70157216002888041 and hat(C*_1 G)(1) = 2.144732293180816
    FnExpr g1 = FnExpr::gaussian(1.0);
    OperatorSpec ces{OperatorKind::Cesaro, 1.0, Domain::RealLine, 2.0};
    OperatorSpec dual{OperatorKind::CesaroDual, 1.0, Domain::RealLine, 2.0};
    OperatorInput in = OperatorInput::from(g1);

    EvenImage fwd;
    fwd.radius = 400.0;
    fwd.eval = [&](double x) {
        return (x == 0.0) ? g1.eval(0.0).real() : cesaro_apply(ces, in, x, q).real();
    };
    // tail coefficients from the half-line moments of the Gaussian
    double m0 = std::sqrt(3.14159265358979323846 / 2.0);
    double m1 = 1.0, m2 = m0, m3 = 2.0;
    fwd.tail_coefs = {m0, -0.0 * m1, 0.0, 0.0};
    // beta = 1: a_k = (-1)^k C(0, k) m_k, only k = 0 survives
    double got = fourier_even_transform(fwd, 1.0, q);
    CHECK(std::abs(got - 0.70157216002888041) < 1e-9);
    (void)m2;
    (void)m3;

    EvenImage back;
    back.radius = 50.0;
    back.log_coef = 1.0;  // beta f(0)
    back.eval = [&](double x) { return cesaro_dual_apply(dual, in, x, q).real(); };
    double got2 = fourier_even_transform(back, 1.0, q);
    CHECK(std::abs(got2 - 2.144732293180816) < 1e-9);
}

TEST_CASE("cesaro intertwining residuals") {
    FnExpr g1 = FnExpr::gaussian(1.0);
    CHECK(verify_cesaro_intertwine(1.0, g1, IntertwineDirection::Forward, q) < 1e-5);
    CHECK(verify_cesaro_intertwine(1.0, g1, IntertwineDirection::Dual, q) < 1e-5);
    CHECK(verify_cesaro_intertwine(0.5, g1, IntertwineDirection::Forward, q) < 1e-5);
    CHECK_THROWS_AS(
        verify_cesaro_intertwine(1.0, FnExpr::exponential(Complex(1.0)),
                                 IntertwineDirection::Forward, q),
        UnsupportedFunctionError);
}

TEST_CASE("moment-derivative identity") {
    FnExpr g1 = FnExpr::gaussian(1.0);
    CHECK(moment_derivative_check(1, g1, q) < 1e-6);
    CHECK(moment_derivative_check(2, g1, q) < 1e-5);
    CHECK_THROWS_AS(moment_derivative_check(3, g1, q), ParameterError);
}

TEST_CASE("plancherel shadow for a two-Gaussian mix") {
    FnExpr mix = FnExpr::lin_comb({Complex(1.0), Complex(-0.3)},
                                  {FnExpr::gaussian(1.0), FnExpr::gaussian(1.7)});
    auto f2 = [&](double x) -> Complex {
        double m = std::abs(mix.eval(x));
        return Complex(m * m);
    };
    double lhs = integrate_finite(f2, -40.0, 40.0, q).value.real();
    auto h2 = [&](double t) -> Complex {
        double m = std::abs(fourier_transform_at(mix, t, q));
        return Complex(m * m);
    };
    double rhs =
        integrate_finite(h2, -40.0, 40.0, q).value.real() / (2.0 * 3.14159265358979323846);
    CHECK(std::abs(lhs - rhs) < 1e-6);
}

TEST_CASE("transform linearity") {
    FnExpr g1 = FnExpr::gaussian(1.0);
    FnExpr g2 = FnExpr::gaussian(1.7);
    FnExpr mix = FnExpr::lin_comb({Complex(2.0), Complex(-0.7)}, {g1, g2});
    for (double t : {0.4, 1.3}) {
        Complex lhs = fourier_transform_at(mix, t, q);
        Complex rhs = 2.0 * fourier_transform_at(g1, t, q) - 0.7 * fourier_transform_at(g2, t, q);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}
