#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cesarolab/cesaro.hpp"
#include "oracle_utils.hpp"

using namespace cesarolab;

namespace {
const QuadSpec q{};
double lg(double x) { return std::lgamma(x); }

OperatorSpec ces(double beta, double p = 2.0, Domain d = Domain::HalfLine) {
    return OperatorSpec{OperatorKind::Cesaro, beta, d, p};
}
OperatorSpec dual(double beta, double p = 2.0, Domain d = Domain::HalfLine) {
    return OperatorSpec{OperatorKind::CesaroDual, beta, d, p};
}
}  // namespace

TEST_CASE("OperatorSpec validation") {
    CHECK_THROWS_AS(ces(1.0, 1.0).validate(), ParameterError);   // p = 1 rejected
    CHECK_THROWS_AS(ces(0.0).validate(), ParameterError);        // beta > 0
    CHECK_NOTHROW(dual(1.0, 1.0).validate());                    // dual allows p = 1
}

TEST_CASE("forward operator: constants and closed forms") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput in = OperatorInput::from(e1);
    // C_beta 1 = 1 through a constant-like probe: the eigenvalue at gamma = 1
    FnExpr g1 = FnExpr::power_kernel(1.0);  // g_1 = 1
    OperatorInput one = OperatorInput::from(g1);
    for (double beta : {0.5, 1.0, 2.7})
        CHECK(std::abs(cesaro_apply(ces(beta), one, 1.7, q) - Complex(1.0)) < 1e-12);
    // (1 - e^-t)/t at t = 1
    CHECK(std::abs(cesaro_apply(ces(1.0), in, 1.0, q) - Complex(0.63212055882855767)) < 1e-12);
    // order-two closed form 2(e^-t - 1 + t)/t^2; equals 2/e at t = 1
    CHECK(std::abs(cesaro_apply(ces(2.0), in, 1.0, q) - 2.0 * std::exp(-1.0)) < 1e-12);
    double t = 2.0;
    Complex want = 2.0 * (std::exp(-t) - 1.0 + t) / (t * t);
    CHECK(std::abs(cesaro_apply(ces(2.0), in, t, q) - want) < 1e-12);
}

TEST_CASE("eigenfunction laws") {
    for (double beta : {0.5, 1.0, 2.0}) {
        for (double gamma : {0.5, 1.0, 2.0, 3.3}) {
            FnExpr g = FnExpr::power_kernel(gamma);
            OperatorInput in = OperatorInput::from(g);
            double eig = std::exp(lg(beta + 1.0) + lg(gamma) - lg(beta + gamma));
            for (double t : {0.1, 1.0, 10.0}) {
                Complex got = cesaro_apply(ces(beta), in, t, q);
                CHECK(std::abs(got - eig * g.eval(t)) < 1e-8 * std::abs(eig * g.eval(t)));
            }
        }
    }
    // dual law on 0 < gamma < 1
    for (double beta : {0.5, 1.0, 2.0}) {
        for (double gamma : {0.25, 0.5, 0.75}) {
            FnExpr g = FnExpr::power_kernel(gamma);
            OperatorInput in = OperatorInput::from(g);
            double eig = std::exp(lg(beta + 1.0) + lg(1.0 - gamma) - lg(beta - gamma + 1.0));
            for (double t : {0.1, 1.0, 10.0}) {
                Complex got = cesaro_dual_apply(dual(beta), in, t, q);
                CHECK(std::abs(got - eig * g.eval(t)) < 1e-7 * std::abs(eig * g.eval(t)));
            }
        }
    }
}

TEST_CASE("dual operator: frozen values") {
    FnExpr gh = FnExpr::power_kernel(0.5);
    OperatorInput in = OperatorInput::from(gh);
    // eigenvalue Gamma(2)Gamma(1/2)/Gamma(3/2) = 2 at t = 1: 2 g_{1/2}(1) = 2/sqrt(pi)
    CHECK(std::abs(cesaro_dual_apply(dual(1.0), in, 1.0, q) - Complex(1.1283791670955126)) <
          1e-10);
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput ein = OperatorInput::from(e1);
    // C*_1 e(t) = E_1(t): frozen exponential-integral references
    CHECK(std::abs(cesaro_dual_apply(dual(1.0), ein, 1.0, q) - Complex(0.21938393439552028)) <
          1e-10);
    CHECK(std::abs(cesaro_dual_apply(dual(1.0), ein, 2.0, q) - Complex(0.048900510708061120)) <
          1e-10);
    // brute-force sanity for beta = 2 against Simpson on the direct kernel
    OperatorSpec d2 = dual(2.0);
    Complex got = cesaro_dual_apply(d2, ein, 1.0, q);
    Complex brute = 2.0 * oracle::simpson(
                              [&](double r) -> Complex {
                                  return (r - 1.0) * std::pow(r, -2.0) * std::exp(-r);
                              },
                              1.0, 80.0, 40000);
    CHECK(std::abs(got - brute) < 1e-8);
}

TEST_CASE("domain preconditions") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput in = OperatorInput::from(e1);
    CHECK_THROWS_AS(cesaro_apply(ces(1.0), in, -1.0, q), DomainError);
    CHECK_THROWS_AS(cesaro_apply(ces(1.0), in, 0.0, q), DomainError);
    CHECK_THROWS_AS(cesaro_dual_apply(dual(1.0), in, 0.0, q), DomainError);
    // real-line origin: definitional value plus a diagnostic
    FnExpr ga = FnExpr::gaussian(1.0);
    OperatorInput gin = OperatorInput::from(ga);
    Diagnostics diag;
    Complex v = cesaro_dual_apply(dual(1.0, 2.0, Domain::RealLine), gin, 0.0, q, &diag);
    CHECK(std::abs(v) == 0.0);
    REQUIRE(diag.notes.size() == 1);
    CHECK(diag.notes[0].find("diverges") != std::string::npos);
    // forward real-line origin is the plain value
    CHECK(std::abs(cesaro_apply(ces(1.5, 2.0, Domain::RealLine), gin, 0.0, q) - ga.eval(0.0)) <
          1e-14);
    // PowerKernel with gamma < 1 is singular at 0, so t = 0 is rejected
    OperatorInput rough = OperatorInput::from(FnExpr::power_kernel(0.5));
    CHECK_THROWS_AS(cesaro_apply(ces(1.0, 2.0, Domain::RealLine), rough, 0.0, q), DomainError);
}

TEST_CASE("mittag-leffler eigen identity") {
    double lambda = 1.0;
    for (double beta : {0.5, 1.0}) {
        FnExpr f = FnExpr::mittag_leffler_fn(beta, Complex(-lambda));
        OperatorInput in = OperatorInput::from(f);
        for (double t : {0.5, 1.0, 2.0}) {
            Complex got = cesaro_apply(ces(beta), in, t, q);
            double gb1 = std::pow(t, beta) * std::exp(-lg(beta + 1.0));
            Complex want = (1.0 - f.eval(t)) / (lambda * gb1);
            CHECK(std::abs(got - want) < 1e-6 * std::abs(want));
        }
    }
}

TEST_CASE("subordination equals the kernel and is p-independent") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput in = OperatorInput::from(e1);
    for (double beta : {0.5, 2.0}) {
        Complex base = cesaro_apply(ces(beta), in, 1.3, q);
        for (double p : {1.5, 2.0, 4.0}) {
            Complex sub = cesaro_subordination(ces(beta, p), in, 1.3, q);
            CHECK(std::abs(sub - base) < 1e-8);
        }
    }
    FnExpr gh = FnExpr::power_kernel(0.5);
    OperatorInput gin = OperatorInput::from(gh);
    for (double beta : {0.5, 1.0}) {
        Complex base = cesaro_dual_apply(dual(beta), gin, 0.7, q);
        for (double p : {1.5, 2.0, 4.0}) {
            Complex sub = cesaro_dual_subordination(dual(beta, p), gin, 0.7, q);
            CHECK(std::abs(sub - base) < 1e-8);
        }
    }
}

TEST_CASE("resolvent representations") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput in = OperatorInput::from(e1);
    CHECK_THROWS_AS(resolvent_apply(Complex(-0.1), 2.0, in, 1.0, q), DomainError);
    for (double p : {1.5, 2.0, 4.0}) {
        Complex r = resolvent_apply(Complex(1.0 - 1.0 / p), p, in, 1.0, q);
        CHECK(std::abs(r - cesaro_apply(ces(1.0, p), in, 1.0, q)) < 1e-8);
        Complex rd = resolvent_apply(Complex(1.0 / p), p, in, 1.0, q, true);
        CHECK(std::abs(rd - cesaro_dual_apply(dual(1.0, p), in, 1.0, q)) < 1e-8);
    }
    // n = 0 collapses to the plain resolvent
    Complex sum0 = cesaro_integer_resolvent(0, 2.0, in, 1.0, q);
    CHECK(std::abs(sum0 - resolvent_apply(Complex(0.5), 2.0, in, 1.0, q)) < 1e-12);
    // n = 1: 2R(l) - 2R(l+1) = C_2, frozen at 2/e
    Complex sum1 = cesaro_integer_resolvent(1, 2.0, in, 1.0, q);
    CHECK(std::abs(sum1 - 2.0 * std::exp(-1.0)) < 1e-7);
    // n = 2 equals the direct beta = 3 kernel
    Complex sum2 = cesaro_integer_resolvent(2, 2.0, in, 1.0, q);
    CHECK(std::abs(sum2 - cesaro_apply(ces(3.0), in, 1.0, q)) < 1e-7);
    // mu -> infinity: mu R(mu) f -> f
    Complex big = resolvent_apply(Complex(1e3), 2.0, in, 1.0, q);
    CHECK(std::abs(1e3 * big - e1.eval(1.0)) < 1e-3 * std::abs(e1.eval(1.0)));
}

TEST_CASE("composition kernel") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput in = OperatorInput::from(e1);
    // alpha = beta = 1 splits into the sum of the two operators
    for (double t : {0.25, 1.0, 3.0}) {
        Complex both = composition_apply(1.0, 1.0, in, t, q);
        Complex split = cesaro_apply(ces(1.0), in, t, q) + cesaro_dual_apply(dual(1.0), in, t, q);
        CHECK(std::abs(both - split) < 1e-6);
    }
    // frozen two-stage reference at alpha = 1.5, beta = 0.7
    Complex spot = composition_apply(1.5, 0.7, in, 1.0, q);
    CHECK(std::abs(spot - Complex(0.98368653416986280)) < 1e-9);
    // the 1-1 value matches the frozen sum 0.6321206 + 0.2193839
    Complex v11 = composition_apply(1.0, 1.0, in, 1.0, q);
    CHECK(std::abs(v11 - Complex(0.85150449322407795)) < 1e-9);
    CHECK_THROWS_AS(composition_apply(1.0, 1.0, in, 0.0, q), DomainError);
    CHECK_THROWS_AS(composition_apply(0.0, 1.0, in, 1.0, q), ParameterError);
}

TEST_CASE("generator") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    CHECK(std::abs(generator_apply(2.0, e1, 1.0) - Complex(0.5 * std::exp(-1.0))) < 1e-14);
    FnExpr sp1 = FnExpr::shifted_power(1.0, Complex(1.0));
    CHECK(std::abs(generator_apply(2.0, sp1, 1.0)) < 1e-14);
    // (lambda_p - Lambda) R(lambda_p) f = f by stencil
    OperatorInput in = OperatorInput::from(e1);
    double p = 2.0, lp = 0.5;
    auto rf = [&](double s) { return resolvent_apply(Complex(lp), p, in, s, q); };
    for (double t : {0.5, 1.5}) {
        double h = 0.01 * t;
        Complex d1 =
            (-rf(t + 2 * h) + 8.0 * rf(t + h) - 8.0 * rf(t - h) + rf(t - 2 * h)) / (12.0 * h);
        Complex lam = -t * d1 - rf(t) / p;
        CHECK(std::abs(lp * rf(t) - lam - e1.eval(t)) < 1e-6);
    }
}

TEST_CASE("sampled inputs: strict and padded") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    std::vector<double> ts;
    std::vector<Complex> vals;
    for (int i = 0; i <= 4000; ++i) {
        double t = 1e-6 + (40.0 - 1e-6) * i / 4000.0;
        ts.push_back(t);
        vals.push_back(e1.eval(t));
    }
    GridFn g(ts, vals, Domain::HalfLine);
    // strict input fails loudly when the kernel reaches below the grid head
    OperatorInput strict = OperatorInput::from(g);
    CHECK_THROWS_AS(cesaro_apply(ces(1.0), strict, 1.0, q), DomainError);
    // padded input matches the closed-form route to interpolation accuracy
    OperatorInput padded = OperatorInput::from_padded(g);
    OperatorInput exact = OperatorInput::from(e1);
    for (double t : {0.5, 1.0, 4.0}) {
        Complex a = cesaro_apply(ces(1.0), padded, t, q);
        Complex b = cesaro_apply(ces(1.0), exact, t, q);
        CHECK(std::abs(a - b) < 1e-8);
    }
    Complex da = cesaro_dual_apply(dual(1.0), padded, 1.0, q);
    Complex db = cesaro_dual_apply(dual(1.0), exact, 1.0, q);
    // the zero continuation cuts the tail at the grid edge, already decayed here
    CHECK(std::abs(da - db) < 1e-6);
}

TEST_CASE("square of the mean differs from the order-two operator") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput in = OperatorInput::from(e1);
    OperatorInput once;
    once.eval = [&](double s) { return cesaro_apply(ces(1.0), in, s, q); };
    once.domain = Domain::HalfLine;
    once.continuous_at_zero = true;
    once.smooth_at_zero = false;
    Complex twice = cesaro_apply(ces(1.0), once, 1.0, q);
    // frozen: C_1^2 e(1) = int_0^1 (1-e^-s)/s ds
    CHECK(std::abs(twice - Complex(0.79659959929705313)) < 1e-9);
    Complex order2 = cesaro_apply(ces(2.0), in, 1.0, q);
    CHECK(std::abs(twice - order2) > 1e-3);
}

TEST_CASE("eigenfunction law at random orders") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> betas(0.2, 3.5), gammas(0.2, 4.0), ts(0.05, 20.0);
    for (int i = 0; i < 25; ++i) {
        double beta = betas(rng), gamma = gammas(rng), t = ts(rng);
        FnExpr g = FnExpr::power_kernel(gamma);
        OperatorInput in = OperatorInput::from(g);
        double eig = std::exp(lg(beta + 1.0) + lg(gamma) - lg(beta + gamma));
        Complex got = cesaro_apply(ces(beta), in, t, q);
        CHECK(std::abs(got - eig * g.eval(t)) < 1e-8 * std::abs(eig * g.eval(t)));
    }
    std::uniform_real_distribution<double> duals(0.05, 0.95);
    for (int i = 0; i < 25; ++i) {
        double beta = betas(rng), gamma = duals(rng), t = ts(rng);
        FnExpr g = FnExpr::power_kernel(gamma);
        OperatorInput in = OperatorInput::from(g);
        double eig = std::exp(lg(beta + 1.0) + lg(1.0 - gamma) - lg(beta - gamma + 1.0));
        Complex got = cesaro_dual_apply(dual(beta), in, t, q);
        CHECK(std::abs(got - eig * g.eval(t)) < 1e-7 * std::abs(eig * g.eval(t)));
    }
}

TEST_CASE("subordination p-independence at random parameters") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> betas(0.3, 3.0), ps(1.1, 8.0), ts(0.2, 5.0);
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    OperatorInput in = OperatorInput::from(e1);
    for (int i = 0; i < 15; ++i) {
        double beta = betas(rng), t = ts(rng);
        Complex base = cesaro_apply(ces(beta), in, t, q);
        Complex sub = cesaro_subordination(ces(beta, ps(rng)), in, t, q);
        CHECK(std::abs(sub - base) < 1e-8);
    }
}
