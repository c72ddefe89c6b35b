#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cesarolab/spectra.hpp"

using namespace cesarolab;

namespace {
const QuadSpec q{};
}

TEST_CASE("group action closed forms and laws") {
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    GroupElement g{0.7, 2.0};
    FnExpr moved = group_action(g, e1);
    for (double s : {0.3, 1.0, 4.0}) {
        Complex want = std::exp(-0.7 / 2.0) * e1.eval(std::exp(-0.7) * s);
        CHECK(std::abs(moved.eval(s) - want) < 1e-15);
    }
    // identity and inverse
    FnExpr idm = group_action(GroupElement{0.0, 2.0}, e1);
    CHECK(std::abs(idm.eval(1.0) - e1.eval(1.0)) < 1e-15);
    FnExpr round = group_action(GroupElement{-0.7, 2.0}, moved);
    CHECK(std::abs(round.eval(1.0) - e1.eval(1.0)) < 1e-14);
    CHECK_THROWS_AS(group_action(GroupElement{0.1, 0.5}, e1), ParameterError);
}

TEST_CASE("group action on sampled functions is exact rescaling") {
    std::vector<double> ts = {1.0, 2.0, 3.0, 4.0};
    std::vector<Complex> vals = {Complex(1), Complex(2), Complex(3), Complex(4)};
    GridFn g(ts, vals, Domain::HalfLine);
    GridFn moved = group_action(GroupElement{std::log(2.0), 2.0}, g);
    CHECK(moved.abscissae()[0] == doctest::Approx(2.0));
    CHECK(moved.abscissae()[3] == doctest::Approx(8.0));
    CHECK(std::abs(moved.values()[1] - std::exp(-std::log(2.0) / 2.0) * 2.0) < 1e-15);
}

TEST_CASE("group isometry on the Sobolev norm") {
    FnExpr f = FnExpr::shifted_power(1.0, Complex(1.0));
    SobolevParams s{1.0, 2.0, Domain::HalfLine};
    double base = sobolev_norm(f, s, q);
    CHECK(std::abs(base - 0.57735026918962573) < 1e-10);
    double moved = sobolev_norm(group_action(GroupElement{0.7, 2.0}, f), s, q);
    CHECK(std::abs(moved - base) < 1e-10);
}

TEST_CASE("spectral curve values") {
    SpectrumCurve c = spectral_curve(OperatorSpec{OperatorKind::Cesaro, 1.0, Domain::HalfLine, 2.0},
                                     -20.0, 20.0, 401);
    CHECK(c.params.size() == 401);
    CHECK(std::abs(c.points[200] - Complex(2.0)) < 1e-14);  // w(0) = p/(p-1)
    // w(t) = 1/(1/2 + it) at p = 2: check an off-center sample
    double t = c.params[250];
    CHECK(std::abs(c.points[250] - 1.0 / Complex(0.5, t)) < 1e-13);
    // conjugate symmetry
    CHECK(std::abs(c.points[150] - std::conj(c.points[250])) < 1e-13);
    // decay toward the closure point
    SpectrumCurve wide = spectral_curve(
        OperatorSpec{OperatorKind::Cesaro, 2.0, Domain::HalfLine, 2.0}, -40.0, 40.0, 1601);
    CHECK(std::abs(wide.points.front()) < 1e-3 * operator_norm(wide.meta));
    CHECK_THROWS_AS(spectral_curve(OperatorSpec{OperatorKind::Cesaro, 1.0, Domain::HalfLine, 2.0},
                                   3.0, -3.0, 11),
                    ParameterError);
}

TEST_CASE("circle checks") {
    for (double p : {1.5, 2.0, 4.0}) {
        SpectrumCurve c = spectral_curve(
            OperatorSpec{OperatorKind::Cesaro, 1.0, Domain::HalfLine, p}, -20.0, 20.0, 401);
        CHECK(circle_check(c) < 1e-10);
    }
    SpectrumCurve d = spectral_curve(
        OperatorSpec{OperatorKind::CesaroDual, 1.0, Domain::HalfLine, 3.0}, -20.0, 20.0, 401);
    CHECK(circle_check(d) < 1e-10);
    SpectrumCurve b2 = spectral_curve(
        OperatorSpec{OperatorKind::Cesaro, 2.0, Domain::HalfLine, 2.0}, -20.0, 20.0, 41);
    CHECK_THROWS_AS(circle_check(b2), ParameterError);
}

TEST_CASE("curve serialization") {
    SpectrumCurve c = spectral_curve(
        OperatorSpec{OperatorKind::CesaroDual, 1.5, Domain::HalfLine, 2.0}, -5.0, 5.0, 11);
    std::string csv = c.to_csv();
    CHECK(csv.rfind("t,re_w,im_w\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
    std::string js = c.to_json();
    CHECK(js.find("\"closure_point\":0.0") != std::string::npos);
    CHECK(js.find("\"kind\":\"cesaro-dual\"") != std::string::npos);
}

TEST_CASE("operator norms") {
    CHECK(std::abs(operator_norm(OperatorSpec{OperatorKind::Cesaro, 1.0, Domain::HalfLine, 2.0}) -
                   2.0) < 1e-14);
    CHECK(std::abs(operator_norm(OperatorSpec{OperatorKind::Cesaro, 2.0, Domain::HalfLine, 2.0}) -
                   8.0 / 3.0) < 1e-14);
    CHECK(std::abs(
              operator_norm(OperatorSpec{OperatorKind::CesaroDual, 1.0, Domain::HalfLine, 2.0}) -
              2.0) < 1e-14);
    for (double p : {1.5, 2.0, 4.0}) {
        CHECK(std::abs(operator_norm(OperatorSpec{OperatorKind::Cesaro, 1.0, Domain::HalfLine, p}) -
                       p / (p - 1.0)) < 1e-12);
        CHECK(std::abs(
                  operator_norm(OperatorSpec{OperatorKind::CesaroDual, 1.0, Domain::HalfLine, p}) -
                  p) < 1e-12);
    }
    // real-line norms share the constants
    CHECK(std::abs(operator_norm(OperatorSpec{OperatorKind::Cesaro, 1.3, Domain::RealLine, 2.0}) -
                   operator_norm(OperatorSpec{OperatorKind::Cesaro, 1.3, Domain::HalfLine, 2.0})) <
          1e-15);
}

TEST_CASE("empirical ratios stay below the norm and approach it") {
    OperatorSpec spec{OperatorKind::Cesaro, 1.0, Domain::HalfLine, 2.0};
    SobolevParams sob{0.0, 2.0, Domain::HalfLine};
    FnExpr e1 = FnExpr::exponential(Complex(1.0));
    double r = empirical_norm_ratio(spec, e1, sob, q);
    CHECK(r < operator_norm(spec) + 1e-6);
    CHECK(r > 0.5);
    FnExpr near = FnExpr::shifted_power(1.0, Complex(0.51));
    double rn = empirical_norm_ratio(spec, near, sob, q);
    CHECK(rn > 1.9);
    CHECK(rn < 2.0);
}

TEST_CASE("group spectrum shadow report") {
    std::vector<FnExpr> fs = {FnExpr::exponential(Complex(1.0))};
    GroupSpectrumReport rep = group_spectrum_check(2.0, 1.3, fs, q);
    CHECK(rep.isometry_residual < 1e-8);
    CHECK(rep.resolvent_residual < 1e-6);
    CHECK(rep.pass);
}

TEST_CASE("group isometry on the real line") {
    FnExpr ga = FnExpr::gaussian(1.0);
    for (double alpha : {0.0, 1.0}) {
        SobolevParams sob{alpha, 2.0, Domain::RealLine};
        double base = sobolev_norm(ga, sob, q);
        double moved = sobolev_norm(group_action(GroupElement{0.9, 2.0}, ga), sob, q);
        CHECK(std::abs(moved - base) < 1e-9 * base);
    }
}

TEST_CASE("group law at random parameters") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> shifts(-2.0, 2.0), ps(1.0, 8.0), ts(0.1, 9.0);
    FnExpr f = FnExpr::shifted_power(1.0, Complex(1.5));
    for (int i = 0; i < 30; ++i) {
        double s = shifts(rng), t = shifts(rng), p = ps(rng), x = ts(rng);
        FnExpr one = group_action(GroupElement{s, p}, group_action(GroupElement{t, p}, f));
        FnExpr both = group_action(GroupElement{s + t, p}, f);
        CHECK(std::abs(one.eval(x) - both.eval(x)) < 1e-12);
    }
}

TEST_CASE("curve symmetry at random operators") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> betas(0.3, 4.0), ps(1.1, 10.0);
    for (int i = 0; i < 10; ++i) {
        OperatorSpec spec{(i % 2) ? OperatorKind::Cesaro : OperatorKind::CesaroDual, betas(rng),
                          Domain::HalfLine, ps(rng)};
        SpectrumCurve c = spectral_curve(spec, -12.0, 12.0, 97);
        for (size_t j = 0; j < c.points.size(); ++j) {
            size_t k = c.points.size() - 1 - j;
            CHECK(std::abs(c.points[j] - std::conj(c.points[k])) < 1e-12);
        }
    }
}
