#pragma once

#include "cesarolab/cesaro.hpp"

namespace cesarolab {

// Dilation-group element T_{t,p} f(s) = e^{-t/p} f(e^{-t} s).
struct GroupElement {
    double t = 0.0;
    double p = 2.0;

    void validate() const {
        if (!(p >= 1)) throw ParameterError("GroupElement: p must be >= 1");
    }
};

FnExpr group_action(const GroupElement& g, const FnExpr& f);
GridFn group_action(const GroupElement& g, const GridFn& f);

struct SpectrumCurve {
    std::vector<double> params;
    std::vector<Complex> points;
    OperatorSpec meta;
    // 0 is the closure point of the curve, never a sample.
    static constexpr Complex closure_point{0.0, 0.0};

    std::string to_csv() const;
    std::string to_json() const;
};

// w(t) = Gamma(beta+1) Gamma(a+it) / Gamma(beta+a+it) with a = 1-1/p for the
// forward operator and a = 1/p for the dual, sampled uniformly on [t_min, t_max].
SpectrumCurve spectral_curve(const OperatorSpec& spec, double t_min, double t_max, int n);

// For beta = 1 the curve is a circle: center p/(2(p-1)) (forward) or p/2 (dual).
// Returns max_t | |w(t) - c| - c |.
double circle_check(const SpectrumCurve& curve);

// Closed-form operator norm: Gamma(beta+1)Gamma(1-1/p)/Gamma(beta+1-1/p) or the
// dual with 1/p.
double operator_norm(const OperatorSpec& spec);

// ||Op f||_{alpha,p} / ||f||_{alpha,p}. Operator images at fractional order are
// routed through D^alpha (which commutes with both operators).
double empirical_norm_ratio(const OperatorSpec& spec, const FnExpr& f,
                            const SobolevParams& params, const QuadSpec& q);

struct GroupSpectrumReport {
    double isometry_residual = 0.0;    // max | ||T f|| - ||f|| | / ||f||
    double resolvent_residual = 0.0;   // max |(mu - Lambda) R(mu) f - f|
    bool pass = false;
};

// Numerical shadow of sigma(Lambda) = iR: the group acts isometrically and
// (mu - Lambda) R(mu, Lambda) f = f is solvable for Re mu > 0.
GroupSpectrumReport group_spectrum_check(double p, double t, const std::vector<FnExpr>& fs,
                                         const QuadSpec& q);

}  // namespace cesarolab
