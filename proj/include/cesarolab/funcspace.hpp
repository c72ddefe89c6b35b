#pragma once

#include "cesarolab/weyl.hpp"

namespace cesarolab {

struct SobolevParams {
    double alpha = 0.0;
    double p = 2.0;
    Domain domain = Domain::HalfLine;

    void validate() const {
        if (alpha < 0) throw ParameterError("SobolevParams: alpha must be >= 0");
        if (p < 1) throw ParameterError("SobolevParams: p must be >= 1");
    }
};

// integral_0^inf |g(t)|^p t^w dt computed in v = ln t coordinates, so that the
// slow power tails of near-critical families are captured by the tail fit.
double lp_integral_halfline(const PointFn& g, double p, double weight_exponent,
                            const QuadSpec& spec);

// ||f||_{alpha,p} = Gamma(alpha+1)^-1 (int |W^alpha f|^p t^(alpha p) dt)^(1/p)
// (half-line); the real-line norm |||f|||_{alpha,p} uses W^alpha_0 and |t|^alpha.
double sobolev_norm(const FnExpr& f, const SobolevParams& params, const QuadSpec& spec);

// Plain L^p norm of a sampled function over its span (alpha = 0 only).
double sobolev_norm(const GridFn& g, const SobolevParams& params, const QuadSpec& spec);

// <f, g>_alpha = Gamma(alpha+1)^-2 int W^a f W^a g t^(2 alpha) dt; the
// real-line variant pairs W^alpha_0 against |t|^(2 alpha).
Complex pairing(const FnExpr& f, const FnExpr& g, double alpha, const QuadSpec& spec);

// D^alpha f = Gamma(alpha+1)^-1 t^alpha W^alpha f as a pointwise evaluator
// (the image leaves the closed-form family, so no FnExpr comes back).
PointFn d_alpha(const FnExpr& f, double alpha, const QuadSpec& spec);

GridFn d_alpha_grid(const FnExpr& f, double alpha, const QuadSpec& spec,
                    const std::vector<double>* grid = nullptr);

// Half-line f*g(t) = int_0^t f(t-s) g(s) ds or real-line full-line convolution,
// sampled on the given grid.
GridFn convolve(const FnExpr& f, const FnExpr& g, const QuadSpec& spec,
                const std::vector<double>* grid = nullptr);

Complex convolve_at(const FnExpr& f, const FnExpr& g, double t, const QuadSpec& spec);

}  // namespace cesarolab
