#pragma once

#include "cesarolab/spectra.hpp"

namespace cesarolab {

// hat f(t) = int e^{-i x t} f(x) dx. Gaussian members go through the closed
// form sigma sqrt(2 pi) e^{-sigma^2 t^2 / 2}; only real-line functions qualify.
Complex fourier_transform_at(const FnExpr& f, double t, const QuadSpec& q);

GridFn fourier_transform(const FnExpr& f, const QuadSpec& q,
                         const std::vector<double>* freq_grid = nullptr);

// Even real-line image of a Cesaro-type operator applied to an even function:
// carries the asymptotic 1/|x| tail coefficients and the optional log
// singularity at 0 that the truncated transform must compensate.
struct EvenImage {
    std::function<double(double)> eval;  // x >= 0
    std::vector<double> tail_coefs;      // f(x) ~ sum_k a_k x^-(k+1)
    double log_coef = 0.0;               // f(x) ~ -log_coef * ln|x| near 0
    double radius = 300.0;               // truncation radius R
};

// 2 int_0^R cos(x t) f(x) dx plus the analytic tail and log corrections.
double fourier_even_transform(const EvenImage& image, double t, const QuadSpec& q);

// Lemma-level check: hat(T_{t,p} f) vs T_{-t,p'} hat f; returns the max
// pointwise deviation over the frequency grid.
double verify_group_intertwine(double t, double p, const FnExpr& f, const QuadSpec& q);

enum class IntertwineDirection { Forward, Dual };

// Forward: hat(C_beta f) = C*_beta(hat f); Dual: hat(C*_beta f) = C_beta(hat f).
// Residual measured on |t| in [0.2, 5] (the dual image is singular at 0).
double verify_cesaro_intertwine(double beta, const FnExpr& f, IntertwineDirection dir,
                                const QuadSpec& q);

// (it)^n (hat f)^(n) = (-i)^n sum_j C(n,j) (n!/j!) hat(x^j f^(j)), n in {1, 2}.
double moment_derivative_check(int n, const FnExpr& f, const QuadSpec& q);

}  // namespace cesarolab
