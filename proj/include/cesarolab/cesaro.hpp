#pragma once

#include <string>
#include <vector>

#include "cesarolab/funcspace.hpp"

namespace cesarolab {

enum class OperatorKind { Cesaro, CesaroDual };

struct OperatorSpec {
    OperatorKind kind = OperatorKind::Cesaro;
    double beta = 1.0;
    Domain domain = Domain::HalfLine;
    double p = 2.0;

    void validate() const;
};

// Collects non-fatal warnings (e.g. the divergent group representation of the
// dual operator at the real-line origin).
struct Diagnostics {
    std::vector<std::string> notes;
};

// Callable + the metadata the kernels need. Built from FnExpr or GridFn.
struct OperatorInput {
    PointFn eval;
    double power_at_zero = 0.0;
    Domain domain = Domain::HalfLine;
    bool continuous_at_zero = true;
    // analytic (after the power factor) at 0: selects the spectrally exact
    // Jacobi path; rough inputs (sampled data, operator images, fractional
    // Mittag-Leffler) go through the double-exponential rule instead
    bool smooth_at_zero = true;

    static OperatorInput from(const FnExpr& f);
    // Strict sampled input: evaluation outside the grid throws DomainError, so
    // kernels that reach below the first abscissa fail loudly.
    static OperatorInput from(const GridFn& g);
    // Padded variant for operator application to sampled data: constant
    // continuation before the grid head, zero after the tail.
    static OperatorInput from_padded(const GridFn& g);
};

// C_beta f(t) = beta int_0^1 (1-r)^(beta-1) f(t r) dr; valid for all real t on
// the real line (C_beta f(0) = f(0)) and t > 0 on the half-line.
Complex cesaro_apply(const OperatorSpec& spec, const OperatorInput& f, double t,
                     const QuadSpec& q, Diagnostics* diag = nullptr);

// C*_beta f(t) = beta int_1^inf (r-1)^(beta-1) r^-beta f(t r) dr, t != 0;
// the real-line value at 0 is the definitional 0 and emits a diagnostic.
Complex cesaro_dual_apply(const OperatorSpec& spec, const OperatorInput& f, double t,
                          const QuadSpec& q, Diagnostics* diag = nullptr);

// Subordination over the dilation group, p-factors kept separate so the forced
// p-independence is a genuine numerical statement:
//   C_beta f = beta int_0^inf (1-e^-r)^(beta-1) e^{-r(1-1/p)} T_{r,p} f dr.
Complex cesaro_subordination(const OperatorSpec& spec, const OperatorInput& f, double t,
                             const QuadSpec& q);

//   C*_beta f = beta int_-inf^0 (e^-r-1)^(beta-1) e^{-r(1-1/p-beta)} T_{r,p} f dr.
Complex cesaro_dual_subordination(const OperatorSpec& spec, const OperatorInput& f, double t,
                                  const QuadSpec& q);

// R(mu, Lambda) f(t) = int_0^inf e^{-mu r} T_{r,p} f(t) dr, Re mu > 0.
// reversed = true integrates against T_{-r,p} (resolvent of -Lambda).
Complex resolvent_apply(Complex mu, double p, const OperatorInput& f, double t,
                        const QuadSpec& q, bool reversed = false);

// C_{n+1} f = (n+1) sum_k C(n,k) (-1)^k R(lambda_p + k, Lambda) f.
Complex cesaro_integer_resolvent(int n, double p, const OperatorInput& f, double t,
                                 const QuadSpec& q);

// (C_alpha C*_beta) f via the hypergeometric kernel, Euler-transformed so the
// diagonal singularities become pure endpoint weights:
//   alpha int_0^1 f(t x) 2F1(1-alpha, 1; beta+1; x) dx
//   + beta int_0^1 f(t/y) 2F1(1-beta, 1; alpha+1; y) dy / y.
Complex composition_apply(double alpha, double beta, const OperatorInput& f, double t,
                          const QuadSpec& q);

// Generator of the dilation group: (Lambda f)(t) = -t f'(t) - f(t)/p.
Complex generator_apply(double p, const FnExpr& f, double t);

}  // namespace cesarolab
