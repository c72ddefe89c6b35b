#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "cesarolab/fnexpr.hpp"
#include "cesarolab/quad.hpp"

namespace cesarolab {

using PointFn = std::function<Complex(double)>;

// Closed-form W^alpha_+ rule when one exists for the whole expression:
//   ShiftedPower: (Gamma(alpha+beta)/Gamma(beta)) (a+t)^(-(alpha+beta))
//   Exponential:  lambda^alpha e^(-lambda t)
// PowerKernel is rejected (no decay); other tags fall through to numerics.
std::optional<FnExpr> weyl_plus_closed(const FnExpr& f, double alpha);

// Pointwise W^alpha_+ of a decaying half-line callable: fractional integral
// in log coordinates, then centered stencils for the outer derivative.
Complex weyl_plus_at(const PointFn& f, double alpha, double t, const QuadSpec& spec);

// FnExpr front end: closed rule when available, else the numeric path.
Complex weyl_plus_at(const FnExpr& f, double alpha, double t, const QuadSpec& spec);

// Grid materialization. Closed forms come back as FnExpr, numerics as GridFn.
std::variant<FnExpr, GridFn> weyl_plus(const FnExpr& f, double alpha, const QuadSpec& spec,
                                       const std::vector<double>* grid = nullptr);

// Two-sided real-line branch W^alpha_0: W_- for t < 0, e^{i pi alpha} W_+ for
// t > 0, with W_+^alpha f(x) = W_-^alpha f~(-x).
Complex weyl_zero_at(const FnExpr& f, double alpha, double t, const QuadSpec& spec);

GridFn weyl_zero(const FnExpr& f, double alpha, const QuadSpec& spec,
                 const std::vector<double>* grid = nullptr);

}  // namespace cesarolab
