#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cesarolab/errors.hpp"
#include "cesarolab/specfun.hpp"

namespace cesarolab {

enum class Domain { HalfLine, RealLine };

struct FnExpr;

// g_gamma(t) = t^(gamma-1) / Gamma(gamma), half-line.
struct PowerKernel {
    double gamma;
};

// e_lambda(t) = exp(-lambda t), Re lambda > 0, half-line.
struct Exponential {
    Complex lambda;
};

// (a + t)^(-beta), a > 0, Re beta > 0, half-line.
struct ShiftedPower {
    double a;
    Complex beta;
};

// E_{beta,1}(lambda t^beta), half-line.
struct MittagLefflerFn {
    double beta;
    Complex lambda;
};

// exp(-t^2 / (2 sigma^2)), real line.
struct Gaussian {
    double sigma;
};

struct LinComb {
    std::vector<Complex> coefs;
    std::vector<FnExpr> parts;
};

struct FnExpr {
    std::variant<PowerKernel, Exponential, ShiftedPower, MittagLefflerFn, Gaussian, LinComb> node;

    static FnExpr power_kernel(double gamma);
    static FnExpr exponential(Complex lambda);
    static FnExpr shifted_power(double a, Complex beta);
    static FnExpr mittag_leffler_fn(double beta, Complex lambda);
    static FnExpr gaussian(double sigma);
    static FnExpr lin_comb(std::vector<Complex> coefs, std::vector<FnExpr> parts);

    Domain domain() const;
    Complex eval(double t) const;
    Complex derivative_at(double t) const;
    Complex second_derivative_at(double t) const;

    // Exponent e such that f(t) ~ c t^e as t -> 0+ (0 for regular members).
    double power_at_zero() const;

    // Whether t^(-power_at_zero) f(t) is analytic at 0 (false for fractional
    // Mittag-Leffler orders, whose expansions run in powers of t^beta).
    bool smooth_at_zero() const;

    FnExpr scaled(Complex c) const;   // c * f
    FnExpr dilated(double s) const;   // f(s t), s > 0; closed under the family
    FnExpr reflected() const;         // f(-t); real-line members only

    std::string to_json() const;
    static FnExpr from_json(const std::string& text);
    // Compact CLI descriptor, e.g. "exp:1", "0.5*gauss:1+2*gauss:2".
    static FnExpr parse(const std::string& descriptor);
};

class GridFn {
  public:
    GridFn(std::vector<double> abscissae, std::vector<Complex> values, Domain domain);

    Domain domain() const { return domain_; }
    const std::vector<double>& abscissae() const { return ts_; }
    const std::vector<Complex>& values() const { return vals_; }
    double front() const { return ts_.front(); }
    double back() const { return ts_.back(); }

    // Local cubic (4-point Lagrange) interpolation; DomainError outside the grid.
    Complex eval(double t) const;

    std::string to_csv() const;
    std::string to_json() const;
    static GridFn from_csv(const std::string& text, Domain domain);
    static GridFn from_json(const std::string& text);

  private:
    std::vector<double> ts_;
    std::vector<Complex> vals_;
    Domain domain_;
};

// 512 log-spaced points on [1e-4, 1e4] (half-line) or 512 tanh-spaced points
// on [-50, 50] excluding 0 (real line).
std::vector<double> default_grid(Domain domain);

}  // namespace cesarolab
