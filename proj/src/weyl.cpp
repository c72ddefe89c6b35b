#include "cesarolab/weyl.hpp"

#include <cmath>

namespace cesarolab {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool is_integer(double x, double tol = 1e-12) { return std::abs(x - std::round(x)) <= tol; }

// W^{-gamma}_+ f(t) = t^gamma/Gamma(gamma) * int_0^inf (e^u-1)^(gamma-1) e^u f(t e^u) du.
// The log substitution turns power decay of f into exponential decay in u.
Complex frac_integral_plus(const PointFn& f, double gamma, double t, const QuadSpec& spec) {
    if (!(t > 0)) throw DomainError("weyl: half-line evaluation needs t > 0");
    auto integrand = [&](double u) -> Complex {
        double eu = std::exp(u);
        double em1 = std::expm1(u);
        return std::pow(em1, gamma - 1.0) * eu * f(t * eu);
    };
    QuadResult r = integrate_halfline(integrand, spec);
    return std::pow(t, gamma) * reciprocal_gamma(Complex(gamma, 0.0)) * r.value;
}

Complex stencil_5pt(const std::function<Complex(double)>& g, int order, double t, double h) {
    if (order == 1)
        return (-g(t + 2 * h) + 8.0 * g(t + h) - 8.0 * g(t - h) + g(t - 2 * h)) / (12.0 * h);
    if (order == 2)
        return (-g(t + 2 * h) + 16.0 * g(t + h) - 30.0 * g(t) + 16.0 * g(t - h) - g(t - 2 * h)) /
               (12.0 * h * h);
    throw UnsupportedFunctionError("weyl: derivative order beyond 2 not supported");
}

// one Richardson pass on the h^4 leading error of the 5-point stencils
Complex stencil_derivative(const std::function<Complex(double)>& g, int order, double t,
                           double h) {
    Complex coarse = stencil_5pt(g, order, t, h);
    Complex fine = stencil_5pt(g, order, t, 0.5 * h);
    return (16.0 * fine - coarse) / 15.0;
}

}  // namespace

std::optional<FnExpr> weyl_plus_closed(const FnExpr& f, double alpha) {
    if (alpha == 0.0) return f;
    if (std::holds_alternative<PowerKernel>(f.node))
        throw UnsupportedFunctionError("weyl_plus: pure powers lie outside the Weyl domain");
    if (const auto* sp = std::get_if<ShiftedPower>(&f.node)) {
        Complex nb = sp->beta + alpha;
        if (nb.real() <= 0.0) return std::nullopt;  // fractional integral order too deep
        Complex c = gamma_ratio(sp->beta + alpha, sp->beta);
        return FnExpr::shifted_power(sp->a, nb).scaled(c);
    }
    if (const auto* ex = std::get_if<Exponential>(&f.node)) {
        Complex c = std::exp(alpha * std::log(ex->lambda));
        return FnExpr::exponential(ex->lambda).scaled(c);
    }
    if (const auto* lc = std::get_if<LinComb>(&f.node)) {
        LinComb out;
        for (size_t i = 0; i < lc->parts.size(); ++i) {
            auto w = weyl_plus_closed(lc->parts[i], alpha);
            if (!w) return std::nullopt;
            FnExpr scaled = w->scaled(lc->coefs[i]);
            const auto& inner = std::get<LinComb>(scaled.node);
            for (size_t j = 0; j < inner.parts.size(); ++j) {
                out.coefs.push_back(inner.coefs[j]);
                out.parts.push_back(inner.parts[j]);
            }
        }
        return FnExpr{std::move(out)};
    }
    return std::nullopt;
}

Complex weyl_plus_at(const PointFn& f, double alpha, double t, const QuadSpec& spec) {
    if (alpha == 0.0) return f(t);
    if (alpha < 0.0) return frac_integral_plus(f, -alpha, t, spec);
    if (is_integer(alpha)) {
        int n = static_cast<int>(std::lround(alpha));
        double h = std::min(0.02 * std::max(t, 1.0), t / 5.0);
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        if (n <= 2) return sign * stencil_derivative(f, n, t, h);
        throw UnsupportedFunctionError("weyl_plus: integer order beyond 2 not supported");
    }
    int n = static_cast<int>(std::floor(alpha)) + 1;
    if (n > 2) throw UnsupportedFunctionError("weyl_plus: order beyond 2 not supported");
    double gamma = n - alpha;
    auto phi = [&](double tau) { return frac_integral_plus(f, gamma, tau, spec); };
    double h = std::min((n == 1 ? 8e-3 : 0.02) * std::max(t, 1.0), t / 5.0);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * stencil_derivative(phi, n, t, h);
}

Complex weyl_plus_at(const FnExpr& f, double alpha, double t, const QuadSpec& spec) {
    if (auto closed = weyl_plus_closed(f, alpha)) return closed->eval(t);
    if (alpha > 0.0 && is_integer(alpha)) {
        int n = static_cast<int>(std::lround(alpha));
        if (n == 1) return -f.derivative_at(t);
        if (n == 2) return f.second_derivative_at(t);
    }
    PointFn g = [&f](double s) { return f.eval(s); };
    return weyl_plus_at(g, alpha, t, spec);
}

std::variant<FnExpr, GridFn> weyl_plus(const FnExpr& f, double alpha, const QuadSpec& spec,
                                       const std::vector<double>* grid) {
    if (auto closed = weyl_plus_closed(f, alpha)) return *closed;
    std::vector<double> ts = grid ? *grid : default_grid(Domain::HalfLine);
    std::vector<Complex> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) vals[i] = weyl_plus_at(f, alpha, ts[i], spec);
    return GridFn(std::move(ts), std::move(vals), Domain::HalfLine);
}

namespace {

// Psi(x) = 1/Gamma(gamma) int_0^inf v^(gamma-1) f(x - v) dv for real-line f
// with fast two-sided decay (the Gaussian family).
Complex frac_integral_minus(const FnExpr& f, double gamma, double x, const QuadSpec& spec) {
    double v0 = std::abs(x) + 60.0;  // Gaussian mass is exhausted well before this
    auto inner = [&](double y) { return f.eval(x - v0 * y); };
    QuadResult head = integrate_jacobi(inner, 0.0, gamma - 1.0, spec);
    Complex acc = std::pow(v0, gamma) * head.value;
    auto tail = [&](double s) -> Complex {
        return std::pow(v0 + s, gamma - 1.0) * f.eval(x - v0 - s);
    };
    QuadResult rest = integrate_halfline(tail, spec);
    acc += rest.value;
    return acc * reciprocal_gamma(Complex(gamma, 0.0));
}

Complex weyl_minus_at(const FnExpr& f, double alpha, double x, const QuadSpec& spec) {
    if (alpha == 0.0) return f.eval(x);
    if (is_integer(alpha) && alpha > 0.0) {
        int n = static_cast<int>(std::lround(alpha));
        if (n == 1) return f.derivative_at(x);
        if (n == 2) return f.second_derivative_at(x);
        throw UnsupportedFunctionError("weyl_zero: integer order beyond 2 not supported");
    }
    if (alpha < 0.0) return frac_integral_minus(f, -alpha, x, spec);
    int n = static_cast<int>(std::floor(alpha)) + 1;
    if (n > 2) throw UnsupportedFunctionError("weyl_zero: order beyond 2 not supported");
    double gamma = n - alpha;
    auto psi = [&](double xx) { return frac_integral_minus(f, gamma, xx, spec); };
    double h = (n == 1 ? 8e-3 : 0.02) * std::max(std::abs(x), 1.0);
    return stencil_derivative(psi, n, x, h);  // W_- carries no (-1)^n
}

}  // namespace

Complex weyl_zero_at(const FnExpr& f, double alpha, double t, const QuadSpec& spec) {
    if (f.domain() != Domain::RealLine)
        throw UnsupportedFunctionError("weyl_zero: needs a real-line function");
    if (t == 0.0) throw DomainError("weyl_zero: undefined at t = 0");
    if (alpha == 0.0) return f.eval(t);
    if (t < 0.0) return weyl_minus_at(f, alpha, t, spec);
    Complex branch(std::cos(kPi * alpha), std::sin(kPi * alpha));
    return branch * weyl_minus_at(f.reflected(), alpha, -t, spec);
}

GridFn weyl_zero(const FnExpr& f, double alpha, const QuadSpec& spec,
                 const std::vector<double>* grid) {
    std::vector<double> ts = grid ? *grid : default_grid(Domain::RealLine);
    std::vector<Complex> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) vals[i] = weyl_zero_at(f, alpha, ts[i], spec);
    return GridFn(std::move(ts), std::move(vals), Domain::RealLine);
}

}  // namespace cesarolab
