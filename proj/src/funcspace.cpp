#include "cesarolab/funcspace.hpp"

#include <cmath>

namespace cesarolab {

namespace {

double real_gamma(double x) { return std::exp(std::lgamma(x)); }

}  // namespace

double lp_integral_halfline(const PointFn& g, double p, double weight_exponent,
                            const QuadSpec& spec) {
    // t = e^v: integral |g|^p t^w dt = integral |g(e^v)|^p e^(v (w+1)) dv over R,
    // assembled in log space so |g|^p underflow cannot poison the e^v weight.
    auto integrand_pos = [&](double v) -> Complex {
        double t = std::exp(v);
        double m = std::abs(g(t));
        if (m == 0.0) return Complex(0.0, 0.0);
        double expo = p * std::log(m) + v * (weight_exponent + 1.0);
        return Complex(expo < -740.0 ? 0.0 : std::exp(expo), 0.0);
    };
    auto integrand_neg = [&](double v) -> Complex { return integrand_pos(-v); };
    QuadSpec s = spec;
    s.truncation = std::max(spec.truncation, 60.0);
    QuadResult up = integrate_halfline(integrand_pos, s);
    QuadResult down = integrate_halfline(integrand_neg, s);
    return up.value.real() + down.value.real();
}

double sobolev_norm(const FnExpr& f, const SobolevParams& params, const QuadSpec& spec) {
    params.validate();
    double a = params.alpha, p = params.p;
    if (params.domain == Domain::HalfLine) {
        if (f.domain() != Domain::HalfLine)
            throw DomainError("sobolev_norm: function/domain mismatch");
        if (a == 0.0) {
            PointFn g = [&f](double t) { return f.eval(t); };
            return std::pow(lp_integral_halfline(g, p, 0.0, spec), 1.0 / p);
        }
        auto closed = weyl_plus_closed(f, a);
        PointFn w = closed ? PointFn([c = *closed](double t) { return c.eval(t); })
                           : PointFn([&f, a, &spec](double t) {
                                 return weyl_plus_at(f, a, t, spec);
                             });
        double integral = lp_integral_halfline(w, p, a * p, spec);
        return std::pow(integral, 1.0 / p) / real_gamma(a + 1.0);
    }
    // real line
    if (f.domain() != Domain::RealLine)
        throw DomainError("sobolev_norm: function/domain mismatch");
    auto w0 = [&](double t) -> double {
        Complex v = (a == 0.0) ? f.eval(t) : weyl_zero_at(f, a, t, spec);
        return std::abs(v) * std::pow(std::abs(t), a);
    };
    auto integrand = [&](double t) -> Complex {
        return Complex(std::pow(w0(t), p), 0.0);
    };
    QuadResult pos = integrate_halfline([&](double t) { return integrand(t); }, spec);
    QuadResult neg = integrate_halfline([&](double t) { return integrand(-t); }, spec);
    return std::pow(pos.value.real() + neg.value.real(), 1.0 / p) / real_gamma(a + 1.0);
}

double sobolev_norm(const GridFn& g, const SobolevParams& params, const QuadSpec& spec) {
    params.validate();
    if (params.alpha != 0.0)
        throw UnsupportedFunctionError("sobolev_norm: sampled functions support alpha = 0 only");
    auto integrand = [&](double t) -> Complex {
        return Complex(std::pow(std::abs(g.eval(t)), params.p), 0.0);
    };
    QuadResult r = integrate_finite(integrand, g.front(), g.back(), spec);
    return std::pow(r.value.real(), 1.0 / params.p);
}

Complex pairing(const FnExpr& f, const FnExpr& g, double alpha, const QuadSpec& spec) {
    if (f.domain() != g.domain()) throw DomainError("pairing: domain mismatch");
    double ga = real_gamma(alpha + 1.0);
    if (f.domain() == Domain::HalfLine) {
        auto wf = [&](double t) {
            return (alpha == 0.0) ? f.eval(t) : weyl_plus_at(f, alpha, t, spec);
        };
        auto wg = [&](double t) {
            return (alpha == 0.0) ? g.eval(t) : weyl_plus_at(g, alpha, t, spec);
        };
        auto integrand = [&](double t) -> Complex {
            return wf(t) * wg(t) * std::pow(t, 2.0 * alpha);
        };
        QuadResult r = integrate_halfline(integrand, spec);
        return r.value / (ga * ga);
    }
    auto integrand = [&](double t) -> Complex {
        Complex a = (alpha == 0.0) ? f.eval(t) : weyl_zero_at(f, alpha, t, spec);
        Complex b = (alpha == 0.0) ? g.eval(t) : weyl_zero_at(g, alpha, t, spec);
        return a * b * std::pow(std::abs(t), 2.0 * alpha);
    };
    QuadResult pos = integrate_halfline([&](double t) { return integrand(t); }, spec);
    QuadResult neg = integrate_halfline([&](double t) { return integrand(-t); }, spec);
    return (pos.value + neg.value) / (ga * ga);
}

PointFn d_alpha(const FnExpr& f, double alpha, const QuadSpec& spec) {
    if (alpha == 0.0) return [f](double t) { return f.eval(t); };
    double ga = real_gamma(alpha + 1.0);
    if (f.domain() == Domain::HalfLine) {
        auto closed = weyl_plus_closed(f, alpha);
        if (closed) {
            FnExpr c = *closed;
            return [c, alpha, ga](double t) {
                return std::pow(t, alpha) * c.eval(t) / ga;
            };
        }
        QuadSpec s = spec;
        return [f, alpha, ga, s](double t) {
            return std::pow(t, alpha) * weyl_plus_at(f, alpha, t, s) / ga;
        };
    }
    QuadSpec s = spec;
    return [f, alpha, ga, s](double t) {
        return std::pow(std::abs(t), alpha) * weyl_zero_at(f, alpha, t, s) / ga;
    };
}

GridFn d_alpha_grid(const FnExpr& f, double alpha, const QuadSpec& spec,
                    const std::vector<double>* grid) {
    std::vector<double> ts = grid ? *grid : default_grid(f.domain());
    PointFn d = d_alpha(f, alpha, spec);
    std::vector<Complex> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) vals[i] = d(ts[i]);
    return GridFn(std::move(ts), std::move(vals), f.domain());
}

Complex convolve_at(const FnExpr& f, const FnExpr& g, double t, const QuadSpec& spec) {
    if (f.domain() != g.domain()) throw DomainError("convolve: domain mismatch");
    if (f.domain() == Domain::HalfLine) {
        if (!(t >= 0)) throw DomainError("convolve: half-line needs t >= 0");
        if (t == 0.0) return Complex(0.0, 0.0);
        // Split at t/2; absorb the possible endpoint powers of f at t and g at 0.
        double ef = f.power_at_zero(), eg = g.power_at_zero();
        double half = 0.5 * t;
        auto left = [&](double y) -> Complex {  // s = half*y, absorbs g's power at 0
            double s = half * y;
            Complex gv = g.eval(s) * std::pow(y, -eg);
            return f.eval(t - s) * gv;
        };
        auto right = [&](double y) -> Complex {  // s = t - half*y, absorbs f's power at t
            double s = t - half * y;
            Complex fv = f.eval(t - s) * std::pow(y, -ef);
            return fv * g.eval(s);
        };
        QuadResult l = integrate_jacobi(left, 0.0, eg, spec);
        QuadResult r = integrate_jacobi(right, 0.0, ef, spec);
        return half * (l.value + r.value);
    }
    // real line: truncate by decay of the Gaussian family
    double reach = 60.0 + std::abs(t);
    auto integrand = [&](double s) { return f.eval(t - s) * g.eval(s); };
    QuadResult r = integrate_finite(integrand, -reach, reach, spec);
    return r.value;
}

GridFn convolve(const FnExpr& f, const FnExpr& g, const QuadSpec& spec,
                const std::vector<double>* grid) {
    std::vector<double> ts = grid ? *grid : default_grid(f.domain());
    std::vector<Complex> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) vals[i] = convolve_at(f, g, ts[i], spec);
    return GridFn(std::move(ts), std::move(vals), f.domain());
}

}  // namespace cesarolab
