#include "cesarolab/fourier.hpp"

#include <cmath>

namespace cesarolab {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

bool gaussian_family(const FnExpr& f) {
    if (std::holds_alternative<Gaussian>(f.node)) return true;
    if (const auto* lc = std::get_if<LinComb>(&f.node)) {
        for (const FnExpr& p : lc->parts)
            if (!gaussian_family(p)) return false;
        return true;
    }
    return false;
}

// Closed-form transform inside the Gaussian family.
FnExpr gaussian_transform(const FnExpr& f) {
    if (const auto* g = std::get_if<Gaussian>(&f.node))
        return FnExpr::gaussian(1.0 / g->sigma).scaled(Complex(g->sigma * kSqrt2Pi, 0.0));
    const auto& lc = std::get<LinComb>(f.node);
    LinComb out;
    for (size_t i = 0; i < lc.parts.size(); ++i) {
        FnExpr t = gaussian_transform(lc.parts[i]);
        const auto& inner = std::get<LinComb>(t.node);
        for (size_t j = 0; j < inner.parts.size(); ++j) {
            out.coefs.push_back(lc.coefs[i] * inner.coefs[j]);
            out.parts.push_back(inner.parts[j]);
        }
    }
    return FnExpr{std::move(out)};
}

// E_k(z) = int_z^inf cos(v) v^-(k+1) dv by the alternating integration-by-parts
// expansion; first omitted term ~ (k+6)!/k! z^-(k+7), ample for z >= 40.
double tail_cos_integral(int k, double z) {
    double s = std::sin(z), c = std::cos(z);
    double coef = 1.0;  // (k+1)(k+2)...(k+m)
    double power = std::pow(z, -(k + 1.0));
    double acc = 0.0;
    for (int m = 0; m < 6; ++m) {
        double trig = (m % 2 == 0) ? s : c;
        int r = m % 4;
        double sign = (r == 1 || r == 2) ? 1.0 : -1.0;
        acc += sign * coef * power * trig;
        coef *= (k + 1.0 + m);
        power /= z;
    }
    return acc;
}

}  // namespace

Complex fourier_transform_at(const FnExpr& f, double t, const QuadSpec& q) {
    if (f.domain() != Domain::RealLine)
        throw DomainError("fourier_transform: real-line functions only");
    if (gaussian_family(f)) return gaussian_transform(f).eval(t);
    // generic decaying real-line function: truncated oscillatory integral
    double R = 60.0;
    auto integrand = [&](double x) -> Complex {
        return std::exp(Complex(0.0, -x * t)) * f.eval(x);
    };
    QuadResult r = integrate_finite(integrand, -R, R, q);
    return r.value;
}

GridFn fourier_transform(const FnExpr& f, const QuadSpec& q,
                         const std::vector<double>* freq_grid) {
    std::vector<double> ts = freq_grid ? *freq_grid : default_grid(Domain::RealLine);
    std::vector<Complex> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) vals[i] = fourier_transform_at(f, ts[i], q);
    return GridFn(std::move(ts), std::move(vals), Domain::RealLine);
}

namespace {

// Si(t) = int_0^t sin(u)/u du by series; ample for |t| <= 16.
double sine_integral(double t) {
    double term = t, sum = t;
    double t2 = t * t;
    for (int k = 1; k < 60; ++k) {
        term *= -t2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term / (2.0 * k + 1.0);
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

double fourier_even_transform(const EvenImage& image, double t, const QuadSpec& q) {
    if (t == 0.0) throw DomainError("fourier_even_transform: t = 0 excluded");
    double at = std::abs(t);
    double R = image.radius;
    double value = 0.0;
    // body, with the log singularity subtracted on (0, 1]
    auto body = [&](double x) -> Complex {
        double fx = image.eval(x);
        if (image.log_coef != 0.0 && x < 1.0) fx -= image.log_coef * std::log(1.0 / x);
        return Complex(std::cos(x * at) * fx, 0.0);
    };
    QuadResult inner = integrate_finite(body, 0.0, 1.0, q);
    QuadResult outer = integrate_finite(body, 1.0, R, q);
    value += 2.0 * (inner.value.real() + outer.value.real());
    if (image.log_coef != 0.0)
        value += 2.0 * image.log_coef * sine_integral(at) / at;
    // oscillatory tail of the 1/x expansion beyond R
    double z = R * at;
    for (size_t k = 0; k < image.tail_coefs.size(); ++k)
        value += 2.0 * image.tail_coefs[k] * std::pow(at, static_cast<double>(k)) *
                 tail_cos_integral(static_cast<int>(k), z);
    return value;
}

double verify_group_intertwine(double t, double p, const FnExpr& f, const QuadSpec& q) {
    if (!(p > 1.0) || p > 2.0)
        throw ParameterError("verify_group_intertwine: p in (1, 2] required");
    double pp = p / (p - 1.0);
    // both sides by the truncated-integral definition, not the closed forms
    auto numeric_transform = [&](const FnExpr& g, double w) -> Complex {
        double R = 60.0;
        auto integrand = [&](double x) { return std::exp(Complex(0.0, -x * w)) * g.eval(x); };
        return integrate_finite(integrand, -R, R, q).value;
    };
    std::vector<double> freqs;
    for (double x = -6.0; x <= 6.0 + 1e-12; x += 0.5) freqs.push_back(x);
    FnExpr moved = group_action(GroupElement{t, p}, f);
    double worst = 0.0;
    for (double w : freqs) {
        Complex lhs = numeric_transform(moved, w);
        // T_{-t,p'} hat f evaluated at w: e^{t/p'} hat f(e^{t} w)
        Complex rhs = std::exp(t / pp) * numeric_transform(f, std::exp(t) * w);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

namespace {

// Moments M_k = int_0^inf u^k f(u) du of an even Gaussian-family function.
double gaussian_moment(const FnExpr& f, int k) {
    if (const auto* g = std::get_if<Gaussian>(&f.node)) {
        // int_0^inf u^k e^{-u^2/(2 s^2)} du = 2^((k-1)/2) s^(k+1) Gamma((k+1)/2)
        return std::pow(2.0, (k - 1.0) / 2.0) * std::pow(g->sigma, k + 1.0) *
               std::exp(std::lgamma((k + 1.0) / 2.0));
    }
    const auto& lc = std::get<LinComb>(f.node);
    double m = 0.0;
    for (size_t i = 0; i < lc.parts.size(); ++i)
        m += lc.coefs[i].real() * gaussian_moment(lc.parts[i], k);
    return m;
}

double binomial_real(double a, int k) {
    double r = 1.0;
    for (int j = 0; j < k; ++j) r *= (a - j) / (j + 1.0);
    return r;
}

}  // namespace

double verify_cesaro_intertwine(double beta, const FnExpr& f, IntertwineDirection dir,
                                const QuadSpec& q) {
    if (!gaussian_family(f))
        throw UnsupportedFunctionError("verify_cesaro_intertwine: Gaussian family only");
    OperatorSpec forward{OperatorKind::Cesaro, beta, Domain::RealLine, 2.0};
    OperatorSpec dual{OperatorKind::CesaroDual, beta, Domain::RealLine, 2.0};
    OperatorInput in = OperatorInput::from(f);
    FnExpr hat = gaussian_transform(f);
    OperatorInput hat_in = OperatorInput::from(hat);

    std::vector<double> freqs = {0.2, 0.35, 0.6, 1.0, 1.7, 2.8, 4.0, 5.0};
    double worst = 0.0;
    if (dir == IntertwineDirection::Forward) {
        // image C_beta f is even with 1/x tails; no singularity at 0
        EvenImage img;
        img.radius = 400.0;
        img.eval = [&](double x) {
            return (x == 0.0) ? f.eval(0.0).real() : cesaro_apply(forward, in, x, q).real();
        };
        img.tail_coefs.resize(4);
        for (int k = 0; k < 4; ++k)
            img.tail_coefs[k] = beta * ((k % 2 == 0) ? 1.0 : -1.0) *
                                binomial_real(beta - 1.0, k) * gaussian_moment(f, k);
        for (double w : freqs) {
            double lhs = fourier_even_transform(img, w, q);
            Complex rhs = cesaro_dual_apply(dual, hat_in, w, q);
            worst = std::max(worst, std::abs(lhs - rhs.real()));
        }
        return worst;
    }
    // dual direction: image C*_beta f has a log singularity at 0, Gaussian tails
    EvenImage img;
    img.radius = 50.0;
    img.log_coef = beta * f.eval(0.0).real();
    img.eval = [&](double x) { return cesaro_dual_apply(dual, in, x, q).real(); };
    for (double w : freqs) {
        double lhs = fourier_even_transform(img, w, q);
        Complex rhs = cesaro_apply(forward, hat_in, w, q);
        worst = std::max(worst, std::abs(lhs - rhs.real()));
    }
    return worst;
}

double moment_derivative_check(int n, const FnExpr& f, const QuadSpec& q) {
    if (n < 1 || n > 2) throw ParameterError("moment_derivative_check: n in {1, 2}");
    if (!gaussian_family(f))
        throw UnsupportedFunctionError("moment_derivative_check: Gaussian family only");
    FnExpr hat = gaussian_transform(f);
    double R = 60.0;
    auto transform_of = [&](const std::function<Complex(double)>& g, double t) -> Complex {
        auto integrand = [&](double x) { return std::exp(Complex(0.0, -x * t)) * g(x); };
        return integrate_finite(integrand, -R, R, q).value;
    };
    std::vector<double> ts = {0.3, 1.0, 2.0};
    double worst = 0.0;
    Complex mi = (n == 1) ? Complex(0.0, -1.0) : Complex(-1.0, 0.0);  // (-i)^n
    for (double t : ts) {
        Complex lhs;
        double h = 1e-2;
        if (n == 1) {
            lhs = Complex(0.0, t) *
                  ((-hat.eval(t + 2 * h) + 8.0 * hat.eval(t + h) - 8.0 * hat.eval(t - h) +
                    hat.eval(t - 2 * h)) /
                   (12.0 * h));
        } else {
            Complex d2 = (-hat.eval(t + 2 * h) + 16.0 * hat.eval(t + h) - 30.0 * hat.eval(t) +
                          16.0 * hat.eval(t - h) - hat.eval(t - 2 * h)) /
                         (12.0 * h * h);
            lhs = Complex(-t * t, 0.0) * d2;
        }
        Complex rhs(0.0, 0.0);
        for (int j = 0; j <= n; ++j) {
            double cnj = binomial_real(n, j);
            double fac = 1.0;
            for (int m = j + 1; m <= n; ++m) fac *= m;  // n!/j!
            auto xjfj = [&](double x) -> Complex {
                Complex d = (j == 0) ? f.eval(x)
                                     : (j == 1 ? f.derivative_at(x) : f.second_derivative_at(x));
                return std::pow(x, j) * d;
            };
            rhs += cnj * fac * transform_of(xjfj, t);
        }
        rhs *= mi;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace cesarolab
