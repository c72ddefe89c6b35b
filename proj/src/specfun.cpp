#include "cesarolab/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace cesarolab {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos g = 607/128, 15 terms. Relative error ~2e-16 on Re z >= 1/2.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

bool near_nonpositive_integer(Complex z, double tol = 1e-13) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol * (1.0 + std::abs(z.real()));
}

bool near_integer(double x, double tol = 1e-8) { return std::abs(x - std::round(x)) <= tol; }

// Lanczos sum, valid for Re z >= 0.5.
Complex log_gamma_lanczos(Complex z) {
    Complex zm1 = z - 1.0;
    Complex s(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k) s += kLanczos[k] / (zm1 + static_cast<double>(k));
    Complex t = zm1 + (kLanczosG + 0.5);
    return (zm1 + 0.5) * std::log(t) - t + std::log(std::sqrt(2.0 * kPi) * s);
}

struct SeriesResult {
    Complex value;
    bool converged;
};

// Kahan-compensated 2F1 series sum_{n} (a)_n (b)_n / ((c)_n n!) x^n.
SeriesResult f21_series(Complex a, Complex b, Complex c, double x, int cap = 400000) {
    Complex term(1.0, 0.0), sum(1.0, 0.0), comp(0.0, 0.0);
    for (int n = 0; n < cap; ++n) {
        double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) * x / ((c + dn) * (dn + 1.0));
        Complex y = term - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= 1e-17 * (1.0 + std::abs(sum))) return {sum, true};
    }
    return {sum, false};
}

// Finite sum when a (or b) is a non-positive integer: exact for any x.
Complex f21_terminating(Complex a, Complex b, Complex c, double x) {
    if (!near_nonpositive_integer(a)) std::swap(a, b);
    int nterms = static_cast<int>(std::lround(-a.real()));
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    for (int n = 0; n < nterms; ++n) {
        double dn = static_cast<double>(n);
        if (std::abs(c + dn) < 1e-13)
            throw ParameterError("2F1: c pole reached inside a terminating series");
        term *= (a + dn) * (b + dn) * x / ((c + dn) * (dn + 1.0));
        sum += term;
    }
    return sum;
}

Complex pochhammer(Complex z, int k) {
    Complex r(1.0, 0.0);
    for (int j = 0; j < k; ++j) r *= (z + static_cast<double>(j));
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int j = 2; j <= n; ++j) r *= j;
    return r;
}

// Connection in w = 1-x, generic case: s = c-a-b not an integer.
Complex f21_near1_generic(Complex a, Complex b, Complex c, double w) {
    Complex s = c - a - b;
    Complex A = std::exp(log_gamma(c) + log_gamma(s)) * reciprocal_gamma(c - a) *
                reciprocal_gamma(c - b);
    Complex B = std::exp(log_gamma(c) + log_gamma(-s)) * reciprocal_gamma(a) *
                reciprocal_gamma(b);
    SeriesResult f1 = f21_series(a, b, 1.0 - s, w);
    SeriesResult f2 = f21_series(c - a, c - b, 1.0 + s, w);
    if (!f1.converged || !f2.converged)
        throw ConvergenceError("2F1 connection series stalled near x = 1");
    return A * f1.value + std::pow(Complex(w, 0.0), s) * B * f2.value;
}

// c = a+b: logarithmic case.
Complex f21_near1_log0(Complex a, Complex b, double w) {
    double lw = std::log(w);
    Complex sum(0.0, 0.0), term(1.0, 0.0);
    for (int k = 0; k < 200000; ++k) {
        double dk = static_cast<double>(k);
        Complex brack = 2.0 * digamma(Complex(dk + 1.0, 0.0)) - digamma(a + dk) -
                        digamma(b + dk) - lw;
        sum += term * brack;
        Complex next = term * (a + dk) * (b + dk) * w / ((dk + 1.0) * (dk + 1.0));
        if (std::abs(next) * (std::abs(brack) + 10.0) <= 1e-17 * (1.0 + std::abs(sum))) {
            term = next;
            break;
        }
        term = next;
        if (k == 200000 - 1) throw ConvergenceError("2F1 log-case series stalled");
    }
    return std::exp(log_gamma(a + b)) * reciprocal_gamma(a) * reciprocal_gamma(b) * sum;
}

// c = a+b-m, m >= 1: finite part in w^(k-m) plus a log series.
Complex f21_near1_logm(Complex a, Complex b, int m, double w) {
    Complex c = a + b - static_cast<double>(m);
    Complex fin(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
        Complex coef = pochhammer(a - static_cast<double>(m), k) *
                       pochhammer(b - static_cast<double>(m), k) /
                       (factorial(k) * pochhammer(Complex(1.0 - m, 0.0), k));
        fin += coef * std::pow(w, k - m);
    }
    fin *= std::exp(log_gamma(Complex(m, 0.0)) + log_gamma(c)) * reciprocal_gamma(a) *
           reciprocal_gamma(b);

    double lw = std::log(w);
    Complex sum(0.0, 0.0);
    Complex term = Complex(1.0 / factorial(m), 0.0);
    for (int k = 0; k < 200000; ++k) {
        double dk = static_cast<double>(k);
        Complex brack = lw - digamma(Complex(dk + 1.0, 0.0)) -
                        digamma(Complex(dk + m + 1.0, 0.0)) + digamma(a + dk) + digamma(b + dk);
        sum += term * brack;
        Complex next = term * (a + dk) * (b + dk) * w / ((dk + 1.0) * (dk + m + 1.0));
        if (std::abs(next) * (std::abs(brack) + 10.0) <= 1e-17 * (1.0 + std::abs(sum))) break;
        term = next;
        if (k == 200000 - 1) throw ConvergenceError("2F1 log-case series stalled");
    }
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    Complex logpart = -sign * std::exp(log_gamma(c)) * reciprocal_gamma(a - static_cast<double>(m)) *
                      reciprocal_gamma(b - static_cast<double>(m)) * sum;
    return fin + logpart;
}

Complex f21_dispatch(Complex a, Complex b, Complex c, double x, double one_minus_x);

// Entry for arguments already reduced to x in (-0.5, 1).
Complex f21_core(Complex a, Complex b, Complex c, double x, double one_minus_x) {
    if (x <= 0.9) {
        SeriesResult r = f21_series(a, b, c, x);
        if (!r.converged) throw ConvergenceError("2F1 series exceeded its iteration cap");
        return r.value;
    }
    // Near-unity connection, w = 1-x known exactly.
    double w = one_minus_x;
    Complex s = c - a - b;
    bool s_int = std::abs(s.imag()) < 1e-8 && near_integer(s.real());
    if (!s_int) return f21_near1_generic(a, b, c, w);
    int m = static_cast<int>(std::lround(s.real()));
    if (m > 0) {
        // Euler transform flips the sign of s.
        Complex e = f21_dispatch(c - a, c - b, c, x, one_minus_x);
        return std::pow(Complex(w, 0.0), s) * e;
    }
    if (m == 0) return f21_near1_log0(a, b, w);
    return f21_near1_logm(a, b, -m, w);
}

Complex f21_dispatch(Complex a, Complex b, Complex c, double x, double one_minus_x) {
    if (near_nonpositive_integer(c) && !near_nonpositive_integer(a) && !near_nonpositive_integer(b))
        throw ParameterError("2F1: c is a non-positive integer");
    if (x == 0.0) return Complex(1.0, 0.0);
    if (near_nonpositive_integer(a) || near_nonpositive_integer(b))
        return f21_terminating(a, b, c, x);
    if (x <= -0.5) {
        // Pfaff: argument y = x/(x-1) lands in (1/3, 1).
        double y = x / (x - 1.0);
        double one_minus_y = -1.0 / (x - 1.0);
        Complex val = f21_core(a, c - b, c, y, one_minus_y);
        return std::pow(Complex(1.0 - x, 0.0), -a) * val;
    }
    return f21_core(a, b, c, x, one_minus_x);
}

}  // namespace

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z)) {
        std::ostringstream os;
        os << "log_gamma: pole at z = " << z.real();
        throw PoleError(os.str());
    }
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // Shift into the Lanczos half-plane; keeps |sin| factors bounded for large |Im|.
    int k = static_cast<int>(std::ceil(0.5 - z.real()));
    Complex s(0.0, 0.0);
    for (int j = 0; j < k; ++j) s += std::log(z + static_cast<double>(j));
    return log_gamma_lanczos(z + static_cast<double>(k)) - s;
}

Complex gamma_ratio(Complex z, Complex w) { return std::exp(log_gamma(z) - log_gamma(w)); }

Complex reciprocal_gamma(Complex z) {
    if (near_nonpositive_integer(z)) return Complex(0.0, 0.0);
    return std::exp(-log_gamma(z));
}

Complex beta_fn(Complex x, Complex y) { return gamma_ratio(x, x + y) * std::exp(log_gamma(y)); }

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z)) throw PoleError("digamma: pole at a non-positive integer");
    Complex shift(0.0, 0.0);
    while (z.real() < 8.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    Complex inv = 1.0 / z, inv2 = inv * inv;
    // Bernoulli tail B_2n / (2n z^2n).
    Complex series = inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
                     inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * 691.0 / 32760.0)))));
    return shift + std::log(z) - 0.5 * inv - series;
}

Complex gauss_2f1(Complex a, Complex b, Complex c, double x) {
    if (!(x < 1.0)) throw ParameterError("2F1: x must be < 1");
    return f21_dispatch(a, b, c, x, 1.0 - x);
}

Complex gauss_2f1_w(Complex a, Complex b, Complex c, double one_minus_x) {
    if (!(one_minus_x > 0.0)) throw ParameterError("2F1: x must be < 1");
    return f21_dispatch(a, b, c, 1.0 - one_minus_x, one_minus_x);
}

Complex mittag_leffler(double beta, Complex z) {
    if (beta <= 0.0) throw ParameterError("mittag_leffler: beta must be > 0");
    if (std::abs(z) > 50.0)
        throw ConvergenceError("mittag_leffler: |z| beyond the series envelope");
    Complex sum(0.0, 0.0), comp(0.0, 0.0);
    double az = std::abs(z);
    Complex lz = (az > 0.0) ? std::log(z) : Complex(0.0, 0.0);
    double last = std::numeric_limits<double>::max();
    int shrinking = 0;
    for (int n = 0; n < 10000; ++n) {
        Complex term;
        if (n == 0) {
            term = Complex(1.0, 0.0);
        } else {
            if (az == 0.0) return sum;
            term = std::exp(static_cast<double>(n) * lz - log_gamma(Complex(beta * n + 1.0, 0.0)));
        }
        double mag = std::abs(term);
        if (!std::isfinite(mag) || mag > 1e300)
            throw ConvergenceError("mittag_leffler: term overflow");
        Complex y = term - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        shrinking = (mag < last) ? shrinking + 1 : 0;
        last = mag;
        if (mag <= 1e-17 * (1.0 + std::abs(sum)) && shrinking >= 3) return sum;
    }
    throw ConvergenceError("mittag_leffler: series did not meet tolerance");
}

}  // namespace cesarolab
