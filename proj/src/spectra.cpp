#include "cesarolab/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cesarolab {

FnExpr group_action(const GroupElement& g, const FnExpr& f) {
    g.validate();
    double scale = std::exp(-g.t);
    return f.dilated(scale).scaled(Complex(std::exp(-g.t / g.p), 0.0));
}

GridFn group_action(const GroupElement& g, const GridFn& f) {
    g.validate();
    // T f(s) = e^{-t/p} f(e^{-t} s): rescale the abscissae, no resampling.
    double stretch = std::exp(g.t);
    Complex amp(std::exp(-g.t / g.p), 0.0);
    std::vector<double> ts = f.abscissae();
    std::vector<Complex> vals = f.values();
    for (double& x : ts) x *= stretch;
    for (Complex& v : vals) v *= amp;
    return GridFn(std::move(ts), std::move(vals), f.domain());
}

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string SpectrumCurve::to_csv() const {
    std::ostringstream os;
    os << "t,re_w,im_w\n";
    for (size_t i = 0; i < params.size(); ++i)
        os << fmt17(params[i]) << ',' << fmt17(points[i].real()) << ','
           << fmt17(points[i].imag()) << '\n';
    return os.str();
}

std::string SpectrumCurve::to_json() const {
    nlohmann::json j;
    j["kind"] = (meta.kind == OperatorKind::Cesaro) ? "cesaro" : "cesaro-dual";
    j["beta"] = meta.beta;
    j["p"] = meta.p;
    j["closure_point"] = 0.0;
    nlohmann::json t = nlohmann::json::array(), re = nlohmann::json::array(),
                   im = nlohmann::json::array();
    for (size_t i = 0; i < params.size(); ++i) {
        t.push_back(params[i]);
        re.push_back(points[i].real());
        im.push_back(points[i].imag());
    }
    j["t"] = t;
    j["re_w"] = re;
    j["im_w"] = im;
    return j.dump();
}

SpectrumCurve spectral_curve(const OperatorSpec& spec, double t_min, double t_max, int n) {
    spec.validate();
    if (n < 2) throw ParameterError("spectral_curve: n must be >= 2");
    if (!(t_min < t_max)) throw ParameterError("spectral_curve: empty parameter range");
    double a = (spec.kind == OperatorKind::Cesaro) ? 1.0 - 1.0 / spec.p : 1.0 / spec.p;
    if (!(a > 0)) throw PoleError("spectral_curve: Gamma argument hit a pole");
    double gb1 = std::exp(std::lgamma(spec.beta + 1.0));
    SpectrumCurve curve;
    curve.meta = spec;
    curve.params.resize(n);
    curve.points.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = t_min + (t_max - t_min) * i / (n - 1.0);
        curve.params[i] = t;
        curve.points[i] = gb1 * gamma_ratio(Complex(a, t), Complex(spec.beta + a, t));
    }
    return curve;
}

double circle_check(const SpectrumCurve& curve) {
    if (std::abs(curve.meta.beta - 1.0) > 1e-14)
        throw ParameterError("circle_check: the circle law holds for beta = 1 only");
    double p = curve.meta.p;
    double c = (curve.meta.kind == OperatorKind::Cesaro) ? p / (2.0 * (p - 1.0)) : p / 2.0;
    double worst = 0.0;
    for (Complex w : curve.points) worst = std::max(worst, std::abs(std::abs(w - c) - c));
    return worst;
}

double operator_norm(const OperatorSpec& spec) {
    spec.validate();
    double a = (spec.kind == OperatorKind::Cesaro) ? 1.0 - 1.0 / spec.p : 1.0 / spec.p;
    return std::exp(std::lgamma(spec.beta + 1.0) + std::lgamma(a) - std::lgamma(spec.beta + a));
}

double empirical_norm_ratio(const OperatorSpec& spec, const FnExpr& f,
                            const SobolevParams& params, const QuadSpec& q) {
    spec.validate();
    params.validate();
    if (params.domain != Domain::HalfLine || f.domain() != Domain::HalfLine)
        throw DomainError("empirical_norm_ratio: half-line test family only");
    PointFn df = d_alpha(f, params.alpha, q);
    OperatorInput in;
    in.eval = df;
    in.power_at_zero = (params.alpha == 0.0) ? f.power_at_zero() : params.alpha;
    in.domain = Domain::HalfLine;
    in.continuous_at_zero = in.power_at_zero >= 0.0;
    auto image = [&](double t) -> Complex {
        return (spec.kind == OperatorKind::Cesaro) ? cesaro_apply(spec, in, t, q)
                                                   : cesaro_dual_apply(spec, in, t, q);
    };
    // the outer norm integral must not chase the inner quadrature's noise floor
    QuadSpec outer = q;
    outer.rel_tol = std::max(q.rel_tol, 1e-7);
    outer.abs_tol = std::max(q.abs_tol, 1e-9);
    double num = lp_integral_halfline(image, params.p, 0.0, outer);
    double den = lp_integral_halfline(df, params.p, 0.0, outer);
    return std::pow(num / den, 1.0 / params.p);
}

GroupSpectrumReport group_spectrum_check(double p, double t, const std::vector<FnExpr>& fs,
                                         const QuadSpec& q) {
    GroupSpectrumReport rep;
    SobolevParams l2{0.0, p, Domain::HalfLine};
    const Complex mus[] = {Complex(0.1, 0.0), Complex(0.5, 0.3), Complex(1.0, 0.0)};
    const double sample_ts[] = {0.5, 1.0, 2.0};
    for (const FnExpr& f : fs) {
        double base = sobolev_norm(f, l2, q);
        double moved = sobolev_norm(group_action(GroupElement{t, p}, f), l2, q);
        rep.isometry_residual = std::max(rep.isometry_residual, std::abs(moved - base) / base);
        OperatorInput in = OperatorInput::from(f);
        for (Complex mu : mus) {
            auto rf = [&](double s) { return resolvent_apply(mu, p, in, s, q); };
            for (double ts : sample_ts) {
                // Lambda g = -s g' - g/p by a centered stencil on the resolvent image
                double h = 0.01 * ts;
                Complex d1 = (-rf(ts + 2 * h) + 8.0 * rf(ts + h) - 8.0 * rf(ts - h) +
                              rf(ts - 2 * h)) /
                             (12.0 * h);
                Complex lam = -ts * d1 - rf(ts) / p;
                Complex resid = mu * rf(ts) - lam - f.eval(ts);
                rep.resolvent_residual = std::max(rep.resolvent_residual, std::abs(resid));
            }
        }
    }
    rep.pass = rep.isometry_residual <= 1e-8 && rep.resolvent_residual <= 1e-6;
    return rep;
}

}  // namespace cesarolab
