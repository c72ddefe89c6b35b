#include "cesarolab/fnexpr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cesarolab {

namespace {

using nlohmann::json;

void require(bool cond, const char* msg) {
    if (!cond) throw ParameterError(msg);
}

Complex ml_derivative_series(double beta, Complex lambda, double t, int order) {
    // d^order/dt^order E_{beta,1}(lambda t^beta), term-wise.
    if (t < 0) throw DomainError("mittag-leffler: t < 0");
    Complex sum(0.0, 0.0);
    for (int n = 1; n < 4000; ++n) {
        double e = beta * n - order;
        double fac = 1.0;
        for (int j = 0; j < order; ++j) fac *= (beta * n - j);
        if (t == 0.0 && e != 0.0) {
            if (e < 0.0) throw DomainError("mittag-leffler derivative singular at 0");
            continue;
        }
        Complex term = std::pow(lambda, n) * fac * std::pow(t, e) *
                       reciprocal_gamma(Complex(beta * n + 1.0, 0.0));
        sum += term;
        if (n > 4 && std::abs(term) <= 1e-17 * (1.0 + std::abs(sum))) return sum;
    }
    throw ConvergenceError("mittag-leffler derivative series stalled");
}

}  // namespace

FnExpr FnExpr::power_kernel(double gamma) {
    require(gamma > 0, "PowerKernel: gamma must be > 0");
    return FnExpr{PowerKernel{gamma}};
}

FnExpr FnExpr::exponential(Complex lambda) {
    require(lambda.real() > 0, "Exponential: Re lambda must be > 0");
    return FnExpr{Exponential{lambda}};
}

FnExpr FnExpr::shifted_power(double a, Complex beta) {
    require(a > 0, "ShiftedPower: a must be > 0");
    require(beta.real() > 0, "ShiftedPower: Re beta must be > 0");
    return FnExpr{ShiftedPower{a, beta}};
}

FnExpr FnExpr::mittag_leffler_fn(double beta, Complex lambda) {
    require(beta > 0, "MittagLefflerFn: beta must be > 0");
    return FnExpr{MittagLefflerFn{beta, lambda}};
}

FnExpr FnExpr::gaussian(double sigma) {
    require(sigma > 0, "Gaussian: sigma must be > 0");
    return FnExpr{Gaussian{sigma}};
}

FnExpr FnExpr::lin_comb(std::vector<Complex> coefs, std::vector<FnExpr> parts) {
    require(!parts.empty() && coefs.size() == parts.size(),
            "LinComb: needs equally many coefficients and members");
    Domain d = parts.front().domain();
    for (const FnExpr& p : parts)
        require(p.domain() == d, "LinComb: members must share a domain");
    return FnExpr{LinComb{std::move(coefs), std::move(parts)}};
}

Domain FnExpr::domain() const {
    return std::visit(
        [](const auto& n) -> Domain {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Gaussian>)
                return Domain::RealLine;
            else if constexpr (std::is_same_v<T, LinComb>)
                return n.parts.front().domain();
            else
                return Domain::HalfLine;
        },
        node);
}

Complex FnExpr::eval(double t) const {
    return std::visit(
        [t](const auto& n) -> Complex {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PowerKernel>) {
                if (t < 0) throw DomainError("PowerKernel: t < 0");
                if (t == 0.0) {
                    if (n.gamma < 1.0) throw DomainError("PowerKernel: singular at t = 0");
                    return n.gamma == 1.0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                }
                return std::pow(t, n.gamma - 1.0) * reciprocal_gamma(Complex(n.gamma, 0.0));
            } else if constexpr (std::is_same_v<T, Exponential>) {
                if (t < 0) throw DomainError("Exponential: t < 0");
                return std::exp(-n.lambda * t);
            } else if constexpr (std::is_same_v<T, ShiftedPower>) {
                if (t < 0) throw DomainError("ShiftedPower: t < 0");
                return std::exp(-n.beta * std::log(n.a + t));
            } else if constexpr (std::is_same_v<T, MittagLefflerFn>) {
                if (t < 0) throw DomainError("MittagLefflerFn: t < 0");
                return mittag_leffler(n.beta, n.lambda * std::pow(t, n.beta));
            } else if constexpr (std::is_same_v<T, Gaussian>) {
                return std::exp(Complex(-t * t / (2.0 * n.sigma * n.sigma), 0.0));
            } else {
                Complex s(0.0, 0.0);
                for (size_t i = 0; i < n.parts.size(); ++i) s += n.coefs[i] * n.parts[i].eval(t);
                return s;
            }
        },
        node);
}

Complex FnExpr::derivative_at(double t) const {
    return std::visit(
        [t, this](const auto& n) -> Complex {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PowerKernel>) {
                if (t <= 0) throw DomainError("PowerKernel derivative needs t > 0");
                return (n.gamma - 1.0) * std::pow(t, n.gamma - 2.0) *
                       reciprocal_gamma(Complex(n.gamma, 0.0));
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return -n.lambda * std::exp(-n.lambda * t);
            } else if constexpr (std::is_same_v<T, ShiftedPower>) {
                return -n.beta * std::exp(-(n.beta + 1.0) * std::log(n.a + t));
            } else if constexpr (std::is_same_v<T, MittagLefflerFn>) {
                return ml_derivative_series(n.beta, n.lambda, t, 1);
            } else if constexpr (std::is_same_v<T, Gaussian>) {
                return (-t / (n.sigma * n.sigma)) * eval(t);
            } else {
                Complex s(0.0, 0.0);
                for (size_t i = 0; i < n.parts.size(); ++i)
                    s += n.coefs[i] * n.parts[i].derivative_at(t);
                return s;
            }
        },
        node);
}

Complex FnExpr::second_derivative_at(double t) const {
    return std::visit(
        [t, this](const auto& n) -> Complex {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PowerKernel>) {
                if (t <= 0) throw DomainError("PowerKernel derivative needs t > 0");
                return (n.gamma - 1.0) * (n.gamma - 2.0) * std::pow(t, n.gamma - 3.0) *
                       reciprocal_gamma(Complex(n.gamma, 0.0));
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return n.lambda * n.lambda * std::exp(-n.lambda * t);
            } else if constexpr (std::is_same_v<T, ShiftedPower>) {
                return n.beta * (n.beta + 1.0) * std::exp(-(n.beta + 2.0) * std::log(n.a + t));
            } else if constexpr (std::is_same_v<T, MittagLefflerFn>) {
                return ml_derivative_series(n.beta, n.lambda, t, 2);
            } else if constexpr (std::is_same_v<T, Gaussian>) {
                double s2 = n.sigma * n.sigma;
                return (t * t / (s2 * s2) - 1.0 / s2) * eval(t);
            } else {
                Complex s(0.0, 0.0);
                for (size_t i = 0; i < n.parts.size(); ++i)
                    s += n.coefs[i] * n.parts[i].second_derivative_at(t);
                return s;
            }
        },
        node);
}

double FnExpr::power_at_zero() const {
    return std::visit(
        [](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PowerKernel>)
                return n.gamma - 1.0;
            else if constexpr (std::is_same_v<T, LinComb>) {
                double e = 0.0;
                for (const FnExpr& p : n.parts) e = std::min(e, p.power_at_zero());
                return e;
            } else
                return 0.0;
        },
        node);
}

bool FnExpr::smooth_at_zero() const {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, MittagLefflerFn>) {
                return std::abs(n.beta - std::round(n.beta)) < 1e-12;
            } else if constexpr (std::is_same_v<T, LinComb>) {
                for (const FnExpr& p : n.parts)
                    if (!p.smooth_at_zero()) return false;
                return true;
            } else {
                return true;
            }
        },
        node);
}

FnExpr FnExpr::scaled(Complex c) const {
    if (const auto* lc = std::get_if<LinComb>(&node)) {
        LinComb out = *lc;
        for (Complex& k : out.coefs) k *= c;
        return FnExpr{std::move(out)};
    }
    return FnExpr{LinComb{{c}, {*this}}};
}

FnExpr FnExpr::dilated(double s) const {
    require(s > 0, "dilated: scale must be > 0");
    return std::visit(
        [s](const auto& n) -> FnExpr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PowerKernel>) {
                return power_kernel(n.gamma).scaled(std::pow(s, n.gamma - 1.0));
            } else if constexpr (std::is_same_v<T, Exponential>) {
                return exponential(n.lambda * s);
            } else if constexpr (std::is_same_v<T, ShiftedPower>) {
                Complex c = std::exp(-n.beta * std::log(s));
                return shifted_power(n.a / s, n.beta).scaled(c);
            } else if constexpr (std::is_same_v<T, MittagLefflerFn>) {
                return mittag_leffler_fn(n.beta, n.lambda * std::pow(s, n.beta));
            } else if constexpr (std::is_same_v<T, Gaussian>) {
                return gaussian(n.sigma / s);
            } else {
                LinComb out;
                for (size_t i = 0; i < n.parts.size(); ++i) {
                    FnExpr d = n.parts[i].dilated(s);
                    if (const auto* inner = std::get_if<LinComb>(&d.node)) {
                        for (size_t j = 0; j < inner->parts.size(); ++j) {
                            out.coefs.push_back(n.coefs[i] * inner->coefs[j]);
                            out.parts.push_back(inner->parts[j]);
                        }
                    } else {
                        out.coefs.push_back(n.coefs[i]);
                        out.parts.push_back(std::move(d));
                    }
                }
                return FnExpr{std::move(out)};
            }
        },
        node);
}

FnExpr FnExpr::reflected() const {
    return std::visit(
        [this](const auto& n) -> FnExpr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                return *this;
            } else if constexpr (std::is_same_v<T, LinComb>) {
                LinComb out = n;
                for (size_t i = 0; i < out.parts.size(); ++i)
                    out.parts[i] = out.parts[i].reflected();
                return FnExpr{std::move(out)};
            } else {
                throw UnsupportedFunctionError("reflected: only real-line members");
            }
        },
        node);
}

namespace {

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    return Complex(j.at("re").get<double>(), j.value("im", 0.0));
}

json fn_to_json(const FnExpr& f) {
    return std::visit(
        [](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PowerKernel>)
                return json{{"type", "powerkernel"}, {"gamma", n.gamma}};
            else if constexpr (std::is_same_v<T, Exponential>)
                return json{{"type", "exp"}, {"lambda", complex_to_json(n.lambda)}};
            else if constexpr (std::is_same_v<T, ShiftedPower>)
                return json{{"type", "shiftedpower"}, {"a", n.a}, {"beta", complex_to_json(n.beta)}};
            else if constexpr (std::is_same_v<T, MittagLefflerFn>)
                return json{{"type", "ml"}, {"beta", n.beta}, {"lambda", complex_to_json(n.lambda)}};
            else if constexpr (std::is_same_v<T, Gaussian>)
                return json{{"type", "gauss"}, {"sigma", n.sigma}};
            else {
                json terms = json::array();
                for (size_t i = 0; i < n.parts.size(); ++i)
                    terms.push_back(json{{"coef", complex_to_json(n.coefs[i])},
                                         {"fn", fn_to_json(n.parts[i])}});
                return json{{"type", "lincomb"}, {"terms", terms}};
            }
        },
        f.node);
}

FnExpr fn_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "powerkernel") return FnExpr::power_kernel(j.at("gamma").get<double>());
    if (type == "exp") return FnExpr::exponential(complex_from_json(j.at("lambda")));
    if (type == "shiftedpower")
        return FnExpr::shifted_power(j.at("a").get<double>(), complex_from_json(j.at("beta")));
    if (type == "ml")
        return FnExpr::mittag_leffler_fn(j.at("beta").get<double>(),
                                         complex_from_json(j.at("lambda")));
    if (type == "gauss") return FnExpr::gaussian(j.at("sigma").get<double>());
    if (type == "lincomb") {
        std::vector<Complex> coefs;
        std::vector<FnExpr> parts;
        for (const json& term : j.at("terms")) {
            coefs.push_back(complex_from_json(term.at("coef")));
            parts.push_back(fn_from_json(term.at("fn")));
        }
        return FnExpr::lin_comb(std::move(coefs), std::move(parts));
    }
    throw ParameterError("FnExpr: unknown type tag '" + type + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

FnExpr parse_term(const std::string& term) {
    double coef = 1.0;
    std::string body = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
        coef = std::stod(term.substr(0, star));
        body = term.substr(star + 1);
    }
    std::vector<std::string> parts = split(body, ':');
    const std::string& kind = parts[0];
    auto num = [&](size_t i) {
        if (i >= parts.size()) throw ParameterError("descriptor '" + term + "': missing parameter");
        return std::stod(parts[i]);
    };
    FnExpr f = [&]() {
        if (kind == "exp") return FnExpr::exponential(Complex(num(1), 0.0));
        if (kind == "powerkernel") return FnExpr::power_kernel(num(1));
        if (kind == "shiftedpower") return FnExpr::shifted_power(num(1), Complex(num(2), 0.0));
        if (kind == "ml") return FnExpr::mittag_leffler_fn(num(1), Complex(num(2), 0.0));
        if (kind == "gauss") return FnExpr::gaussian(num(1));
        throw ParameterError("descriptor: unknown function kind '" + kind + "'");
    }();
    return coef == 1.0 ? f : f.scaled(Complex(coef, 0.0));
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string FnExpr::to_json() const { return fn_to_json(*this).dump(); }

FnExpr FnExpr::from_json(const std::string& text) { return fn_from_json(json::parse(text)); }

FnExpr FnExpr::parse(const std::string& descriptor) {
    std::vector<std::string> terms = split(descriptor, '+');
    if (terms.size() == 1) return parse_term(terms[0]);
    std::vector<Complex> coefs;
    std::vector<FnExpr> parts;
    for (const std::string& t : terms) {
        FnExpr f = parse_term(t);
        if (const auto* lc = std::get_if<LinComb>(&f.node); lc && lc->parts.size() == 1) {
            coefs.push_back(lc->coefs[0]);
            parts.push_back(lc->parts[0]);
        } else {
            coefs.push_back(Complex(1.0, 0.0));
            parts.push_back(std::move(f));
        }
    }
    return lin_comb(std::move(coefs), std::move(parts));
}

GridFn::GridFn(std::vector<double> abscissae, std::vector<Complex> values, Domain domain)
    : ts_(std::move(abscissae)), vals_(std::move(values)), domain_(domain) {
    if (ts_.size() != vals_.size() || ts_.size() < 4)
        throw ParameterError("GridFn: needs >= 4 matching abscissae/values");
    for (size_t i = 1; i < ts_.size(); ++i)
        if (!(ts_[i] > ts_[i - 1]))
            throw ParameterError("GridFn: abscissae must be strictly increasing");
    for (Complex v : vals_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ParameterError("GridFn: values must be finite");
}

Complex GridFn::eval(double t) const {
    if (t < ts_.front() || t > ts_.back())
        throw DomainError("GridFn: evaluation outside the grid is an error");
    auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    size_t hi = static_cast<size_t>(it - ts_.begin());
    size_t i0 = (hi < 2) ? 0 : hi - 2;
    if (i0 + 4 > ts_.size()) i0 = ts_.size() - 4;
    Complex acc(0.0, 0.0);
    for (size_t j = i0; j < i0 + 4; ++j) {
        double lj = 1.0;
        for (size_t k = i0; k < i0 + 4; ++k)
            if (k != j) lj *= (t - ts_[k]) / (ts_[j] - ts_[k]);
        acc += lj * vals_[j];
    }
    return acc;
}

std::string GridFn::to_csv() const {
    std::ostringstream os;
    os << "t,re,im\n";
    for (size_t i = 0; i < ts_.size(); ++i)
        os << fmt17(ts_[i]) << ',' << fmt17(vals_[i].real()) << ',' << fmt17(vals_[i].imag())
           << '\n';
    return os.str();
}

GridFn GridFn::from_csv(const std::string& text, Domain domain) {
    std::istringstream is(text);
    std::string line;
    std::vector<double> ts;
    std::vector<Complex> vals;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cols = split(line, ',');
        if (cols.size() != 3) throw ParameterError("GridFn CSV: expected 3 columns");
        ts.push_back(std::stod(cols[0]));
        vals.emplace_back(std::stod(cols[1]), std::stod(cols[2]));
    }
    return GridFn(std::move(ts), std::move(vals), domain);
}

std::string GridFn::to_json() const {
    json j;
    j["domain"] = (domain_ == Domain::HalfLine) ? "half-line" : "real-line";
    json t = json::array(), re = json::array(), im = json::array();
    for (size_t i = 0; i < ts_.size(); ++i) {
        t.push_back(ts_[i]);
        re.push_back(vals_[i].real());
        im.push_back(vals_[i].imag());
    }
    j["t"] = t;
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

GridFn GridFn::from_json(const std::string& text) {
    json j = json::parse(text);
    Domain d = (j.at("domain").get<std::string>() == "half-line") ? Domain::HalfLine
                                                                  : Domain::RealLine;
    std::vector<double> ts = j.at("t").get<std::vector<double>>();
    std::vector<double> re = j.at("re").get<std::vector<double>>();
    std::vector<double> im = j.at("im").get<std::vector<double>>();
    if (re.size() != ts.size() || im.size() != ts.size())
        throw ParameterError("GridFn JSON: column lengths differ");
    std::vector<Complex> vals(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) vals[i] = Complex(re[i], im[i]);
    return GridFn(std::move(ts), std::move(vals), d);
}

std::vector<double> default_grid(Domain domain) {
    const int n = 512;
    std::vector<double> ts(n);
    if (domain == Domain::HalfLine) {
        double lo = std::log(1e-4), hi = std::log(1e4);
        for (int i = 0; i < n; ++i) ts[i] = std::exp(lo + (hi - lo) * i / (n - 1.0));
    } else {
        // symmetric tanh spacing on [-50, 50]; even count keeps 0 off the grid
        double c = 2.5, norm = std::tanh(c);
        for (int i = 0; i < n; ++i) {
            double u = -1.0 + 2.0 * (i + 0.5) / n;
            ts[i] = 50.0 * std::tanh(c * u) / norm;
        }
    }
    return ts;
}

}  // namespace cesarolab
