#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cesarolab/verify.hpp"

namespace {

using namespace cesarolab;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::filesystem::path resolve_output(const std::string& out, const std::string& fallback) {
    std::string path = out.empty() ? fallback : out;
    if (std::filesystem::path(path).is_absolute()) return path;
    if (const char* dir = std::getenv("CESAROLAB_OUT_DIR"))
        return std::filesystem::path(dir) / path;
    return path;
}

std::vector<double> parse_grid(const std::string& text) {
    // "log:lo:hi:n" or "lin:lo:hi:n"
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw ParameterError("grid: expected kind:lo:hi:n");
    double lo = std::stod(parts[1]), hi = std::stod(parts[2]);
    int n = std::stoi(parts[3]);
    if (n < 2 || !(lo < hi)) throw ParameterError("grid: need lo < hi and n >= 2");
    std::vector<double> ts(n);
    if (parts[0] == "log") {
        if (!(lo > 0)) throw ParameterError("grid: log spacing needs lo > 0");
        double a = std::log(lo), b = std::log(hi);
        for (int i = 0; i < n; ++i) ts[i] = std::exp(a + (b - a) * i / (n - 1.0));
    } else if (parts[0] == "lin") {
        for (int i = 0; i < n; ++i) ts[i] = lo + (hi - lo) * i / (n - 1.0);
    } else {
        throw ParameterError("grid: kind must be log or lin");
    }
    return ts;
}

FnExpr load_function(const std::string& descriptor, const std::string& config_path) {
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ParameterError("cannot open config file " + config_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return FnExpr::from_json(text);
    }
    if (descriptor.empty()) throw ParameterError("no function given (use --fn or --config)");
    return FnExpr::parse(descriptor);
}

OperatorKind parse_kind(const std::string& op) {
    if (op == "cesaro") return OperatorKind::Cesaro;
    if (op == "cesaro-dual") return OperatorKind::CesaroDual;
    throw ParameterError("--op must be cesaro or cesaro-dual");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path.string());
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"generalized Cesaro operators on weighted fractional Sobolev spaces"};
    app.require_subcommand(1);

    // ---- apply ----
    auto* apply = app.add_subcommand("apply", "evaluate an operator image");
    std::string ap_op = "cesaro", ap_fn, ap_config, ap_grid, ap_out, ap_format = "csv",
                ap_domain = "half-line";
    double ap_beta = 1.0, ap_p = 2.0, ap_at = std::numeric_limits<double>::quiet_NaN();
    apply->add_option("--op", ap_op, "cesaro | cesaro-dual");
    apply->add_option("--beta", ap_beta, "operator order beta > 0");
    apply->add_option("--p", ap_p, "integrability exponent");
    apply->add_option("--domain", ap_domain, "half-line | real-line");
    apply->add_option("--fn", ap_fn, "function descriptor, e.g. exp:1 or 0.5*gauss:1+1*gauss:2");
    apply->add_option("--config", ap_config, "JSON function descriptor file");
    apply->add_option("--grid", ap_grid, "evaluation grid, log:lo:hi:n or lin:lo:hi:n");
    apply->add_option("--at", ap_at, "single evaluation point (prints the value)");
    apply->add_option("--out", ap_out, "output path (default apply.csv / apply.json)");
    apply->add_option("--format", ap_format, "csv | json");

    // ---- spectrum ----
    auto* spectrum = app.add_subcommand("spectrum", "sample a spectral curve");
    std::string sp_op = "cesaro", sp_range = "-40:40", sp_out, sp_format = "csv";
    double sp_beta = 1.0, sp_p = 2.0;
    int sp_n = 1601;
    bool sp_circle = false;
    spectrum->add_option("--op", sp_op, "cesaro | cesaro-dual");
    spectrum->add_option("--beta", sp_beta, "operator order");
    spectrum->add_option("--p", sp_p, "integrability exponent");
    spectrum->add_option("--range", sp_range, "parameter range lo:hi");
    spectrum->add_option("--n", sp_n, "sample count");
    spectrum->add_flag("--circle-check", sp_circle, "print the beta = 1 circle deviation");
    spectrum->add_option("--out", sp_out, "output path");
    spectrum->add_option("--format", sp_format, "csv | json");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the identity check suites");
    std::string vf_suite = "all", vf_json;
    verify->add_option("--suite", vf_suite, "specfun | weyl | cesaro | spectra | fourier | all");
    verify->add_option("--json", vf_json, "write the machine-readable report here");

    // ---- norm ----
    auto* norm = app.add_subcommand("norm", "closed-form operator norms");
    std::string nm_op = "cesaro";
    double nm_beta = 1.0, nm_p = 2.0;
    bool nm_empirical = false;
    norm->add_option("--op", nm_op, "cesaro | cesaro-dual");
    norm->add_option("--beta", nm_beta, "operator order");
    norm->add_option("--p", nm_p, "integrability exponent");
    norm->add_flag("--empirical", nm_empirical, "also report the best test-family ratio");

    CLI11_PARSE(app, argc, argv);
    QuadSpec q;

    if (*apply) {
        Domain dom = (ap_domain == "real-line") ? Domain::RealLine : Domain::HalfLine;
        OperatorSpec spec{parse_kind(ap_op), ap_beta, dom, ap_p};
        spec.validate();
        FnExpr f = load_function(ap_fn, ap_config);
        OperatorInput in = OperatorInput::from(f);
        Diagnostics diag;
        auto eval_at = [&](double t) {
            return (spec.kind == OperatorKind::Cesaro) ? cesaro_apply(spec, in, t, q, &diag)
                                                       : cesaro_dual_apply(spec, in, t, q, &diag);
        };
        if (!std::isnan(ap_at)) {
            Complex v = eval_at(ap_at);
            std::cout << fmt17(v.real());
            if (v.imag() != 0.0) std::cout << (v.imag() > 0 ? "+" : "") << fmt17(v.imag()) << "i";
            std::cout << "\n";
        } else {
            if (ap_grid.empty()) throw ParameterError("apply: need --grid or --at");
            std::vector<double> ts = parse_grid(ap_grid);
            std::vector<Complex> vals(ts.size());
            for (size_t i = 0; i < ts.size(); ++i) vals[i] = eval_at(ts[i]);
            GridFn out(ts, vals, dom);
            auto path = resolve_output(ap_out, ap_format == "json" ? "apply.json" : "apply.csv");
            write_file(path, ap_format == "json" ? out.to_json() : out.to_csv());
            std::cout << "wrote " << path.string() << " (" << ts.size() << " rows)\n";
        }
        for (const std::string& note : diag.notes) std::cerr << "note: " << note << "\n";
        return 0;
    }

    if (*spectrum) {
        auto colon = sp_range.find(':');
        if (colon == std::string::npos) throw ParameterError("--range expects lo:hi");
        double lo = std::stod(sp_range.substr(0, colon));
        double hi = std::stod(sp_range.substr(colon + 1));
        OperatorSpec spec{parse_kind(sp_op), sp_beta, Domain::HalfLine, sp_p};
        SpectrumCurve curve = spectral_curve(spec, lo, hi, sp_n);
        if (!sp_out.empty() || !sp_circle) {
            auto path =
                resolve_output(sp_out, sp_format == "json" ? "spectrum.json" : "spectrum.csv");
            write_file(path, sp_format == "json" ? curve.to_json() : curve.to_csv());
            std::cout << "wrote " << path.string() << " (" << sp_n << " samples)\n";
        }
        if (sp_circle) {
            double dev = circle_check(curve);
            double c = (spec.kind == OperatorKind::Cesaro) ? sp_p / (2.0 * (sp_p - 1.0))
                                                           : sp_p / 2.0;
            std::cout << "circle center " << fmt17(c) << " radius " << fmt17(c)
                      << " max deviation " << fmt17(dev) << "\n";
        }
        return 0;
    }

    if (*verify) {
        std::vector<CheckResult> checks = run_suite(vf_suite, q);
        bool all_pass = true;
        for (const CheckResult& c : checks) {
            all_pass = all_pass && c.pass;
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual "
                      << fmt17(c.residual) << "  tol " << fmt17(c.tolerance);
            if (!c.error.empty()) std::cout << "  error: " << c.error;
            std::cout << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << " ("
                  << checks.size() << " checks)\n";
        if (!vf_json.empty())
            write_file(resolve_output(vf_json, "report.json"), report_to_json(vf_suite, checks));
        return all_pass ? 0 : kExitVerifyFailure;
    }

    if (*norm) {
        OperatorSpec spec{parse_kind(nm_op), nm_beta, Domain::HalfLine, nm_p};
        double value = operator_norm(spec);
        std::cout << "operator " << nm_op << "  beta " << fmt17(nm_beta) << "  p " << fmt17(nm_p)
                  << "\nclosed-form norm " << fmt17(value) << "\n";
        if (nm_empirical) {
            SobolevParams sob{0.0, nm_p, Domain::HalfLine};
            double best = 0.0;
            double eps = 0.01;
            std::vector<FnExpr> family = {
                FnExpr::exponential(Complex(1.0)),
                FnExpr::shifted_power(1.0, Complex(1.0)),
                FnExpr::shifted_power(1.0, Complex(1.0 / nm_p + eps))};
            for (const FnExpr& f : family)
                best = std::max(best, empirical_norm_ratio(spec, f, sob, q));
            std::cout << "empirical best ratio " << fmt17(best) << "  gap "
                      << fmt17(value - best) << "\n";
        }
        return 0;
    }

    return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const TailError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
