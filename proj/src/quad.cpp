#include "cesarolab/quad.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace cesarolab {

void QuadSpec::validate() const {
    if (nodes < 4) throw ParameterError("QuadSpec: nodes must be >= 4");
    if (!(truncation > 0)) throw ParameterError("QuadSpec: truncation must be > 0");
    if (!(abs_tol > 0 && abs_tol < 1) || !(rel_tol > 0 && rel_tol < 1))
        throw ParameterError("QuadSpec: tolerances must lie in (0, 1)");
    if (max_refinements < 1) throw ParameterError("QuadSpec: max_refinements must be >= 1");
}

namespace {

double real_lgamma(double x) { return std::lgamma(x); }

// Golub-Welsch on the Jacobi-polynomial three-term recurrence for the
// weight (1-x)^a (1+x)^b on [-1, 1].
QuadRule jacobi_rule_on_minus1_1(int n, double a, double b) {
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) {
        double s = 2.0 * k + a + b;
        if (k == 0)
            diag(0) = (b - a) / (a + b + 2.0);
        else
            diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + a + b;
        if (k == 1) {
            // cancelled form: the general one is 0/0 at a + b = -1
            sub(0) = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) /
                               ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0)));
            continue;
        }
        double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
        double den = s * s * (s + 1.0) * (s - 1.0);
        sub(k - 1) = std::sqrt(num / den);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub);
    double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + real_lgamma(a + 1.0) +
                          real_lgamma(b + 1.0) - real_lgamma(a + b + 2.0));
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

struct RuleKey {
    int n;
    double a, b;
    bool operator<(const RuleKey& o) const {
        return std::tie(n, a, b) < std::tie(o.n, o.a, o.b);
    }
};

std::shared_mutex g_rule_mutex;
std::map<RuleKey, std::shared_ptr<const QuadRule>> g_rules;

std::shared_ptr<const QuadRule> cached_rule(int n, double a, double b) {
    RuleKey key{n, a, b};
    {
        std::shared_lock lock(g_rule_mutex);
        auto it = g_rules.find(key);
        if (it != g_rules.end()) return it->second;
    }
    auto rule = std::make_shared<QuadRule>(jacobi_rule_on_minus1_1(n, a, b));
    std::unique_lock lock(g_rule_mutex);
    return g_rules.emplace(key, std::move(rule)).first->second;
}

Complex gl_panel(const Integrand& f, double a, double b, const QuadRule& rule) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex acc(0.0, 0.0);
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

struct AdaptiveState {
    const Integrand* f;
    const QuadRule* rule;
    double tol_total;
    double span;
    int max_depth;
    Complex total{0.0, 0.0};
    double err{0.0};
};

void adapt(AdaptiveState& st, double a, double b, Complex whole, int depth) {
    double mid = 0.5 * (a + b);
    Complex left = gl_panel(*st.f, a, mid, *st.rule);
    Complex right = gl_panel(*st.f, mid, b, *st.rule);
    double diff = std::abs(whole - (left + right));
    double share = st.tol_total * ((b - a) / st.span);
    if (diff <= share || depth >= st.max_depth) {
        if (diff > share)
            throw ConvergenceError("integrate_finite: refinement budget exhausted");
        st.total += left + right;
        st.err += diff;
        return;
    }
    adapt(st, a, mid, left, depth + 1);
    adapt(st, mid, b, right, depth + 1);
}

// tanh-sinh node: position within (0,1) together with 1-x, both accurate.
struct DeNode {
    double x, omx, w;
};

// Nodes for one side (k >= 1) at step h plus the center node handled by caller.
void de_side(double h, int parity_only_odd, std::vector<DeNode>& out) {
    // parity_only_odd = 1: only odd k (refinement pass); 0: all k >= 1.
    for (int k = 1; k < 100000; k += (parity_only_odd ? 2 : 1)) {
        double u = k * h;
        double s = 0.5 * 3.14159265358979323846 * std::sinh(u);
        if (s > 350.0) break;  // weight underflow
        double e2 = std::exp(-2.0 * s);
        double omx = e2 / (1.0 + e2);        // 1 - x
        double x = 1.0 / (1.0 + e2);         // node in (1/2, 1)
        double w = 0.5 * 3.14159265358979323846 * std::cosh(u) / std::pow(std::cosh(s), 2);
        out.push_back({x, omx, w});
        if (omx < 1e-290) break;
    }
}

}  // namespace

const QuadRule& gauss_legendre_rule(int n) { return *cached_rule(n, 0.0, 0.0); }

const QuadRule& gauss_jacobi_rule(int n, double a, double b) {
    if (!(a > -1.0) || !(b > -1.0))
        throw ParameterError("gauss_jacobi_rule: exponents must exceed -1");
    // Map the [-1,1] rule onto [0,1] with weight (1-x)^a x^b.
    RuleKey key{-n, a, b};  // negative n tags the mapped variant in the cache
    {
        std::shared_lock lock(g_rule_mutex);
        auto it = g_rules.find(key);
        if (it != g_rules.end()) return *it->second;
    }
    QuadRule base = jacobi_rule_on_minus1_1(n, a, b);
    auto mapped = std::make_shared<QuadRule>();
    mapped->nodes.resize(n);
    mapped->weights.resize(n);
    double scale = std::pow(2.0, -(a + b + 1.0));
    for (int i = 0; i < n; ++i) {
        mapped->nodes[i] = 0.5 * (1.0 + base.nodes[i]);
        mapped->weights[i] = scale * base.weights[i];
    }
    std::unique_lock lock(g_rule_mutex);
    return *g_rules.emplace(key, std::move(mapped)).first->second;
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadSpec& spec) {
    spec.validate();
    if (!(a < b)) throw ParameterError("integrate_finite: requires a < b");
    const QuadRule& rule = gauss_legendre_rule(spec.nodes);
    Complex first = gl_panel(f, a, b, rule);
    AdaptiveState st;
    st.f = &f;
    st.rule = &rule;
    st.tol_total = std::max(spec.abs_tol, spec.rel_tol * std::abs(first));
    st.span = b - a;
    st.max_depth = spec.max_refinements;
    adapt(st, a, b, first, 0);
    return {st.total, st.err};
}

QuadResult integrate_jacobi(const Integrand& f, double a, double b, const QuadSpec& spec) {
    spec.validate();
    int n = spec.nodes;
    auto eval = [&](int m) {
        const QuadRule& rule = gauss_jacobi_rule(m, a, b);
        Complex acc(0.0, 0.0);
        for (int i = 0; i < m; ++i) acc += rule.weights[i] * f(rule.nodes[i]);
        return acc;
    };
    Complex coarse = eval(n);
    for (int r = 0; r < 4; ++r) {
        Complex fine = eval(2 * n);
        double diff = std::abs(fine - coarse);
        if (diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(fine)))
            return {fine, diff};
        coarse = fine;
        n *= 2;
    }
    throw ConvergenceError("integrate_jacobi: rule did not stabilize");
}

QuadResult integrate_jacobi_endpoint(const Integrand& f, double beta, const QuadSpec& spec) {
    if (!(beta > 0)) throw ParameterError("integrate_jacobi_endpoint: beta must be > 0");
    return integrate_jacobi(f, beta - 1.0, 0.0, spec);
}

QuadResult integrate_de(const std::function<Complex(double, double)>& f, double a, double b,
                        const QuadSpec& spec) {
    spec.validate();
    if (!(a < b)) throw ParameterError("integrate_de: requires a < b");
    double span = b - a;
    auto node_val = [&](const DeNode& nd, bool mirrored) {
        // mirrored: node near a; else near b. Distances stay accurate.
        double x = mirrored ? a + span * nd.omx : a + span * nd.x;
        double to_b = mirrored ? span * nd.x : span * nd.omx;
        return f(x, to_b);
    };
    double h = 1.0;
    std::vector<DeNode> side;
    de_side(h, 0, side);
    // k = 0 node: x = midpoint, weight pi/2
    Complex sum = (0.5 * 3.14159265358979323846) * f(a + 0.5 * span, 0.5 * span);
    for (const DeNode& nd : side) sum += nd.w * (node_val(nd, false) + node_val(nd, true));
    Complex prev = sum * (span * 0.5) * h;
    double err = std::abs(prev);
    for (int level = 1; level <= 10; ++level) {
        h *= 0.5;
        side.clear();
        de_side(h, 1, side);
        Complex add(0.0, 0.0);
        for (const DeNode& nd : side) add += nd.w * (node_val(nd, false) + node_val(nd, true));
        Complex cur = prev * 0.5 + add * (span * 0.5) * h;
        err = std::abs(cur - prev);
        prev = cur;
        if (level >= 3 && err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur)))
            return {cur, err};
    }
    if (err <= 10.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(prev)))
        return {prev, err};
    throw ConvergenceError("integrate_de: tanh-sinh levels did not stabilize");
}

namespace {

// Decay fit of |f| beyond T: tail correction, its magnitude, an uncertainty.
struct TailFit {
    Complex correction{0.0, 0.0};
    double magnitude{0.0};
    double uncertainty{0.0};
    bool decaying{false};
    bool dead{false};  // integrand underflowed to zero
};

TailFit fit_tail(const Integrand& f, double T) {
    TailFit fit;
    Complex fT = f(T);
    double m0 = std::abs(fT);
    double r1 = 0.95 * T, r2 = 0.90 * T;
    double m1 = std::abs(f(r1)), m2 = std::abs(f(r2));
    if (m0 == 0.0) {
        // underflowed within the window: the remaining tail is below double range
        fit.decaying = fit.dead = true;
        fit.uncertainty = m1 * 0.05 * T;
        return fit;
    }
    if (m1 <= 0 || m2 <= 0) return fit;
    double rate_a = std::log(m1 / m0) / (T - r1);
    double rate_b = std::log(m2 / m1) / (r1 - r2);
    // exponential decay: the local rate must be essentially windowing-invariant
    // (pure power tails drift by ~4% between these windows regardless of order)
    if (rate_a * T > 3.0 && rate_b * T > 3.0 &&
        std::abs(rate_a - rate_b) < 0.02 * (rate_a + rate_b)) {
        fit.decaying = true;
        Complex tail_a = fT / rate_a;
        Complex tail_b = fT / rate_b;
        fit.correction = tail_a;
        fit.magnitude = std::abs(tail_a);
        fit.uncertainty = 3.0 * std::abs(tail_a - tail_b) + 1e-14 * fit.magnitude;
        return fit;
    }
    double q_a = std::log(m1 / m0) / std::log(T / r1);
    double q_b = std::log(m2 / m1) / std::log(r1 / r2);
    if (q_a > 1.05 && q_b > 1.05) {
        fit.decaying = true;
        Complex tail_a = fT * T / (q_a - 1.0);
        Complex tail_b = fT * T / (q_b - 1.0);
        fit.correction = tail_a;
        fit.magnitude = std::abs(tail_a);
        // local-exponent drift toward infinity is O(1/T) of the tail
        fit.uncertainty =
            3.0 * std::abs(tail_a - tail_b) + 10.0 * fit.magnitude / T;
        return fit;
    }
    return fit;
}

}  // namespace

QuadResult integrate_halfline(const Integrand& f, const QuadSpec& spec) {
    spec.validate();
    double T = spec.truncation;
    auto wrapped = [&](double r, double) { return f(r); };
    QuadResult body = integrate_de(wrapped, 0.0, T, spec);
    const int max_ext = 40;
    for (int ext = 0; ext <= max_ext; ++ext) {
        double tol_scale = std::max(spec.abs_tol, spec.rel_tol * std::abs(body.value));
        TailFit fit = fit_tail(f, T);
        if (!fit.decaying) {
            // plateaus (e.g. logarithmic growth zones) may hide decay further
            // out; keep extending and only give up at the cap
            if (ext == max_ext)
                throw TailError("integrate_halfline: tail is not decaying");
            QuadResult extra = integrate_de(wrapped, T, 1.6 * T, spec);
            body.value += extra.value;
            body.error += extra.error;
            T *= 1.6;
            continue;
        }
        if (fit.dead) return {body.value, body.error + fit.uncertainty};
        bool good_enough = fit.uncertainty <= 3.0 * tol_scale;
        if (good_enough || ext == max_ext) {
            if (fit.uncertainty > 100.0 * tol_scale)
                throw TailError("integrate_halfline: tail estimate exceeds tolerance");
            return {body.value + fit.correction, body.error + fit.uncertainty};
        }
        double T2 = 1.6 * T;
        QuadResult extra = integrate_de(wrapped, T, T2, spec);
        body.value += extra.value;
        body.error += extra.error;
        T = T2;
    }
    throw TailError("integrate_halfline: unreachable");
}

}  // namespace cesarolab
