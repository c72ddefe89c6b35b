#pragma once

#include <functional>
#include <vector>

#include "cesarolab/errors.hpp"
#include "cesarolab/specfun.hpp"

namespace cesarolab {

struct QuadSpec {
    int nodes = 64;            // per panel / base rule size
    double truncation = 40.0;  // half-line cutoff T (auto-extended when the tail demands it)
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_refinements = 12;

    void validate() const;
};

struct QuadResult {
    Complex value;
    double error;  // estimate, includes tail-fit uncertainty on the half-line
};

using Integrand = std::function<Complex(double)>;

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]; cached, safe for concurrent readers.
const QuadRule& gauss_legendre_rule(int n);

// Gauss-Jacobi rule on [0, 1] for the weight (1-x)^a x^b, a, b > -1; cached.
const QuadRule& gauss_jacobi_rule(int n, double a, double b);

// Adaptive panel-split Gauss-Legendre on [a, b].
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadSpec& spec);

// integral_0^1 (1-x)^a x^b f(x) dx with the singular weight absorbed by the rule.
QuadResult integrate_jacobi(const Integrand& f, double a, double b, const QuadSpec& spec);

// integral_0^1 (1-r)^(beta-1) f(r) dr, beta > 0.
QuadResult integrate_jacobi_endpoint(const Integrand& f, double beta, const QuadSpec& spec);

// integral_0^infty f(r) dr for integrands with endpoint-power behaviour at 0
// and exponential or power decay. Double-exponential rule on [0, T] plus a
// decay-fit tail correction beyond T; the fit uncertainty lands in .error.
// Throws TailError when no decay is detectable.
QuadResult integrate_halfline(const Integrand& f, const QuadSpec& spec);

// Double-exponential (tanh-sinh) rule on [a, b]; integrand receives the node
// and its exact distance to b, so (b-x)-singular factors stay accurate.
QuadResult integrate_de(const std::function<Complex(double, double)>& f, double a, double b,
                        const QuadSpec& spec);

}  // namespace cesarolab
