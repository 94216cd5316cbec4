#pragma once

// Foundational numerics: tolerance-driven series summation with compensated
// accumulation, adaptive Gauss-Kronrod quadrature on finite and half-infinite
// intervals, and bracketed root finding.

#include <complex>
#include <functional>
#include <stdexcept>

namespace vdw {

using cplx = std::complex<double>;

struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    long   max_terms = 1000000;
    int    max_subdivisions = 4000;

    Tolerance() = default;
    Tolerance(double at, double rt, long mt = 1000000, int ms = 4000)
        : abs_tol(at), rel_tol(rt), max_terms(mt), max_subdivisions(ms) {
        if (at < 0 || rt < 0) throw std::invalid_argument("Tolerance: negative tolerance");
        if (at == 0 && rt == 0) throw std::invalid_argument("Tolerance: abs_tol and rel_tol both zero");
        if (mt <= 0 || ms <= 0) throw std::invalid_argument("Tolerance: nonpositive budget");
    }

    // acceptance threshold for a quantity of magnitude |scale|
    double target(double scale) const {
        double t = abs_tol > rel_tol * scale ? abs_tol : rel_tol * scale;
        return t;
    }
};

struct SeriesResult {
    cplx   value{0.0, 0.0};
    double tail_bound = 0.0;   // bound/estimate for the omitted tail
    long   terms = 0;
    bool   converged = false;
};

// Sum term(start) + term(start+1) + ... with Neumaier-compensated accumulation.
// If tail_bound is supplied it must dominate |sum_{k>N} term(k)|; summation
// stops once it meets the tolerance. Without it, a heuristic stop is used
// (several consecutive terms below target) and the last term magnitude is
// reported as the tail estimate.
SeriesResult sum_series(const std::function<cplx(long)>& term, const Tolerance& tol,
                        long start = 1,
                        const std::function<double(long)>& tail_bound = nullptr);

struct QuadratureResult {
    cplx   value{0.0, 0.0};
    double error_estimate = 0.0;
    long   evaluations = 0;
    bool   converged = false;

    double real() const { return value.real(); }
};

// Map used for [a, inf) integrals. `rational` substitutes x = a + t/(1-t)
// (default, robust for algebraic/exponential decay); `double_exp` uses the
// exp-sinh transformation, preferred for integrands with very fast decay.
enum class HalfLineMap { rational, double_exp };

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const Tolerance& tol);
QuadratureResult integrate_half_line(const std::function<cplx(double)>& f, double a,
                                     const Tolerance& tol,
                                     HalfLineMap map = HalfLineMap::rational);

// Real-valued conveniences.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const Tolerance& tol);
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double a,
                                     const Tolerance& tol,
                                     HalfLineMap map = HalfLineMap::rational);

// Bracketed root finding: bisection with secant/inverse-quadratic refinement
// once the bracket is small. Requires f(lo)*f(hi) < 0; throws
// std::domain_error otherwise. Deterministic for identical inputs.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol);

}  // namespace vdw
