#pragma once

// Closed-form density series and residue-integral analytics: the Polya
// xi-density, the Ciesielski-Taylor W_a density, the Ostrovskii class, the
// three cosh Fourier integrals, the odd-cosine identity, and the Kendall
// convolution residual.

#include <vector>

#include "vdw/numerics.hpp"

namespace vdw::densities {

// p(x) = (1/xi(1/2)) sum_n 2 pi n^2 (2 pi n^2 e^{-2x} - 3) e^{-5x/2 - pi n^2 e^{-2x}};
// the raw series converges for every real x (faster on the negative side).
double polya_density(double x, const Tolerance& tol);
// raw series without the symmetry shortcut, for symmetry assertions
double polya_density_raw(double x, const Tolerance& tol);

// W_a density sum_n (pi^4 n^4 x / a^4 - 3 pi^2 n^2 / a^2) e^{-pi^2 n^2 x/(2a^2)}.
// Below x = 0.01 a^2 the theta series is unreliable in doubles and `warning`
// is set (value still returned).
double w_a_density(double x, double a, const Tolerance& tol, bool* warning = nullptr);

struct OstrovskiiParams {
    double C = 2.0;
    double B = 3.0;
    double delta = 0.05;
    std::vector<double> a;  // summable positive sequence (finite list)
    std::vector<double> h;  // h_k >= B > 1

    void validate() const;  // pi/2 < C < B, delta > 0, h_k >= B
    static OstrovskiiParams default_set();
    static OstrovskiiParams second_set();
};

// f_delta(z) = 1/z^2 - 1/(Cz) + delta sum a_k/(z + h_k)
double ostrovskii_f(double z, const OstrovskiiParams& p);
cplx ostrovskii_f_c(cplx z, const OstrovskiiParams& p);

// density h_delta(x) = (1/f_delta(1) sinh pi x) { x cosh(pi x/2)
//   - (1/C) sinh(pi x/2) + delta sum a_k sin(alpha_k x)/sinh(alpha_k) },
// alpha_k = arccosh(h_k); the x -> 0 removable singularity is evaluated by a
// 4th-order series expansion of numerator and sinh.
double ostrovskii_density(double x, const OstrovskiiParams& p);

enum class CoshFourierCase { pole_in, pole_gt1, squared };

// closed form of int e^{itx} / (cosh t + b) dt (two pole cases) or
// int e^{itx} / cosh^2 t dt (squared case; b ignored)
double cosh_fourier_closed(double x, CoshFourierCase c, double b = 0.0);
// |closed form - direct quadrature|
double cosh_fourier_residual(double x, CoshFourierCase c, double b, const Tolerance& tol);

// | sum_{n<=N} cos((2n+1)x)/(alpha^2+(2n+1)^2) + tail - (pi/4a) sinh(a(pi-2x)/2)/cosh(a pi/2) |
// with an integration-by-parts/Euler-Maclaurin tail estimate.
double fourier_cos_identity_residual(double alpha, double x, long N, const Tolerance& tol);

struct KendallPoint {
    double s;
    double residual;
};

// closed form (1/4a)(1+|s|/a)e^{-|s|/a} vs quadrature of the Laplace(a)
// self-convolution, per grid point
std::vector<KendallPoint> kendall_convolution_residual(double a,
                                                       const std::vector<double>& s_grid,
                                                       const Tolerance& tol);

}  // namespace vdw::densities
