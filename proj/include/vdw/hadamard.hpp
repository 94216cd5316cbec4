#pragma once

// Hadamard-Weierstrass products of genus 0/1 over real zero sets, with
// truncation-tail corrections, Bessel zero computation, and the sinh
// partial-fraction expansion.

#include <functional>
#include <memory>
#include <vector>

#include "vdw/numerics.hpp"

namespace vdw {

// A sequence of positive zeros rho_n (n >= 1), strictly increasing, with
// sum rho_n^{-2} < inf. `tail_power_sum(p, N)` returns sum_{n>N} rho_n^{-p}
// for p in {2, 4, 6} (exact or an upper bound).
struct ZeroSet {
    std::function<double(long)> zero;
    bool symmetric = true;
    double order_hint = 1.0;
    std::function<double(int, long)> tail_power_sum;

    // rho_n = d * (n + c); tails from Hurwitz zeta
    static ZeroSet affine(double d, double c);
    // explicit finite list; tails beyond the list taken as given full-sum
    // residuals (`full_power_sum[p]` = sum over the entire infinite family)
    static ZeroSet from_values(std::shared_ptr<const std::vector<double>> vals,
                               double full_p2 = 0.0, double full_p4 = 0.0,
                               double full_p6 = 0.0);
    // positive zeros of f_nu with Rayleigh-sum tails
    static ZeroSet bessel(double nu, long n_max);
};

enum class TailCorrection { none, log1p_order2, log1p_order4 };

struct ProductConfig {
    long truncation = 1000;
    TailCorrection tail = TailCorrection::log1p_order2;
};

enum class ProductDirection { forward, reciprocal };

// prod_{n<=N} (1 + s^2/rho_n^2) (forward) or its reciprocal, with the
// truncated tail restored through exp(+-(s^2 T2 - s^4 T4 / 2)).
cplx eval_even_product(const ZeroSet& zs, cplx s, const ProductConfig& cfg,
                       ProductDirection dir = ProductDirection::forward);

// e^{-b s} prod (1 - s/rho_n) e^{s/rho_n} over the supplied zeros; optional
// tail power sums T_p = sum_{omitted} rho^{-p} restore the omitted factors
// through the second/third-order log expansion.
cplx eval_genus1_product(const std::vector<double>& zeros, double b, cplx s,
                         double tail_p2 = 0.0, double tail_p3 = 0.0);

// First n_max positive zeros of f_nu(s) = (s/2)^{-nu} Gamma(nu+1) J_nu(s),
// nu >= -1/2, each accurate to ~1e-10 (absolute, up to fp granularity).
std::vector<double> bessel_zeros(double nu, long n_max);

// f_nu(s) for real s: ascending series for |s| <= 12, Hankel asymptotics
// beyond. The normalized form is 1 at s = 0.
double bessel_f(double nu, double s);

// pi/sinh(pi s) = s sum_{|m|<=M} (-1)^m/(s^2+m^2), symmetric partial sum.
// err_bound (optional) receives the alternating-tail estimate.
cplx sinh_partial_fraction(cplx s, long M, double* err_bound = nullptr);

}  // namespace vdw
