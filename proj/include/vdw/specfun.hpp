#pragma once

// Named special functions: Gamma/digamma, zeta (Euler product and eta-series
// continuation on Re s > 0), xi, Dirichlet characters / L / Lambda / beta,
// Gauss sums, Dedekind eta and its Laplace transforms, Ramanujan tau / L_tau /
// Xi_tau, and the Macdonald integrals K_z(a), G(z,a).

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vdw/numerics.hpp"
#include "vdw/thorin.hpp"

namespace vdw::specfun {

// --- Gamma family ---------------------------------------------------------

// Stirling series with recurrence shift; reflection for Re s < 1/2.
// Throws std::domain_error at nonpositive integers.
cplx gamma_fn(cplx s);
cplx log_gamma(cplx s);  // principal branch, Re s > 0
double digamma(double x);

// --- Riemann zeta / xi ----------------------------------------------------

// Truncated Euler product over primes p <= P, for alpha > 1. The reported
// tail bound dominates |log zeta - log product|.
double euler_product_zeta(double alpha, long prime_bound, double* tail_bound = nullptr);

// Eta-series continuation with iterated Euler (averaging) acceleration,
// valid on Re s > 0, s != 1.
cplx zeta(cplx s);

// xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s); the removable point s = 1
// is evaluated through the Laurent expansion of (s-1) zeta(s).
cplx xi(cplx s);

// --- primes / arithmetic --------------------------------------------------

std::vector<int32_t> primes_upto(int32_t n);
// von Mangoldt Lambda(n): log p if n = p^r, else 0
double von_mangoldt(long n);

// mu^zeta(dx) = sum_p sum_{r>=1} (log p) delta_{r log p}, atoms with
// r log p <= x_max, sorted by location.
MuMeasure mu_zeta_atoms(double x_max);

// mu^Gamma(dx) = dx / (e^x - 1)
MuMeasure mu_gamma();

// --- Dirichlet characters and L-functions ---------------------------------

struct DirichletCharacter {
    int modulus = 1;
    std::vector<cplx> values;  // values[n] = chi(n mod k), size k
    int parity = 0;            // 0 if chi(-1)=1, 1 if chi(-1)=-1
    bool primitive = true;

    cplx operator()(long n) const {
        long r = n % modulus;
        if (r < 0) r += modulus;
        return values[static_cast<size_t>(r)];
    }
    bool is_principal() const;
    bool real_nonnegative() const;

    static DirichletCharacter principal(int k);
    // the non-principal (odd, primitive) character mod 4
    static DirichletCharacter mod4();

    std::string to_json() const;
    static DirichletCharacter from_json(const std::string& text);
};

// L_chi(s) = sum chi(n) n^{-s}; direct series for Re s > 1, Hurwitz-zeta
// Euler-Maclaurin continuation on Re s > 0 for non-principal chi.
cplx dirichlet_L(const DirichletCharacter& chi, cplx s);

// Hurwitz zeta via Euler-Maclaurin, Re s > 0 (s != 1), x > 0.
cplx hurwitz_zeta(cplx s, double x);

// Lambda(s, chi) = (pi/k)^{-(s+eps)/2} Gamma((s+eps)/2) L_chi(s)
cplx regularized_lambda(const DirichletCharacter& chi, cplx s);

// tau(chi) = sum_{n=1}^k chi(n) e^{2 pi i n / k}
cplx gauss_sum(const DirichletCharacter& chi);

// mu_L atoms at log n for prime powers n <= n_max, mass
// Lambda(n) chi(n) / (log n * n^sigma). Complex masses are carried as a pair
// of measures (real part in .first, imaginary in .second masses); for real
// characters the second is all zeros.
MuMeasure mu_L_atoms(const DirichletCharacter& chi, double sigma, long n_max);

// --- Dedekind eta ----------------------------------------------------------

enum class EtaMethod { q_product, euler_series };
double dedekind_eta(double x, EtaMethod method);

// closed forms of int_0^inf e^{-sx} eta(ix) dx and the eta^3 analogue
double eta_LT_closed(double s);
double eta3_LT_closed(double s);

// eta^3(ix) by the Jacobi triple-product series
double eta_cubed_series(double x);

double dirichlet_beta(double s);

// --- Ramanujan tau ----------------------------------------------------------

struct TauTable {
    int n_max = 0;
    std::vector<mpz_class> values;  // values[n-1] = tau(n)

    const mpz_class& operator()(int n) const { return values[static_cast<size_t>(n - 1)]; }
    // tau(n) as double (exact integers can exceed int64 for large n)
    double as_double(int n) const { return values[static_cast<size_t>(n - 1)].get_d(); }
    std::string to_csv() const;
};

// exact coefficients of y prod_{k<=n_max} (1-y^k)^24 through degree n_max
TauTable ramanujan_tau(int n_max);

cplx L_tau_partial(cplx s, const TauTable& tau);

// Xi_tau(s) = int e^{ist} Phi_tau(t) dt with the even theta-type kernel.
double Xi_tau(double s, const Tolerance& tol);
double xi_tau_kernel(double t);  // Phi_tau(t)

// | log prod(1-e^{-2 pi n x}) + sum sigma_{-1}(n) e^{-2 pi n x} |, n <= n_max
double sigma_minus1_identity_residual(double x, int n_max);
double sigma_minus1(int n);  // sum_{d|n} 1/d

// --- Macdonald integrals ----------------------------------------------------

// K_z(a) = int_0^inf t^{z-1} e^{-(a/2)(t + 1/t)} dt  (paper's convention,
// equal to 2 K^{std}_z(a)); evaluated through the cosh form after t = e^u.
cplx macdonald_K(cplx z, double a, const Tolerance& tol);

// G(z,a) = int e^{-a(e^u + e^{-u}) + zu} du = K_z(2a)
cplx frak_G(cplx z, double a, const Tolerance& tol);

}  // namespace vdw::specfun
