#include "vdw/hadamard.hpp"

#include <cmath>
#include <stdexcept>

#include "vdw/specfun.hpp"

namespace vdw {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

ZeroSet ZeroSet::affine(double d, double c) {
    if (d <= 0.0) throw std::invalid_argument("ZeroSet::affine: d <= 0");
    if (1.0 + c <= 0.0) throw std::invalid_argument("ZeroSet::affine: first zero nonpositive");
    ZeroSet zs;
    zs.zero = [d, c](long n) { return d * (double(n) + c); };
    zs.tail_power_sum = [d, c](int p, long N) {
        // sum_{n>N} (d(n+c))^-p = d^-p zeta_H(p, N+1+c)
        return std::pow(d, -p) *
               specfun::hurwitz_zeta(cplx(double(p)), double(N) + 1.0 + c).real();
    };
    return zs;
}

ZeroSet ZeroSet::from_values(std::shared_ptr<const std::vector<double>> vals,
                             double full_p2, double full_p4, double full_p6) {
    ZeroSet zs;
    zs.zero = [vals](long n) {
        if (n < 1 || n > static_cast<long>(vals->size()))
            throw std::out_of_range("ZeroSet: zero index beyond stored values");
        return (*vals)[static_cast<size_t>(n - 1)];
    };
    zs.tail_power_sum = [vals, full_p2, full_p4, full_p6](int p, long N) {
        double full = p == 2 ? full_p2 : (p == 4 ? full_p4 : full_p6);
        if (full == 0.0) return 0.0;
        double partial = 0.0;
        long M = std::min<long>(N, static_cast<long>(vals->size()));
        for (long n = M; n >= 1; --n) partial += std::pow((*vals)[static_cast<size_t>(n - 1)], -p);
        double t = full - partial;
        return t > 0.0 ? t : 0.0;
    };
    return zs;
}

ZeroSet ZeroSet::bessel(double nu, long n_max) {
    auto vals = std::make_shared<std::vector<double>>(bessel_zeros(nu, n_max));
    // Rayleigh sums: sum j^-2 = 1/(4(nu+1)); sum j^-4 = 1/(16(nu+1)^2(nu+2));
    // sum j^-6 = (2nu+5)/(32(nu+1)^3(nu+2)^2... ) not needed; omit p=6 tail.
    double s2 = 1.0 / (4.0 * (nu + 1.0));
    double s4 = 1.0 / (16.0 * (nu + 1.0) * (nu + 1.0) * (nu + 2.0));
    return from_values(vals, s2, s4, 0.0);
}

cplx eval_even_product(const ZeroSet& zs, cplx s, const ProductConfig& cfg,
                       ProductDirection dir) {
    const long N = cfg.truncation;
    if (N < 1) throw std::invalid_argument("eval_even_product: truncation < 1");
    const cplx s2 = s * s;
    // log-space accumulation for large N to avoid under/overflow; factors are
    // near 1 for large n so principal logs vary continuously along the index.
    const bool logspace = N > 1000;
    cplx logacc(0.0);
    cplx prod(1.0);
    for (long n = 1; n <= N; ++n) {
        double rho = zs.zero(n);
        cplx factor = 1.0 + s2 / (rho * rho);
        if (dir == ProductDirection::reciprocal && std::abs(factor) < 1e-13)
            throw std::domain_error("eval_even_product: reciprocal pole at s = i rho_n");
        if (logspace)
            logacc += std::log(factor);
        else
            prod *= factor;
    }
    cplx tail(0.0);
    if (cfg.tail != TailCorrection::none) {
        if (!zs.tail_power_sum)
            throw std::invalid_argument("eval_even_product: tail correction without tail sums");
        tail = s2 * zs.tail_power_sum(2, N);
        if (cfg.tail == TailCorrection::log1p_order4)
            tail -= 0.5 * s2 * s2 * zs.tail_power_sum(4, N);
    }
    cplx logv = (logspace ? logacc : std::log(prod)) + tail;
    if (dir == ProductDirection::reciprocal) logv = -logv;
    // for the non-log path keep exactness of the finite product when possible
    if (!logspace) {
        cplx v = prod * std::exp(tail);
        return dir == ProductDirection::forward ? v : 1.0 / v;
    }
    return std::exp(logv);
}

cplx eval_genus1_product(const std::vector<double>& zeros, double b, cplx s,
                         double tail_p2, double tail_p3) {
    cplx logacc = -b * s;
    for (double rho : zeros) {
        if (rho == 0.0) throw std::invalid_argument("eval_genus1_product: zero at origin");
        cplx z = s / rho;
        logacc += std::log(1.0 - z) + z;
    }
    // log[(1-s/rho)e^{s/rho}] = -s^2/(2 rho^2) - s^3/(3 rho^3) - ...
    logacc += -0.5 * s * s * tail_p2 - s * s * s / 3.0 * tail_p3;
    return std::exp(logacc);
}

namespace {

// ascending series of f_nu(s) = sum_k (-1)^k (s^2/4)^k / (k! (nu+1)_k)
double bessel_f_series(double nu, double s) {
    double q = 0.25 * s * s;
    double term = 1.0, acc = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (double(k) * (nu + double(k)));
        acc += term;
        if (std::abs(term) < 1e-17 * std::abs(acc) + 1e-300) break;
    }
    return acc;
}

// Hankel asymptotic expansion of J_nu(x), x large
double bessel_J_hankel(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double P = 1.0, Q = 0.0;
    double c = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 20; ++k) {
        c *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        double mag = std::abs(c);
        if (mag > prev) break;  // asymptotic: stop at smallest term
        prev = mag;
        int r = k % 4;
        if (r == 1) Q += c;
        else if (r == 2) P -= c;
        else if (r == 3) Q -= c;
        else P += c;
        if (mag < 1e-18) break;
    }
    double omega = x - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (P * std::cos(omega) - Q * std::sin(omega));
}

}  // namespace

double bessel_f(double nu, double s) {
    if (nu < -0.5) throw std::domain_error("bessel_f: nu < -1/2");
    s = std::abs(s);
    if (s <= 12.0) return bessel_f_series(nu, s);
    // f_nu = (s/2)^{-nu} Gamma(nu+1) J_nu(s); only the sign and zeros matter
    // for root finding, but return the actual normalized value.
    double J = bessel_J_hankel(nu, s);
    return std::pow(0.5 * s, -nu) * std::exp(specfun::log_gamma(cplx(nu + 1.0)).real()) * J;
}

std::vector<double> bessel_zeros(double nu, long n_max) {
    if (nu < -0.5) throw std::domain_error("bessel_zeros: nu < -1/2");
    if (n_max < 1) throw std::domain_error("bessel_zeros: n_max < 1");
    std::vector<double> zs;
    zs.reserve(static_cast<size_t>(n_max));
    auto f = [nu](double x) { return bessel_f(nu, x); };
    Tolerance rtol(1e-13, 2e-15, 200);
    double prev = 0.0;
    const double h = kPi / 8.0;  // consecutive zeros separated by > pi/2
    for (long n = 1; n <= n_max; ++n) {
        double lo = prev + (n == 1 ? h : 0.35 * kPi);
        double flo = f(lo);
        if (flo == 0.0) lo += 1e-9, flo = f(lo);
        double hi = lo;
        bool bracketed = false;
        for (int step = 0; step < 400; ++step) {
            hi = lo + h;
            double fhi = f(hi);
            if ((flo > 0) != (fhi > 0)) {
                bracketed = true;
                break;
            }
            lo = hi;
            flo = fhi;
        }
        if (!bracketed)
            throw std::runtime_error("bessel_zeros: bracket failure (series evaluation bug?)");
        double root = find_root(f, lo, hi, rtol);
        zs.push_back(root);
        prev = root;
    }
    return zs;
}

cplx sinh_partial_fraction(cplx s, long M, double* err_bound) {
    if (M < 1) throw std::invalid_argument("sinh_partial_fraction: M < 1");
    if (std::abs(s) < 1e-14) throw std::domain_error("sinh_partial_fraction: pole at s = 0");
    // symmetric sum: 1/s + 2s sum_{m=1}^{M} (-1)^m / (s^2 + m^2)
    cplx s2 = s * s;
    cplx acc = 1.0 / s;
    double sign = -1.0;
    for (long m = 1; m <= M; ++m) {
        cplx den = s2 + double(m) * double(m);
        if (std::abs(den) < 1e-12)
            throw std::domain_error("sinh_partial_fraction: pole at s in iZ");
        acc += 2.0 * s * sign / den;
        sign = -sign;
    }
    if (err_bound) {
        // alternating tail: bounded by the first omitted term
        *err_bound = 2.0 * std::abs(s) / std::abs(s2 + double(M + 1) * double(M + 1));
    }
    return acc;
}

}  // namespace vdw
