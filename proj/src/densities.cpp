#include "vdw/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "vdw/specfun.hpp"

namespace vdw::densities {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

double xi_half() {
    static const double v = specfun::xi(cplx(0.5)).real();
    return v;
}
}  // namespace

double polya_density_raw(double x, const Tolerance& tol) {
    // sum_n 2 pi n^2 (2 pi n^2 q - 3) e^{-5x/2} e^{-pi n^2 q}, q = e^{-2x}
    const double q = std::exp(-2.0 * x);
    const double pref = std::exp(-2.5 * x);
    double acc = 0.0;
    for (long n = 1; n <= tol.max_terms; ++n) {
        double nn = double(n) * double(n);
        double e = kPi * nn * q;
        if (e > 745.0) break;
        double term = 2.0 * kPi * nn * (2.0 * kPi * nn * q - 3.0) * pref * std::exp(-e);
        acc += term;
        if (n > 3 && std::abs(term) < tol.abs_tol * 1e-3 && e > 5.0 * double(n)) break;
    }
    return acc / xi_half();
}

double polya_density(double x, const Tolerance& tol) {
    // the raw series converges fastest on the negative side; symmetry of the
    // sum is asserted separately (tests), not assumed blindly here
    return polya_density_raw(-std::abs(x), tol);
}

double w_a_density(double x, double a, const Tolerance& tol, bool* warning) {
    if (x <= 0.0) throw std::domain_error("w_a_density: x <= 0");
    if (a <= 0.0) throw std::domain_error("w_a_density: a <= 0");
    if (warning) *warning = false;
    if (x < 0.01 * a * a && warning) *warning = true;
    const double a2 = a * a, a4 = a2 * a2;
    const double p2 = kPi * kPi, p4 = p2 * p2;
    double acc = 0.0;
    double prev = 1e300;
    for (long n = 1; n <= tol.max_terms; ++n) {
        double nn = double(n) * double(n);
        double e = p2 * nn * x / (2.0 * a2);
        if (e > 745.0) break;
        double term = (p4 * nn * nn * x / a4 - 3.0 * p2 * nn / a2) * std::exp(-e);
        acc += term;
        double mag = std::abs(term);
        // once terms decay, the tail is geometrically dominated
        if (n > 2 && mag < prev && mag < tol.target(std::abs(acc))) break;
        prev = mag;
    }
    return acc;
}

void OstrovskiiParams::validate() const {
    if (!(C > 0.5 * kPi && C < B)) throw std::invalid_argument("Ostrovskii: need pi/2 < C < B");
    if (!(delta > 0.0)) throw std::invalid_argument("Ostrovskii: delta <= 0");
    if (a.size() != h.size()) throw std::invalid_argument("Ostrovskii: |a| != |h|");
    for (double ak : a)
        if (ak <= 0.0) throw std::invalid_argument("Ostrovskii: a_k <= 0");
    for (double hk : h)
        if (hk < B) throw std::invalid_argument("Ostrovskii: h_k < B");
    if (B <= 1.0) throw std::invalid_argument("Ostrovskii: B <= 1");
}

OstrovskiiParams OstrovskiiParams::default_set() {
    OstrovskiiParams p;
    p.C = 2.0;
    p.B = 3.0;
    p.delta = 0.05;
    for (int k = 1; k <= 8; ++k) {
        p.a.push_back(std::pow(2.0, -k));
        p.h.push_back(3.0 + k);
    }
    p.validate();
    return p;
}

OstrovskiiParams OstrovskiiParams::second_set() {
    OstrovskiiParams p;
    p.C = 1.8;
    p.B = 2.5;
    p.delta = 0.02;
    for (int k = 1; k <= 5; ++k) {
        p.a.push_back(1.0 / (k * (k + 1.0)));
        p.h.push_back(2.5 * k);
    }
    p.validate();
    return p;
}

double ostrovskii_f(double z, const OstrovskiiParams& p) {
    double v = 1.0 / (z * z) - 1.0 / (p.C * z);
    for (size_t k = 0; k < p.a.size(); ++k) v += p.delta * p.a[k] / (z + p.h[k]);
    return v;
}

cplx ostrovskii_f_c(cplx z, const OstrovskiiParams& p) {
    cplx v = 1.0 / (z * z) - 1.0 / (p.C * z);
    for (size_t k = 0; k < p.a.size(); ++k) v += p.delta * p.a[k] / (z + p.h[k]);
    return v;
}

double ostrovskii_density(double x, const OstrovskiiParams& p) {
    if (x < 0.0) throw std::domain_error("ostrovskii_density: x < 0");
    const double f1 = ostrovskii_f(1.0, p);
    if (x < 0.05) {
        // numerator = c1 x + c3 x^3 + c5 x^5, sinh(pi x) = pi x (1 + (pi x)^2/6 + (pi x)^4/120)
        double c1 = 1.0, c3 = kPi * kPi / 8.0, c5 = std::pow(0.5 * kPi, 4) / 24.0;
        double hp = 0.5 * kPi;
        c3 -= (1.0 / p.C) * hp * hp * hp / 6.0;
        c5 -= (1.0 / p.C) * std::pow(hp, 5) / 120.0;
        c1 -= (1.0 / p.C) * hp;
        for (size_t k = 0; k < p.a.size(); ++k) {
            double al = std::acosh(p.h[k]);
            double w = p.delta * p.a[k] / std::sinh(al);
            c1 += w * al;
            c3 -= w * al * al * al / 6.0;
            c5 += w * std::pow(al, 5) / 120.0;
        }
        double px = kPi * x;
        double num = c1 + c3 * x * x + c5 * x * x * x * x;
        double den = kPi * (1.0 + px * px / 6.0 + px * px * px * px / 120.0);
        return num / den / f1;
    }
    double num = x * std::cosh(0.5 * kPi * x) - (1.0 / p.C) * std::sinh(0.5 * kPi * x);
    for (size_t k = 0; k < p.a.size(); ++k) {
        double al = std::acosh(p.h[k]);
        num += p.delta * p.a[k] * std::sin(al * x) / std::sinh(al);
    }
    return num / std::sinh(kPi * x) / f1;
}

double cosh_fourier_closed(double x, CoshFourierCase c, double b) {
    switch (c) {
        case CoshFourierCase::squared:
            if (std::abs(x) < 1e-12) return 2.0;
            return 2.0 * kPi * x * std::cosh(0.5 * kPi * x) / std::sinh(kPi * x);
        case CoshFourierCase::pole_in: {
            if (!(b > -1.0 && b < 1.0)) throw std::domain_error("cosh_fourier: need -1 < b < 1");
            double al = std::acos(-b);
            if (std::abs(x) < 1e-12) return 2.0 * kPi / std::sin(al) * (kPi - al) / kPi;
            return 2.0 * kPi / std::sin(al) * std::sinh((kPi - al) * x) / std::sinh(kPi * x);
        }
        case CoshFourierCase::pole_gt1: {
            if (!(b > 1.0)) throw std::domain_error("cosh_fourier: need b > 1");
            double al = std::acosh(b);
            if (std::abs(x) < 1e-12) return 2.0 * kPi / std::sinh(al) * al / kPi;
            return 2.0 * kPi / std::sinh(al) * std::sin(al * x) / std::sinh(kPi * x);
        }
    }
    throw std::logic_error("cosh_fourier_closed: bad case");
}

double cosh_fourier_residual(double x, CoshFourierCase c, double b, const Tolerance& tol) {
    auto f = [c, b, x](double t) {
        double den = c == CoshFourierCase::squared ? std::cosh(t) * std::cosh(t)
                                                   : std::cosh(t) + b;
        return std::cos(x * t) / den;
    };
    // integrand decays like e^{-2t} (squared) or e^{-t}; [0, 50] suffices
    auto q = integrate(std::function<double(double)>(f), 0.0, 50.0, tol);
    return std::abs(2.0 * q.real() - cosh_fourier_closed(x, c, b));
}

double fourier_cos_identity_residual(double alpha, double x, long N, const Tolerance& tol) {
    (void)tol;
    if (alpha <= 0.0) throw std::domain_error("fourier_cos_identity: alpha <= 0");
    if (x < 0.0 || x > kPi) throw std::domain_error("fourier_cos_identity: x outside [0, pi]");
    double partial = 0.0;
    for (long n = N; n >= 0; --n) {
        double m = 2.0 * n + 1.0;
        partial += std::cos(m * x) / (alpha * alpha + m * m);
    }
    // tail sum_{n>N}: midpoint Euler-Maclaurin in n plus the exact m-integral
    // handled by integration by parts (oscillatory) or arctan (x = 0)
    const double M = 2.0 * double(N) + 2.0;  // m at n = N + 1/2
    double tail;
    auto g0 = [alpha](double m) { return 1.0 / (alpha * alpha + m * m); };
    if (x < 1e-9) {
        tail = (0.5 * kPi - std::atan(M / alpha)) / (2.0 * alpha);
        // F'(nu)/24 at nu = N+1/2, F(nu) = g0(2nu+1)
        double Fp = -2.0 * (2.0 * M) * g0(M) * g0(M);
        tail += Fp / 24.0;
    } else {
        double A2 = alpha * alpha;
        double den = A2 + M * M;
        double g = 1.0 / den;
        double gp = -2.0 * M / (den * den);
        double gpp = (6.0 * M * M - 2.0 * A2) / (den * den * den);
        double gppp = -24.0 * M * (M * M - A2) / (den * den * den * den);
        double sm = std::sin(M * x), cm = std::cos(M * x);
        double I = -g * sm / x - gp * cm / (x * x) + gpp * sm / (x * x * x) +
                   gppp * cm / (x * x * x * x);
        tail = 0.5 * I;
        // Euler-Maclaurin midpoint first correction: F'(N+1/2)/24,
        // F(nu) = cos((2nu+1)x)/(alpha^2+(2nu+1)^2)
        double Fp = -2.0 * x * sm * g + 2.0 * cm * gp;
        tail += Fp / 24.0;
    }
    double closed = (0.25 * kPi / alpha) * std::sinh(0.5 * alpha * (kPi - 2.0 * x)) /
                    std::cosh(0.5 * alpha * kPi);
    return std::abs(partial + tail - closed);
}

std::vector<KendallPoint> kendall_convolution_residual(double a,
                                                       const std::vector<double>& s_grid,
                                                       const Tolerance& tol) {
    if (a <= 0.0) throw std::domain_error("kendall_convolution_residual: a <= 0");
    std::vector<KendallPoint> out;
    out.reserve(s_grid.size());
    for (double s : s_grid) {
        auto f = [a, s](double z) {
            return std::exp(-std::abs(s - z) / a) * std::exp(-std::abs(z) / a) /
                   (4.0 * a * a);
        };
        // split at the |.| kinks and truncate where e^{-2|z|/a} is negligible
        double L = std::abs(s) + 40.0 * a;
        double k0 = std::min(0.0, s), k1 = std::max(0.0, s);
        double v = integrate(std::function<double(double)>(f), -L, k0, tol).real() +
                   integrate(std::function<double(double)>(f), k0, k1, tol).real() +
                   integrate(std::function<double(double)>(f), k1, L, tol).real();
        double closed = (1.0 / (4.0 * a)) * (1.0 + std::abs(s) / a) * std::exp(-std::abs(s) / a);
        out.push_back({s, std::abs(v - closed)});
    }
    return out;
}

}  // namespace vdw::densities
