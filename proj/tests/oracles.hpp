#pragma once

// Test-only oracles, independent of the library's evaluation paths:
// Simpson quadrature with Richardson refinement, brute-force partial sums,
// and reference constants.

#include <cmath>
#include <functional>

namespace oracle {

// composite Simpson with doubling until two refinements agree
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-12, int max_doublings = 22) {
    int n = 64;
    auto pass = [&](int m) {
        double h = (b - a) / m;
        double acc = f(a) + f(b);
        for (int i = 1; i < m; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
        return acc * h / 3.0;
    };
    double prev = pass(n);
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        double cur = pass(n);
        if (std::abs(cur - prev) < tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

// sum_{k=1}^{N} 1/k^2 plus the integral tail correction 1/N - 1/(2N^2) + ...
inline double basel_partial_with_tail(long N) {
    double s = 0.0;
    for (long k = N; k >= 1; --k) s += 1.0 / (double(k) * double(k));
    // Euler-Maclaurin tail: sum_{k>N} k^-2 = 1/N - 1/(2N^2) + 1/(6N^3) - ...
    double n = double(N);
    return s + 1.0 / n - 0.5 / (n * n) + 1.0 / (6.0 * n * n * n) - 1.0 / (30.0 * n * n * n * n * n);
}

// Euler-Mascheroni via harmonic sums with Euler-Maclaurin correction
inline double euler_gamma_series(long n) {
    double h = 0.0;
    for (long k = n; k >= 1; --k) h += 1.0 / double(k);
    double x = double(n);
    return h - std::log(x) - 0.5 / x + 1.0 / (12.0 * x * x) - 1.0 / (120.0 * x * x * x * x);
}

// reference constants
constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kPiSq6 = 1.6449340668482264364724151666460;
constexpr double kPi4_90 = 1.0823232337111381915160036965412;
constexpr double kEulerGamma = 0.57721566490153286060651209008240;
constexpr double kCatalan = 0.91596559417721901505460351493238;
constexpr double kZetaHalf = -1.4603545088095868128894991525152;
constexpr double kZeta3 = 1.2020569031595942853997381615114;
constexpr double kJ01 = 2.4048255576957727686216318793265;
constexpr double kXiHalf = 0.49712077818831410991277373969;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

}  // namespace oracle
