#include "vdw/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vdw::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kLog2Pi = 1.837877066409345483560659472811;

// B_2, B_4, ..., B_16 for Stirling/Euler-Maclaurin
constexpr double kBern[8] = {1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,  -1.0 / 30.0,
                             5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

cplx log_gamma_stirling(cplx z) {
    // requires Re z reasonably large; caller shifts
    cplx lg = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
    cplx z2 = z * z;
    cplx zp = z;
    for (int j = 0; j < 8; ++j) {
        int two_j = 2 * (j + 1);
        lg += kBern[j] / (double(two_j) * double(two_j - 1)) / zp;
        zp *= z2;
    }
    return lg;
}

}  // namespace

cplx log_gamma(cplx s) {
    if (s.real() <= 0.0) throw std::domain_error("log_gamma: Re s <= 0");
    cplx shift(0.0);
    cplx z = s;
    while (z.real() < 12.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift;
}

cplx gamma_fn(cplx s) {
    if (is_nonpositive_integer(s)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
    if (s.real() < 0.5) {
        // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return kPi / (std::sin(kPi * s) * gamma_fn(1.0 - s));
    }
    return std::exp(log_gamma(s));
}

double digamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("digamma: pole");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double psi = std::log(x) - 0.5 / x;
    double x2 = x * x;
    double xp = x2;
    for (int j = 0; j < 8; ++j) {
        psi -= kBern[j] / (2.0 * (j + 1)) / xp;
        xp *= x2;
    }
    return psi + acc;
}

// --- primes ------------------------------------------------------------------

std::vector<int32_t> primes_upto(int32_t n) {
    std::vector<int32_t> primes;
    if (n < 2) return primes;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (int32_t i = 2; i <= n; ++i) {
        if (!comp[static_cast<size_t>(i)]) {
            primes.push_back(i);
            for (int64_t j = int64_t(i) * i; j <= n; j += i) comp[static_cast<size_t>(j)] = true;
        }
    }
    return primes;
}

double von_mangoldt(long n) {
    if (n < 2) return 0.0;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            return m == 1 ? std::log(double(p)) : 0.0;
        }
    }
    return std::log(double(m));  // n prime
}

// --- zeta --------------------------------------------------------------------

double euler_product_zeta(double alpha, long prime_bound, double* tail_bound) {
    if (alpha <= 1.0) throw std::domain_error("euler_product_zeta: alpha <= 1");
    if (prime_bound < 2) throw std::domain_error("euler_product_zeta: P < 2");
    auto ps = primes_upto(static_cast<int32_t>(prime_bound));
    double logz = 0.0;
    for (int32_t p : ps) logz -= std::log1p(-std::pow(double(p), -alpha));
    if (tail_bound) {
        // sum_{p > P} -log(1 - p^-alpha) <= sum_{n > P} 2 n^-alpha <= 2 P^{1-alpha}/(alpha-1)
        *tail_bound = 2.0 * std::pow(double(prime_bound), 1.0 - alpha) / (alpha - 1.0);
    }
    return std::exp(logz);
}

namespace {

// eta(s) = sum (-1)^{k} (k+1)^{-s} accelerated by iterated averaging of
// partial sums (numerically stable Euler transformation).
cplx eta_series(cplx s) {
    constexpr int kTerms = 72;
    cplx row[kTerms];
    cplx partial(0.0);
    double sign = 1.0;
    for (int k = 0; k < kTerms; ++k) {
        partial += sign * std::exp(-s * std::log(double(k + 1)));
        row[k] = partial;
        sign = -sign;
    }
    int n = kTerms;
    while (n > 1) {
        for (int i = 0; i + 1 < n; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        --n;
    }
    return row[0];
}

// Stieltjes constants for the Laurent expansion (s-1) zeta(s) = 1 + sum_n
// (-1)^n gamma_n (s-1)^{n+1} / n!
constexpr double kStieltjes[7] = {
    0.57721566490153286060651209008,   // gamma_0
    -0.072815845483676724860586375875,  // gamma_1
    -0.0096903631928723184845303860352, // gamma_2
    0.0020538344203033458661600465427,  // gamma_3
    0.0023253700654673000574681701775,  // gamma_4
    0.00079332381730106270175333487744, // gamma_5
    -0.00023876934543019960987242184190 // gamma_6
};

cplx zeta_sm1(cplx s) {
    // (s-1) * zeta(s), stable near s = 1
    cplx d = s - 1.0;
    if (std::abs(d) < 0.05) {
        cplx acc(1.0);
        double fact = 1.0;
        cplx dp = d;
        for (int n = 0; n < 7; ++n) {
            double sgn = (n % 2 == 0) ? 1.0 : -1.0;
            acc += sgn * kStieltjes[n] * dp / fact;
            fact *= (n + 1);
            dp *= d;
        }
        return acc;
    }
    return d * zeta(s);
}

}  // namespace

cplx zeta(cplx s) {
    if (s.real() <= 0.0) throw std::domain_error("zeta: Re s <= 0 outside evaluation window");
    if (s == cplx(1.0)) throw std::domain_error("zeta: pole at s = 1");
    cplx denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
    return eta_series(s) / denom;
}

cplx xi(cplx s) {
    if (s.real() <= 0.0) throw std::domain_error("xi: Re s <= 0 outside evaluation window");
    return 0.5 * s * std::pow(kPi, -0.5 * s) * gamma_fn(0.5 * s) * zeta_sm1(s);
}

MuMeasure mu_zeta_atoms(double x_max) {
    if (x_max <= std::log(2.0)) throw std::domain_error("mu_zeta_atoms: x_max <= log 2");
    MuMeasure m;
    auto ps = primes_upto(static_cast<int32_t>(std::exp(x_max)) + 1);
    for (int32_t p : ps) {
        double lp = std::log(double(p));
        for (int r = 1; r * lp <= x_max; ++r) m.atoms.emplace_back(r * lp, lp);
    }
    std::sort(m.atoms.begin(), m.atoms.end());
    return m;
}

MuMeasure mu_gamma() {
    MuMeasure m;
    m.density = [](double x) { return 1.0 / std::expm1(x); };
    m.density_id = "exp-m1-reciprocal";
    return m;
}

// --- Dirichlet characters ------------------------------------------------------

bool DirichletCharacter::is_principal() const {
    for (int n = 1; n < modulus; ++n)
        if (std::gcd(n, modulus) == 1 && values[static_cast<size_t>(n)] != cplx(1.0)) return false;
    return modulus == 1 || values[1 % modulus] == cplx(1.0);
}

bool DirichletCharacter::real_nonnegative() const {
    for (auto& v : values)
        if (v.imag() != 0.0 || v.real() < 0.0) return false;
    return true;
}

DirichletCharacter DirichletCharacter::principal(int k) {
    DirichletCharacter chi;
    chi.modulus = k;
    chi.values.assign(static_cast<size_t>(k), cplx(0.0));
    if (k == 1) {
        chi.values[0] = 1.0;
    } else {
        for (int n = 0; n < k; ++n)
            if (std::gcd(n, k) == 1) chi.values[static_cast<size_t>(n)] = 1.0;
    }
    chi.parity = 0;
    chi.primitive = (k == 1);
    return chi;
}

DirichletCharacter DirichletCharacter::mod4() {
    DirichletCharacter chi;
    chi.modulus = 4;
    chi.values = {cplx(0.0), cplx(1.0), cplx(0.0), cplx(-1.0)};
    chi.parity = 1;
    chi.primitive = true;
    return chi;
}

std::string DirichletCharacter::to_json() const {
    nlohmann::json j;
    j["modulus"] = modulus;
    auto arr = nlohmann::json::array();
    for (auto& v : values) arr.push_back({v.real(), v.imag()});
    j["values"] = arr;
    return j.dump();
}

DirichletCharacter DirichletCharacter::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DirichletCharacter chi;
    chi.modulus = j.at("modulus").get<int>();
    for (auto& v : j.at("values"))
        chi.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    if (static_cast<int>(chi.values.size()) != chi.modulus)
        throw std::invalid_argument("character table size != modulus");
    // parity from the table; chi(-1) = chi(k-1)
    cplx cm1 = chi.modulus == 1 ? cplx(1.0) : chi.values[static_cast<size_t>(chi.modulus - 1)];
    chi.parity = (std::abs(cm1 - cplx(1.0)) < 1e-9) ? 0 : 1;
    return chi;
}

cplx hurwitz_zeta(cplx s, double x) {
    if (s.real() <= 0.0) throw std::domain_error("hurwitz_zeta: Re s <= 0");
    if (x <= 0.0) throw std::domain_error("hurwitz_zeta: x <= 0");
    if (s == cplx(1.0)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    const int M = 22;
    cplx sum(0.0);
    for (int n = 0; n < M; ++n) sum += std::exp(-s * std::log(n + x));
    double y = M + x;
    cplx ly = std::log(y);
    sum += std::exp((1.0 - s) * ly) / (s - 1.0);
    sum += 0.5 * std::exp(-s * ly);
    // Euler-Maclaurin correction terms: B_2j/(2j)! (s)_{2j-1} y^{-s-2j+1}
    cplx poch = s;  // rising factorial (s)(s+1)...(s+2j-2)
    cplx ypow = std::exp(-(s + 1.0) * ly);
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= 8; ++j) {
        sum += kBern[j - 1] / fact * poch * ypow;
        poch *= (s + double(2 * j - 1)) * (s + double(2 * j));
        ypow /= y * y;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
}

cplx dirichlet_L(const DirichletCharacter& chi, cplx s) {
    const int k = chi.modulus;
    if (k == 1 || chi.is_principal()) {
        // L = zeta * prod_{p | k} (1 - p^{-s})
        cplx z = zeta(s);
        for (int32_t p : primes_upto(k))
            if (k % p == 0) z *= (1.0 - std::exp(-s * std::log(double(p))));
        return z;
    }
    if (s.real() <= 0.0) throw std::domain_error("dirichlet_L: Re s <= 0");
    // non-principal: q^{-s} sum_a chi(a) [zeta_H(s, a/q) - 1/(s-1)]; the pole
    // terms cancel since sum chi(a) = 0, making s = 1 regular.
    cplx acc(0.0);
    for (int a = 1; a <= k; ++a) {
        cplx c = chi(a);
        if (c == cplx(0.0)) continue;
        cplx zh;
        if (std::abs(s - cplx(1.0)) < 1e-8) {
            // deflated value via nearby evaluation (pole cancels in the sum);
            // use the digamma limit: zeta_H(1,x) - 1/(s-1) -> -psi(x)
            zh = -digamma(double(a) / k);
        } else {
            zh = hurwitz_zeta(s, double(a) / k) - 1.0 / (s - 1.0);
        }
        acc += c * zh;
    }
    return std::exp(-s * std::log(double(k))) * acc;
}

cplx regularized_lambda(const DirichletCharacter& chi, cplx s) {
    cplx half = 0.5 * (s + double(chi.parity));
    return std::exp(-half * std::log(kPi / chi.modulus)) * gamma_fn(half) * dirichlet_L(chi, s);
}

cplx gauss_sum(const DirichletCharacter& chi) {
    cplx t(0.0);
    for (int n = 1; n <= chi.modulus; ++n) {
        double ang = 2.0 * kPi * n / chi.modulus;
        t += chi(n) * cplx(std::cos(ang), std::sin(ang));
    }
    return t;
}

MuMeasure mu_L_atoms(const DirichletCharacter& chi, double sigma, long n_max) {
    if (sigma <= 1.0) throw std::domain_error("mu_L_atoms: sigma <= 1");
    if (n_max < 2) throw std::domain_error("mu_L_atoms: n_max < 2");
    MuMeasure m;
    for (long n = 2; n <= n_max; ++n) {
        double lam = von_mangoldt(n);
        if (lam == 0.0) continue;
        double ln = std::log(double(n));
        cplx c = chi(n);
        double mass = lam / (ln * std::pow(double(n), sigma));
        // complex masses carried by their real part only when the character is
        // real; complex characters are rejected for measure construction.
        if (std::abs(c.imag()) > 1e-14)
            throw std::domain_error("mu_L_atoms: complex character masses not representable");
        if (c.real() == 0.0) continue;
        m.atoms.emplace_back(ln, mass * c.real());
    }
    return m;
}

// --- Dedekind eta ---------------------------------------------------------------

double dedekind_eta(double x, EtaMethod method) {
    if (x <= 0.0) throw std::domain_error("dedekind_eta: x <= 0");
    const double q = std::exp(-2.0 * kPi * x);
    if (method == EtaMethod::q_product) {
        double logprod = 0.0;
        double qn = q;
        for (int n = 1; n < 100000; ++n) {
            if (qn < 1e-20) break;
            logprod += std::log1p(-qn);
            qn *= q;
        }
        return std::pow(q, 1.0 / 24.0) * std::exp(logprod);
    }
    // Euler cosine series: (2/sqrt3) sum cos(pi(2n+1)/6) q^{(2n+1)^2/24},
    // truncated once q^{N^2/24} is negligible
    double acc = 0.0;
    for (int n = 0; n < 100000; ++n) {
        double m = 2.0 * n + 1.0;
        double term = std::pow(q, m * m / 24.0);
        if (term < 1e-22 && n > 2) break;
        acc += std::cos(kPi * m / 6.0) * term;
    }
    return 2.0 / std::sqrt(3.0) * acc;
}

double eta_cubed_series(double x) {
    if (x <= 0.0) throw std::domain_error("eta_cubed_series: x <= 0");
    const double q = std::exp(-2.0 * kPi * x);
    double acc = 0.0;
    for (int n = 0; n < 100000; ++n) {
        double m = 2.0 * n + 1.0;
        double term = (m)*std::pow(q, m * m / 8.0);
        if (term < 1e-22 && n > 2) break;
        acc += (n % 2 == 0 ? 1.0 : -1.0) * term;
    }
    return acc;
}

double eta_LT_closed(double s) {
    if (s <= 0.0) throw std::domain_error("eta_LT_closed: s <= 0");
    return std::sqrt(kPi / s) * std::sinh(2.0 * std::sqrt(kPi * s / 3.0)) /
           std::cosh(std::sqrt(3.0 * kPi * s));
}

double eta3_LT_closed(double s) {
    if (s <= 0.0) throw std::domain_error("eta3_LT_closed: s <= 0");
    return 1.0 / std::cosh(std::sqrt(kPi * s));
}

double dirichlet_beta(double s) {
    if (s <= 0.0) throw std::domain_error("dirichlet_beta: s <= 0");
    // alternating series over odd integers, iterated-averaging acceleration
    constexpr int kTerms = 72;
    double row[kTerms];
    double partial = 0.0, sign = 1.0;
    for (int k = 0; k < kTerms; ++k) {
        partial += sign * std::pow(2.0 * k + 1.0, -s);
        row[k] = partial;
        sign = -sign;
    }
    int n = kTerms;
    while (n > 1) {
        for (int i = 0; i + 1 < n; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        --n;
    }
    return row[0];
}

// --- Ramanujan tau ----------------------------------------------------------------

std::string TauTable::to_csv() const {
    std::ostringstream os;
    os << "n,tau\n";
    for (int n = 1; n <= n_max; ++n) os << n << "," << values[static_cast<size_t>(n - 1)].get_str() << "\n";
    return os.str();
}

TauTable ramanujan_tau(int n_max) {
    if (n_max < 1) throw std::domain_error("ramanujan_tau: n_max < 1");
    if (n_max > 20000) throw std::overflow_error("ramanujan_tau: n_max too large");
    // coefficients of prod_{k} (1-y^k)^24 through degree n_max - 1, then shift
    const int deg = n_max - 1;
    std::vector<mpz_class> poly(static_cast<size_t>(deg) + 1);
    poly[0] = 1;
    for (int pass = 0; pass < 24; ++pass) {
        // multiply by prod_k (1 - y^k) using Euler's pentagonal number theorem
        std::vector<mpz_class> next(static_cast<size_t>(deg) + 1);
        for (int d = 0; d <= deg; ++d) {
            if (poly[static_cast<size_t>(d)] == 0) continue;
            // pentagonal expansion: sum_j (-1)^j y^{j(3j-1)/2}, j in Z
            for (int j = 0;; ++j) {
                long g1 = long(j) * (3L * j - 1) / 2;
                if (d + g1 > deg) break;
                long sgn = (j % 2 == 0) ? 1 : -1;
                next[static_cast<size_t>(d + g1)] += sgn * poly[static_cast<size_t>(d)];
                if (j > 0) {
                    long g2 = long(j) * (3L * j + 1) / 2;
                    if (d + g2 <= deg) next[static_cast<size_t>(d + g2)] += sgn * poly[static_cast<size_t>(d)];
                }
            }
        }
        poly.swap(next);
    }
    TauTable t;
    t.n_max = n_max;
    t.values.resize(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) t.values[static_cast<size_t>(n - 1)] = poly[static_cast<size_t>(n - 1)];
    return t;
}

cplx L_tau_partial(cplx s, const TauTable& tau) {
    if (s.real() <= 6.5)
        throw std::domain_error("L_tau_partial: absolutely convergent only for Re s > 13/2");
    cplx acc(0.0);
    for (int n = 1; n <= tau.n_max; ++n)
        acc += tau.as_double(n) * std::exp(-s * std::log(double(n)));
    return acc;
}

double xi_tau_kernel(double t) {
    // Phi_tau(t) = e^{-2 pi cosh t} prod_k (1-e^{-2 pi k e^t})^12 (1-e^{-2 pi k e^-t})^12
    double et = std::exp(t), emt = std::exp(-t);
    double lg = -2.0 * kPi * std::cosh(t);
    for (int k = 1; k < 2000; ++k) {
        double a = std::exp(-2.0 * kPi * k * et);
        double b = std::exp(-2.0 * kPi * k * emt);
        if (a < 1e-20 && b < 1e-20) break;
        lg += 12.0 * (std::log1p(-a) + std::log1p(-b));
    }
    return std::exp(lg);
}

double Xi_tau(double s, const Tolerance& tol) {
    // even integrand: 2 int_0^T cos(st) Phi_tau(t) dt; e^{-2 pi cosh T} < 1e-18
    const double T = 3.7;
    auto f = [s](double t) { return std::cos(s * t) * xi_tau_kernel(t); };
    auto q = integrate(std::function<double(double)>(f), 0.0, T, tol);
    return 2.0 * q.real();
}

double sigma_minus1(int n) {
    double acc = 0.0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) acc += 1.0 / d;
    return acc;
}

double sigma_minus1_identity_residual(double x, int n_max) {
    if (x <= 0.0) throw std::domain_error("sigma_minus1_identity_residual: x <= 0");
    double logprod = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        double e = std::exp(-2.0 * kPi * n * x);
        if (e < 1e-300) break;
        logprod += std::log1p(-e);
    }
    double series = 0.0;
    for (int n = n_max; n >= 1; --n) series += sigma_minus1(n) * std::exp(-2.0 * kPi * n * x);
    return std::abs(logprod + series);
}

// --- Macdonald -------------------------------------------------------------------

cplx macdonald_K(cplx z, double a, const Tolerance& tol) {
    if (a <= 0.0) throw std::domain_error("macdonald_K: a <= 0");
    // t = e^u: K_z(a) = int_-inf^inf e^{zu - a cosh u} du; fold to [0,inf):
    // = int_0^inf (e^{zu} + e^{-zu}) e^{-a cosh u} du = 2 int cosh(zu) e^{-a cosh u} du
    auto fre = [z, a](double u) {
        return 2.0 * (std::cosh(z * u) * std::exp(-a * std::cosh(u))).real();
    };
    auto fim = [z, a](double u) {
        return 2.0 * (std::cosh(z * u) * std::exp(-a * std::cosh(u))).imag();
    };
    // integrand decays like exp(-a e^u / 2): truncate where a cosh u > 750
    double U = std::acosh(750.0 / a);
    auto qr = integrate(std::function<double(double)>(fre), 0.0, U, tol);
    if (!qr.converged) throw std::runtime_error("macdonald_K: quadrature failed");
    if (z.imag() == 0.0) return cplx(qr.real(), 0.0);
    auto qi = integrate(std::function<double(double)>(fim), 0.0, U, tol);
    return cplx(qr.real(), qi.real());
}

cplx frak_G(cplx z, double a, const Tolerance& tol) {
    if (a <= 0.0) throw std::domain_error("frak_G: a <= 0");
    // direct evaluation of int e^{-a(e^u+e^{-u}) + zu} du (equals K_z(2a))
    auto fre = [z, a](double u) {
        return (std::exp(z * u - 2.0 * a * std::cosh(u))).real();
    };
    auto fim = [z, a](double u) {
        return (std::exp(z * u - 2.0 * a * std::cosh(u))).imag();
    };
    double U = std::acosh(750.0 / (2.0 * a));
    auto qr = integrate(std::function<double(double)>(fre), -U, U, tol);
    if (z.imag() == 0.0) return cplx(qr.real(), 0.0);
    auto qi = integrate(std::function<double(double)>(fim), -U, U, tol);
    return cplx(qr.real(), qi.real());
}

}  // namespace vdw::specfun
