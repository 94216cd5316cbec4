#include "vdw/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vdw/densities.hpp"
#include "vdw/hadamard.hpp"
#include "vdw/lseries.hpp"
#include "vdw/samplers.hpp"
#include "vdw/specfun.hpp"
#include "vdw/thorin.hpp"

namespace vdw::checks {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

using couples::PointResult;
using couples::VerificationReport;

PointResult point(double s, double residual, double tol, double se = 0.0,
                  const std::string& why = "") {
    PointResult p;
    p.s = s;
    p.residual = residual;
    p.se = se;
    p.ok = residual <= std::max(tol, 3.0 * se);
    p.reason = p.ok ? "" : why;
    return p;
}

VerificationReport make_report(const std::string& id, double tol) {
    VerificationReport r;
    r.id = id;
    r.tolerance = tol;
    return r;
}

// ---------------------------------------------------------------- identities

VerificationReport chk_frullani(const CheckConfig&) {
    auto rep = make_report("frullani", 1e-9);
    Tolerance tol(1e-12, 1e-12);
    for (double z : {0.5, 1.0, 2.0})
        for (double s : {0.5, 1.0, 2.0})
            rep.points.push_back(point(s, frullani_residual(z, s, tol), 1e-9, 0.0,
                                       "Frullani residual too large"));
    rep.finalize();
    return rep;
}

VerificationReport chk_lemma2_zeta2(const CheckConfig&) {
    auto rep = make_report("lemma2-zeta2", 1e-6);
    rep.notes.push_back("exponent sign reading: -int (1 - e^{-s^2 t/2}) nu_a(t)/t dt");
    const double p = 2.0, alpha = 2.0;
    const double logp = std::log(p);
    MuMeasure mu;
    for (int k = 1; k <= 200; ++k) mu.atoms.emplace_back(k * logp, logp);
    Tolerance tol(1e-11, 1e-11);
    auto fzp = [p](double x) { return std::pow(p, x) / (std::pow(p, x) - 1.0); };
    double fpf = -logp / (std::pow(p, alpha) - 1.0);
    for (double s : {0.5, 1.0}) {
        double lhs = std::log(fzp(alpha) / fzp(alpha + s)) + s * fpf;
        // t = u^2 substitution smooths the 1/sqrt(t) endpoint
        auto integrand = [&](double u) {
            double t = u * u;
            if (t == 0.0) return 0.0;
            return -std::expm1(-0.5 * s * s * t) * lemma2_nu_alpha(mu, alpha, t, tol) / t *
                   2.0 * u;
        };
        double rhs = -integrate_half_line(std::function<double(double)>(integrand), 0.0, tol)
                          .real();
        rep.points.push_back(point(s, std::abs(lhs - rhs), 1e-6, 0.0, "Lemma 2 mismatch"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_lemma2_gamma(const CheckConfig&) {
    auto rep = make_report("lemma2-gamma", 1e-6);
    const double alpha = 1.0, s = 0.5;
    MuMeasure mu = specfun::mu_gamma();
    Tolerance tol(1e-11, 1e-11);
    // f = Gamma(1+.): LHS = log(G(1+a)/G(1+a+s)) + s psi(1+a)
    double lhs = specfun::log_gamma(cplx(1.0 + alpha)).real() -
                 specfun::log_gamma(cplx(1.0 + alpha + s)).real() +
                 s * specfun::digamma(1.0 + alpha);
    auto integrand = [&](double u) {
        double t = u * u;
        if (t == 0.0) return 0.0;
        return -std::expm1(-0.5 * s * s * t) * lemma2_nu_alpha(mu, alpha, t, tol) / t * 2.0 *
               u;
    };
    double rhs =
        -integrate_half_line(std::function<double(double)>(integrand), 0.0, tol).real();
    rep.points.push_back(point(s, std::abs(lhs - rhs), 1e-6, 0.0, "Lemma 2 mismatch"));
    // nu_alpha route consistency (display z-integral vs stable route)
    for (double t : {0.25, 1.0, 4.0}) {
        double a = lemma2_nu_alpha(mu, alpha, t, tol);
        double b = lemma2_nu_alpha_zroute(mu, alpha, t, tol);
        rep.points.push_back(point(t, std::abs(a - b), 1e-9, 0.0, "nu route mismatch"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_hadamard_products(const CheckConfig& cfg) {
    auto rep = make_report("hadamard-products", 1e-8);
    ProductConfig pc{cfg.product_n(), TailCorrection::log1p_order4};
    ZeroSet cos_zeros = ZeroSet::affine(kPi, -0.5);
    ZeroSet sinh_zeros = ZeroSet::affine(kPi, 0.0);
    for (double s = -5.0; s <= 5.001; s += 1.0) {
        double prod = eval_even_product(cos_zeros, cplx(s), pc).real();
        rep.points.push_back(point(s, std::abs(prod - std::cosh(s)), 1e-8, 0.0, "cosh"));
        double prod2 = eval_even_product(sinh_zeros, cplx(s), pc).real();
        double direct = std::abs(s) < 1e-12 ? 1.0 : std::sinh(s) / s;
        rep.points.push_back(point(s, std::abs(prod2 - direct), 1e-8, 0.0, "sinh/s"));
    }
    for (double nu : {-0.5, 0.5, 1.0}) {
        ZeroSet bz = ZeroSet::bessel(nu, cfg.product_n());
        for (double s = -5.0; s <= 5.001; s += 2.0) {
            double prod = eval_even_product(bz, cplx(0.0, s), pc).real();
            double direct = bessel_f(nu, s);
            rep.points.push_back(point(s, std::abs(prod - direct), 1e-8, 0.0, "bessel f"));
        }
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_ferromagnetic(const CheckConfig& cfg) {
    auto rep = make_report("ferromagnetic", 1e-8);
    ProductConfig pc{cfg.product_n(), TailCorrection::log1p_order4};
    for (double a : {0.5, 1.0, 2.0}) {
        ZeroSet zs = ZeroSet::affine(kPi / a, 0.0);
        for (double s = -3.0; s <= 3.001; s += 1.0) {
            double prod = eval_even_product(zs, cplx(s), pc).real();
            double direct = std::abs(s) < 1e-12 ? 1.0 : std::sinh(a * s) / (a * s);
            rep.points.push_back(point(s, std::abs(prod - direct), 1e-8, 0.0, "sinh(as)/as"));
        }
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_even_product_duality(const CheckConfig& cfg) {
    // U = sum delta_{rho^2}: GGC transform at s^2 equals reciprocal product at s
    auto rep = make_report("even-product-duality", 1e-9);
    Tolerance tol(1e-12, 1e-12);
    long N = cfg.product_n();
    ZeroSet zs = ZeroSet::affine(kPi, -0.5);  // cos zeros
    ThorinMeasure U;
    for (long n = 1; n <= N; ++n) {
        double r = zs.zero(n);
        U.atoms.emplace_back(r * r, 1.0);
    }
    U.tail_inv1 = zs.tail_power_sum(2, N);
    U.tail_inv2 = zs.tail_power_sum(4, N);
    ProductConfig pc{N, TailCorrection::log1p_order4};
    for (double s : {0.5, 1.0, 2.0, 3.5, 5.0}) {
        double lt = ggc_laplace_transform(U, s * s, tol);
        double rp = eval_even_product(zs, cplx(s), pc, ProductDirection::reciprocal).real();
        rep.points.push_back(point(s, std::abs(lt - rp), 1e-9, 0.0, "duality"));
        // also against the closed form 1/cosh(s)
        rep.points.push_back(point(s, std::abs(lt - 1.0 / std::cosh(s)), 1e-8, 0.0,
                                   "vs 1/cosh"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_levy_frullani_route(const CheckConfig&) {
    auto rep = make_report("levy-frullani-route", 1e-8);
    Tolerance tol(1e-12, 1e-12);
    ThorinMeasure U;
    U.atoms = {{1.0, 1.0}, {4.0, 0.5}, {9.0, 2.0}};
    for (double s : {0.5, 1.0, 2.0}) {
        auto f = [&](double t) {
            if (t == 0.0) return 0.0;
            return -std::expm1(-s * s * t) * levy_density_from_thorin(U, t, tol);
        };
        double via_levy =
            integrate_half_line(std::function<double(double)>(f), 0.0, tol).real();
        double direct = ggc_laplace_exponent(U, s * s, tol);
        rep.points.push_back(point(s, std::abs(via_levy - direct), 1e-8, 0.0,
                                   "Frullani route vs direct phi"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_zeta(const CheckConfig&) {
    auto rep = make_report("zeta-euler-vs-series", 1e-9);
    for (double a : {2.0, 3.0, 4.0}) {
        double tail = 0.0;
        double ep = specfun::euler_product_zeta(a, 100000, &tail);
        double zs = specfun::zeta(cplx(a)).real();
        rep.points.push_back(point(a, std::abs(ep - zs), tail + 1e-10, 0.0,
                                   "Euler product vs continuation"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_xi_symmetry(const CheckConfig&) {
    auto rep = make_report("xi-symmetry", 1e-8);
    for (double s : {0.3, 0.5, 0.7}) {
        double d = std::abs(specfun::xi(cplx(s)) - specfun::xi(cplx(1.0 - s)));
        rep.points.push_back(point(s, d, 1e-8, 0.0, "xi(s) != xi(1-s)"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_w_mellin(const CheckConfig&) {
    auto rep = make_report("w-mellin", 1e-5);
    Tolerance tol(1e-11, 1e-11);
    // E(W_1^s) = 2(2/pi)^s xi(2s); quadrature over the density from 0.01
    // (the sub-0.01 mass is far below tolerance)
    for (double s : {1.0, 2.0}) {
        auto f = [&](double x) {
            return std::pow(x, s) * densities::w_a_density(x, 1.0, tol);
        };
        double mom = integrate(std::function<double(double)>(f), 0.01, 2.0, tol).real() +
                     integrate_half_line(std::function<double(double)>(f), 2.0, tol).real();
        double closed = 2.0 * std::pow(2.0 / kPi, s) * specfun::xi(cplx(2.0 * s)).real();
        rep.points.push_back(point(s, std::abs(mom - closed), 1e-5, 0.0, "Mellin vs xi(2s)"));
        if (s == 2.0) {
            double as_printed = 2.0 * std::pow(2.0 / kPi, s) * specfun::xi(cplx(s)).real();
            std::ostringstream os;
            os << "as-printed form 2(2/pi)^2 xi(2) residual (logged, not asserted): "
               << std::abs(mom - as_printed);
            rep.notes.push_back(os.str());
        }
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_eta_methods(const CheckConfig&) {
    auto rep = make_report("eta-methods", 1e-12);
    for (double x = 0.05; x <= 5.0; x += 0.15) {
        double a = specfun::dedekind_eta(x, specfun::EtaMethod::q_product);
        double b = specfun::dedekind_eta(x, specfun::EtaMethod::euler_series);
        rep.points.push_back(point(x, std::abs(a - b), 1e-12, 0.0, "eta method mismatch"));
    }
    // modular symmetry eta(i/x) = sqrt(x) eta(ix)
    for (double x : {0.5, 2.0}) {
        double lhs = specfun::dedekind_eta(1.0 / x, specfun::EtaMethod::q_product);
        double rhs = std::sqrt(x) * specfun::dedekind_eta(x, specfun::EtaMethod::q_product);
        rep.points.push_back(point(x, std::abs(lhs - rhs), 1e-10, 0.0, "modular symmetry"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_eta_lt(const CheckConfig&) {
    auto rep = make_report("eta-lt", 1e-8);
    Tolerance tol(1e-11, 1e-11);
    for (double s : {1.0, 2.0, 5.0}) {
        auto f = [s](double x) {
            return std::exp(-s * x) * specfun::dedekind_eta(x, specfun::EtaMethod::euler_series);
        };
        double q = integrate_half_line(std::function<double(double)>(f), 0.0, tol).real();
        rep.points.push_back(
            point(s, std::abs(q - specfun::eta_LT_closed(s)), 1e-8, 0.0, "eta LT"));
        auto f3 = [s](double x) { return std::exp(-s * x) * specfun::eta_cubed_series(x); };
        double q3 = integrate_half_line(std::function<double(double)>(f3), 0.0, tol).real();
        rep.points.push_back(
            point(s, std::abs(q3 - specfun::eta3_LT_closed(s)), 1e-8, 0.0, "eta^3 LT"));
    }
    // Jacobi triple product vs cube of eta
    for (double x = 0.1; x <= 3.0; x += 0.2) {
        double cube = std::pow(specfun::dedekind_eta(x, specfun::EtaMethod::q_product), 3);
        double series = specfun::eta_cubed_series(x);
        rep.points.push_back(point(x, std::abs(cube - series), 1e-12, 0.0, "triple product"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_beta_mellin(const CheckConfig&) {
    auto rep = make_report("beta-mellin", 1e-6);
    rep.notes.push_back("normalization resolved exactly: int = 2 (pi/2)^{-s/2} Gamma(s) beta(s)");
    Tolerance tol(1e-11, 1e-11);
    for (double s : {2.0, 3.0}) {
        auto f = [s](double x) {
            return std::pow(x, s - 1.0) / std::cosh(std::sqrt(0.5 * kPi) * x);
        };
        double q = integrate_half_line(std::function<double(double)>(f), 0.0, tol).real();
        double closed = 2.0 * std::pow(0.5 * kPi, -0.5 * s) *
                        specfun::gamma_fn(cplx(s)).real() * specfun::dirichlet_beta(s);
        rep.points.push_back(point(s, std::abs(q - closed), 1e-6, 0.0, "beta Mellin"));
    }
    rep.points.push_back(point(1.0, std::abs(specfun::dirichlet_beta(1.0) - kPi / 4.0), 1e-12));
    rep.finalize();
    return rep;
}

VerificationReport chk_gauss_sum(const CheckConfig&) {
    auto rep = make_report("gauss-sum", 1e-12);
    auto chi = specfun::DirichletCharacter::mod4();
    rep.points.push_back(point(4, std::abs(std::abs(specfun::gauss_sum(chi)) - 2.0), 1e-12,
                               0.0, "|tau(chi_4)| != sqrt(4)"));
    rep.points.push_back(point(0, chi.parity == 1 ? 0.0 : 1.0, 0.5, 0.0, "parity"));
    rep.finalize();
    return rep;
}

VerificationReport chk_lambda_fe(const CheckConfig&) {
    // functional-equation residual: logged, not asserted (paper omits the
    // normalization); under Lambda(s,chi) = tau(chi) i^{-eps} k^{-1/2}
    // Lambda(1-s, conj chi) the residual vanishes for the mod-4 character.
    auto rep = make_report("lambda-fe", 1e30);
    auto chi = specfun::DirichletCharacter::mod4();
    cplx tau = specfun::gauss_sum(chi);
    for (double s : {0.3, 0.5, 0.7}) {
        cplx lhs = specfun::regularized_lambda(chi, cplx(s));
        cplx rhs = specfun::regularized_lambda(chi, cplx(1.0 - s));
        cplx pref = tau / (cplx(0.0, 1.0) * std::sqrt(4.0));
        double res_corrected = std::abs(lhs - pref * rhs);
        double res_as_printed = std::abs(lhs - (-1.0) * tau * rhs);
        std::ostringstream os;
        os << "s=" << s << " corrected-reading residual " << res_corrected
           << "; as-printed residual " << res_as_printed;
        rep.notes.push_back(os.str());
        rep.points.push_back(point(s, res_corrected, 1e30));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_L_values(const CheckConfig&) {
    auto rep = make_report("l-values", 1e-10);
    auto chi = specfun::DirichletCharacter::mod4();
    // beta(1) = pi/4, beta(2) = Catalan
    double L1 = specfun::dirichlet_L(chi, cplx(1.0)).real();
    rep.points.push_back(point(1.0, std::abs(L1 - kPi / 4.0), 1e-10, 0.0, "L(1, chi4)"));
    double L2 = specfun::dirichlet_L(chi, cplx(2.0)).real();
    rep.points.push_back(point(2.0, std::abs(L2 - 0.915965594177219015), 1e-10, 0.0,
                               "L(2, chi4) vs Catalan"));
    // principal mod 1 reduces to zeta
    double z3 = specfun::dirichlet_L(specfun::DirichletCharacter::principal(1), cplx(3.0))
                    .real();
    rep.points.push_back(point(3.0, std::abs(z3 - specfun::zeta(cplx(3.0)).real()), 1e-12));
    // cross-oracle: beta-series vs Hurwitz route
    for (double s : {0.5, 1.5}) {
        double a = specfun::dirichlet_beta(s);
        double b = specfun::dirichlet_L(chi, cplx(s)).real();
        rep.points.push_back(point(s, std::abs(a - b), 1e-10, 0.0, "beta vs L route"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_mu_L(const CheckConfig&) {
    auto rep = make_report("mu-l-mass", 1e-3);
    auto chi1 = specfun::DirichletCharacter::principal(1);
    MuMeasure m = specfun::mu_L_atoms(chi1, 2.0, 10000);
    double mass = 0.0;
    for (auto& [x, u] : m.atoms) mass += u;
    double target = std::log(specfun::zeta(cplx(2.0)).real());
    rep.points.push_back(point(2.0, std::abs(mass - target), 1e-3, 0.0,
                               "mass vs log zeta(2)"));
    rep.finalize();
    return rep;
}

VerificationReport chk_macdonald(const CheckConfig&) {
    auto rep = make_report("macdonald", 1e-8);
    Tolerance tol(1e-11, 1e-11);
    // K_z = K_{-z}
    for (double z : {0.3, 1.0}) {
        double d = std::abs(specfun::macdonald_K(cplx(z), 2.0, tol) -
                            specfun::macdonald_K(cplx(-z), 2.0, tol));
        rep.points.push_back(point(z, d, 1e-9, 0.0, "K symmetry"));
    }
    // K_{1/2}(a) = sqrt(2 pi / a) e^{-a}
    for (double a : {1.0, 2.0}) {
        double v = specfun::macdonald_K(cplx(0.5), a, tol).real();
        double closed = std::sqrt(2.0 * kPi / a) * std::exp(-a);
        rep.points.push_back(point(a, std::abs(v - closed), 1e-9, 0.0, "K_1/2 closed form"));
    }
    // G(z,a) = K_z(2a) (t = e^u substitution)
    for (double z : {0.0, 0.7}) {
        double d = std::abs(specfun::frak_G(cplx(z), 1.0, tol) -
                            specfun::macdonald_K(cplx(z), 2.0, tol));
        rep.points.push_back(point(z, d, 1e-9, 0.0, "G = K(2a)"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_polya_333(const CheckConfig&) {
    // ambiguous display: K_{sigma-1/2}(a) vs sqrt2 pi a^{-2} e^{-a^2} K_{sigma-1/2}(2a^2)
    // under the t = 0 reading; logged only, flagged ambiguous.
    auto rep = make_report("polya-333-display", 1e30);
    Tolerance tol(1e-10, 1e-10);
    double sigma = 1.0, a = 1.5;
    double lhs = specfun::macdonald_K(cplx(sigma - 0.5), a, tol).real();
    double rhs = std::sqrt(2.0) * kPi / (a * a) * std::exp(-a * a) *
                 specfun::macdonald_K(cplx(sigma - 0.5), 2.0 * a * a, tol).real();
    std::ostringstream os;
    os << "ambiguous display residual at (sigma=1, a=1.5), t=0 reading: "
       << std::abs(lhs - rhs) << " (logged, not asserted)";
    rep.notes.push_back(os.str());
    rep.points.push_back(point(a, std::abs(lhs - rhs), 1e30));
    rep.finalize();
    return rep;
}

VerificationReport chk_ig_mellin(const CheckConfig& cfg) {
    auto rep = make_report("ig-mellin", 1e30);
    Tolerance tol(1e-10, 1e-10);
    RngStream rng(cfg.seed, fnv64("ig-mellin"));
    long n = cfg.draws();
    std::vector<double> t1, t2;
    t1.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        double t = sample::inverse_gaussian(rng, 1.0);
        t1.push_back(t);
    }
    double K0 = specfun::macdonald_K(cplx(-0.5), 1.0, tol).real();
    for (double s : {1.0, 2.0}) {
        double mean = 0.0;
        for (double t : t1) mean += std::pow(t, s);
        mean /= double(n);
        double var = 0.0;
        for (double t : t1) var += (std::pow(t, s) - mean) * (std::pow(t, s) - mean);
        double se = std::sqrt(var / double(n - 1) / double(n));
        double closed = specfun::macdonald_K(cplx(s - 0.5), 1.0, tol).real() / K0;
        rep.points.push_back(point(s, std::abs(mean - closed), 0.0, se, "IG Mellin vs K"));
    }
    (void)t2;
    rep.notes.push_back("normalization-free form E(T^s) = K_{s-1/2}(a^2)/K_{-1/2}(a^2)");
    rep.finalize();
    return rep;
}

VerificationReport chk_polya_density(const CheckConfig&) {
    auto rep = make_report("polya-density", 1e-5);
    Tolerance tol(1e-12, 1e-12, 200000);
    auto p = [&](double x) { return densities::polya_density(x, tol); };
    double mass =
        2.0 * integrate(std::function<double(double)>(p), 0.0, 3.0, tol).real();
    rep.points.push_back(point(0.0, std::abs(mass - 1.0), 1e-6, 0.0, "mass"));
    double xih = specfun::xi(cplx(0.5)).real();
    for (double s : {0.25, 0.5}) {
        auto f = [&](double x) { return 2.0 * std::cosh(s * x) * p(x); };
        double mgf = integrate(std::function<double(double)>(f), 0.0, 3.5, tol).real();
        double closed = specfun::xi(cplx(0.5 + s)).real() / xih;
        rep.points.push_back(point(s, std::abs(mgf - closed), 1e-5, 0.0, "mgf vs xi ratio"));
    }
    // nonnegativity and symmetry of the raw series
    double worst_neg = 0.0, worst_sym = 0.0;
    for (double x = 0.0; x <= 4.0; x += 1e-3) {
        double v = p(x);
        worst_neg = std::min(worst_neg, v);
        if (x <= 2.0 && std::fmod(x, 0.05) < 1e-9) {
            double raw_p = densities::polya_density_raw(x, tol);
            double raw_m = densities::polya_density_raw(-x, tol);
            worst_sym = std::max(worst_sym, std::abs(raw_p - raw_m));
        }
    }
    rep.points.push_back(point(0.0, -worst_neg, 1e-15, 0.0, "negativity"));
    rep.points.push_back(point(0.0, worst_sym, 1e-10, 0.0, "raw-series symmetry"));
    // tail formula in logs at x = 5
    {
        double x = 5.0;
        double logp = std::log(densities::polya_density_raw(-x, tol)) ;
        double logtail = std::log(4.0 * kPi * kPi) + 4.5 * x - kPi * std::exp(2.0 * x) -
                         std::log(xih);
        rep.points.push_back(point(x, std::abs(logp - logtail), 0.1, 0.0,
                                   "tail formula (log space)"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_polya_sampler(const CheckConfig& cfg) {
    auto rep = make_report("polya-sampler", 1e30);
    PolyaXiSampler sampler;
    RngStream rng(cfg.seed, fnv64("polya-sampler"));
    long n = cfg.draws();
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) xs.push_back(sampler.draw(rng));
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= double(n);
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    double se_mean = std::sqrt(var / double(n - 1) / double(n));
    rep.points.push_back(point(0.0, std::abs(mean), 0.0, se_mean, "mean vs 0"));
    // empirical mgf at s = 0.5 vs xi(1)/xi(1/2)
    auto est = empirical_cf(xs, {cplx(0.5)});
    double closed = 0.5 / specfun::xi(cplx(0.5)).real();
    rep.points.push_back(point(0.5, std::abs(est[0].value.real() - closed), 0.0, est[0].se,
                               "mgf vs xi(1)/xi(1/2)"));
    std::ostringstream os;
    os << "acceptance rate " << sampler.acceptance_rate();
    rep.notes.push_back(os.str());
    rep.finalize();
    return rep;
}

VerificationReport chk_w_density(const CheckConfig&) {
    auto rep = make_report("w-density", 1e-5);
    Tolerance tol(1e-12, 1e-12);
    auto p = [&](double x) { return densities::w_a_density(x, 1.0, tol); };
    double mass = integrate(std::function<double(double)>(p), 0.01, 2.0, tol).real() +
                  integrate_half_line(std::function<double(double)>(p), 2.0, tol).real();
    rep.points.push_back(point(0.0, std::abs(mass - 1.0), 1e-6, 0.0, "mass"));
    // Laplace check at s = 1 vs (s/sinh s)^2
    auto f = [&](double x) { return std::exp(-0.5 * x) * p(x); };
    double lt = integrate(std::function<double(double)>(f), 0.01, 2.0, tol).real() +
                integrate_half_line(std::function<double(double)>(f), 2.0, tol).real();
    double closed = std::pow(1.0 / std::sinh(1.0), 2);
    rep.points.push_back(point(1.0, std::abs(lt - closed), 1e-5, 0.0, "LT vs (s/sinh s)^2"));
    // mean vs series-expansion value 2/3
    auto xf = [&](double x) { return x * p(x); };
    double mean = integrate(std::function<double(double)>(xf), 0.01, 2.0, tol).real() +
                  integrate_half_line(std::function<double(double)>(xf), 2.0, tol).real();
    rep.points.push_back(point(1.0, std::abs(mean - 2.0 / 3.0), 1e-5, 0.0, "mean vs 2/3"));
    rep.finalize();
    return rep;
}

VerificationReport chk_w_histogram(const CheckConfig& cfg) {
    // chi^2 test of sampled W_1 against the density
    auto rep = make_report("w-histogram", 1e30);
    Tolerance tol(1e-10, 1e-10);
    RngStream rng(cfg.seed, fnv64("w-histogram"));
    SeriesSampler w = SeriesSampler::w_a(1.0, 2000);
    long n = cfg.draws();
    const int nb = 40;
    const double lo = 0.0, hi = 2.5;
    std::vector<long> counts(nb, 0);
    long inside = 0;
    for (long i = 0; i < n; ++i) {
        double x = w.draw(rng);
        if (x >= lo && x < hi) {
            ++counts[static_cast<size_t>((x - lo) / (hi - lo) * nb)];
            ++inside;
        }
    }
    double chi2 = 0.0;
    int dof = 0;
    for (int b = 0; b < nb; ++b) {
        double x0 = lo + (hi - lo) * b / nb, x1 = lo + (hi - lo) * (b + 1) / nb;
        auto f = [&](double x) { return densities::w_a_density(std::max(x, 1e-4), 1.0, tol); };
        double pb = integrate(std::function<double(double)>(f), x0, x1, tol).real();
        double expect = pb * double(n);
        if (expect < 10.0) continue;
        chi2 += (counts[static_cast<size_t>(b)] - expect) * (counts[static_cast<size_t>(b)] - expect) / expect;
        ++dof;
    }
    (void)inside;
    // acceptance: chi2 within mean + 4 sqrt(2 dof)  (loose CLT bound, fixed seed)
    double bound = dof + 4.0 * std::sqrt(2.0 * double(dof));
    rep.points.push_back(point(0.0, chi2, bound, 0.0, "chi^2 too large"));
    std::ostringstream os;
    os << "chi2 = " << chi2 << " with " << dof << " cells";
    rep.notes.push_back(os.str());
    rep.finalize();
    return rep;
}

VerificationReport chk_ostrovskii(const CheckConfig&) {
    auto rep = make_report("ostrovskii", 1e-6);
    Tolerance tol(1e-11, 1e-11);
    int idx = 0;
    for (auto p : {densities::OstrovskiiParams::default_set(),
                   densities::OstrovskiiParams::second_set()}) {
        ++idx;
        double worst = 0.0;
        for (double x = 0.0; x <= 20.0; x += 0.01)
            worst = std::min(worst, densities::ostrovskii_density(x, p));
        rep.points.push_back(point(idx, -worst, 1e-15, 0.0, "density negative"));
        // x -> 0 limit vs series expansion continuity
        double a0 = densities::ostrovskii_density(0.0, p);
        double a1 = densities::ostrovskii_density(0.06, p);
        rep.points.push_back(point(idx, std::abs(a0 - a1), 0.05, 0.0, "origin continuity"));
        // CF roundtrip: 2 int_0^inf cos(tx) h(x) dx vs f(cosh t)/f(1)
        for (double t : {0.0, 1.0}) {
            auto f = [&](double x) {
                return 2.0 * std::cos(t * x) * densities::ostrovskii_density(x, p);
            };
            double q =
                integrate(std::function<double(double)>(f), 0.0, 40.0, tol).real();
            double closed = densities::ostrovskii_f(std::cosh(t), p) /
                            densities::ostrovskii_f(1.0, p);
            rep.points.push_back(point(t, std::abs(q - closed), 1e-6, 0.0, "CF roundtrip"));
        }
        // sensitivity: delta x100 must break nonnegativity somewhere
        auto loud = p;
        loud.delta *= 100.0;
        double most_neg = 0.0;
        for (double x = 0.0; x <= 20.0; x += 0.01)
            most_neg = std::min(most_neg, densities::ostrovskii_density(x, loud));
        rep.points.push_back(point(idx, most_neg < -1e-12 ? 0.0 : 1.0, 0.5, 0.0,
                                   "100x delta still nonnegative (sensitivity)"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_cosh_fourier(const CheckConfig&) {
    auto rep = make_report("cosh-fourier", 1e-8);
    Tolerance tol(1e-11, 1e-11);
    using CF = densities::CoshFourierCase;
    for (double x : {0.0, 0.5, 1.0, 2.0}) {
        rep.points.push_back(point(
            x, densities::cosh_fourier_residual(x, CF::squared, 0.0, tol), 1e-8, 0.0,
            "sech^2"));
        rep.points.push_back(point(
            x, densities::cosh_fourier_residual(x, CF::pole_in, 0.0, tol), 1e-8, 0.0,
            "b = 0"));
        rep.points.push_back(point(
            x, densities::cosh_fourier_residual(x, CF::pole_in, 0.4, tol), 1e-8, 0.0,
            "b = 0.4"));
        rep.points.push_back(point(
            x, densities::cosh_fourier_residual(x, CF::pole_gt1, 2.0, tol), 1e-8, 0.0,
            "b = 2"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_fourier_cos(const CheckConfig& cfg) {
    auto rep = make_report("fourier-cos", 1e-8);
    Tolerance tol(1e-11, 1e-11);
    long N = cfg.quick ? 100000 : 200000;
    // grid including the (alpha = 2z, x = pi/6) specialization at z = 1
    for (double alpha : {0.5, 2.0, 3.0}) {
        for (double x : {0.0, kPi / 6.0, kPi / 2.0, 2.0}) {
            double r = densities::fourier_cos_identity_residual(alpha, x, N, tol);
            rep.points.push_back(point(x, r, 1e-8, 0.0, "cosine identity"));
        }
    }
    // alpha -> 0 at x = 0 approaches pi^2/8
    double closed_limit = kPi * kPi / 8.0;
    double small = 1e-4;
    double lhs = (0.25 * kPi / small) * std::sinh(0.5 * small * kPi) /
                 std::cosh(0.5 * small * kPi);
    rep.points.push_back(point(0.0, std::abs(lhs - closed_limit), 1e-6, 0.0,
                               "alpha -> 0 limit"));
    rep.finalize();
    return rep;
}

VerificationReport chk_kendall(const CheckConfig&) {
    auto rep = make_report("kendall", 1e-9);
    Tolerance tol(1e-12, 1e-12);
    auto pts = densities::kendall_convolution_residual(1.0, {0.0, 1.0, 2.0}, tol);
    for (auto& kp : pts)
        rep.points.push_back(point(kp.s, kp.residual, kp.s == 0.0 ? 1e-10 : 1e-9, 0.0,
                                   "convolution residual"));
    // total mass of the closed form
    auto f = [](double s) {
        return 0.25 * (1.0 + std::abs(s)) * std::exp(-std::abs(s));
    };
    double mass = 2.0 * integrate(std::function<double(double)>(f), 0.0, 60.0, tol).real();
    rep.points.push_back(point(0.0, std::abs(mass - 1.0), 1e-8, 0.0, "mass"));
    rep.finalize();
    return rep;
}

VerificationReport chk_sinh_pf(const CheckConfig&) {
    auto rep = make_report("sinh-partial-fraction", 1e-9);
    double err = 0.0;
    cplx v = sinh_partial_fraction(cplx(1.0), 200000, &err);
    double target = kPi / std::sinh(kPi);
    rep.points.push_back(point(1.0, std::abs(v.real() - target), 1e-9, 0.0, "s = 1"));
    cplx vh = sinh_partial_fraction(cplx(0.5), 200000, &err);
    rep.points.push_back(point(0.5, std::abs(vh.real() - kPi / std::sinh(0.5 * kPi)), 1e-9,
                               0.0, "s = 1/2"));
    // even symmetry of the partial sum
    cplx a = sinh_partial_fraction(cplx(0.7), 500);
    cplx b = sinh_partial_fraction(cplx(-0.7), 500);
    rep.points.push_back(point(0.7, std::abs(a - b), 1e-13, 0.0, "even symmetry"));
    rep.finalize();
    return rep;
}

VerificationReport chk_sigma_divisor(const CheckConfig&) {
    auto rep = make_report("sigma-divisor", 1e-12);
    rep.points.push_back(point(1.0, specfun::sigma_minus1_identity_residual(1.0, 50), 1e-12,
                               0.0, "x = 1"));
    rep.points.push_back(point(3.0, specfun::sigma_minus1_identity_residual(3.0, 50), 1e-13,
                               0.0, "x = 3"));
    rep.points.push_back(
        point(4.0, std::abs(specfun::sigma_minus1(4) - 1.75), 1e-15, 0.0, "sigma(4)"));
    rep.finalize();
    return rep;
}

VerificationReport chk_tau(const CheckConfig& cfg) {
    auto rep = make_report("tau", 1e-12);
    auto t = specfun::ramanujan_tau(cfg.quick ? 200 : 2000);
    rep.points.push_back(point(1, t(1) == 1 ? 0.0 : 1.0, 0.5, 0.0, "tau(1)"));
    rep.points.push_back(point(2, t(2) == -24 ? 0.0 : 1.0, 0.5, 0.0, "tau(2)"));
    rep.points.push_back(point(3, t(3) == 252 ? 0.0 : 1.0, 0.5, 0.0, "tau(3)"));
    rep.points.push_back(point(6, t(6) == t(2) * t(3) ? 0.0 : 1.0, 0.5, 0.0, "tau(6)"));
    // multiplicativity over coprime pairs in the table
    int bad = 0;
    for (int m = 2; m <= 40; ++m)
        for (int k = 2; m * k <= t.n_max && k <= 40; ++k)
            if (std::gcd(m, k) == 1 && t(m * k) != t(m) * t(k)) ++bad;
    rep.points.push_back(point(0, double(bad), 0.5, 0.0, "multiplicativity"));
    // Xi_tau real and even on the test grid
    Tolerance tol(1e-10, 1e-10);
    for (double s : {0.0, 1.0, 2.0}) {
        double d = std::abs(specfun::Xi_tau(s, tol) - specfun::Xi_tau(-s, tol));
        rep.points.push_back(point(s, d, 1e-12, 0.0, "Xi_tau evenness"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_subordinator(const CheckConfig& cfg) {
    auto rep = make_report("subordinator-cf", 1e30);
    auto chi = specfun::DirichletCharacter::principal(1);
    auto spec = lseries::SubordinatorSpec::from_measure(
        specfun::mu_L_atoms(chi, 2.0, 10000), 0.0, "principal sigma=2");
    RngStream rng(cfg.seed, fnv64("subordinator-cf"));
    long n = cfg.draws() / 2;
    double t = 1.0, s = 1.0;
    std::vector<double> term;
    term.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) term.push_back(lseries::sample_path(spec, t, rng).terminal());
    auto est = empirical_cf(term, {cplx(-s)});
    double z2 = specfun::zeta(cplx(2.0)).real(), z3 = specfun::zeta(cplx(3.0)).real();
    double closed = std::pow(z3 / z2, t);
    rep.points.push_back(point(s, std::abs(est[0].value.real() - closed), 0.0, est[0].se,
                               "E e^{-sX_t} vs (L(3)/L(2))^t"));
    // exp(-t phi(s)) route agrees too
    double phi = lseries::bernstein_phi(spec.jumps, s);
    rep.points.push_back(point(s, std::abs(est[0].value.real() - std::exp(-t * phi)), 0.0,
                               est[0].se, "vs exp(-t phi)"));
    // truncation tail note
    std::ostringstream os;
    os << "mu_L truncation at n=10^4; |phi - (log L(2) - log L(3))| = "
       << std::abs(phi - (std::log(z2) - std::log(z3)));
    rep.notes.push_back(os.str());
    rep.finalize();
    return rep;
}

VerificationReport chk_first_passage(const CheckConfig& cfg) {
    auto rep = make_report("first-passage", 1e-8);
    auto chi = specfun::DirichletCharacter::principal(1);
    auto spec = lseries::SubordinatorSpec::from_measure(
        specfun::mu_L_atoms(chi, 2.0, 50), 0.0, "principal sigma=2 truncated");
    double mean_jump = 0.0;
    for (auto& [x, m] : spec.jumps.atoms) mean_jump += x * m;
    double c = 0.5 / mean_jump;  // satisfies 1/c = 2x the mean jump rate
    // two-stage grid scan oracle: coarse 1e-4 pass, then 1e-9 around the best
    for (double w : {0.05, 0.2}) {
        double root = lseries::first_passage_exponent(spec, c, w);
        auto scan = [&](double lo, double hi, double step) {
            double best = lo, bestval = 1e300;
            for (double z = lo; z <= hi; z += step) {
                double v = std::abs(z / c - lseries::bernstein_phi(spec.jumps, z) - w);
                if (v < bestval) {
                    bestval = v;
                    best = z;
                }
            }
            return best;
        };
        double coarse = scan(0.0, root * 2.0 + 1.0, 1e-4);
        double fine = scan(coarse - 2e-4, coarse + 2e-4, 1e-9);
        rep.points.push_back(point(w, std::abs(root - fine), 1e-8, 0.0,
                                   "root vs grid scan"));
    }
    // Monte Carlo first passage
    RngStream rng(cfg.seed, fnv64("first-passage"));
    double x = 0.3, w = 0.2;
    long n = cfg.draws() / 4;
    std::vector<double> ys;
    ys.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        ys.push_back(lseries::sample_first_passage(spec, c, x, rng));
    auto est = empirical_cf(ys, {cplx(-w)});
    double closed = std::exp(-x * lseries::first_passage_exponent(spec, c, w));
    rep.points.push_back(point(w, std::abs(est[0].value.real() - closed), 0.0, est[0].se,
                               "E e^{-w Y_x} vs exp(-x phi_Y(w))"));
    rep.finalize();
    return rep;
}

VerificationReport chk_path_additivity(const CheckConfig& cfg) {
    auto rep = make_report("path-additivity", 1e30);
    auto chi = specfun::DirichletCharacter::principal(1);
    auto spec = lseries::SubordinatorSpec::from_measure(
        specfun::mu_L_atoms(chi, 2.0, 2000), 0.1, "principal sigma=2");
    long n = std::max(10000L, cfg.draws() / 10);
    double t = 0.7, u = 0.5;
    std::vector<double> a, b;
    RngStream r1(cfg.seed, fnv64("path-add-1")), r2(cfg.seed, fnv64("path-add-2"));
    for (long i = 0; i < n; ++i) {
        auto p = lseries::sample_path(spec, t + u, r1);
        a.push_back(p.value_at(t + u) - p.value_at(t));
        b.push_back(lseries::sample_path(spec, u, r2).terminal());
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // two-sample KS
    double d = 0.0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    double thresh = 1.95 * std::sqrt(2.0 / double(n));  // alpha ~ 0.001
    rep.points.push_back(point(t, d, thresh, 0.0, "KS statistic"));
    rep.finalize();
    return rep;
}

VerificationReport chk_jump_frequencies(const CheckConfig& cfg) {
    auto rep = make_report("subordinator-jumps", 1e30);
    auto chi = specfun::DirichletCharacter::principal(1);
    auto spec = lseries::SubordinatorSpec::from_measure(
        specfun::mu_L_atoms(chi, 2.0, 50), 0.0, "principal sigma=2 truncated");
    RngStream rng(cfg.seed, fnv64("subordinator-jumps"));
    // chi^2 of jump-size frequencies vs atom masses over ~1e5 jumps
    long target_jumps = cfg.quick ? 30000 : 100000;
    std::vector<long> counts(spec.jumps.atoms.size(), 0);
    long total = 0;
    while (total < target_jumps) {
        auto p = lseries::sample_path(spec, 50.0, rng);
        for (double sz : p.sizes) {
            for (size_t k = 0; k < spec.jumps.atoms.size(); ++k)
                if (std::abs(sz - spec.jumps.atoms[k].first) < 1e-12) {
                    ++counts[k];
                    break;
                }
            ++total;
        }
    }
    double chi2 = 0.0;
    int dof = 0;
    for (size_t k = 0; k < counts.size(); ++k) {
        double expect = spec.jumps.atoms[k].second / spec.c_L * double(total);
        if (expect < 10.0) continue;
        chi2 += (counts[k] - expect) * (counts[k] - expect) / expect;
        ++dof;
    }
    double bound = dof + 4.0 * std::sqrt(2.0 * double(dof));
    rep.points.push_back(point(0.0, chi2, bound, 0.0, "jump-frequency chi^2"));
    rep.finalize();
    return rep;
}

VerificationReport chk_gsm_consistency(const CheckConfig& cfg) {
    // symEGGC mgf at s = it vs Monte Carlo E(e^{-t^2 H}) for the paired GGC
    auto rep = make_report("gsm-consistency", 1e30);
    Tolerance tol(1e-11, 1e-11);
    ThorinMeasure upos, uneg;
    upos.atoms = {{1.0, 1.0}, {3.0, 0.5}};
    uneg.atoms = {{1.0, 1.0}, {3.0, 0.5}};  // symmetric
    // paired GGC H has Thorin atoms at z^2
    ThorinMeasure uh;
    for (auto& [z, m] : upos.atoms) uh.atoms.emplace_back(z * z, m);
    RngStream rng(cfg.seed, fnv64("gsm"));
    long n = cfg.draws();
    for (double t : {0.5, 1.0}) {
        cplx mgf = sym_eggc_mgf(upos, uneg, 0.0, cplx(0.0, t), tol);
        double analytic = ggc_laplace_transform(uh, t * t, tol);
        rep.points.push_back(point(t, std::abs(mgf - cplx(analytic)), 1e-10, 0.0,
                                   "GSM identity (analytic)"));
        // Monte Carlo H side: an atom (z, m) contributes Gamma(m)/z, since
        // E e^{-s Gamma(m)/z} = (z/(z+s))^m
        double mean = 0.0, var = 0.0;
        std::vector<double> vals;
        vals.reserve(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) {
            double h = 0.0;
            for (auto& [zz, m] : uh.atoms) h += sample::gamma(rng, m) / zz;
            vals.push_back(std::exp(-t * t * h));
        }
        for (double v : vals) mean += v;
        mean /= double(n);
        for (double v : vals) var += (v - mean) * (v - mean);
        double se = std::sqrt(var / double(n - 1) / double(n));
        rep.points.push_back(point(t, std::abs(mean - analytic), 0.0, se, "GSM vs MC"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_series_compensation(const CheckConfig& cfg) {
    // compensated means agree across truncations; uncompensated biased low
    auto rep = make_report("series-compensation", 1e30);
    long draws = cfg.draws() / 2;
    double means[3];
    double ses[3];
    int k = 0;
    for (long N : {100L, 1000L, 10000L}) {
        auto c1 = SeriesSampler::c1(N);
        RngStream rng(cfg.seed, fnv64("series-comp") + static_cast<uint64_t>(N));
        double m = 0.0, v = 0.0;
        std::vector<double> xs;
        xs.reserve(static_cast<size_t>(draws));
        for (long i = 0; i < draws; ++i) xs.push_back(c1.draw(rng));
        for (double x : xs) m += x;
        m /= double(draws);
        for (double x : xs) v += (x - m) * (x - m);
        means[k] = m;
        ses[k] = std::sqrt(v / double(draws - 1) / double(draws));
        ++k;
    }
    rep.points.push_back(point(100, std::abs(means[0] - means[2]), 0.0,
                               std::sqrt(ses[0] * ses[0] + ses[2] * ses[2]),
                               "compensated means differ"));
    rep.points.push_back(point(1000, std::abs(means[1] - means[2]), 0.0,
                               std::sqrt(ses[1] * ses[1] + ses[2] * ses[2]),
                               "compensated means differ"));
    // uncompensated at N = 100 biased low by ~ tail_mean
    {
        auto c1 = SeriesSampler::c1(100);
        double tail = c1.tail_mean;
        c1.compensation = Compensation::none;
        RngStream rng(cfg.seed, fnv64("series-comp-none"));
        double m = 0.0;
        for (long i = 0; i < draws; ++i) m += c1.draw(rng);
        m /= double(draws);
        double bias = means[2] - m;  // should be ~ tail_mean
        rep.points.push_back(point(100, std::abs(bias - tail), 0.005 + 6.0 * ses[2], 0.0,
                                   "uncompensated bias vs tail mean"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_basic_laws(const CheckConfig& cfg) {
    auto rep = make_report("basic-laws", 1e30);
    RngStream rng(cfg.seed, fnv64("basic-laws"));
    long n = cfg.draws();
    std::vector<double> es, us, gs, ls;
    es.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) es.push_back(sample::exponential(rng));
    for (long i = 0; i < n; ++i) us.push_back(sample::uniform_sym(rng, 1.0));
    for (long i = 0; i < n; ++i) gs.push_back(sample::gumbel_lt(rng));
    for (long i = 0; i < n; ++i) ls.push_back(sample::laplace(rng, 1.0));
    // exp mean 1
    double m = 0.0;
    for (double x : es) m += x;
    m /= double(n);
    double v = 0.0;
    for (double x : es) v += (x - m) * (x - m);
    rep.points.push_back(point(0.0, std::abs(m - 1.0), 0.0,
                               std::sqrt(v / double(n - 1) / double(n)), "Exp mean"));
    // uniform mgf vs sinh(as)/(as) at s = 1, a = 1
    auto est = empirical_cf(us, {cplx(1.0)});
    rep.points.push_back(point(1.0, std::abs(est[0].value.real() - std::sinh(1.0)), 0.0,
                               est[0].se, "U(-1,1) mgf vs sinh"));
    // gumbel: E e^{-X/2} = Gamma(3/2)
    auto estg = empirical_cf(gs, {cplx(-0.5)});
    double g32 = specfun::gamma_fn(cplx(1.5)).real();
    rep.points.push_back(point(0.5, std::abs(estg[0].value.real() - g32), 0.0, estg[0].se,
                               "Gumbel LT vs Gamma(3/2)"));
    // laplace CF at s = i: 1/(1+1) = 1/2
    auto estl = empirical_cf(ls, {cplx(0.0, 1.0)});
    rep.points.push_back(point(1.0, std::abs(estl[0].value - cplx(0.5)), 0.0, estl[0].se,
                               "Laplace CF"));
    // Kendall convolution law: sum of two Laplace(1) draws vs closed density
    {
        RngStream rng2(cfg.seed, fnv64("kendall-law"));
        const int nb = 30;
        std::vector<long> counts(nb, 0);
        double lo = -4.0, hi = 4.0;
        for (long i = 0; i < n; ++i) {
            double x = sample::laplace(rng2, 1.0) + sample::laplace(rng2, 1.0);
            if (x >= lo && x < hi) ++counts[static_cast<size_t>((x - lo) / (hi - lo) * nb)];
        }
        double chi2 = 0.0;
        int dof = 0;
        Tolerance tol(1e-12, 1e-12);
        for (int b = 0; b < nb; ++b) {
            double x0 = lo + (hi - lo) * b / nb, x1 = lo + (hi - lo) * (b + 1) / nb;
            auto f = [](double x) {
                return 0.25 * (1.0 + std::abs(x)) * std::exp(-std::abs(x));
            };
            double pb = integrate(std::function<double(double)>(f), x0, x1, tol).real();
            double expect = pb * double(n);
            if (expect < 10.0) continue;
            chi2 += (counts[static_cast<size_t>(b)] - expect) * (counts[static_cast<size_t>(b)] - expect) / expect;
            ++dof;
        }
        double bound = dof + 4.0 * std::sqrt(2.0 * double(dof));
        rep.points.push_back(point(0.0, chi2, bound, 0.0, "Kendall-law chi^2"));
    }
    rep.finalize();
    return rep;
}

VerificationReport chk_invgamma(const CheckConfig& cfg) {
    auto rep = make_report("invgamma-h", 1e30);
    RngStream rng(cfg.seed, fnv64("invgamma"));
    long n = cfg.draws();
    std::vector<double> hs;
    hs.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) hs.push_back(sample::inv_gamma32(rng, 1.0));
    double m = 0.0;
    for (double x : hs) m += x;
    m /= double(n);
    double v = 0.0;
    for (double x : hs) v += (x - m) * (x - m);
    double se = std::sqrt(v / double(n - 1) / double(n));
    rep.points.push_back(point(1.0, std::abs(m - 1.0), 0.0, se, "mean vs 1/a^2"));
    // E e^{-s^2 H/2} at s=1 vs 2/e
    auto est = empirical_cf(hs, {cplx(-0.5)});
    rep.points.push_back(point(1.0, std::abs(est[0].value.real() - 2.0 / std::exp(1.0)), 0.0,
                               est[0].se, "LT vs (1+|s|)e^{-|s|}"));
    // scaling H_a = H_1/a^2: compare E e^{-H_2} vs analytic (1+1/2)e^{-1/2}
    RngStream rng2(cfg.seed, fnv64("invgamma-2"));
    std::vector<double> h2;
    h2.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) h2.push_back(sample::inv_gamma32(rng2, 2.0));
    auto est2 = empirical_cf(h2, {cplx(-0.5)});
    double closed = 1.5 * std::exp(-0.5);
    rep.points.push_back(point(2.0, std::abs(est2[0].value.real() - closed), 0.0, est2[0].se,
                               "scaling law"));
    rep.finalize();
    return rep;
}

VerificationReport chk_bessel_zeros(const CheckConfig&) {
    auto rep = make_report("bessel-zeros", 1e-10);
    auto zhalf = bessel_zeros(0.5, 50);
    auto zmhalf = bessel_zeros(-0.5, 50);
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
        worst = std::max(worst, std::abs(zhalf[static_cast<size_t>(n - 1)] - n * kPi));
        worst = std::max(worst,
                         std::abs(zmhalf[static_cast<size_t>(n - 1)] - (n - 0.5) * kPi));
    }
    rep.points.push_back(point(0.5, worst, 1e-10, 0.0, "nu = 1/2 zeros vs n pi"));
    auto z0 = bessel_zeros(0.0, 1);
    rep.points.push_back(point(0.0, std::abs(z0[0] - 2.40482555769577287), 1e-10, 0.0,
                               "j_{0,1}"));
    rep.finalize();
    return rep;
}

// registry-driven couple checks

VerificationReport run_couple_vd(const CheckConfig& cfg, const std::string& name) {
    auto rec = couples::find_record(name, cfg.product_n());
    if (!rec) {
        auto rep = make_report("couple:" + name, 0.0);
        rep.points.push_back(point(0, 1.0, 0.0, 0.0, "record not found"));
        rep.finalize();
        return rep;
    }
    auto grid = couples::symmetric_grid(rec->window, rec->grid_n);
    return verify_van_dantzig(*rec, grid, rec->vd_tol);
}

VerificationReport run_couple_wald(const CheckConfig& cfg, const std::string& name) {
    auto rec = couples::find_record(name, cfg.product_n());
    if (!rec) {
        auto rep = make_report("wald:" + name, 0.0);
        rep.points.push_back(point(0, 1.0, 0.0, 0.0, "record not found"));
        rep.finalize();
        return rep;
    }
    return verify_wald(*rec, rec->wald_s, 1e-10, couples::WaldMode::monte_carlo,
                       cfg.draws(), cfg.seed ^ fnv64(name));
}

VerificationReport chk_wald_sensitivity(const CheckConfig& cfg) {
    // mis-scaling H by 1.1 must be detected (wald check must fail)
    auto rep = make_report("wald-sensitivity", 1e30);
    auto rec = couples::find_record("c1", cfg.product_n());
    auto bad = verify_wald(*rec, {0.5, 1.0}, 1e-10, couples::WaldMode::monte_carlo,
                           cfg.draws(), cfg.seed ^ fnv64("sens"), 1.1);
    rep.points.push_back(point(1.1, bad.pass ? 1.0 : 0.0, 0.5, 0.0,
                               "1.1x mis-scaling not detected"));
    rep.notes.push_back("pass means the deliberate mis-scaling was flagged");
    rep.finalize();
    return rep;
}

}  // namespace

uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

const std::vector<NamedCheck>& all_checks() {
    static const std::vector<NamedCheck> checks = [] {
        std::vector<NamedCheck> v;
        auto add = [&v](std::string id, std::string desc,
                        std::function<couples::VerificationReport(const CheckConfig&)> f) {
            v.push_back({std::move(id), std::move(desc), std::move(f)});
        };
        add("frullani", "Frullani identity residuals", chk_frullani);
        add("lemma2-zeta2", "Thorin bridge for zeta_p (p=2)", chk_lemma2_zeta2);
        add("lemma2-gamma", "Thorin bridge for Gamma(1+s)", chk_lemma2_gamma);
        add("hadamard-products", "products vs direct evaluations", chk_hadamard_products);
        add("ferromagnetic", "sinh(as)/as product family", chk_ferromagnetic);
        add("even-product-duality", "Thorin transform vs reciprocal product",
            chk_even_product_duality);
        add("levy-frullani-route", "Levy density integrates back to phi",
            chk_levy_frullani_route);
        add("zeta-euler-vs-series", "Euler product vs eta continuation", chk_zeta);
        add("xi-symmetry", "xi(s) = xi(1-s)", chk_xi_symmetry);
        add("w-mellin", "E(W^s) vs 2(2/pi)^s xi(2s)", chk_w_mellin);
        add("eta-methods", "Dedekind eta two-method agreement", chk_eta_methods);
        add("eta-lt", "eta and eta^3 Laplace transforms", chk_eta_lt);
        add("beta-mellin", "Dirichlet beta Mellin normalization", chk_beta_mellin);
        add("gauss-sum", "Gauss sum magnitude and parity", chk_gauss_sum);
        add("lambda-fe", "Lambda functional equation (logged)", chk_lambda_fe);
        add("l-values", "Dirichlet L reference values", chk_L_values);
        add("mu-l-mass", "mu_L mass vs log L", chk_mu_L);
        add("macdonald", "Macdonald integral identities", chk_macdonald);
        add("polya-333-display", "ambiguous K/G display (logged)", chk_polya_333);
        add("ig-mellin", "inverse Gaussian Mellin vs K", chk_ig_mellin);
        add("polya-density", "Polya xi density properties", chk_polya_density);
        add("polya-sampler", "Polya xi rejection sampler", chk_polya_sampler);
        add("w-density", "W density mass/LT/mean", chk_w_density);
        add("w-histogram", "W sampler histogram chi^2", chk_w_histogram);
        add("ostrovskii", "Ostrovskii density and CF roundtrip", chk_ostrovskii);
        add("cosh-fourier", "residue integrals vs quadrature", chk_cosh_fourier);
        add("fourier-cos", "odd-cosine identity", chk_fourier_cos);
        add("kendall", "Kendall convolution residuals", chk_kendall);
        add("sinh-partial-fraction", "sinh partial fractions", chk_sinh_pf);
        add("sigma-divisor", "sigma_{-1} product identity", chk_sigma_divisor);
        add("tau", "Ramanujan tau table and Xi_tau", chk_tau);
        add("subordinator-cf", "L-series subordinator Laplace transform",
            chk_subordinator);
        add("subordinator-jumps", "jump-size frequencies", chk_jump_frequencies);
        add("first-passage", "first-passage exponent and simulation", chk_first_passage);
        add("path-additivity", "increment law (KS)", chk_path_additivity);
        add("gsm-consistency", "symEGGC vs Gaussian scale mixture", chk_gsm_consistency);
        add("series-compensation", "tail-mean compensation", chk_series_compensation);
        add("basic-laws", "elementary sampler moments", chk_basic_laws);
        add("invgamma-h", "H_a inverse-gamma law", chk_invgamma);
        add("bessel-zeros", "Bessel zero accuracy", chk_bessel_zeros);
        add("wald-sensitivity", "1.1x mis-scaling detection", chk_wald_sensitivity);
        for (const char* nm :
             {"cos-cosh", "sinc-sinh", "hinds", "gaussian", "c1", "c2", "s1", "w1",
              "symbeta--0.5", "symbeta-0.5", "symbeta-1", "gamma-1", "gamma-2",
              "h-invgamma-1", "xi", "ostrovskii"}) {
            std::string n = nm;
            add("couple:" + n, "van Dantzig residuals for " + n,
                [n](const CheckConfig& c) { return run_couple_vd(c, n); });
        }
        for (const char* nm : {"gaussian", "c1", "c2", "s1", "w1", "gamma-1", "gamma-2",
                               "h-invgamma-1", "xi"}) {
            std::string n = nm;
            add("wald:" + n, "Wald Monte Carlo for " + n,
                [n](const CheckConfig& c) { return run_couple_wald(c, n); });
        }
        return v;
    }();
    return checks;
}

const NamedCheck* find_check(const std::string& id) {
    for (auto& c : all_checks())
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace vdw::checks
