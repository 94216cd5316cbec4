#include "vdw/thorin.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vdw {

namespace {

// registry of named densities used by the JSON schema
std::function<double(double)> named_density(const std::string& id) {
    if (id.empty() || id == "none") return nullptr;
    if (id == "exp-m1-reciprocal")  // 1/(e^x - 1)
        return [](double x) { return 1.0 / std::expm1(x); };
    throw std::invalid_argument("unknown density id: " + id);
}

double density_integral(const std::function<double(double)>& dens,
                        const std::function<double(double)>& weight,
                        const Tolerance& tol) {
    if (!dens) return 0.0;
    auto f = [&](double z) { return weight(z) * dens(z); };
    return integrate_half_line(std::function<double(double)>(f), 0.0, tol).real();
}

}  // namespace

double ThorinMeasure::inv_moment(const Tolerance& tol) const {
    double s = 0.0;
    for (auto& [z, u] : atoms) s += u / z;
    s += tail_inv1;
    s += density_integral(density, [](double z) { return 1.0 / z; }, tol);
    return s;
}

std::string ThorinMeasure::to_json() const {
    nlohmann::json j;
    j["atoms"] = nlohmann::json::array();
    for (auto& [z, u] : atoms) j["atoms"].push_back({z, u});
    j["density"] = density_id.empty() ? "none" : density_id;
    j["a"] = left_extremity;
    j["c"] = gaussian;
    return j.dump();
}

ThorinMeasure ThorinMeasure::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ThorinMeasure m;
    for (auto& a : j.at("atoms")) m.atoms.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
    m.density_id = j.value("density", "none");
    m.density = named_density(m.density_id);
    m.left_extremity = j.value("a", 0.0);
    m.gaussian = j.value("c", 0.0);
    return m;
}

double ggc_laplace_exponent(const ThorinMeasure& U, double s, const Tolerance& tol) {
    if (s < 0) throw std::domain_error("ggc_laplace_exponent: s < 0");
    if (s == 0.0) return 0.0;
    double phi = 0.0;
    for (auto& [z, u] : U.atoms) {
        if (z <= 0) throw std::domain_error("ggc_laplace_exponent: atom location <= 0");
        phi += u * std::log1p(s / z);
    }
    phi += s * U.tail_inv1 - 0.5 * s * s * U.tail_inv2;
    phi += density_integral(U.density, [s](double z) { return std::log1p(s / z); }, tol);
    if (!std::isfinite(phi)) throw std::domain_error("ggc_laplace_exponent: divergent");
    return phi;
}

double ggc_laplace_transform(const ThorinMeasure& U, double s, const Tolerance& tol) {
    return std::exp(-U.left_extremity * s - ggc_laplace_exponent(U, s, tol));
}

double levy_density_from_thorin(const ThorinMeasure& U, double t, const Tolerance& tol) {
    if (t <= 0) throw std::domain_error("levy_density_from_thorin: t <= 0");
    double g = 0.0;
    for (auto& [z, u] : U.atoms) g += u * std::exp(-t * z);
    g += density_integral(U.density, [t](double z) { return std::exp(-t * z); }, tol);
    return g / t;
}

double frullani_residual(double z, double s, const Tolerance& tol) {
    if (z <= 0) throw std::domain_error("frullani_residual: z <= 0");
    if (s == 0.0) return 0.0;
    const double s2 = s * s;
    auto integrand = [z, s2](double t) {
        if (t == 0.0) return s2;  // limit of (1-e^{-s^2 t})/t
        return -std::expm1(-s2 * t) * std::exp(-t * z) / t;
    };
    auto q = integrate_half_line(std::function<double(double)>(integrand), 0.0, tol);
    if (!q.converged) throw std::runtime_error("frullani_residual: quadrature failed");
    return std::abs(q.real() - std::log1p(s2 / z));
}

cplx sym_eggc_mgf(const ThorinMeasure& u_pos, const ThorinMeasure& u_neg, double c,
                  cplx s, const Tolerance& tol) {
    if (std::abs(s.real()) > 1e-12)
        throw std::domain_error("sym_eggc_mgf: Re s must be 0");
    cplx expo = 0.5 * c * s * s;
    auto add_side = [&](const ThorinMeasure& U, double sign) {
        for (auto& [zq, u] : U.atoms) {
            double z = sign * zq;  // actual location on the real line
            cplx term = std::log(cplx(z) / (cplx(z) - s)) - s * z / (1.0 + z * z);
            expo += u * term;
        }
        if (U.density) {
            auto fre = [&](double zq) {
                double z = sign * zq;
                return (std::log(cplx(z) / (cplx(z) - s)) - s * z / (1.0 + z * z)).real() *
                       U.density(zq);
            };
            auto fim = [&](double zq) {
                double z = sign * zq;
                return (std::log(cplx(z) / (cplx(z) - s)) - s * z / (1.0 + z * z)).imag() *
                       U.density(zq);
            };
            expo += cplx(integrate_half_line(std::function<double(double)>(fre), 0.0, tol).real(),
                         integrate_half_line(std::function<double(double)>(fim), 0.0, tol).real());
        }
    };
    add_side(u_pos, +1.0);
    add_side(u_neg, -1.0);
    return std::exp(expo);
}

namespace {

// g(t) = int (1 - e^{-x^2/(2t)}) e^{-alpha x} mu(dx)
double lemma2_g(const MuMeasure& mu, double alpha, double t, const Tolerance& tol) {
    double g = 0.0;
    for (auto& [x, m] : mu.atoms) g += m * (-std::expm1(-x * x / (2.0 * t))) * std::exp(-alpha * x);
    if (mu.density) {
        auto f = [&](double x) {
            return -std::expm1(-x * x / (2.0 * t)) * std::exp(-alpha * x) * mu.density(x);
        };
        g += integrate_half_line(std::function<double(double)>(f), 0.0, tol).real();
    }
    return g;
}

}  // namespace

double lemma2_nu_alpha(const MuMeasure& mu, double alpha, double t, const Tolerance& tol) {
    if (t <= 0) throw std::domain_error("lemma2_nu_alpha: t <= 0");
    if (alpha <= 0) throw std::domain_error("lemma2_nu_alpha: alpha <= 0");
    if (mu.atoms.empty() && !mu.density)
        throw std::invalid_argument("lemma2_nu_alpha: empty measure");
    return lemma2_g(mu, alpha, t, tol) / std::sqrt(2.0 * M_PI * t);
}

double lemma2_nu_alpha_zroute(const MuMeasure& mu, double alpha, double t,
                              const Tolerance& tol) {
    // nu(t) = (1/sqrt(2 pi)) int_0^inf e^{-tz} I(z) dz / sqrt(pi z), z = u^2
    auto inner = [&](double z) {
        double v = 0.0;
        double arg = std::sqrt(0.5 * z);
        for (auto& [x, m] : mu.atoms) {
            double sn = std::sin(x * arg);
            v += m * 2.0 * sn * sn * std::exp(-alpha * x);
        }
        if (mu.density) {
            auto f = [&](double x) {
                double sn = std::sin(x * arg);
                return 2.0 * sn * sn * std::exp(-alpha * x) * mu.density(x);
            };
            v += integrate_half_line(std::function<double(double)>(f), 0.0, tol).real();
        }
        return v;
    };
    auto f = [&](double u) { return std::exp(-t * u * u) * inner(u * u); };
    auto q = integrate_half_line(std::function<double(double)>(f), 0.0, tol);
    return q.real() * std::sqrt(2.0) / M_PI;
}

TransformRecord wald_bridge(std::function<double(double)> f_ratio, BridgeDirection dir) {
    TransformRecord rec;
    rec.direction = dir;
    if (dir == BridgeDirection::forward) {
        // f(alpha+s)/f(alpha) = E(e^{sX})  ->  E(e^{-sH}) = 1/f_ratio(sqrt(s))
        rec.companion = [f = std::move(f_ratio)](double s) {
            if (s < 0) throw std::domain_error("wald_bridge companion: s < 0");
            return 1.0 / f(std::sqrt(s));
        };
    } else {
        // given s -> E(e^{-sH}) = f(alpha)/f(alpha+sqrt(s)), recover
        // s -> f(alpha+s)/f(alpha) = 1/companion-input(s^2)
        rec.companion = [f = std::move(f_ratio)](double s) { return 1.0 / f(s * s); };
    }
    return rec;
}

}  // namespace vdw
