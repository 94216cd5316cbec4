#include "vdw/couples.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "vdw/densities.hpp"
#include "vdw/hadamard.hpp"
#include "vdw/samplers.hpp"
#include "vdw/specfun.hpp"

namespace vdw::couples {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

cplx sinc(cplx s) { return std::abs(s) < 1e-8 ? cplx(1.0) - s * s / 6.0 : std::sin(s) / s; }
}  // namespace

void VerificationReport::finalize() {
    pass = true;
    for (auto& p : points)
        if (!p.ok) pass = false;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["id"] = id;
    j["pass"] = pass;
    j["tolerance"] = tolerance;
    j["grid"] = nlohmann::json::array();
    j["residuals"] = nlohmann::json::array();
    j["se"] = nlohmann::json::array();
    for (auto& p : points) {
        j["grid"].push_back(p.s);
        j["residuals"].push_back(p.residual);
        j["se"].push_back(p.se);
    }
    j["notes"] = notes;
    return j.dump(2);
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "s,residual,se,ok,reason\n";
    os.precision(17);
    for (auto& p : points)
        os << p.s << "," << p.residual << "," << p.se << "," << (p.ok ? 1 : 0) << ","
           << p.reason << "\n";
    return os.str();
}

std::vector<double> symmetric_grid(double s_max, int n) {
    std::vector<double> g;
    if (n < 2) {
        g.push_back(0.0);
        return g;
    }
    for (int i = 0; i < n; ++i) g.push_back(-s_max + 2.0 * s_max * i / (n - 1));
    return g;
}

VerificationReport verify_van_dantzig(const CoupleRecord& rec,
                                      const std::vector<double>& grid, double tol) {
    VerificationReport rep;
    rep.id = "couple:" + rec.name;
    rep.tolerance = tol;
    if (!rec.notes.empty()) rep.notes.push_back(rec.notes);
    for (double s : grid) {
        PointResult pt;
        pt.s = s;
        try {
            cplx fis = rec.f(cplx(0.0, 1.0) * cplx(s));
            cplx gs = rec.g(cplx(s));
            pt.residual = std::abs(fis * gs - 1.0);
            pt.ok = pt.residual <= tol;
            if (!pt.ok) pt.reason = "residual above tolerance";
        } catch (const std::exception& e) {
            pt.ok = false;
            pt.residual = std::nan("");
            pt.reason = std::string("evaluation failure: ") + e.what();
        }
        rep.points.push_back(pt);
    }
    // CF sanity: f(0) = 1, Hermitian symmetry, |f| <= 1 on the real grid
    {
        PointResult pt;
        pt.s = 0.0;
        pt.residual = std::abs(rec.f(cplx(0.0)) - 1.0);
        pt.ok = pt.residual <= 1e-10;
        pt.reason = pt.ok ? "" : "f(0) != 1";
        rep.points.push_back(pt);
    }
    double herm = 0.0, over = 0.0;
    for (double s : grid) {
        if (s < 0) continue;
        cplx fp = rec.f(cplx(s)), fm = rec.f(cplx(-s));
        herm = std::max(herm, std::abs(fm - std::conj(fp)));
        if (rec.both_cf) {
            over = std::max(over, std::abs(fp) - 1.0);
            over = std::max(over, std::abs(rec.g(cplx(s))) - 1.0);
        }
    }
    {
        PointResult pt;
        pt.s = 0.0;
        pt.residual = herm;
        pt.ok = herm <= 1e-10;
        pt.reason = pt.ok ? "" : "Hermitian symmetry violated";
        rep.points.push_back(pt);
    }
    if (rec.both_cf) {
        PointResult pt;
        pt.s = 0.0;
        pt.residual = std::max(over, 0.0);
        pt.ok = over <= 1e-12;
        pt.reason = pt.ok ? "" : "|f| or |g| exceeds 1 on the real grid";
        rep.points.push_back(pt);
    }
    rep.finalize();
    return rep;
}

VerificationReport verify_wald(const CoupleRecord& rec, const std::vector<double>& s_vals,
                               double tol, WaldMode mode, long draws, uint64_t seed,
                               double h_scale) {
    VerificationReport rep;
    rep.id = "wald:" + rec.name;
    rep.tolerance = tol;
    const double kappa = rec.half_factor ? 0.5 : 1.0;
    const bool mc = mode == WaldMode::monte_carlo;

    std::vector<double> xs, hs;
    if (mc && rec.x_sampler) {
        RngStream rng(seed, 1);
        xs.reserve(static_cast<size_t>(draws));
        for (long i = 0; i < draws; ++i) xs.push_back(rec.x_sampler(rng));
    }
    if (mc && rec.h_sampler) {
        RngStream rng(seed, 2);
        hs.reserve(static_cast<size_t>(draws));
        for (long i = 0; i < draws; ++i) hs.push_back(h_scale * rec.h_sampler(rng));
    }

    for (double s : s_vals) {
        PointResult pt;
        pt.s = s;
        try {
            cplx xside;
            double x_se = 0.0;
            if (!xs.empty()) {
                auto est = empirical_cf(xs, {cplx(s)});
                xside = est[0].value;
                x_se = est[0].se;
                if (est[0].unstable) pt.reason = "unstable X moment; ";
            } else {
                xside = rec.f(cplx(0.0, -1.0) * cplx(s));  // E e^{sX} = f(-is)
            }
            cplx hside;
            double h_se = 0.0;
            if (!hs.empty()) {
                auto est = empirical_cf(hs, {cplx(-kappa * s * s)});
                hside = est[0].value;
                h_se = est[0].se;
            } else {
                hside = 1.0 / rec.f(cplx(0.0, -1.0) * cplx(s));
            }
            pt.residual = std::abs(xside * hside - 1.0);
            pt.se = std::abs(hside) * x_se + std::abs(xside) * h_se;
            pt.ok = pt.residual <= std::max(tol, 3.0 * pt.se);
            if (!pt.ok) pt.reason += "residual above max(tol, 3 SE)";
        } catch (const std::exception& e) {
            pt.ok = false;
            pt.residual = std::nan("");
            pt.reason = std::string("evaluation failure: ") + e.what();
        }
        rep.points.push_back(pt);
    }
    rep.finalize();
    return rep;
}

namespace {

CoupleRecord make_closed(const std::string& name, std::function<cplx(cplx)> f,
                         std::function<cplx(cplx)> g) {
    CoupleRecord r;
    r.name = name;
    r.f = std::move(f);
    r.g = std::move(g);
    return r;
}

}  // namespace

std::vector<CoupleRecord> builtin_registry(long product_N) {
    std::vector<CoupleRecord> regs;

    // --- closed-form hyperbolic pairs --------------------------------------
    {
        auto r = make_closed("cos-cosh", [](cplx s) { return std::cos(s); },
                             [](cplx s) { return 1.0 / std::cosh(s); });
        regs.push_back(std::move(r));
    }
    {
        auto r = make_closed("sinc-sinh", [](cplx s) { return sinc(s); },
                             [](cplx s) { return std::abs(s) < 1e-8
                                              ? 1.0 / (cplx(1.0) + s * s / 6.0)
                                              : s / std::sinh(s); });
        regs.push_back(std::move(r));
    }
    {
        // Hinds: X = log|Z1| - log|Z2| has CF 1/cosh(pi s/2); dual is cos(pi s/2)
        auto r = make_closed("hinds", [](cplx s) { return 1.0 / std::cosh(0.5 * kPi * s); },
                             [](cplx s) { return std::cos(0.5 * kPi * s); });
        r.x_sampler = [](RngStream& rng) {
            double z1 = std::abs(sample::normal(rng));
            double z2 = std::abs(sample::normal(rng));
            return std::log(z1) - std::log(z2);
        };
        regs.push_back(std::move(r));
    }
    {
        auto r = make_closed("gaussian", [](cplx s) { return std::exp(-0.5 * s * s); },
                             [](cplx s) { return std::exp(-0.5 * s * s); });
        r.half_factor = false;  // E e^{sX} e^{-s^2 H} = 1 with H = 1/2
        r.x_sampler = [](RngStream& rng) { return sample::normal(rng); };
        r.h_sampler = [](RngStream&) { return 0.5; };
        regs.push_back(std::move(r));
    }

    // --- hyperbolic couples with samplers ----------------------------------
    {
        auto h = std::make_shared<SeriesSampler>(SeriesSampler::c1(product_N));
        auto r = make_closed("c1", [](cplx s) { return std::cos(s); },
                             [](cplx s) { return 1.0 / std::cosh(s); });
        r.x_sampler = [](RngStream& rng) { return sample::rademacher(rng); };
        r.h_sampler = [h](RngStream& rng) { return h->draw(rng); };
        regs.push_back(std::move(r));
    }
    {
        auto h = std::make_shared<SeriesSampler>(SeriesSampler::c2(product_N));
        auto r = make_closed("c2",
                             [](cplx s) {
                                 cplx c = std::cos(s);
                                 return c * c;
                             },
                             [](cplx s) {
                                 cplx c = std::cosh(s);
                                 return 1.0 / (c * c);
                             });
        r.x_sampler = [](RngStream& rng) {
            return sample::rademacher(rng) + sample::rademacher(rng);
        };
        r.h_sampler = [h](RngStream& rng) { return h->draw(rng); };
        regs.push_back(std::move(r));
    }
    {
        auto h = std::make_shared<SeriesSampler>(SeriesSampler::s_a(1.0, product_N));
        auto r = make_closed("s1", sinc, [](cplx s) {
            return std::abs(s) < 1e-8 ? 1.0 / (cplx(1.0) + s * s / 6.0) : s / std::sinh(s);
        });
        r.x_sampler = [](RngStream& rng) { return sample::uniform_sym(rng, 1.0); };
        r.h_sampler = [h](RngStream& rng) { return h->draw(rng); };
        regs.push_back(std::move(r));
    }
    {
        auto h = std::make_shared<SeriesSampler>(SeriesSampler::w_a(1.0, product_N));
        auto r = make_closed("w1",
                             [](cplx s) {
                                 cplx v = sinc(s);
                                 return v * v;
                             },
                             [](cplx s) {
                                 cplx v = std::abs(s) < 1e-8
                                              ? 1.0 / (cplx(1.0) + s * s / 6.0)
                                              : s / std::sinh(s);
                                 return v * v;
                             });
        r.x_sampler = [](RngStream& rng) {
            return sample::uniform_sym(rng, 1.0) + sample::uniform_sym(rng, 1.0);
        };
        r.h_sampler = [h](RngStream& rng) { return h->draw(rng); };
        regs.push_back(std::move(r));
    }

    // --- symBeta family (product-backed) ------------------------------------
    for (double nu : {-0.5, 0.5, 1.0}) {
        ZeroSet zs = ZeroSet::bessel(nu, product_N);
        auto zsp = std::make_shared<ZeroSet>(std::move(zs));
        ProductConfig cfg{product_N, TailCorrection::log1p_order4};
        std::ostringstream nm;
        nm << "symbeta-" << nu;
        CoupleRecord r;
        r.name = nm.str();
        r.f = [zsp, cfg](cplx s) {
            return eval_even_product(*zsp, cplx(0.0, 1.0) * s, cfg,
                                     ProductDirection::forward);
        };
        r.g = [zsp, cfg](cplx s) {
            return eval_even_product(*zsp, s, cfg, ProductDirection::reciprocal);
        };
        r.vd_tol = 1e-10;
        auto xs = std::make_shared<SymBetaSampler>(nu);
        r.x_sampler = [xs](RngStream& rng) { return xs->draw(rng); };
        // H_nu = sum E_n/j^2 (kappa = 1)
        auto hvals = std::make_shared<std::vector<double>>();
        for (long n = 1; n <= product_N; ++n) hvals->push_back(zsp->zero(n));
        auto hs = std::make_shared<SeriesSampler>(SeriesSampler::h_bessel(nu, *hvals));
        hs->tail_mean = zsp->tail_power_sum(2, product_N);
        hs->compensation = Compensation::add_mean;
        r.h_sampler = [hs](RngStream& rng) { return hs->draw(rng); };
        r.half_factor = false;
        regs.push_back(std::move(r));
    }

    // --- Gamma couples -------------------------------------------------------
    for (double a : {1.0, 2.0}) {
        std::ostringstream nm;
        nm << "gamma-" << int(a);
        CoupleRecord r;
        r.name = nm.str();
        double psia = specfun::digamma(a);
        double lga = specfun::log_gamma(cplx(a)).real();
        r.f = [a, psia, lga](cplx s) {
            cplx is(0.0, 1.0);
            return std::exp(specfun::log_gamma(a + is * s) - is * s * psia - lga);
        };
        r.g = [a, psia, lga](cplx s) {
            return std::exp(lga - specfun::log_gamma(cplx(a) - s) - s * psia);
        };
        r.both_cf = false;  // g = 1/f(is) is not itself a CF here
        r.window = 0.9 * a;
        r.wald_s = {0.25, 0.5};
        r.x_sampler = [a, psia](RngStream& rng) {
            return std::log(sample::gamma(rng, a)) - psia;
        };
        auto h = std::make_shared<SeriesSampler>(SeriesSampler::h_gamma(a, product_N));
        r.h_sampler = [h](RngStream& rng) { return h->draw(rng); };
        regs.push_back(std::move(r));
    }

    // --- inverse-gamma H_a couple (a = 1) -------------------------------------
    {
        CoupleRecord r;
        r.name = "h-invgamma-1";
        // f(t) = E(e^{it H^}) = (1+|t|)e^{-|t|} on the reals; on the imaginary
        // axis f(-is) = E(e^{sX}) = e^{|s|}/(1+|s|) by the Wald identity.
        r.f = [](cplx s) {
            if (std::abs(s.imag()) < 1e-14) {
                double u = std::abs(s.real());
                return cplx((1.0 + u) * std::exp(-u), 0.0);
            }
            if (std::abs(s.real()) < 1e-14) {
                double u = std::abs(s.imag());
                return cplx(std::exp(u) / (1.0 + u), 0.0);
            }
            throw std::domain_error("h-invgamma-1: axis arguments only");
        };
        r.g = [](cplx s) {
            double u = std::abs(s.real());
            return cplx(std::exp(-u) * (1.0 + u), 0.0);
        };
        r.both_cf = false;
        r.window = 1.0;
        r.h_sampler = [](RngStream& rng) { return sample::inv_gamma32(rng, 1.0); };
        r.notes = "H-side identity: E(e^{-s^2 H_1/2}) = (1+|s|)e^{-|s|}";
        regs.push_back(std::move(r));
    }

    // --- xi couple -------------------------------------------------------------
    {
        CoupleRecord r;
        r.name = "xi";
        double xih = specfun::xi(cplx(0.5)).real();
        r.f = [xih](cplx s) { return specfun::xi(cplx(0.5) + cplx(0.0, 1.0) * s) / xih; };
        r.g = [xih](cplx s) { return xih / specfun::xi(cplx(0.5) + s); };
        r.window = 0.45;
        r.vd_tol = 1e-8;
        r.wald_s = {0.25, 0.5};
        auto xs = std::make_shared<PolyaXiSampler>();
        r.x_sampler = [xs](RngStream& rng) { return xs->draw(rng); };
        regs.push_back(std::move(r));
    }

    // --- Ostrovskii class --------------------------------------------------------
    {
        auto p = std::make_shared<densities::OstrovskiiParams>(
            densities::OstrovskiiParams::default_set());
        CoupleRecord r;
        r.name = "ostrovskii";
        double f1 = densities::ostrovskii_f(1.0, *p);
        r.f = [p, f1](cplx s) { return densities::ostrovskii_f_c(std::cosh(s), *p) / f1; };
        r.g = [p, f1](cplx s) { return f1 / densities::ostrovskii_f_c(std::cos(s), *p); };
        r.vd_tol = 1e-10;
        r.notes = "f(is)g(s) cancellation is definitional; density checks live in "
                  "densities";
        regs.push_back(std::move(r));
    }

    return regs;
}

std::optional<CoupleRecord> find_record(const std::string& name, long product_N) {
    for (auto& r : builtin_registry(product_N))
        if (r.name == name) return r;
    return std::nullopt;
}

}  // namespace vdw::couples
