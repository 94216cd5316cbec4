// vdw: evaluate the special functions, verify the identity suite, and draw
// samples. Exit codes: 0 all-pass, 1 verification failure, 2 usage error,
// 3 domain error.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdw/checks.hpp"
#include "vdw/densities.hpp"
#include "vdw/hadamard.hpp"
#include "vdw/lseries.hpp"
#include "vdw/samplers.hpp"
#include "vdw/specfun.hpp"

namespace {

using namespace vdw;

constexpr uint64_t kDefaultSeed = 0x5eedc0de5eedc0deULL;

struct GridSpec {
    double start = 0.0, stop = 1.0;
    int count = 1;
    bool log_scale = false;

    std::vector<double> points() const {
        std::vector<double> p;
        if (count <= 1) {
            p.push_back(start);
            return p;
        }
        for (int i = 0; i < count; ++i) {
            double f = double(i) / (count - 1);
            if (log_scale)
                p.push_back(start * std::pow(stop / start, f));
            else
                p.push_back(start + (stop - start) * f);
        }
        return p;
    }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    std::istringstream is(text);
    std::string a, b, c;
    std::getline(is, a, ':');
    std::getline(is, b, ':');
    std::getline(is, c, ':');
    if (a.empty() || b.empty() || c.empty())
        throw CLI::ValidationError("--grid expects start:stop:count");
    g.start = std::stod(a);
    g.stop = std::stod(b);
    g.count = std::stoi(c);
    if (g.count < 1) throw CLI::ValidationError("--grid count must be >= 1");
    return g;
}

struct EvalRow {
    double x;
    double value;
    double err;
};

void write_rows(const std::vector<EvalRow>& rows, const std::string& fmt,
                const std::string& path, const std::string& fn) {
    std::ostringstream os;
    os << std::setprecision(17);
    if (fmt == "json") {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["function"] = fn;
        auto arr = nlohmann::json::array();
        for (auto& r : rows) arr.push_back({{"x", r.x}, {"value", r.value}, {"error", r.err}});
        j["rows"] = arr;
        os << j.dump(2) << "\n";
    } else {
        os << "x,value,error_estimate\n";
        for (auto& r : rows) os << r.x << "," << r.value << "," << r.err << "\n";
    }
    if (path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(path);
        f << os.str();
    }
}

int run_eval(const std::string& fn, const GridSpec& grid, double a_param, double nu,
             const std::string& fmt, const std::string& out) {
    Tolerance tol(1e-11, 1e-11);
    std::vector<EvalRow> rows;
    auto simple = [&](const std::function<double(double)>& f) {
        for (double x : grid.points()) rows.push_back({x, f(x), 0.0});
    };
    try {
        if (fn == "xi") {
            simple([](double x) { return specfun::xi(cplx(x)).real(); });
        } else if (fn == "zeta") {
            simple([](double x) { return specfun::zeta(cplx(x)).real(); });
        } else if (fn == "eta") {
            simple([](double x) {
                return specfun::dedekind_eta(x, specfun::EtaMethod::euler_series);
            });
        } else if (fn == "eta3") {
            simple([](double x) { return specfun::eta_cubed_series(x); });
        } else if (fn == "beta") {
            simple([](double x) { return specfun::dirichlet_beta(x); });
        } else if (fn == "L4") {
            auto chi = specfun::DirichletCharacter::mod4();
            simple([&chi](double x) { return specfun::dirichlet_L(chi, cplx(x)).real(); });
        } else if (fn == "lambda4") {
            auto chi = specfun::DirichletCharacter::mod4();
            simple([&chi](double x) {
                return specfun::regularized_lambda(chi, cplx(x)).real();
            });
        } else if (fn == "K") {
            simple([&](double x) { return specfun::macdonald_K(cplx(x), a_param, tol).real(); });
        } else if (fn == "xi-tau") {
            simple([&](double x) { return specfun::Xi_tau(x, tol); });
        } else if (fn == "cosh-product") {
            ZeroSet zs = ZeroSet::affine(M_PI, -0.5);
            ProductConfig pc{10000, TailCorrection::log1p_order4};
            simple([&](double x) { return eval_even_product(zs, cplx(x), pc).real(); });
        } else if (fn == "sinh-product") {
            ZeroSet zs = ZeroSet::affine(M_PI, 0.0);
            ProductConfig pc{10000, TailCorrection::log1p_order4};
            simple([&](double x) { return eval_even_product(zs, cplx(x), pc).real(); });
        } else if (fn == "bessel-f") {
            simple([&](double x) { return bessel_f(nu, x); });
        } else if (fn == "polya-density") {
            simple([&](double x) { return densities::polya_density(x, tol); });
        } else if (fn == "w-a-density") {
            simple([&](double x) { return densities::w_a_density(x, a_param, tol); });
        } else if (fn == "ostrovskii-density") {
            auto p = densities::OstrovskiiParams::default_set();
            simple([&](double x) { return densities::ostrovskii_density(x, p); });
        } else if (fn == "sinh-partial-fraction") {
            for (double x : grid.points()) {
                double err = 0.0;
                double v = sinh_partial_fraction(cplx(x), 10000, &err).real();
                rows.push_back({x, v, err});
            }
        } else {
            std::cerr << "unknown function id: " << fn << "\n";
            return 2;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
    write_rows(rows, fmt, out, fn);
    return 0;
}

int run_verify(const std::string& id, bool quick, uint64_t seed, const std::string& outdir,
               int jobs) {
    checks::CheckConfig cfg;
    cfg.quick = quick;
    cfg.seed = seed;
    std::vector<const checks::NamedCheck*> todo;
    if (id == "all") {
        for (auto& c : checks::all_checks()) todo.push_back(&c);
    } else {
        auto* c = checks::find_check(id);
        if (!c) {
            std::cerr << "unknown identity id: " << id << "\n";
            return 2;
        }
        todo.push_back(c);
    }
    std::filesystem::create_directories(outdir);
    // bounded worker pool; reports collected by index so output order is
    // deterministic regardless of scheduling
    size_t nw = jobs > 0 ? static_cast<size_t>(jobs)
                         : std::max(2u, std::thread::hardware_concurrency());
    nw = std::min(nw, todo.size());
    std::vector<couples::VerificationReport> reports(todo.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= todo.size()) return;
                try {
                    reports[i] = todo[i]->run(cfg);
                } catch (const std::exception& e) {
                    couples::VerificationReport r;
                    r.id = todo[i]->id;
                    couples::PointResult p;
                    p.ok = false;
                    p.reason = std::string("exception: ") + e.what();
                    r.points.push_back(p);
                    r.finalize();
                    reports[i] = r;
                }
            }
        });
    }
    for (auto& t : pool) t.join();

    bool all_pass = true;
    for (size_t i = 0; i < todo.size(); ++i) {
        auto& rep = reports[i];
        double worst = 0.0;
        for (auto& p : rep.points)
            if (std::isfinite(p.residual)) worst = std::max(worst, p.residual);
        std::cout << (rep.pass ? "PASS" : "FAIL") << "  " << todo[i]->id
                  << "  (max residual " << std::scientific << std::setprecision(2) << worst
                  << ")\n"
                  << std::defaultfloat;
        std::string fname = todo[i]->id;
        for (auto& ch : fname)
            if (ch == ':' || ch == '/') ch = '_';
        std::ofstream f(outdir + "/" + fname + ".json");
        f << rep.to_json() << "\n";
        if (!rep.pass) all_pass = false;
    }
    std::cout << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all_pass ? 0 : 1;
}

int run_sample(const std::string& sampler, long draws, uint64_t seed, long truncation,
               double a_param, double nu, double sigma, double horizon,
               const std::string& chr, double cf_at, const std::string& out) {
    RngStream rng(seed, checks::fnv64(sampler));
    std::function<double(RngStream&)> draw;
    if (sampler == "c1") {
        auto s = std::make_shared<SeriesSampler>(SeriesSampler::c1(truncation));
        draw = [s](RngStream& r) { return s->draw(r); };
    } else if (sampler == "c2") {
        auto s = std::make_shared<SeriesSampler>(SeriesSampler::c2(truncation));
        draw = [s](RngStream& r) { return s->draw(r); };
    } else if (sampler == "s1") {
        auto s = std::make_shared<SeriesSampler>(SeriesSampler::s_a(1.0, truncation));
        draw = [s](RngStream& r) { return s->draw(r); };
    } else if (sampler == "w1") {
        auto s = std::make_shared<SeriesSampler>(SeriesSampler::w_a(1.0, truncation));
        draw = [s](RngStream& r) { return s->draw(r); };
    } else if (sampler == "h-gamma") {
        auto s = std::make_shared<SeriesSampler>(SeriesSampler::h_gamma(a_param, truncation));
        draw = [s](RngStream& r) { return s->draw(r); };
    } else if (sampler == "h-invgamma") {
        draw = [a_param](RngStream& r) { return sample::inv_gamma32(r, a_param); };
    } else if (sampler == "polya-xi") {
        auto s = std::make_shared<PolyaXiSampler>();
        draw = [s](RngStream& r) { return s->draw(r); };
    } else if (sampler == "symbeta") {
        auto s = std::make_shared<SymBetaSampler>(nu);
        draw = [s](RngStream& r) { return s->draw(r); };
    } else if (sampler == "gumbel") {
        draw = [](RngStream& r) { return sample::gumbel_lt(r); };
    } else if (sampler == "normal") {
        draw = [](RngStream& r) { return sample::normal(r); };
    } else if (sampler == "laplace") {
        draw = [](RngStream& r) { return sample::laplace(r, 1.0); };
    } else if (sampler == "uniform") {
        draw = [a_param](RngStream& r) { return sample::uniform_sym(r, a_param); };
    } else if (sampler == "inverse-gaussian") {
        draw = [a_param](RngStream& r) { return sample::inverse_gaussian(r, a_param); };
    } else if (sampler == "subordinator") {
        specfun::DirichletCharacter chi = chr == "mod4"
                                              ? specfun::DirichletCharacter::mod4()
                                              : specfun::DirichletCharacter::principal(1);
        auto spec = std::make_shared<lseries::SubordinatorSpec>(
            lseries::SubordinatorSpec::from_measure(
                specfun::mu_L_atoms(chi, sigma, truncation > 1 ? truncation : 10000), 0.0,
                chr));
        draw = [spec, horizon](RngStream& r) {
            return lseries::sample_path(*spec, horizon, r).terminal();
        };
    } else {
        std::cerr << "unknown sampler id: " << sampler << "\n";
        return 2;
    }

    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(draws));
    for (long i = 0; i < draws; ++i) xs.push_back(draw(rng));

    std::ostringstream csv;
    csv << std::setprecision(17) << "draw\n";
    for (double x : xs) csv << x << "\n";
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out);
        f << csv.str();
    }

    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= double(draws);
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= double(draws - 1);
    nlohmann::json j;
    j["schema_version"] = 1;
    j["sampler"] = sampler;
    j["draws"] = draws;
    j["seed"] = seed;
    j["mean"] = mean;
    j["variance"] = var;
    j["se_mean"] = std::sqrt(var / double(draws));
    if (cf_at != 0.0) {
        auto cf = empirical_cf(xs, {cplx(0.0, cf_at)});
        auto lt = empirical_cf(xs, {cplx(-cf_at)});
        j["cf"] = {{"s", cf_at},
                   {"re", cf[0].value.real()},
                   {"im", cf[0].value.imag()},
                   {"se", cf[0].se}};
        j["laplace"] = {{"s", cf_at},
                        {"value", lt[0].value.real()},
                        {"se", lt[0].se},
                        {"unstable", lt[0].unstable}};
    }
    std::cerr << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"van Dantzig / Wald couple numerics and verification"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a registered function on a grid");
    std::string fn, grid_text = "0:1:1", fmt = "csv", out;
    double a_param = 1.0, nu = 0.0, s_single = std::nan("");
    eval->add_option("function", fn, "function id")->required();
    eval->add_option("--grid", grid_text, "start:stop:count");
    eval->add_option("--s", s_single, "single evaluation point");
    eval->add_option("--a", a_param, "parameter a");
    eval->add_option("--nu", nu, "Bessel order");
    eval->add_option("--format", fmt, "csv|json");
    eval->add_option("--out", out, "output path (stdout if empty)");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks");
    std::string verify_id;
    bool quick = false, full = false;
    uint64_t seed = kDefaultSeed;
    std::string outdir = "reports";
    int jobs = 0;
    verify->add_option("id", verify_id, "check id or 'all'")->required();
    verify->add_flag("--quick", quick, "reduced grids and draws");
    verify->add_flag("--full", full, "full budgets (default)");
    verify->add_option("--seed", seed, "RNG seed (default fixed constant)");
    verify->add_option("--out", outdir, "report directory");
    verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    // sample
    auto* samp = app.add_subcommand("sample", "draw samples, dump CSV + summary JSON");
    std::string sampler_id, chr = "principal";
    long draws = 1000, truncation = 1000;
    double sigma = 2.0, horizon = 1.0, cf_at = 0.0;
    samp->add_option("sampler", sampler_id, "sampler id")->required();
    samp->add_option("--draws", draws, "number of draws");
    samp->add_option("--seed", seed, "RNG seed (default fixed constant)");
    samp->add_option("--truncation", truncation, "series truncation N");
    samp->add_option("--a", a_param, "parameter a");
    samp->add_option("--nu", nu, "symBeta order");
    samp->add_option("--sigma", sigma, "L-series sigma");
    samp->add_option("--t", horizon, "subordinator horizon");
    samp->add_option("--char", chr, "principal|mod4");
    samp->add_option("--cf-at", cf_at, "report empirical CF/Laplace at this s");
    samp->add_option("--out", out, "CSV output path (stdout if empty)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            GridSpec g;
            if (!std::isnan(s_single)) {
                g.start = s_single;
                g.count = 1;
            } else {
                g = parse_grid(grid_text);
            }
            return run_eval(fn, g, a_param, nu, fmt, out);
        }
        if (verify->parsed()) return run_verify(verify_id, quick && !full, seed, outdir, jobs);
        if (samp->parsed())
            return run_sample(sampler_id, draws, seed, truncation, a_param, nu, sigma,
                              horizon, chr, cf_at, out);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
