#pragma once

// Registry and verification engine for van Dantzig pairs and Wald couples:
// analytic-vs-analytic and analytic-vs-Monte-Carlo identity checks producing
// serializable VerificationReports.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vdw/numerics.hpp"
#include "vdw/rng.hpp"

namespace vdw::couples {

// A named (f, g) pair with optional samplers. f is the characteristic
// function of the X side; g(s) = 1/f(is). `half_factor` selects kappa in the
// Wald identity E(e^{sX}) E(e^{-kappa s^2 H}) = 1 (true -> kappa = 1/2).
// `both_cf` marks records where both f and g are claimed characteristic
// functions (the |g| <= 1 sanity check only applies then). `window` bounds
// |s| for the van Dantzig grid (special-function-backed records have finite
// evaluation windows).
struct CoupleRecord {
    std::string name;
    std::function<cplx(cplx)> f;
    std::function<cplx(cplx)> g;
    std::function<double(RngStream&)> x_sampler;  // may be empty
    std::function<double(RngStream&)> h_sampler;  // may be empty
    bool half_factor = true;
    bool both_cf = true;
    double window = 3.0;
    int grid_n = 25;
    double vd_tol = 1e-10;
    std::vector<double> wald_s{0.5, 1.0};
    std::string notes;
};

struct PointResult {
    double s = 0.0;
    double residual = 0.0;
    double se = 0.0;  // 0 for purely analytic checks
    bool ok = false;
    std::string reason;
};

struct VerificationReport {
    std::string id;
    std::vector<PointResult> points;
    bool pass = false;
    double tolerance = 0.0;
    std::vector<std::string> notes;

    void finalize();  // pass = all points ok
    std::string to_json() const;
    std::string to_csv() const;
};

std::vector<double> symmetric_grid(double s_max, int n);

// residuals |f(is) g(s) - 1| on the grid plus CF sanity checks
// (f(0) = 1, |f| <= 1 on the real grid when both_cf, Hermitian symmetry)
VerificationReport verify_van_dantzig(const CoupleRecord& rec,
                                      const std::vector<double>& grid, double tol);

enum class WaldMode { analytic, monte_carlo };

// residuals |E(e^{sX}) E(e^{-kappa s^2 H}) - 1|. Each side is Monte Carlo when
// the record carries the sampler (in monte_carlo mode), analytic otherwise
// (X side: f(-is); H side: 1/f(-is)). Stochastic points accept at 3 SE.
// h_scale deliberately mis-scales H draws (sensitivity testing).
VerificationReport verify_wald(const CoupleRecord& rec, const std::vector<double>& s_vals,
                               double tol, WaldMode mode, long draws, uint64_t seed,
                               double h_scale = 1.0);

// all builtin records; product_N controls the truncation of product-backed
// records (symBeta family) and series samplers
std::vector<CoupleRecord> builtin_registry(long product_N = 4000);

std::optional<CoupleRecord> find_record(const std::string& name, long product_N = 4000);

}  // namespace vdw::couples
