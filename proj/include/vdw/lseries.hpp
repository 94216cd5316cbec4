#pragma once

// Compound-Poisson subordinator built from the mu_L measure of an L-series:
// Bernstein exponent, path sampling, and the first-passage inverse exponent.

#include <string>
#include <vector>

#include "vdw/numerics.hpp"
#include "vdw/rng.hpp"
#include "vdw/thorin.hpp"

namespace vdw::lseries {

// X_t = delta t + sum_{j<=N_t} V_j with N_t Poisson of rate c_L (= total mass
// of the jump measure; the only normalization making
// E e^{-sX_t} = (L(sigma+s)/L(sigma))^t hold) and V_j drawn from the
// normalized atoms. Real nonnegative masses are required for simulation.
struct SubordinatorSpec {
    double drift = 0.0;
    MuMeasure jumps;
    double c_L = 0.0;
    std::string provenance;

    static SubordinatorSpec from_measure(MuMeasure m, double drift = 0.0,
                                         std::string provenance = {});
    std::string to_json() const;
};

struct PathSample {
    std::vector<double> times;  // jump times, increasing
    std::vector<double> sizes;  // matching jump sizes
    double drift = 0.0;
    double horizon = 0.0;

    double value_at(double t) const;
    double terminal() const { return value_at(horizon); }
    std::string to_csv() const;  // (time, value) rows including jumps
};

// phi_X(s) = int (1 - e^{-sx}) mu(dx); atoms summed exactly
double bernstein_phi(const MuMeasure& mu, double s);

PathSample sample_path(const SubordinatorSpec& spec, double t, RngStream& rng);

// root z > 0 of z/c - phi_X(z) = w; requires the drift condition
// 1/c > int x mu(dx) (throws std::domain_error otherwise)
double first_passage_exponent(const SubordinatorSpec& spec, double c, double w);

// simulate Y_x = inf{t : t/c - X_t > x}
double sample_first_passage(const SubordinatorSpec& spec, double c, double x,
                            RngStream& rng);

}  // namespace vdw::lseries
