#include "vdw/lseries.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vdw::lseries {

SubordinatorSpec SubordinatorSpec::from_measure(MuMeasure m, double drift,
                                                std::string provenance) {
    SubordinatorSpec s;
    double mass = 0.0;
    for (auto& [x, u] : m.atoms) {
        if (u < 0.0)
            throw std::domain_error("SubordinatorSpec: negative atom mass (complex-mass "
                                    "characters are not simulable)");
        if (x <= 0.0) throw std::domain_error("SubordinatorSpec: atom location <= 0");
        mass += u;
    }
    if (m.density) throw std::invalid_argument("SubordinatorSpec: atomic measures only");
    if (mass <= 0.0) throw std::domain_error("SubordinatorSpec: zero total mass");
    s.jumps = std::move(m);
    s.c_L = mass;
    s.drift = drift;
    s.provenance = std::move(provenance);
    return s;
}

std::string SubordinatorSpec::to_json() const {
    nlohmann::json j;
    j["drift"] = drift;
    j["c_L"] = c_L;
    j["provenance"] = provenance;
    auto arr = nlohmann::json::array();
    for (auto& [x, u] : jumps.atoms) arr.push_back({x, u});
    j["atoms"] = arr;
    return j.dump();
}

double PathSample::value_at(double t) const {
    double v = drift * t;
    for (size_t i = 0; i < times.size() && times[i] <= t; ++i) v += sizes[i];
    return v;
}

std::string PathSample::to_csv() const {
    std::ostringstream os;
    os << "time,value\n";
    os << "0," << 0.0 << "\n";
    double acc = 0.0;
    for (size_t i = 0; i < times.size(); ++i) {
        acc += sizes[i];
        os << times[i] << "," << (drift * times[i] + acc) << "\n";
    }
    os << horizon << "," << value_at(horizon) << "\n";
    return os.str();
}

double bernstein_phi(const MuMeasure& mu, double s) {
    if (s < 0.0) throw std::domain_error("bernstein_phi: s < 0");
    double phi = 0.0;
    for (auto& [x, m] : mu.atoms) phi += m * (-std::expm1(-s * x));
    return phi;
}

namespace {

// draw an atom index from the normalized masses via CDF inversion
size_t draw_atom(const SubordinatorSpec& spec, RngStream& rng) {
    double u = rng.uniform01() * spec.c_L;
    double acc = 0.0;
    for (size_t i = 0; i < spec.jumps.atoms.size(); ++i) {
        acc += spec.jumps.atoms[i].second;
        if (u <= acc) return i;
    }
    return spec.jumps.atoms.size() - 1;
}

}  // namespace

PathSample sample_path(const SubordinatorSpec& spec, double t, RngStream& rng) {
    if (t <= 0.0) throw std::domain_error("sample_path: t <= 0");
    PathSample p;
    p.drift = spec.drift;
    p.horizon = t;
    double clock = 0.0;
    for (;;) {
        clock += sample::exponential(rng) / spec.c_L;
        if (clock > t) break;
        p.times.push_back(clock);
        p.sizes.push_back(spec.jumps.atoms[draw_atom(spec, rng)].first);
    }
    return p;
}

double first_passage_exponent(const SubordinatorSpec& spec, double c, double w) {
    if (c <= 0.0) throw std::domain_error("first_passage_exponent: c <= 0");
    if (w <= 0.0) throw std::domain_error("first_passage_exponent: w <= 0");
    double mean_jump_rate = 0.0;  // int x mu(dx)
    for (auto& [x, m] : spec.jumps.atoms) mean_jump_rate += x * m;
    if (1.0 / c <= mean_jump_rate)
        throw std::domain_error("first_passage_exponent: drift condition 1/c > int x mu(dx) fails");
    auto psi = [&](double z) { return z / c - bernstein_phi(spec.jumps, z) - w; };
    double hi = 1.0;
    while (psi(hi) < 0.0) hi *= 2.0;
    return find_root(psi, 0.0, hi, Tolerance(1e-12, 1e-13));
}

double sample_first_passage(const SubordinatorSpec& spec, double c, double x,
                            RngStream& rng) {
    // Z_t = t/c - X_t drifts up at rate 1/c - spec.drift and jumps down
    double up = 1.0 / c - spec.drift;
    if (up <= 0.0) throw std::domain_error("sample_first_passage: nonpositive drift");
    double t = 0.0, z = 0.0;
    for (long it = 0; it < 100000000L; ++it) {
        double dt = sample::exponential(rng) / spec.c_L;
        if (z + up * dt > x) return t + (x - z) / up;  // crossed during drift
        z += up * dt;
        t += dt;
        z -= spec.jumps.atoms[draw_atom(spec, rng)].first;
    }
    throw std::runtime_error("sample_first_passage: no passage within iteration budget");
}

}  // namespace vdw::lseries
