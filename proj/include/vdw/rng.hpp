#pragma once

// Reproducible random streams. The base generator is std::mt19937_64, whose
// output sequence is pinned by the standard, seeded through splitmix64 so that
// distinct stream ids give decorrelated streams. All variate transforms are
// explicit (inverse-CDF / Box-Muller / Marsaglia-Tsang) rather than
// std::*_distribution, whose output is implementation-defined; fixed
// (seed, stream) therefore reproduces draws bit-exactly across platforms.

#include <cstdint>
#include <random>

namespace vdw {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class RngStream {
  public:
    explicit RngStream(uint64_t seed, uint64_t stream_id = 0)
        : eng_(splitmix64(seed ^ splitmix64(stream_id))) {}

    uint64_t next_u64() { return eng_(); }

    // uniform on [0,1) with 53-bit resolution
    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

    // uniform on (0,1), never exactly 0 or 1
    double uniform_open() { return (double(eng_() >> 11) + 0.5) * 0x1.0p-53; }

  private:
    std::mt19937_64 eng_;
};

namespace sample {

inline double exponential(RngStream& rng) { return -std::log(rng.uniform_open()); }

inline double normal(RngStream& rng) {
    // Box-Muller, cosine branch only (no cached state)
    double u1 = rng.uniform_open(), u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

// Marsaglia-Tsang; boost for shape < 1
inline double gamma(RngStream& rng, double shape) {
    if (shape <= 0.0) throw std::invalid_argument("gamma: shape <= 0");
    if (shape < 1.0) {
        double u = rng.uniform_open();
        return gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = rng.uniform_open();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
}

// density e^{-|x|/b}/(2b)
inline double laplace(RngStream& rng, double b = 1.0) {
    double u = rng.uniform_open();
    return u < 0.5 ? b * std::log(2.0 * u) : -b * std::log(2.0 * (1.0 - u));
}

// Gumbel with cdf exp(-e^{-x}); sampled as -log E so that E(e^{-sX}) = Gamma(1+s)
inline double gumbel_lt(RngStream& rng) { return -std::log(exponential(rng)); }

inline double uniform_sym(RngStream& rng, double a) { return a * (2.0 * rng.uniform01() - 1.0); }

inline double rademacher(RngStream& rng) { return rng.uniform01() < 0.5 ? -1.0 : 1.0; }

// H_a = 1/(2 a^2 gamma_{3/2}): density x^{-5/2} e^{-1/(2 a^2 x)} / (sqrt(2 pi) a^3),
// so that E(e^{-s^2 H_a / 2}) = (1 + |s|/a) e^{-|s|/a}
inline double inv_gamma32(RngStream& rng, double a) {
    if (a <= 0.0) throw std::invalid_argument("inv_gamma32: a <= 0");
    return 1.0 / (2.0 * a * a * gamma(rng, 1.5));
}

// inverse Gaussian with density (a e^{a^2}/sqrt(2 pi t^3)) e^{-(a^2/2)(t + 1/t)}
// (Michael-Schucany-Haas)
inline double inverse_gaussian(RngStream& rng, double a) {
    if (a <= 0.0) throw std::invalid_argument("inverse_gaussian: a <= 0");
    double lam = a * a;  // IG(mu=1, lambda=a^2)
    double z = normal(rng);
    double nu = z * z;
    double x1 = 1.0 + nu / (2.0 * lam) - std::sqrt(4.0 * lam * nu + nu * nu) / (2.0 * lam);
    double u = rng.uniform01();
    return u <= 1.0 / (1.0 + x1) ? x1 : 1.0 / x1;
}

}  // namespace sample
}  // namespace vdw
