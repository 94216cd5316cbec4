#pragma once

// Thorin measures, GGC Laplace exponents/transforms, symEGGC mgf, the
// Frullani consistency residual and the nu_alpha bridge between a measure
// mu(dx) and a completely monotone Levy-type density.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vdw/numerics.hpp"

namespace vdw {

// U(dz) on (0,inf): atoms plus an optional absolutely continuous part, with
// left-extremity a and Gaussian component c. Mixed measures evaluate as the
// sum of both parts. `tail_inv1`/`tail_inv2` optionally carry
// sum_{omitted} 1/z and 1/z^2 for truncated infinite atom families; the
// exponent adds s*tail_inv1 - s^2*tail_inv2/2 (second-order log tail).
struct ThorinMeasure {
    std::vector<std::pair<double, double>> atoms;  // (z > 0, mass > 0)
    std::function<double(double)> density;         // optional, on (0, inf)
    std::string density_id;                        // named function id for JSON
    double left_extremity = 0.0;                   // a >= 0
    double gaussian = 0.0;                         // c >= 0
    double tail_inv1 = 0.0;
    double tail_inv2 = 0.0;

    // sum u_j/z_j + int z^{-1} density(z) dz, finite for a valid measure
    double inv_moment(const Tolerance& tol) const;

    std::string to_json() const;
    static ThorinMeasure from_json(const std::string& text);
};

struct MuMeasure {
    std::vector<std::pair<double, double>> atoms;  // (x > 0, mass)
    std::function<double(double)> density;
    std::string density_id;
};

// phi(s) = int log(1 + s/z) U(dz), s >= 0
double ggc_laplace_exponent(const ThorinMeasure& U, double s, const Tolerance& tol);

// E(e^{-sH}) = exp(-a s - phi(s))
double ggc_laplace_transform(const ThorinMeasure& U, double s, const Tolerance& tol);

// t^{-1} int e^{-tz} U(dz)
double levy_density_from_thorin(const ThorinMeasure& U, double t, const Tolerance& tol);

// | int_0^inf (1 - e^{-s^2 t}) e^{-tz} dt/t  -  log(1 + s^2/z) |
double frullani_residual(double z, double s, const Tolerance& tol);

// E(e^{sH^}) = exp(c s^2/2 + sum over +/- axes of {log(z/(z-s)) - sz/(1+z^2)})
// for Re s = 0. u_neg holds the atoms of the negative axis by |location|.
cplx sym_eggc_mgf(const ThorinMeasure& u_pos, const ThorinMeasure& u_neg, double c,
                  cplx s, const Tolerance& tol);

// nu_alpha(t) = (2 pi t)^{-1/2} int (1 - e^{-x^2/(2t)}) e^{-alpha x} mu(dx),
// equal to the z-integral form (1/sqrt(2 pi)) int e^{-tz} I(z) dz/sqrt(pi z)
// with I(z) = int 2 sin^2(x sqrt(z/2)) e^{-alpha x} mu(dx).
double lemma2_nu_alpha(const MuMeasure& mu, double alpha, double t, const Tolerance& tol);

// z-integral evaluation route, for cross-checking the display form.
double lemma2_nu_alpha_zroute(const MuMeasure& mu, double alpha, double t,
                              const Tolerance& tol);

enum class BridgeDirection { forward, reciprocal };

// Wald bridge: from s -> f(alpha+s)/f(alpha) obtain s -> E(e^{-sH}) =
// 1/f_ratio(sqrt(s)) (forward), or invert (reciprocal).
struct TransformRecord {
    std::function<double(double)> companion;
    BridgeDirection direction;
};

TransformRecord wald_bridge(std::function<double(double)> f_ratio, BridgeDirection dir);

}  // namespace vdw
