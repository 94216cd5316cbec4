#pragma once

// Variate generation for the random variables the verification suite needs:
// truncated infinite random series with tail-mean compensation, Brownian
// subordination, the Polya xi-density rejection sampler, the symmetric Beta
// family, and empirical characteristic/moment-generating function estimates
// with batch-means standard errors.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vdw/numerics.hpp"
#include "vdw/rng.hpp"

namespace vdw {

enum class Innovation { Exp, Gamma, Laplace, InvGamma32 };
enum class Compensation { none, add_mean };

// One draw is sum_{n<=N} w_n I_n (+ tail_mean under add_mean), I_n i.i.d.
// innovations. tail_mean must equal sum_{n>N} w_n E[I].
struct SeriesSampler {
    std::vector<double> weights;
    Innovation innovation = Innovation::Exp;
    double innovation_param = 1.0;  // Gamma shape / Laplace scale / InvGamma32 a
    double tail_mean = 0.0;
    Compensation compensation = Compensation::add_mean;

    double draw(RngStream& rng) const;
    double innovation_mean() const;

    // C_h = (2/pi^2) sum Gamma_{h,n} (n-1/2)^{-2}: E e^{-s^2 C_1/2} = 1/cosh s
    static SeriesSampler c1(long N);
    static SeriesSampler c2(long N);
    // S_a = (2a^2/pi^2) sum E_n n^{-2}: E e^{-s^2 S_a/2} = as/sinh(as)
    static SeriesSampler s_a(double a, long N);
    // W_a = S_a + S'_a (Gamma(2) innovations)
    static SeriesSampler w_a(double a, long N);
    // H^Gamma_a = sum_k (a+k)^{-2} H_{1,k}: E e^{-s^2 H/2} = Gamma(a)e^{s psi(a)}/Gamma(a+s)
    static SeriesSampler h_gamma(double a, long N);
    // H_nu = sum E_n / j_{nu,n}^2: E e^{-s^2 H} = prod (1+s^2/j^2)^{-1} (kappa = 1)
    static SeriesSampler h_bessel(double nu, const std::vector<double>& bessel_zeros);
};

// sqrt(H) Z or sqrt(2H) Z per convention
enum class SubordinationConvention { sqrtH, sqrt2H };
double brownian_subordinate(const std::function<double(RngStream&)>& h_sampler,
                            SubordinationConvention conv, RngStream& rng);

// Rejection sampler for the Polya xi density (densities::polya_density) from a
// Gaussian envelope N(0, sigma^2); the envelope constant is calibrated once on
// a dense grid at construction. Throws std::logic_error on envelope violation.
class PolyaXiSampler {
  public:
    explicit PolyaXiSampler(double sigma = 0.35);
    double draw(RngStream& rng) const;
    double acceptance_rate() const;  // from calibration, 1/M

  private:
    double sigma_;
    double log_m_;  // log envelope constant
    mutable long proposals_ = 0, accepts_ = 0;
};

// symBeta(nu): density (1-x^2)^{nu-1/2} / B(nu+1/2, 1/2) on (-1,1);
// nu = -1/2 is the two-point (Rademacher) limit. Inverse CDF on a monotone
// grid in the angular variable.
class SymBetaSampler {
  public:
    explicit SymBetaSampler(double nu, int grid_n = 4096);
    double draw(RngStream& rng) const;
    double density(double x) const;

  private:
    double nu_;
    std::vector<double> cdf_;  // over t-grid, x = sin t
};

struct CfEstimate {
    cplx value{0.0, 0.0};
    double se = 0.0;
    bool unstable = false;
};

// Sample mean of e^{s X_i} over the grid, batch-means standard errors.
// For Re s != 0 an integrability guard flags estimates dominated by the
// largest few terms or with SE/|value| > 0.5.
std::vector<CfEstimate> empirical_cf(const std::vector<double>& samples,
                                     const std::vector<cplx>& s_grid);

}  // namespace vdw
