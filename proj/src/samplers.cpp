#include "vdw/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vdw/densities.hpp"
#include "vdw/specfun.hpp"

namespace vdw {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

double hurwitz_tail_p2(double c, long N) {
    // sum_{n>N} (n+c)^{-2}
    return specfun::hurwitz_zeta(cplx(2.0), double(N) + 1.0 + c).real();
}
}  // namespace

double SeriesSampler::innovation_mean() const {
    switch (innovation) {
        case Innovation::Exp: return 1.0;
        case Innovation::Gamma: return innovation_param;
        case Innovation::Laplace: return 0.0;
        case Innovation::InvGamma32: {
            // E[1/(2 a^2 gamma_{3/2})] = 1/(2 a^2 (3/2 - 1)) = 1/a^2
            double a = innovation_param;
            return 1.0 / (a * a);
        }
    }
    return 0.0;
}

double SeriesSampler::draw(RngStream& rng) const {
    double acc = 0.0;
    for (double w : weights) {
        double in;
        switch (innovation) {
            case Innovation::Exp: in = sample::exponential(rng); break;
            case Innovation::Gamma: in = sample::gamma(rng, innovation_param); break;
            case Innovation::Laplace: in = sample::laplace(rng, innovation_param); break;
            case Innovation::InvGamma32: in = sample::inv_gamma32(rng, innovation_param); break;
            default: in = 0.0;
        }
        acc += w * in;
    }
    if (compensation == Compensation::add_mean) acc += tail_mean;
    return acc;
}

SeriesSampler SeriesSampler::c1(long N) {
    SeriesSampler s;
    s.innovation = Innovation::Exp;
    s.weights.reserve(static_cast<size_t>(N));
    const double k = 2.0 / (kPi * kPi);
    for (long n = 1; n <= N; ++n) {
        double d = double(n) - 0.5;
        s.weights.push_back(k / (d * d));
    }
    s.tail_mean = k * hurwitz_tail_p2(-0.5, N);
    return s;
}

SeriesSampler SeriesSampler::c2(long N) {
    SeriesSampler s = c1(N);
    s.innovation = Innovation::Gamma;
    s.innovation_param = 2.0;
    s.tail_mean *= 2.0;
    return s;
}

SeriesSampler SeriesSampler::s_a(double a, long N) {
    SeriesSampler s;
    s.innovation = Innovation::Exp;
    const double k = 2.0 * a * a / (kPi * kPi);
    for (long n = 1; n <= N; ++n) s.weights.push_back(k / (double(n) * double(n)));
    s.tail_mean = k * hurwitz_tail_p2(0.0, N);
    return s;
}

SeriesSampler SeriesSampler::w_a(double a, long N) {
    SeriesSampler s = s_a(a, N);
    s.innovation = Innovation::Gamma;
    s.innovation_param = 2.0;
    s.tail_mean *= 2.0;
    return s;
}

SeriesSampler SeriesSampler::h_gamma(double a, long N) {
    SeriesSampler s;
    s.innovation = Innovation::InvGamma32;
    s.innovation_param = 1.0;  // H_{1,k}, mean 1
    for (long k = 0; k < N; ++k) {
        double d = a + double(k);
        s.weights.push_back(1.0 / (d * d));
    }
    s.tail_mean = hurwitz_tail_p2(a - 1.0, N);  // sum_{k>=N} (a+k)^{-2}
    return s;
}

SeriesSampler SeriesSampler::h_bessel(double, const std::vector<double>& zeros) {
    SeriesSampler s;
    s.innovation = Innovation::Exp;
    double partial2 = 0.0;
    for (double j : zeros) {
        s.weights.push_back(1.0 / (j * j));
        partial2 += 1.0 / (j * j);
    }
    s.tail_mean = 0.0;  // caller may set from Rayleigh sums
    s.compensation = Compensation::none;
    (void)partial2;
    return s;
}

double brownian_subordinate(const std::function<double(RngStream&)>& h_sampler,
                            SubordinationConvention conv, RngStream& rng) {
    double h = h_sampler(rng);
    if (h < 0.0) throw std::domain_error("brownian_subordinate: negative H draw");
    double scale = conv == SubordinationConvention::sqrtH ? std::sqrt(h) : std::sqrt(2.0 * h);
    return scale * sample::normal(rng);
}

PolyaXiSampler::PolyaXiSampler(double sigma) : sigma_(sigma) {
    // calibrate sup p(x)/q(x) on a dense grid, then pad by 5%
    Tolerance tol(1e-12, 1e-12);
    double max_ratio = 0.0;
    for (double x = 0.0; x <= 3.0; x += 1e-3) {
        double p = densities::polya_density(x, tol);
        double q = std::exp(-0.5 * x * x / (sigma_ * sigma_)) / (sigma_ * std::sqrt(2.0 * kPi));
        if (q > 0.0) max_ratio = std::max(max_ratio, p / q);
    }
    log_m_ = std::log(max_ratio * 1.05);
}

double PolyaXiSampler::draw(RngStream& rng) const {
    Tolerance tol(1e-12, 1e-12);
    const double logc = -std::log(sigma_ * std::sqrt(2.0 * kPi));
    for (;;) {
        ++proposals_;
        double x = sigma_ * sample::normal(rng);
        double logq = logc - 0.5 * x * x / (sigma_ * sigma_);
        double p = densities::polya_density(x, tol);
        double logp = p > 0.0 ? std::log(p) : -1e300;
        if (logp > log_m_ + logq + 1e-9)
            throw std::logic_error("PolyaXiSampler: envelope violation (density bug)");
        if (std::log(rng.uniform_open()) < logp - (log_m_ + logq)) {
            ++accepts_;
            return x;
        }
    }
}

double PolyaXiSampler::acceptance_rate() const {
    return proposals_ > 0 ? double(accepts_) / double(proposals_) : std::exp(-log_m_);
}

SymBetaSampler::SymBetaSampler(double nu, int grid_n) : nu_(nu) {
    if (nu < -0.5) throw std::domain_error("SymBetaSampler: nu < -1/2");
    if (nu == -0.5) return;  // Rademacher limit, no grid
    // CDF over t in [-pi/2, pi/2] with x = sin t, weight cos^{2 nu} t
    cdf_.resize(static_cast<size_t>(grid_n) + 1);
    double acc = 0.0;
    double h = kPi / grid_n;
    std::vector<double> w(static_cast<size_t>(grid_n) + 1);
    for (int i = 0; i <= grid_n; ++i) {
        double t = -0.5 * kPi + h * i;
        double c = std::cos(t);
        w[static_cast<size_t>(i)] = c > 0.0 ? std::pow(c, 2.0 * nu) : 0.0;
    }
    cdf_[0] = 0.0;
    for (int i = 1; i <= grid_n; ++i) {
        acc += 0.5 * (w[static_cast<size_t>(i - 1)] + w[static_cast<size_t>(i)]) * h;
        cdf_[static_cast<size_t>(i)] = acc;
    }
    for (auto& v : cdf_) v /= acc;
}

double SymBetaSampler::density(double x) const {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    double lb = std::exp(specfun::log_gamma(cplx(nu_ + 0.5)).real() +
                         specfun::log_gamma(cplx(0.5)).real() -
                         specfun::log_gamma(cplx(nu_ + 1.0)).real());
    return std::pow(1.0 - x * x, nu_ - 0.5) / lb;
}

double SymBetaSampler::draw(RngStream& rng) const {
    if (nu_ == -0.5) return sample::rademacher(rng);
    double u = rng.uniform01();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    size_t i = it == cdf_.begin() ? 1 : static_cast<size_t>(it - cdf_.begin());
    if (i >= cdf_.size()) i = cdf_.size() - 1;
    double c0 = cdf_[i - 1], c1 = cdf_[i];
    double frac = c1 > c0 ? (u - c0) / (c1 - c0) : 0.5;
    int n = static_cast<int>(cdf_.size()) - 1;
    double h = kPi / n;
    double t = -0.5 * kPi + h * (double(i - 1) + frac);
    return std::sin(t);
}

std::vector<CfEstimate> empirical_cf(const std::vector<double>& samples,
                                     const std::vector<cplx>& s_grid) {
    const long n = static_cast<long>(samples.size());
    if (n < 2) throw std::invalid_argument("empirical_cf: need at least 2 samples");
    long nbatch = std::clamp(n / 100, 10L, 1000L);
    long per = n / nbatch;
    std::vector<CfEstimate> out;
    out.reserve(s_grid.size());
    for (cplx s : s_grid) {
        cplx total(0.0);
        std::vector<cplx> bm(static_cast<size_t>(nbatch), cplx(0.0));
        double max_term = 0.0;
        for (long i = 0; i < nbatch * per; ++i) {
            cplx e = std::exp(s * samples[static_cast<size_t>(i)]);
            total += e;
            bm[static_cast<size_t>(i / per)] += e;
            if (std::abs(s.real()) > 0.0) max_term = std::max(max_term, std::abs(e));
        }
        long used = nbatch * per;
        cplx mean = total / double(used);
        double var = 0.0;
        for (auto& b : bm) {
            cplx d = b / double(per) - mean;
            var += std::norm(d);
        }
        var /= double(nbatch - 1);
        CfEstimate est;
        est.value = mean;
        est.se = std::sqrt(var / double(nbatch));
        double rel = std::abs(mean) > 0 ? est.se / std::abs(mean) : 1e300;
        bool dominated = std::abs(s.real()) > 0.0 &&
                         max_term > 0.5 * std::abs(total);  // one draw carries half the sum
        est.unstable = rel > 0.5 || dominated;
        out.push_back(est);
    }
    return out;
}

}  // namespace vdw
