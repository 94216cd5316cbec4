#include "vdw/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace vdw {

namespace {

// Neumaier compensated accumulator, applied independently per component.
struct Compensated {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            c += (sum - t) + x;
        else
            c += (x - t) + sum;
        sum = t;
    }
    double get() const { return sum + c; }
};

}  // namespace

SeriesResult sum_series(const std::function<cplx(long)>& term, const Tolerance& tol,
                        long start, const std::function<double(long)>& tail_bound) {
    Compensated re, im;
    SeriesResult r;
    int quiet = 0;  // consecutive terms below target (heuristic stop)
    for (long k = start; r.terms < tol.max_terms; ++k) {
        cplx t = term(k);
        re.add(t.real());
        im.add(t.imag());
        ++r.terms;
        double mag = std::abs(cplx(re.get(), im.get()));
        double target = tol.target(mag);
        if (tail_bound) {
            double tb = tail_bound(k);
            if (tb <= target) {
                r.value = cplx(re.get(), im.get());
                r.tail_bound = tb;
                r.converged = true;
                return r;
            }
        } else {
            double tm = std::abs(t);
            quiet = (tm <= target) ? quiet + 1 : 0;
            if (quiet >= 4) {
                r.value = cplx(re.get(), im.get());
                r.tail_bound = tm;
                r.converged = true;
                return r;
            }
        }
    }
    r.value = cplx(re.get(), im.get());
    r.tail_bound = tail_bound ? tail_bound(start + r.terms - 1)
                              : std::abs(term(start + r.terms - 1));
    r.converged = false;  // budget exhausted
    return r;
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<cplx(double)>& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fv[15];
    cplx fc = f(c);
    cplx resk = kWgk[7] * fc;
    cplx resg = kWg[3] * fc;
    evals += 15;
    for (int j = 0; j < 7; ++j) {
        double dx = h * kXgk[j];
        cplx f1 = f(c - dx), f2 = f(c + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    (void)fv;
    cplx integral = resk * h;
    double err = std::abs((resk - resg) * h);
    // QUADPACK-style error sharpening
    double resabs = 0.0;
    {
        resabs = kWgk[7] * std::abs(fc);
        for (int j = 0; j < 7; ++j)
            resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        resabs *= std::abs(h);
    }
    if (resabs > 0.0 && err > 0.0) {
        double scale = std::pow(200.0 * err / resabs, 1.5);
        if (scale < 1.0) err = resabs * scale;
    }
    return Panel{a, b, integral, err};
}

QuadratureResult adaptive(const std::function<cplx(double)>& f, double a, double b,
                          const Tolerance& tol) {
    QuadratureResult res;
    std::priority_queue<Panel> heap;
    heap.push(gk15(f, a, b, res.evaluations));
    cplx total = heap.top().value;
    double toterr = heap.top().err;
    int used = 1;
    while (toterr > tol.target(std::abs(total)) && used < tol.max_subdivisions) {
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        toterr -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted by fp
            total += worst.value;
            toterr += worst.err;
            heap.push(worst);
            break;
        }
        Panel left = gk15(f, worst.a, mid, res.evaluations);
        Panel right = gk15(f, mid, worst.b, res.evaluations);
        total += left.value + right.value;
        toterr += left.err + right.err;
        heap.push(left);
        heap.push(right);
        ++used;
    }
    res.value = total;
    res.error_estimate = toterr;
    res.converged = toterr <= tol.target(std::abs(total));
    return res;
}

QuadratureResult exp_sinh(const std::function<cplx(double)>& f, double a,
                          const Tolerance& tol) {
    // x = a + exp((pi/2) sinh u), trapezoid in u with step halving.
    const double U = 4.0;
    QuadratureResult res;
    auto g = [&](double u) -> cplx {
        double s = std::sinh(u);
        double x = std::exp(1.5707963267948966 * s);
        double w = 1.5707963267948966 * std::cosh(u) * x;
        if (!std::isfinite(x) || !std::isfinite(w)) return cplx(0.0);
        cplx fy = f(a + x);
        if (!std::isfinite(fy.real()) || !std::isfinite(fy.imag())) return cplx(0.0);
        return fy * w;
    };
    double h = 0.5;
    cplx prev;
    {
        cplx s = g(0.0);
        for (double u = h; u <= U; u += h) s += g(u) + g(-u);
        prev = s * h;
        res.evaluations += static_cast<long>(2 * (U / h) + 1);
    }
    for (int level = 0; level < 7; ++level) {
        h *= 0.5;
        cplx add(0.0);
        for (double u = h; u <= U; u += 2 * h) add += g(u) + g(-u);
        res.evaluations += static_cast<long>(2 * (U / (2 * h)) + 2);
        cplx cur = prev * 0.5 + add * h;
        double diff = std::abs(cur - prev);
        prev = cur;
        if (diff <= tol.target(std::abs(cur)) && level >= 2) {
            res.value = cur;
            res.error_estimate = diff;
            res.converged = true;
            return res;
        }
        res.error_estimate = diff;
    }
    res.value = prev;
    res.converged = res.error_estimate <= tol.target(std::abs(prev));
    return res;
}

}  // namespace

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           const Tolerance& tol) {
    if (!(a < b)) {
        if (a == b) return QuadratureResult{cplx(0.0), 0.0, 0, true};
        throw std::invalid_argument("integrate: a > b");
    }
    return adaptive(f, a, b, tol);
}

QuadratureResult integrate_half_line(const std::function<cplx(double)>& f, double a,
                                     const Tolerance& tol, HalfLineMap map) {
    if (map == HalfLineMap::double_exp) return exp_sinh(f, a, tol);
    // x = a + t/(1-t), dx = dt/(1-t)^2, t in [0,1)
    auto g = [&](double t) -> cplx {
        double om = 1.0 - t;
        double x = a + t / om;
        double w = 1.0 / (om * om);
        if (!std::isfinite(x) || !std::isfinite(w)) return cplx(0.0);
        cplx fy = f(x);
        if (!std::isfinite(fy.real()) || !std::isfinite(fy.imag())) return cplx(0.0);
        return fy * w;
    };
    return adaptive(g, 0.0, 1.0 - 1e-15, tol);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const Tolerance& tol) {
    return integrate(std::function<cplx(double)>([&f](double x) { return cplx(f(x), 0.0); }),
                     a, b, tol);
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f, double a,
                                     const Tolerance& tol, HalfLineMap map) {
    return integrate_half_line(
        std::function<cplx(double)>([&f](double x) { return cplx(f(x), 0.0); }), a, tol, map);
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol) {
    if (!(lo < hi)) throw std::domain_error("find_root: empty bracket");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw std::domain_error("find_root: f(lo) and f(hi) have the same sign");

    double a = lo, b = hi, fa = flo, fb = fhi;
    for (long it = 0; it < tol.max_terms; ++it) {
        double width = b - a;
        if (width <= tol.abs_tol || width <= tol.rel_tol * std::abs(a))
            return 0.5 * (a + b);
        double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) return mid;  // fp granularity exhausted
        double x = mid;
        // secant refinement once the bracket is small relative to its location
        if (width < 0.25 * (std::abs(a) + 1.0)) {
            double xs = b - fb * (b - a) / (fb - fa);
            if (xs > a + 0.01 * width && xs < b - 0.01 * width) x = xs;
        }
        double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0) == (fa > 0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace vdw
