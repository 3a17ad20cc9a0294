#include "gi0/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace gi0 {

RootResult brent_root(const std::function<double(double)>& f, double a, double b,
                      double xtol, int max_iter) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return {a, fa, 0, true};
    if (fb == 0.0) return {b, fb, 0, true};
    if ((fa > 0.0) == (fb > 0.0)) {
        throw std::invalid_argument("brent_root: root not bracketed");
    }
    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (int iter = 1; iter <= max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.22e-16 * std::fabs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) {
            return {b, fb, iter, true};
        }
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::fabs(d) > tol1) {
            b += d;
        } else {
            b += (xm > 0.0 ? tol1 : -tol1);
        }
        fb = f(b);
    }
    return {b, fb, max_iter, false};
}

MinResult golden_min(const std::function<double(double)>& f, double a, double b,
                     double xtol, int max_iter) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    int iter = 2;
    while (b - a > xtol && iter < max_iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
        ++iter;
    }
    if (f1 <= f2) {
        return {x1, f1, iter, b - a <= xtol};
    }
    return {x2, f2, iter, b - a <= xtol};
}

ScanMinResult scan_then_golden(const std::function<double(double)>& f, double a,
                               double b, int n_points, double xtol) {
    if (n_points < 3) {
        throw std::invalid_argument("scan_then_golden: need at least 3 scan points");
    }
    ScanMinResult out;
    out.scan_x.resize(n_points);
    out.scan_fx.resize(n_points);
    int best = 0;
    for (int i = 0; i < n_points; ++i) {
        const double x = a + (b - a) * i / (n_points - 1);
        out.scan_x[i] = x;
        out.scan_fx[i] = f(x);
        if (out.scan_fx[i] < out.scan_fx[best]) best = i;
    }
    const double lo = out.scan_x[best > 0 ? best - 1 : 0];
    const double hi = out.scan_x[best + 1 < n_points ? best + 1 : n_points - 1];
    out.min = golden_min(f, lo, hi, xtol);
    out.min.iterations += n_points;
    if (out.scan_fx[best] < out.min.fx) {
        out.min.x = out.scan_x[best];
        out.min.fx = out.scan_fx[best];
    }
    return out;
}

}  // namespace gi0
