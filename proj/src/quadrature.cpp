#include "gi0/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gi0 {

namespace {

// 15-point Kronrod abscissae on [-1, 1]; odd indices are the embedded
// 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) {
            resg += kWg[j / 2] * (f1 + f2);
        }
    }
    return Panel{a, b, resk * h, std::fabs(resk - resg) * h};
}

}  // namespace

void IntegrationSpec::validate() const {
    if (!(lower >= 0.0) || !(upper > lower)) {
        throw std::invalid_argument("IntegrationSpec: need 0 <= lower < upper");
    }
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw std::invalid_argument("IntegrationSpec: tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw std::invalid_argument("IntegrationSpec: max_subdivisions must be >= 1");
    }
}

IntegralResult integrate_adaptive(const std::function<double(double)>& f,
                                  const IntegrationSpec& spec) {
    spec.validate();

    std::function<double(double)> g;
    double a = spec.lower;
    double b = spec.upper;
    if (std::isinf(spec.upper)) {
        const double base = spec.lower;
        g = [&f, base](double u) {
            if (u >= 1.0) return 0.0;
            const double w = 1.0 - u;
            return f(base + u / w) / (w * w);
        };
        a = 0.0;
        b = 1.0;
    } else {
        g = f;
    }

    int evaluations = 0;
    auto eval_panel = [&](double lo, double hi) {
        evaluations += 15;
        return gk15(g, lo, hi);
    };

    // Geometric ladder of initial panels from the left endpoint, so sharply
    // localized mass near `a` cannot be skipped by a coarse first pass.
    std::vector<Panel> panels;
    const int seed_panels = std::min(24, spec.max_subdivisions);
    double right = b;
    for (int k = 0; k < seed_panels - 1; ++k) {
        const double left = a + (b - a) * std::ldexp(1.0, -(k + 1));
        panels.push_back(eval_panel(left, right));
        right = left;
    }
    panels.push_back(eval_panel(a, right));

    auto worse = [](const Panel& p, const Panel& q) { return p.error < q.error; };
    std::make_heap(panels.begin(), panels.end(), worse);

    double total_value = 0.0;
    double total_error = 0.0;
    for (const Panel& p : panels) {
        total_value += p.value;
        total_error += p.error;
    }

    while (static_cast<int>(panels.size()) < spec.max_subdivisions) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total_value));
        if (total_error <= tol) break;
        std::pop_heap(panels.begin(), panels.end(), worse);
        const Panel worst = panels.back();
        panels.pop_back();
        total_value -= worst.value;
        total_error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (const Panel& half : {eval_panel(worst.a, mid), eval_panel(mid, worst.b)}) {
            total_value += half.value;
            total_error += half.error;
            panels.push_back(half);
            std::push_heap(panels.begin(), panels.end(), worse);
        }
    }

    // Recompute the totals in a fixed order; the incremental running sums
    // are kept only to steer subdivision.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    total_value = 0.0;
    total_error = 0.0;
    for (const Panel& p : panels) {
        total_value += p.value;
        total_error += p.error;
    }

    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total_value));
    if (total_error > 10.0 * tol &&
        static_cast<int>(panels.size()) >= spec.max_subdivisions) {
        throw QuadratureError("integrate_adaptive: subdivision limit reached with error " +
                              std::to_string(total_error));
    }
    return IntegralResult{total_value, total_error, evaluations};
}

}  // namespace gi0
