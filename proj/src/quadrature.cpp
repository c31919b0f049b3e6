#include "lue/quadrature.hpp"

namespace lue {

namespace {

// One trapezoid level: h * sum over t = offset + k*step, k = 0, 1, 2, ...
// in the given direction, stopping after `settle` consecutive terms fall
// below threshold * (peak |f| seen so far across the whole level set).
struct LevelSum {
    Real sum;
    Real peak;
    long evals = 0;
};

void accumulate_ray(const std::function<Real(const Real&)>& f,
                    const Real& offset, const Real& step, int direction,
                    const Real& threshold, LevelSum& acc) {
    const int settle = 3;
    const long cap = 200000;
    int quiet = 0;
    for (long k = 0;; ++k) {
        if (k > cap) throw PrecisionError("integrate: truncation range cap exceeded");
        Real t = offset + (direction * k) * step;
        Real v = f(t);
        ++acc.evals;
        acc.sum += v;
        Real av = abs(v);
        if (av > acc.peak) acc.peak = av;
        if (av <= threshold * acc.peak)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= settle && k >= 4) break;
    }
}

} // namespace

QuadResult integrate_real_line(const std::function<Real(const Real&)>& f,
                               long work_bits, const Real& rel_tol,
                               int max_levels) {
    const Real zero = Real::of(0L, work_bits);
    const Real term_tol = rel_tol / 256;

    Real h = Real::of(0.5, work_bits);
    long evals = 0;

    // Level 0: t = 0 outward in both directions.
    LevelSum lv{zero, zero, 0};
    accumulate_ray(f, zero, h, +1, term_tol, lv);
    lv.sum -= f(zero);  // t = 0 was visited by both rays
    accumulate_ray(f, zero, h, -1, term_tol, lv);
    evals += lv.evals + 1;
    Real total = lv.sum;  // plain sum; multiply by h at the end of each level
    Real prev = h * total;

    for (int level = 1; level <= max_levels; ++level) {
        // New abscissas sit at odd multiples of h/2.
        Real half = h / 2;
        LevelSum odd{zero, lv.peak, 0};
        accumulate_ray(f, half, h, +1, term_tol, odd);
        accumulate_ray(f, -half, h, -1, term_tol, odd);
        evals += odd.evals;

        total += odd.sum;
        h = half;
        Real cur = h * total;
        Real diff = abs(cur - prev);
        Real scale = max(abs(cur), abs(prev));
        if (scale.is_zero() || diff <= rel_tol * scale)
            return {cur, diff, level, evals};
        prev = cur;
        lv.peak = odd.peak;
    }
    throw PrecisionError("integrate: no convergence within level cap");
}

QuadResult integrate_finite(const std::function<Real(const Real&)>& f,
                            const Real& a, const Real& b,
                            long work_bits, const Real& rel_tol,
                            int max_levels) {
    if (a == b) return {Real::of(0L, work_bits), Real::of(0L, work_bits), 0, 0};

    const Real half_pi = Real::pi(work_bits) / 2;
    const Real mid = (a.round_to(work_bits) + b.round_to(work_bits)) / 2;
    const Real halfwidth = (b.round_to(work_bits) - a.round_to(work_bits)) / 2;

    auto g = [&](const Real& u) -> Real {
        Real w = half_pi * sinh(u);
        // 1 -+ tanh(w) = 2 / (e^{+-2w} + 1), keeps x accurate at the endpoints.
        Real x;
        if (w >= 0)
            x = b - halfwidth * (2 / (exp(2 * w) + 1));
        else
            x = a + halfwidth * (2 / (exp(-2 * w) + 1));
        Real jac = halfwidth * half_pi * cosh(u) / sqr(cosh(w));
        if (jac.is_zero()) return jac;
        return f(x) * jac;
    };
    return integrate_real_line(g, work_bits, rel_tol, max_levels);
}

} // namespace lue
