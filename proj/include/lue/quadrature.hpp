#ifndef LUE_QUADRATURE_HPP
#define LUE_QUADRATURE_HPP

#include <functional>

#include "lue/real.hpp"

namespace lue {

struct QuadResult {
    Real value;
    Real err_est;   // |last refinement step|
    int levels;     // trapezoid halvings performed
    long evals;
};

// Trapezoidal rule over the whole real line for analytic integrands that
// decay double-exponentially in both directions. For this class the
// trapezoid converges geometrically under step halving, which is the
// double-exponential quadrature scheme; the tanh-sinh and log transforms
// below reduce finite and semi-infinite integrals to it.
//
// Converges when two consecutive refinements agree to rel_tol; throws
// PrecisionError past max_levels.
QuadResult integrate_real_line(const std::function<Real(const Real&)>& f,
                               long work_bits, const Real& rel_tol,
                               int max_levels = 12);

// tanh-sinh rule on a finite interval (a, b); endpoints are never evaluated.
// The callable receives the abscissa computed endpoint-accurately.
QuadResult integrate_finite(const std::function<Real(const Real&)>& f,
                            const Real& a, const Real& b,
                            long work_bits, const Real& rel_tol,
                            int max_levels = 12);

} // namespace lue

#endif
