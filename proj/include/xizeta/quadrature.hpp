#ifndef XIZETA_QUADRATURE_HPP
#define XIZETA_QUADRATURE_HPP

#include <functional>

#include "xizeta/contour.hpp"
#include "xizeta/types.hpp"

namespace xizeta {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 40;     // per-panel bisection generations, in [10, 60]
    double tail_eps = 1e-15;  // ray-truncation tail target
};

// Validates positivity and max_depth range; throws DomainError.
QuadratureConfig make_quadrature(double abs_tol, double rel_tol, int max_depth, double tail_eps);

struct SegmentIntegral {
    Cplx value{};
    double err_estimate = 0.0;
    int subdivisions = 0;
};

// Adaptive G7-K15 along one segment: integrates f(w) dw through the
// parameterize_segment change of variables, refining the worst panel until
// the summed estimate falls below max(abs_tol, rel_tol |value|).
// Throws ConvergenceError when the depth/panel budget is exhausted first.
SegmentIntegral integrate_segment(const std::function<Cplx(const Cplx&)>& f,
                                  const ContourSegment& seg, const QuadratureConfig& cfg);

// Lemma-2 style certified truncation: smallest R with
// R^vR exp(-pi R |sin theta|) / (pi |sin theta|) < tail_eps.
double truncation_radius(double v_R, double theta, double tail_eps);

}  // namespace xizeta

#endif
