#include "xizeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "xizeta/detail/adaptive_gk.hpp"

namespace xizeta {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

QuadratureConfig make_quadrature(double abs_tol, double rel_tol, int max_depth, double tail_eps) {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(tail_eps > 0.0))
        throw DomainError("make_quadrature: tolerances must be > 0");
    if (max_depth < 10 || max_depth > 60)
        throw DomainError("make_quadrature: max_depth must lie in [10, 60]");
    return QuadratureConfig{abs_tol, rel_tol, max_depth, tail_eps};
}

SegmentIntegral integrate_segment(const std::function<Cplx(const Cplx&)>& f,
                                  const ContourSegment& seg, const QuadratureConfig& cfg) {
    auto g = [&](double t) {
        auto [w, dw] = parameterize_segment(seg, t);
        return f(w) * dw;
    };
    auto target = [&](const Cplx& value, double /*l1*/) {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    };
    detail::AdaptiveLimits lim{cfg.max_depth, 20000};
    auto res = detail::adaptive_gk15<double>(g, 0.0, 1.0, target, lim);
    if (res.exhausted && res.err > target(res.value, res.l1)) {
        std::ostringstream os;
        os << "integrate_segment: estimate " << res.err << " above tolerance after "
           << res.panels << " panels on " << (seg.label.empty() ? "segment" : seg.label);
        throw ConvergenceError(os.str());
    }
    // rounding alone contributes ~eps * integral(|f|), so never report less
    double est = std::max(res.err, kEps * res.l1);
    return SegmentIntegral{res.value, est, res.panels - 1};
}

double truncation_radius(double v_R, double theta, double tail_eps) {
    double s = std::abs(std::sin(theta));
    if (s == 0.0) throw DomainError("truncation_radius: sin(theta) = 0");
    if (!(tail_eps > 0.0)) throw DomainError("truncation_radius: tail_eps must be > 0");
    auto tail = [&](double R) { return std::pow(R, v_R) * std::exp(-kPi * R * s) / (kPi * s); };
    // monotone decreasing past the stationary point v_R/(pi s)
    double lo = std::max(1.0, v_R / (kPi * s) + 1.0);
    if (tail(lo) < tail_eps) return lo;
    double hi = 2.0 * lo;
    while (tail(hi) >= tail_eps) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        (tail(mid) >= tail_eps ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace xizeta
