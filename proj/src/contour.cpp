#include "xizeta/contour.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "xizeta/quadrature.hpp"

namespace xizeta {

namespace {
constexpr double kPi = std::numbers::pi;

Cplx polar(double r, double theta) {
    return Cplx(r * std::cos(theta), r * std::sin(theta));
}
}  // namespace

RadiiConfig make_radii(double r1, double r_m, double r_M, double ray_cut) {
    const bool ok = r1 > 0.0 && r_m > 0.0 && r_M > 0.0 && ray_cut > 0.0 &&
                    r1 <= r_m / 10.0 && r_m < 0.5 && 0.5 < r_M && r_M < ray_cut &&
                    std::isfinite(r1) && std::isfinite(r_m) && std::isfinite(r_M) &&
                    std::isfinite(ray_cut);
    if (!ok) {
        std::ostringstream os;
        os << "make_radii: need 0 < r1 <= r_m/10 < r_m < 1/2 < r_M < ray_cut, got ("
           << r1 << ", " << r_m << ", " << r_M << ", " << ray_cut << ")";
        throw OrderingError(os.str());
    }
    return RadiiConfig{r1, r_m, r_M, ray_cut};
}

RadiiConfig default_radii(double tail_eps) {
    // v_R = 0 bounds R^vR <= 1 uniformly over the strip's exponents
    double cut = truncation_radius(0.0, kPi / 4.0, tail_eps);
    return make_radii(1e-3, 0.1, 5.0, std::max(cut, 7.5));
}

ContourSegment ContourSegment::line(Cplx a, Cplx b, std::string label) {
    ContourSegment s;
    s.kind = Kind::Line;
    s.start = a;
    s.end = b;
    s.label = std::move(label);
    return s;
}

ContourSegment ContourSegment::arc(double r, double th0, double th1, std::string label) {
    ContourSegment s;
    s.kind = Kind::Arc;
    s.radius = r;
    s.theta_start = th0;
    s.theta_end = th1;
    s.start = polar(r, th0);
    s.end = polar(r, th1);
    s.label = std::move(label);
    return s;
}

namespace {

ContourPath build(Side side, const RadiiConfig& cfg) {
    // Fig. 1: angles 3pi/4 (inbound) and -pi/4 (outbound); Fig. 2 mirrored.
    const double th_in = side == Side::Left ? 3.0 * kPi / 4.0 : kPi / 4.0;
    const double th_out = side == Side::Left ? -kPi / 4.0 : -3.0 * kPi / 4.0;
    const char* tag = side == Side::Left ? "l" : "r";
    auto at = [&](double r, double th) { return polar(r, th); };
    auto name = [&](const char* suffix) { return std::string("C~_") + tag + suffix; };

    ContourPath path;
    path.label = side;
    path.segments = {
        ContourSegment::line(at(cfg.ray_cut, th_in), at(cfg.r_M, th_in), name("1")),
        ContourSegment::line(at(cfg.r_M, th_in), at(cfg.r_m, th_in), name("2")),
        ContourSegment::line(at(cfg.r_m, th_in), at(cfg.r1, th_in), name("p")),
        ContourSegment::arc(cfg.r1, th_in, th_out, name("c")),
        ContourSegment::line(at(cfg.r1, th_out), at(cfg.r_m, th_out), name("n")),
        ContourSegment::line(at(cfg.r_m, th_out), at(cfg.r_M, th_out), name("3")),
        ContourSegment::line(at(cfg.r_M, th_out), at(cfg.ray_cut, th_out), name("4")),
    };
    // junctions coincide exactly: every endpoint comes from the same polar() call
    return path;
}

}  // namespace

ContourPath build_left_contour(const RadiiConfig& cfg) { return build(Side::Left, cfg); }
ContourPath build_right_contour(const RadiiConfig& cfg) { return build(Side::Right, cfg); }
ContourPath build_contour(Side side, const RadiiConfig& cfg) { return build(side, cfg); }

std::pair<Cplx, Cplx> parameterize_segment(const ContourSegment& seg, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("parameterize_segment: t outside [0,1]");
    if (seg.kind == ContourSegment::Kind::Line) {
        Cplx d = seg.end - seg.start;
        return {seg.start + t * d, d};
    }
    double dth = seg.theta_end - seg.theta_start;
    double th = seg.theta_start + t * dth;
    Cplx w = polar(seg.radius, th);
    return {w, Cplx(0.0, dth) * w};  // dw/dt = i r e^{i th} dtheta
}

std::string path_to_json(const ContourPath& path) {
    nlohmann::ordered_json j;
    j["label"] = side_name(path.label);
    j["segments"] = nlohmann::ordered_json::array();
    for (const auto& s : path.segments) {
        nlohmann::ordered_json js;
        js["label"] = s.label;
        if (s.kind == ContourSegment::Kind::Line) {
            js["kind"] = "line";
            js["start"] = {s.start.real(), s.start.imag()};
            js["end"] = {s.end.real(), s.end.imag()};
        } else {
            js["kind"] = "arc";
            js["radius"] = s.radius;
            js["theta_start"] = s.theta_start;
            js["theta_end"] = s.theta_end;
        }
        j["segments"].push_back(js);
    }
    return j.dump();
}

}  // namespace xizeta
