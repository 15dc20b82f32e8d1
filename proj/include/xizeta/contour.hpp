#ifndef XIZETA_CONTOUR_HPP
#define XIZETA_CONTOUR_HPP

#include <string>
#include <utility>
#include <vector>

#include "xizeta/types.hpp"

namespace xizeta {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Contour radii (r1 << r_m < 1/2 < r_M) plus the finite truncation radius
// substituted for the infinite rays.
struct RadiiConfig {
    double r1 = 1e-3;
    double r_m = 0.1;
    double r_M = 5.0;
    double ray_cut = 15.2;
};

// Validates 0 < r1 <= r_m/10 < r_m < 1/2 < r_M < ray_cut; throws OrderingError.
RadiiConfig make_radii(double r1, double r_m, double r_M, double ray_cut);

// Default radii (1e-3, 0.1, 5) with ray_cut auto-derived from the Lemma-2
// tail bound at the given tail target.
RadiiConfig default_radii(double tail_eps = 1e-15);

struct ContourSegment {
    enum class Kind { Line, Arc };
    Kind kind = Kind::Line;
    // Line
    Cplx start{};
    Cplx end{};
    // Arc, centered at the origin, monotone sweep theta_start -> theta_end
    double radius = 0.0;
    double theta_start = 0.0;
    double theta_end = 0.0;
    std::string label;

    static ContourSegment line(Cplx a, Cplx b, std::string label);
    static ContourSegment arc(double r, double th0, double th1, std::string label);
};

struct ContourPath {
    Side label = Side::Left;
    std::vector<ContourSegment> segments;
};

// The deformed contours of Figs. 1-2: ray in, two lines, arc around the
// origin, two lines, ray out. Seven segments each, traversed in arrow order.
ContourPath build_left_contour(const RadiiConfig& cfg);
ContourPath build_right_contour(const RadiiConfig& cfg);
ContourPath build_contour(Side side, const RadiiConfig& cfg);

// Point and dw/dt at t in [0,1] for the change of variables in quadrature.
std::pair<Cplx, Cplx> parameterize_segment(const ContourSegment& seg, double t);

// {"label":..., "segments":[{kind, ...}]} for debugging and plotting.
std::string path_to_json(const ContourPath& path);

}  // namespace xizeta

#endif
