#pragma once

#include <complex>
#include <vector>

namespace lamelab {

using cplx = std::complex<double>;
using Path = std::vector<cplx>;  // polyline waypoints, first = start, last = end

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// diameter of a point set (0 for fewer than two points)
inline double diameter(const std::vector<cplx>& pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

// distance from point p to segment [a, b]
inline double dist_to_segment(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double L2 = std::norm(ab);
    if (L2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(ab)).real() / L2;
    t = std::max(0.0, std::min(1.0, t));
    return std::abs(p - (a + t * ab));
}

inline double dist_to_polyline(cplx p, const Path& poly) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    double d = std::abs(p - poly.front());
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
        d = std::min(d, dist_to_segment(p, poly[i], poly[i + 1]));
    return d;
}

}  // namespace lamelab
