#include "brokenstick/elements.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace brokenstick {

bool valid_triangle(const TriangleSides& t) {
    if (!(t.a > 0.0 && t.b > 0.0 && t.c > 0.0)) return false;
    const double mx = std::max({t.a, t.b, t.c});
    return t.a + t.b + t.c > 2.0 * mx;
}

double area(const TriangleSides& t) {
    // Numerically stable Heron (Kahan ordering).
    double x = t.a, y = t.b, z = t.c;
    if (x < y) std::swap(x, y);
    if (y < z) std::swap(y, z);
    if (x < y) std::swap(x, y);
    const double s = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    return 0.25 * std::sqrt(std::max(s, 0.0));
}

double circumradius(const TriangleSides& t) {
    return t.a * t.b * t.c / (4.0 * area(t));
}

double inradius(const TriangleSides& t) {
    return area(t) / ((t.a + t.b + t.c) / 2.0);
}

Triple angles(const TriangleSides& t) {
    const double S = area(t);
    // sin X = 2S / (product of adjacent sides), cos X from the law of cosines;
    // atan2 avoids cancellation near right/degenerate configurations.
    auto ang = [&](double opp, double s1, double s2) {
        return std::atan2(2.0 * S, (s1 * s1 + s2 * s2 - opp * opp) / 2.0);
    };
    return {ang(t.a, t.b, t.c), ang(t.b, t.a, t.c), ang(t.c, t.a, t.b)};
}

Triple medians(const TriangleSides& t) {
    auto m = [](double opp, double s1, double s2) {
        return 0.5 * std::sqrt(2.0 * (s1 * s1 + s2 * s2) - opp * opp);
    };
    return {m(t.a, t.b, t.c), m(t.b, t.a, t.c), m(t.c, t.a, t.b)};
}

Triple altitudes(const TriangleSides& t) {
    const double S2 = 2.0 * area(t);
    return {S2 / t.a, S2 / t.b, S2 / t.c};
}

Triple exradii(const TriangleSides& t) {
    const double S2 = 2.0 * area(t);
    return {S2 / (t.b + t.c - t.a), S2 / (t.a + t.c - t.b), S2 / (t.a + t.b - t.c)};
}

Triple angle_bisectors(const TriangleSides& t) {
    // w_a = 2 sqrt(b c s (s-a)) / (b+c), s the semiperimeter.
    const double s = (t.a + t.b + t.c) / 2.0;
    auto w = [&](double opp, double s1, double s2) {
        return 2.0 * std::sqrt(s1 * s2 * s * (s - opp)) / (s1 + s2);
    };
    return {w(t.a, t.b, t.c), w(t.b, t.a, t.c), w(t.c, t.a, t.b)};
}

Triple incenter_vertex_distances(const TriangleSides& t) {
    // AI = r / sin(A/2) = sqrt(bc(s-a)/s).
    const double s = (t.a + t.b + t.c) / 2.0;
    return {std::sqrt(t.b * t.c * (s - t.a) / s),
            std::sqrt(t.a * t.c * (s - t.b) / s),
            std::sqrt(t.a * t.b * (s - t.c) / s)};
}

Triple circumcenter_distances(const TriangleSides& t, DistanceMode mode) {
    const double R = circumradius(t);
    // R cos A = R (b^2+c^2-a^2) / (2bc)
    auto d = [&](double opp, double s1, double s2) {
        return R * (s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2);
    };
    Triple out{d(t.a, t.b, t.c), d(t.b, t.a, t.c), d(t.c, t.a, t.b)};
    if (mode == DistanceMode::Unsigned) {
        for (double v : out)
            if (v < 0.0)
                throw std::domain_error("circumcenter_distances: triangle is obtuse; "
                                        "use DistanceMode::Signed");
    }
    return out;
}

Triple orthocenter_distances(const TriangleSides& t, DistanceMode mode) {
    Triple d = circumcenter_distances(t, mode);
    return {2.0 * d[0], 2.0 * d[1], 2.0 * d[2]};
}

Triple vertex_cevians(const TriangleSides& t, int side) {
    double opp, s1, s2;
    switch (side) {
        case 0: opp = t.a; s1 = t.b; s2 = t.c; break;
        case 1: opp = t.b; s1 = t.a; s2 = t.c; break;
        case 2: opp = t.c; s1 = t.a; s2 = t.b; break;
        default: throw std::out_of_range("vertex_cevians: side index");
    }
    const double S = area(t);
    const double s = (t.a + t.b + t.c) / 2.0;
    const double h = 2.0 * S / opp;
    const double w = 2.0 * std::sqrt(s1 * s2 * s * (s - opp)) / (s1 + s2);
    const double m = 0.5 * std::sqrt(2.0 * (s1 * s1 + s2 * s2) - opp * opp);
    return {h, w, m};
}

double classification_margin(const TriangleSides& t) {
    const double a2 = t.a * t.a, b2 = t.b * t.b, c2 = t.c * t.c;
    const double mx = std::max({a2, b2, c2});
    const double d = std::min({a2 + b2 - c2, b2 + c2 - a2, a2 + c2 - b2});
    return d / mx;
}

TriangleClass classify(const TriangleSides& t, double tolerance) {
    const double m = classification_margin(t);
    if (m > tolerance) return {TriangleKind::Acute, tolerance};
    if (m >= -tolerance) return {TriangleKind::Right, tolerance};
    return {TriangleKind::Obtuse, tolerance};
}

} // namespace brokenstick
