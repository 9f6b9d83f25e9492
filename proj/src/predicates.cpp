#include "brokenstick/predicates.hpp"

#include "brokenstick/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace brokenstick {

namespace {

constexpr double kHalfPi = 1.5707963267948966192;

struct Sorted {
    double lo, mid, hi;
};

Sorted sort3(const StickTriple& t) {
    double a = t.alpha, b = t.beta, c = t.gamma;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return {a, b, c};
}

// Largest angle of the enclosing tangent-line triangle, from the tangent-line
// geometry: at the corner holding circle radius `big`, the triangle angle is
// the center-triangle angle minus arcsin((big-other)/(big+other)) for each of
// the two tangent lines through that corner (the tilt flips sign at the
// smaller circle's corner).
double tangent_triangle_max_angle(double r, double s, double t) {
    const double psi = std::asin((r - s) / (r + s));  // tangent to circles r, s
    const double phi1 = std::asin((r - t) / (r + t)); // tangent to circles r, t
    const double phi2 = std::asin((s - t) / (s + t)); // tangent to circles s, t
    auto clamp1 = [](double x) { return std::max(-1.0, std::min(1.0, x)); };
    const double ab = r + s, ac = r + t, bc = s + t;
    const double A = std::acos(clamp1((ac * ac + ab * ab - bc * bc) / (2.0 * ac * ab)));
    const double C = std::acos(clamp1((ac * ac + bc * bc - ab * ab) / (2.0 * ac * bc)));
    const double B = 3.141592653589793238 - A - C;
    return std::max({A - psi - phi1, B + psi - phi2, C + phi1 + phi2});
}

} // namespace

bool sides_exists(const StickTriple& t) {
    const double mx = std::max({t.alpha, t.beta, t.gamma});
    return 2.0 * mx < t.alpha + t.beta + t.gamma;
}

bool sides_acute(const StickTriple& t) {
    const double a2 = t.alpha * t.alpha, b2 = t.beta * t.beta, g2 = t.gamma * t.gamma;
    return a2 + b2 > g2 && b2 + g2 > a2 && a2 + g2 > b2;
}

bool medians_exists(const StickTriple& t) {
    return sides_exists(t); // u+v+w > 2 max(u,v,w)
}

bool medians_acute(const StickTriple& t) {
    const double a2 = t.alpha * t.alpha, b2 = t.beta * t.beta, g2 = t.gamma * t.gamma;
    return a2 + b2 + g2 < 6.0 * std::min({a2, b2, g2});
}

bool altitudes_exists(const StickTriple& t) {
    if (!(t.alpha > 0.0 && t.beta > 0.0 && t.gamma > 0.0)) return false;
    const double ra = 1.0 / t.alpha, rb = 1.0 / t.beta, rc = 1.0 / t.gamma;
    return ra + rb + rc > 2.0 * std::max({ra, rb, rc});
}

bool altitudes_acute(const StickTriple& t) {
    if (!altitudes_exists(t)) return false;
    Reconstruction rec = solve_from_altitudes(t.alpha, t.beta, t.gamma);
    return rec.ok() && classify(rec.sides).kind == TriangleKind::Acute;
}

bool exradii_acute(const StickTriple& t) {
    const double u = t.alpha, v = t.beta, w = t.gamma;
    const double p = u * v + v * w + w * u;
    const double mx = std::max({u * u, v * v, w * w});
    return p > mx;
}

bool cevian_hwm_acute(const StickTriple& t) {
    const Sorted s = sort3(t);
    const double u = s.lo, v = s.mid, w = s.hi;
    if (!(u > 0.0 && u < v && v < w)) return false; // ties: measure zero
    const double win = 2.0 * u * u - v * v;
    if (win <= 0.0) return false; // empty acute window
    const double rad = v * v * v * v - 3.0 * u * u * (v * v - u * u); // always > 0
    const double lower = u * std::sqrt(rad);
    const double upper = u * v * v;
    return lower < w * win && w * win < upper;
}

bool tangent_circles_exists(const StickTriple& t) {
    const Sorted s = sort3(t);
    if (!(s.lo > 0.0)) return false;
    return s.hi * s.hi * s.hi < 4.0 * s.hi * s.mid * s.lo;
}

bool tangent_circles_acute(const StickTriple& t) {
    if (!tangent_circles_exists(t)) return false;
    const Sorted s = sort3(t);
    return tangent_triangle_max_angle(s.hi, s.mid, s.lo) < kHalfPi;
}

bool incenter_acute(const StickTriple& t) {
    const double u = t.alpha, v = t.beta, w = t.gamma;
    const double r2 = 1.4142135623730950488;
    auto cond = [&](double x, double y, double z) {
        return r2 * x * x * y * z + x * x * (y * y + z * z) - y * y * z * z > 0.0;
    };
    return cond(u, v, w) && cond(v, u, w) && cond(w, u, v);
}

std::optional<bool> angle_bisectors_acute(const StickTriple& t) {
    Reconstruction rec = solve_from_angle_bisectors(t.alpha, t.beta, t.gamma);
    if (!rec.ok()) return std::nullopt;
    return classify(rec.sides).kind == TriangleKind::Acute;
}

std::optional<bool> evaluate(const EventDescriptor& e, const StickTriple& t) {
    using I = Interpretation;
    if (e.predicate == Predicate::Exists) {
        switch (e.interpretation) {
            case I::Sides: return sides_exists(t);
            case I::Medians: return medians_exists(t);
            case I::Altitudes: return altitudes_exists(t);
            case I::TangentCircles: return tangent_circles_exists(t);
            case I::CevianHwm: {
                const Sorted s = sort3(t);
                return s.lo > 0.0 && s.lo < s.mid && s.mid < s.hi;
            }
            // certain events: every positive triple is realizable
            case I::Exradii:
            case I::IncenterDistances:
            case I::AngleBisectors:
            case I::CircumcenterDistances:
                return t.alpha > 0.0 && t.beta > 0.0 && t.gamma > 0.0;
        }
    }
    switch (e.interpretation) {
        case I::Sides: return sides_acute(t);
        case I::Medians: return medians_acute(t);
        case I::Altitudes: return altitudes_acute(t);
        case I::Exradii: return exradii_acute(t);
        case I::CevianHwm: return cevian_hwm_acute(t);
        case I::TangentCircles: return tangent_circles_acute(t);
        case I::IncenterDistances: return incenter_acute(t);
        case I::AngleBisectors: return angle_bisectors_acute(t);
        case I::CircumcenterDistances:
            // an acute triangle with any positive distance triple always exists
            return t.alpha > 0.0 && t.beta > 0.0 && t.gamma > 0.0;
    }
    return std::nullopt;
}

double margin(const EventDescriptor& e, const StickTriple& t) {
    using I = Interpretation;
    const double u = t.alpha, v = t.beta, w = t.gamma;
    const double mx = std::max({u, v, w});
    const double scale = mx > 0.0 ? mx : 1.0;
    const double s2 = scale * scale;
    if (e.predicate == Predicate::Exists) {
        switch (e.interpretation) {
            case I::Sides:
            case I::Medians:
                return (u + v + w - 2.0 * mx) / scale;
            case I::Altitudes: {
                if (!(u > 0.0 && v > 0.0 && w > 0.0))
                    return -std::numeric_limits<double>::infinity();
                const double ra = 1.0 / u, rb = 1.0 / v, rc = 1.0 / w;
                return (ra + rb + rc - 2.0 * std::max({ra, rb, rc})) * scale;
            }
            case I::TangentCircles: {
                const Sorted s = sort3(t);
                return (4.0 * s.mid * s.lo - s.hi * s.hi) / s2;
            }
            case I::CevianHwm: {
                const Sorted s = sort3(t);
                return std::min(s.mid - s.lo, s.hi - s.mid) / scale;
            }
            default:
                return 1.0; // certain events
        }
    }
    switch (e.interpretation) {
        case I::Sides: {
            const double a2 = u * u, b2 = v * v, g2 = w * w;
            return std::min({a2 + b2 - g2, b2 + g2 - a2, a2 + g2 - b2}) / s2;
        }
        case I::Medians: {
            const double q = u * u + v * v + w * w;
            return (6.0 * std::min({u * u, v * v, w * w}) - q) / s2;
        }
        case I::Altitudes: {
            Reconstruction rec = solve_from_altitudes(u, v, w);
            if (!rec.ok()) return margin({I::Altitudes, Predicate::Exists}, t);
            return classification_margin(rec.sides);
        }
        case I::Exradii:
            return (u * v + v * w + w * u - std::max({u * u, v * v, w * w})) / s2;
        case I::CevianHwm: {
            const Sorted s = sort3(t);
            const double a = s.lo, b = s.mid, c = s.hi;
            if (!(a > 0.0 && a < b && b < c))
                return -1.0;
            const double win = 2.0 * a * a - b * b;
            if (win <= 0.0) return win / s2;
            const double rad = b * b * b * b - 3.0 * a * a * (b * b - a * a);
            const double lower = a * std::sqrt(rad);
            const double upper = a * b * b;
            const double s3 = s2 * scale;
            return std::min(c * win - lower, upper - c * win) / s3;
        }
        case I::TangentCircles: {
            const double me = margin({I::TangentCircles, Predicate::Exists}, t);
            if (me <= 0.0) return me;
            const Sorted s = sort3(t);
            return std::min(me, kHalfPi - tangent_triangle_max_angle(s.hi, s.mid, s.lo));
        }
        case I::IncenterDistances: {
            const double r2 = 1.4142135623730950488;
            auto cond = [&](double x, double y, double z) {
                return r2 * x * x * y * z + x * x * (y * y + z * z) - y * y * z * z;
            };
            const double s4 = s2 * s2;
            return std::min({cond(u, v, w), cond(v, u, w), cond(w, u, v)}) / s4;
        }
        case I::AngleBisectors: {
            Reconstruction rec = solve_from_angle_bisectors(u, v, w);
            if (!rec.ok()) return -std::numeric_limits<double>::infinity();
            return classification_margin(rec.sides);
        }
        case I::CircumcenterDistances:
            return 1.0;
    }
    return -std::numeric_limits<double>::infinity();
}

EmbeddedTriangle embed(const TriangleSides& t) {
    const double ax = (t.a * t.a + t.c * t.c - t.b * t.b) / (2.0 * t.a);
    const double ay = std::sqrt(std::max(t.c * t.c - ax * ax, 0.0));
    return {t, ax, ay};
}

Triple point_side_distances(const EmbeddedTriangle& e, double px, double py) {
    // side a: B(0,0)-C(a,0); side b: C(a,0)-A; side c: A-B(0,0)
    const double da = py;
    auto dist = [&](double x1, double y1, double x2, double y2) {
        const double nx = y2 - y1, ny = x1 - x2;
        const double len = std::hypot(nx, ny);
        return std::abs(nx * (px - x1) + ny * (py - y1)) / len;
    };
    const double db = dist(e.sides.a, 0.0, e.ax, e.ay);
    const double dc = dist(e.ax, e.ay, 0.0, 0.0);
    return {da, db, dc};
}

bool general_triangle_sides_exists(const EmbeddedTriangle& e, double px, double py) {
    Triple d = point_side_distances(e, px, py);
    const double mx = std::max({d[0], d[1], d[2]});
    return 2.0 * mx < d[0] + d[1] + d[2];
}

bool general_triangle_sides_acute(const EmbeddedTriangle& e, double px, double py) {
    Triple d = point_side_distances(e, px, py);
    const double a2 = d[0] * d[0], b2 = d[1] * d[1], c2 = d[2] * d[2];
    return a2 + b2 > c2 && b2 + c2 > a2 && a2 + c2 > b2;
}

} // namespace brokenstick
