#include "brokenstick/solvers.hpp"

#include "brokenstick/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace brokenstick {

namespace {

double rel_residual(const Triple& forward, const Triple& input) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        r = std::max(r, std::abs(forward[i] - input[i]) / std::abs(input[i]));
    return r;
}

} // namespace

CubicRoot solve_cubic_bracketed(const std::array<double, 4>& c, double lo, double hi) {
    auto f = [&](double t) { return c[0] + t * (c[1] + t * (c[2] + t * c[3])); };
    auto df = [&](double t) { return c[1] + t * (2.0 * c[2] + t * 3.0 * c[3]); };
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return {c, lo, lo, hi};
    if (fhi == 0.0) return {c, hi, lo, hi};
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("solve_cubic_bracketed: no sign change on bracket");
    double a = lo, b = hi, fa = flo;
    double x = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        double fx = f(x);
        if (fx == 0.0) break;
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        double d = df(x);
        double xn = (d != 0.0) ? x - fx / d : 0.5 * (a + b);
        if (!(xn > a && xn < b)) xn = 0.5 * (a + b); // Newton left the bracket
        if (std::abs(xn - x) <= 1e-16 * std::max(1.0, std::abs(x))) {
            x = xn;
            break;
        }
        x = xn;
    }
    return {c, x, lo, hi};
}

Reconstruction solve_from_medians(double u, double v, double w) {
    if (!(u + v + w > 2.0 * std::max({u, v, w}))) return {SolveStatus::NoTriangle};
    auto side = [](double mu, double mv, double mw) {
        return (2.0 / 3.0) * std::sqrt(2.0 * (mv * mv + mw * mw) - mu * mu);
    };
    TriangleSides s{side(u, v, w), side(v, u, w), side(w, u, v)};
    Reconstruction rec{SolveStatus::Ok, s, 0.0, 0.0};
    rec.residual = rel_residual(medians(s), {u, v, w});
    return rec;
}

Reconstruction solve_from_altitudes(double u, double v, double w) {
    TriangleSides inv{1.0 / u, 1.0 / v, 1.0 / w};
    if (!valid_triangle(inv)) return {SolveStatus::NoTriangle};
    // Sides proportional to the reciprocals; scale so the forward altitudes
    // reproduce the input: h_a = 2*Heron(k/u,k/v,k/w)/(k/u) = 2*k*Heron(inv)*u... => k = 1/(2 S1).
    const double k = 1.0 / (2.0 * area(inv));
    TriangleSides s{k / u, k / v, k / w};
    Reconstruction rec{SolveStatus::Ok, s, 0.0, 0.0};
    rec.residual = rel_residual(altitudes(s), {u, v, w});
    return rec;
}

Reconstruction solve_from_exradii(double u, double v, double w) {
    if (!(u > 0.0 && v > 0.0 && w > 0.0)) return {SolveStatus::NoTriangle};
    const double sigma = std::sqrt(u * v + v * w + w * u);
    TriangleSides s{(u * v + u * w) / sigma, (u * v + v * w) / sigma, (u * w + v * w) / sigma};
    Reconstruction rec{SolveStatus::Ok, s, u * v * w / sigma, 0.0};
    rec.residual = rel_residual(exradii(s), {u, v, w});
    return rec;
}

Reconstruction solve_from_circumcenter_distances(double u, double v, double w,
                                                 CircumBranch branch) {
    if (!(u > 0.0 && v > 0.0 && w > 0.0)) return {SolveStatus::NoTriangle};
    const double q = u * u + v * v + w * w;
    const double omega = std::sqrt(q / 3.0);
    const double mx = std::max({u, v, w});
    const double sgn = (branch == CircumBranch::Acute) ? -1.0 : 1.0;
    const std::array<double, 4> coeffs{sgn * 2.0 * u * v * w, -q, 0.0, 1.0};
    auto f = [&](double t) { return coeffs[0] + t * (coeffs[1] + t * t); };
    double R;
    if (f(mx) == 0.0) {
        R = mx; // double root at max: degenerate (one side would be zero)
        if (branch == CircumBranch::Obtuse) return {SolveStatus::NoTriangle};
    } else {
        double hi = 2.0 * omega;
        if (f(hi) == 0.0) {
            R = hi; // equilateral input: root exactly at 2*omega
        } else {
            while (f(hi) < 0.0) hi *= 1.5; // guard against rounding at the 2w bound
            try {
                R = solve_cubic_bracketed(coeffs, mx, hi).root;
            } catch (const std::runtime_error&) {
                return {SolveStatus::BracketingFailure};
            }
        }
    }
    auto side = [&](double d) { return 2.0 * std::sqrt(std::max(R * R - d * d, 0.0)); };
    TriangleSides s{side(u), side(v), side(w)};
    if (!valid_triangle(s)) return {SolveStatus::NoTriangle};
    Reconstruction rec{SolveStatus::Ok, s, R, 0.0};
    Triple d = circumcenter_distances(s, DistanceMode::Signed);
    rec.residual = rel_residual({std::abs(d[0]), std::abs(d[1]), std::abs(d[2])}, {u, v, w});
    return rec;
}

Reconstruction solve_from_orthocenter_distances(double u, double v, double w,
                                                CircumBranch branch) {
    Reconstruction rec = solve_from_circumcenter_distances(u / 2.0, v / 2.0, w / 2.0, branch);
    rec.auxiliary *= 1.0; // R of the same triangle
    if (rec.ok()) {
        Triple d = orthocenter_distances(rec.sides, DistanceMode::Signed);
        rec.residual = rel_residual({std::abs(d[0]), std::abs(d[1]), std::abs(d[2])}, {u, v, w});
    }
    return rec;
}

Reconstruction solve_from_incenter_distances(double u, double v, double w) {
    if (!(u > 0.0 && v > 0.0 && w > 0.0)) return {SolveStatus::NoTriangle};
    const std::array<double, 4> coeffs{-1.0, 0.0,
                                       1.0 / (u * u) + 1.0 / (v * v) + 1.0 / (w * w),
                                       2.0 / (u * v * w)};
    const double mn = std::min({u, v, w});
    double r;
    try {
        r = solve_cubic_bracketed(coeffs, 0.0, mn).root;
    } catch (const std::runtime_error&) {
        return {SolveStatus::BracketingFailure};
    }
    auto leg = [&](double d) { return std::sqrt(std::max(d * d - r * r, 0.0)); };
    TriangleSides s{leg(v) + leg(w), leg(u) + leg(w), leg(u) + leg(v)};
    Reconstruction rec{SolveStatus::Ok, s, r, 0.0};
    rec.residual = rel_residual(incenter_vertex_distances(s), {u, v, w});
    return rec;
}

Reconstruction solve_from_cevian_triple(double u, double v, double w) {
    if (!(u > 0.0 && u < v && v < w)) return {SolveStatus::OrderingViolation};
    // product forms keep full precision when the three lengths nearly coincide
    const double delta = std::sqrt((w - u) * (w + u));
    const double rho = std::sqrt((v - u) * (v + u)); // = delta - omega
    const double omega = (w - v) * (w + v) / (delta + rho);
    const double t2 = omega * (delta * rho + u * u) / rho;
    const double t = std::sqrt(t2);
    // A above the foot of the altitude; M the midpoint of BC at distance delta.
    TriangleSides s{2.0 * t,
                    std::sqrt(u * u + (t - delta) * (t - delta)),
                    std::sqrt(u * u + (t + delta) * (t + delta))};
    if (!valid_triangle(s)) return {SolveStatus::NoTriangle};
    Reconstruction rec{SolveStatus::Ok, s, t, 0.0};
    rec.residual = rel_residual(vertex_cevians(s, 0), {u, v, w});
    return rec;
}

namespace {

constexpr double kPi = 3.1415926535897932385;

// Internal bisector lengths for the triangle with angles x, y at two vertices
// (the third angle z = pi - x - y is never represented directly: sin z =
// sin(x+y) and cos(z/2) = sin((x+y)/2)) and circumdiameter 1, via
// w = 2 sin(adj1) sin(adj2) cos(own/2) / (sin(adj1) + sin(adj2)).
// The derived vertex is the one whose angle may approach pi, so needle
// shapes keep full floating-point resolution in the unknowns.
struct ShapeBisectors {
    double t0, t1, t2; // bisectors at the x-vertex, y-vertex, derived vertex
};

ShapeBisectors shape_bisectors(double x, double y) {
    const double sx = std::sin(x), sy = std::sin(y), sz = std::sin(x + y);
    return {2.0 * sy * sz * std::cos(0.5 * x) / (sy + sz),
            2.0 * sx * sz * std::cos(0.5 * y) / (sx + sz),
            2.0 * sx * sy * std::sin(0.5 * (x + y)) / (sx + sy)};
}

// F = (log(t0/t2) - tgt0, log(t1/t2) - tgt1); false outside the angle simplex
bool shape_residual(double x, double y, const std::array<double, 2>& tgt,
                    std::array<double, 2>& F) {
    if (!(x > 0.0 && y > 0.0 && x + y < kPi)) return false;
    const ShapeBisectors t = shape_bisectors(x, y);
    if (!(t.t0 > 0.0 && t.t1 > 0.0 && t.t2 > 0.0)) return false;
    F[0] = std::log(t.t0 / t.t2) - tgt[0];
    F[1] = std::log(t.t1 / t.t2) - tgt[1];
    return std::isfinite(F[0]) && std::isfinite(F[1]);
}

// Damped 2-d Newton on the shape map; steps leaving the simplex or not
// reducing the residual are backtracked.
bool shape_newton(double& A, double& C, const std::array<double, 2>& tgt, double tol,
                  int max_iter) {
    std::array<double, 2> F{};
    if (!shape_residual(A, C, tgt, F)) return false;
    auto norm = [](const std::array<double, 2>& f) {
        return std::max(std::abs(f[0]), std::abs(f[1]));
    };
    double fn = norm(F);
    for (int it = 0; it < max_iter && fn >= tol; ++it) {
        // difference steps scaled to the distance from the simplex boundary,
        // so near-degenerate shapes still get a meaningful Jacobian
        const double B = kPi - A - C;
        const double hA = 1e-7 * std::min(A, B);
        const double hC = 1e-7 * std::min(C, B);
        std::array<double, 2> Fa{}, Fc{};
        if (!shape_residual(A + hA, C, tgt, Fa) || !shape_residual(A, C + hC, tgt, Fc))
            return false;
        const double j00 = (Fa[0] - F[0]) / hA, j01 = (Fc[0] - F[0]) / hC;
        const double j10 = (Fa[1] - F[1]) / hA, j11 = (Fc[1] - F[1]) / hC;
        const double det = j00 * j11 - j01 * j10;
        if (std::abs(det) < 1e-300) return false;
        const double dA = (-F[0] * j11 + F[1] * j01) / det;
        const double dC = (-F[1] * j00 + F[0] * j10) / det;
        double lambda = 1.0;
        bool improved = false;
        for (int bt = 0; bt < 60; ++bt) {
            std::array<double, 2> Fn{};
            if (shape_residual(A + lambda * dA, C + lambda * dC, tgt, Fn) &&
                norm(Fn) < fn) {
                A += lambda * dA;
                C += lambda * dC;
                F = Fn;
                fn = norm(F);
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!improved) return false;
    }
    return fn < tol;
}

} // namespace

Reconstruction solve_from_angle_bisectors(double u, double v, double w,
                                          double tol, int max_iter) {
    if (!(u > 0.0 && v > 0.0 && w > 0.0)) return {SolveStatus::NoTriangle};
    // the smallest bisector belongs to the largest angle: make that vertex the
    // derived one so the Newton unknowns stay away from pi
    const Triple in{u, v, w};
    int im = 0;
    if (in[1] < in[im]) im = 1;
    if (in[2] < in[im]) im = 2;
    const int i0 = (im + 1) % 3, i1 = (im + 2) % 3;
    const std::array<double, 2> tgt{std::log(in[i0] / in[im]),
                                    std::log(in[i1] / in[im])};
    double x = kPi / 3.0, y = kPi / 3.0;
    if (!shape_newton(x, y, tgt, tol, max_iter)) {
        // homotopy from the equilateral shape (target log-ratios 0, met
        // exactly at the start) toward the requested ratios
        x = y = kPi / 3.0;
        double lam = 0.0, step = 0.5;
        while (lam < 1.0) {
            const double next = std::min(1.0, lam + step);
            double x2 = x, y2 = y;
            const std::array<double, 2> part{next * tgt[0], next * tgt[1]};
            if (shape_newton(x2, y2, part, tol, max_iter)) {
                x = x2;
                y = y2;
                lam = next;
                step *= 2.0;
            } else {
                step *= 0.5;
                if (step < 1e-8) return {SolveStatus::IterationFailure};
            }
        }
    }
    const ShapeBisectors t = shape_bisectors(x, y);
    // least-squares scale in log space, then residual against all three inputs
    const double k = std::cbrt((in[i0] / t.t0) * (in[i1] / t.t1) * (in[im] / t.t2));
    Triple sides{}; // side opposite each original vertex
    sides[i0] = k * std::sin(x);
    sides[i1] = k * std::sin(y);
    sides[im] = k * std::sin(x + y);
    Triple forward{};
    forward[i0] = k * t.t0;
    forward[i1] = k * t.t1;
    forward[im] = k * t.t2;
    Reconstruction rec{SolveStatus::Ok, {sides[0], sides[1], sides[2]}, k, 0.0};
    rec.residual = rel_residual(forward, in);
    return rec;
}

namespace {

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

std::vector<IntegerCircumSolution> find_integer_circum_solutions(std::int64_t limit) {
    std::vector<IntegerCircumSolution> out;
    for (std::int64_t R = 2; R <= limit; ++R) {
        const std::int64_t R2 = R * R;
        for (std::int64_t u = 1; u < R; ++u) {
            for (std::int64_t v = u; v < R; ++v) {
                // R^3 - (u^2+v^2+w^2)R - 2uvw = 0 is quadratic in w:
                // R w^2 + 2uv w - R(R^2 - u^2 - v^2) = 0
                const std::int64_t rem = R2 - u * u - v * v;
                if (rem <= 0) break; // v only grows from here
                const std::int64_t disc = u * u * v * v + R2 * rem;
                const std::int64_t sq = isqrt64(disc);
                if (sq * sq != disc) continue;
                const std::int64_t num = sq - u * v;
                if (num <= 0 || num % R != 0) continue;
                const std::int64_t w = num / R;
                if (w < v || w >= R) continue;
                if (R * R2 - (u * u + v * v + w * w) * R - 2 * u * v * w != 0) continue;
                out.push_back({u, v, w, R});
            }
        }
    }
    return out;
}

bool satisfies_product_family(const IntegerCircumSolution& s) {
    return s.R == s.u * s.v &&
           (s.u * s.u - 1) * (s.v * s.v - 1) == (s.w + 1) * (s.w + 1);
}

} // namespace brokenstick
