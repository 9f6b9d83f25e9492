#include "brokenstick/model.hpp"

#include <cmath>
#include <stdexcept>

namespace brokenstick {

bool inside_model_triangle(const ModelPoint& p, double slack) {
    return p.y >= -slack && p.y <= kSqrt3 * (1.0 + p.x) + slack &&
           p.y <= kSqrt3 * (1.0 - p.x) + slack;
}

StickTriple point_to_triple(const ModelPoint& p) {
    if (!inside_model_triangle(p))
        throw std::domain_error("point outside the model triangle");
    return {p.y, (kSqrt3 * (1.0 + p.x) - p.y) / 2.0, (kSqrt3 * (1.0 - p.x) - p.y) / 2.0};
}

ModelPoint triple_to_point(const StickTriple& t) {
    return {(t.beta - t.gamma) / kSqrt3, t.alpha};
}

namespace {

// SplitMix64 finalizer; good enough mixing for counter-based MC draws.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace

std::pair<double, double> uniforms_at(const SampleStream& s, std::uint64_t index) {
    const std::uint64_t base = mix64(s.seed ^ (static_cast<std::uint64_t>(s.kind) << 32));
    const double u1 = unit_double(mix64(base ^ mix64(2 * index + 1)));
    const double u2 = unit_double(mix64(base ^ mix64(2 * index + 2)));
    return {u1, u2};
}

ModelPoint sample_at(const SampleStream& s, std::uint64_t index) {
    auto [u1, u2] = uniforms_at(s, index);
    if (s.kind == SamplerKind::DirectUniform) {
        // Standard triangle trick: uniform in the parallelogram spanned by
        // (B-A) and (C-A), folded across the diagonal.
        if (u1 + u2 > 1.0) {
            u1 = 1.0 - u1;
            u2 = 1.0 - u2;
        }
        // A(1,0) + u1*(B-A) + u2*(C-A)
        return {1.0 - 2.0 * u1 - u2, kSqrt3 * u2};
    }
    // Parallelogram rule: R uniform on CB, S uniform on CA, CO = CR + CS,
    // reflected through the origin when O leaves the triangle.
    // C(0,sqrt3), B(-1,0), A(1,0).
    const double rx = u1 * (-1.0), ry = kSqrt3 + u1 * (-kSqrt3); // R = C + u1*(B-C)
    const double sx = u2 * (1.0), sy = kSqrt3 + u2 * (-kSqrt3);  // S = C + u2*(A-C)
    ModelPoint o{rx + sx - 0.0, ry + sy - kSqrt3};               // O = R + S - C
    if (!inside_model_triangle(o)) {
        o.x = -o.x;
        o.y = -o.y;
    }
    return o;
}

int triangular_cell_64(const ModelPoint& p) {
    // Barycentric coordinates scaled to 8 rows; floors sum to 7 (upward cell)
    // or 6 (downward cell) for interior points.
    const StickTriple t = point_to_triple(p);
    const double wa = 8.0 * t.alpha / kSqrt3;
    const double wb = 8.0 * t.beta / kSqrt3;
    const double wc = 8.0 * t.gamma / kSqrt3;
    int a = static_cast<int>(std::floor(wa));
    int b = static_cast<int>(std::floor(wb));
    int c = static_cast<int>(std::floor(wc));
    auto clamp8 = [](int v) { return v < 0 ? 0 : (v > 7 ? 7 : v); };
    a = clamp8(a);
    b = clamp8(b);
    c = clamp8(c);
    if (a + b + c >= 8) { // boundary rounding; push to the nearest valid cell
        while (a + b + c > 7) (a >= b && a >= c) ? --a : (b >= c ? --b : --c);
    }
    if (a + b + c == 7) {
        // upward cells: a in [0,7], b in [0,7-a]
        return a * 8 - a * (a - 1) / 2 + b;
    }
    while (a + b + c < 6) ++a; // degenerate boundary case
    // downward cells: a in [0,6], b in [0,6-a]
    return 36 + a * 7 - a * (a - 1) / 2 + b;
}

} // namespace brokenstick
