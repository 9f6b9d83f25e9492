#pragma once

#include <cstdint>
#include <utility>

namespace brokenstick {

// Reference equilateral triangle: A(1,0), B(-1,0), C(0,sqrt(3)), side 2, area sqrt(3).
inline constexpr double kSqrt3 = 1.7320508075688772935;

// Point inside (or on) the reference triangle.
struct ModelPoint {
    double x = 0.0; // in [-1, 1]
    double y = 0.0; // in [0, sqrt(3)]
};

// Three stick parts; always alpha + beta + gamma = sqrt(3).
struct StickTriple {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

enum class SamplerKind { DirectUniform, Parallelogram };

// Counter-based sample source: the point at index i is a pure function of
// (seed, i, kind), so any number of workers can consume disjoint index
// ranges and the full sequence is scheduling-independent.
struct SampleStream {
    std::uint64_t seed = 0;
    SamplerKind kind = SamplerKind::DirectUniform;
};

bool inside_model_triangle(const ModelPoint& p, double slack = 1e-12);

// Distances from p to the three sides (alpha = y, beta/gamma from the slanted sides).
// Throws std::domain_error if p is outside the closed triangle.
StickTriple point_to_triple(const ModelPoint& p);

// Inverse map: x = (beta - gamma)/sqrt(3), y = alpha.
ModelPoint triple_to_point(const StickTriple& t);

// The two uniforms driving sample index i of a stream.
std::pair<double, double> uniforms_at(const SampleStream& s, std::uint64_t index);

ModelPoint sample_at(const SampleStream& s, std::uint64_t index);

// 64-cell triangular binning of the model triangle (8 rows of up/down cells),
// used by the sampler-equivalence chi-square test. Returns cell id in [0, 64).
int triangular_cell_64(const ModelPoint& p);

} // namespace brokenstick
