#pragma once

#include "brokenstick/elements.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace brokenstick {

enum class SolveStatus {
    Ok,
    NoTriangle,         // existence inequality fails
    OrderingViolation,  // cevian solver requires 0 < u < v < w strictly
    IterationFailure,   // bisector iteration did not converge
    BracketingFailure   // cubic root bracket lost (internal error)
};

struct Reconstruction {
    SolveStatus status = SolveStatus::NoTriangle;
    TriangleSides sides{};
    double auxiliary = 0.0; // R, r, or the cevian t parameter
    double residual = 0.0;  // max relative forward-map deviation

    bool ok() const { return status == SolveStatus::Ok; }
};

struct CubicRoot {
    std::array<double, 4> coefficients; // c0 + c1 t + c2 t^2 + c3 t^3
    double root;
    double lo, hi;
};

// Bracketed bisection refined by Newton steps; requires a sign change on [lo, hi].
CubicRoot solve_cubic_bracketed(const std::array<double, 4>& coeffs, double lo, double hi);

enum class CircumBranch { Acute, Obtuse };

Reconstruction solve_from_medians(double u, double v, double w);
Reconstruction solve_from_altitudes(double u, double v, double w);
Reconstruction solve_from_exradii(double u, double v, double w);
Reconstruction solve_from_circumcenter_distances(double u, double v, double w,
                                                 CircumBranch branch = CircumBranch::Acute);
Reconstruction solve_from_orthocenter_distances(double u, double v, double w,
                                                CircumBranch branch = CircumBranch::Acute);
Reconstruction solve_from_incenter_distances(double u, double v, double w);
Reconstruction solve_from_cevian_triple(double u, double v, double w);
Reconstruction solve_from_angle_bisectors(double u, double v, double w,
                                          double tol = 1e-10, int max_iter = 10000);

struct IntegerCircumSolution {
    std::int64_t u, v, w, R;
};

// Exhaustive search of R^3 - (u^2+v^2+w^2)R - 2uvw = 0 over
// 1 <= u <= v <= w < R <= limit, exact integer arithmetic.
std::vector<IntegerCircumSolution> find_integer_circum_solutions(std::int64_t limit);

// Generator cross-check: solutions of the R = uv family satisfy
// (u^2-1)(v^2-1) = (w+1)^2.
bool satisfies_product_family(const IntegerCircumSolution& s);

} // namespace brokenstick
