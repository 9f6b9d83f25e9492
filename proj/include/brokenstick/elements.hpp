#pragma once

#include <array>

namespace brokenstick {

struct TriangleSides {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

bool valid_triangle(const TriangleSides& t);

enum class TriangleKind { Acute, Right, Obtuse };

struct TriangleClass {
    TriangleKind kind;
    double tolerance; // relative to max(a,b,c)^2
};

using Triple = std::array<double, 3>;

double area(const TriangleSides& t); // Heron
double circumradius(const TriangleSides& t);
double inradius(const TriangleSides& t);

// Angles opposite a, b, c, via the atan2 form of the law of cosines.
Triple angles(const TriangleSides& t);

Triple medians(const TriangleSides& t);
Triple altitudes(const TriangleSides& t);
Triple exradii(const TriangleSides& t);
Triple angle_bisectors(const TriangleSides& t);
Triple incenter_vertex_distances(const TriangleSides& t);

enum class DistanceMode {
    Unsigned, // positive distances only; errors on an obtuse triangle
    Signed    // R*cos(angle), negative for the side facing an obtuse angle
};

// Distances from the circumcenter to the sides: (R cos A, R cos B, R cos C).
// In Unsigned mode throws std::domain_error when a cosine is negative.
Triple circumcenter_distances(const TriangleSides& t, DistanceMode mode = DistanceMode::Unsigned);

// HA = 2R cos A etc.; exactly twice circumcenter_distances.
Triple orthocenter_distances(const TriangleSides& t, DistanceMode mode = DistanceMode::Unsigned);

// (altitude, bisector, median) from the vertex opposite side `side` (0 -> a).
Triple vertex_cevians(const TriangleSides& t, int side);

// Signed acuteness margin: min over the three (sum of two squared sides minus
// the third) divided by max side squared. Positive = acute, ~0 = right.
double classification_margin(const TriangleSides& t);

TriangleClass classify(const TriangleSides& t, double tolerance = 1e-10);

} // namespace brokenstick
