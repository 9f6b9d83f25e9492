#pragma once

#include "brokenstick/elements.hpp"
#include "brokenstick/events.hpp"
#include "brokenstick/model.hpp"

#include <optional>

namespace brokenstick {

// Region membership tests on a stick triple. All inequalities are strict, as
// printed; boundary triples (measure zero) evaluate false for open conditions.

bool sides_exists(const StickTriple& t);
bool sides_acute(const StickTriple& t);
bool medians_exists(const StickTriple& t);
bool medians_acute(const StickTriple& t);
bool altitudes_exists(const StickTriple& t);
bool altitudes_acute(const StickTriple& t); // solver-backed
bool exradii_acute(const StickTriple& t);
bool cevian_hwm_acute(const StickTriple& t); // sorts the triple internally
bool tangent_circles_exists(const StickTriple& t);
bool tangent_circles_acute(const StickTriple& t);
bool incenter_acute(const StickTriple& t);

// Solver-backed; nullopt when the bisector iteration fails to converge.
std::optional<bool> angle_bisectors_acute(const StickTriple& t);

// Tri-state evaluation: nullopt = solver failure (only possible for the
// angle-bisector interpretation).
std::optional<bool> evaluate(const EventDescriptor& e, const StickTriple& t);

// Signed margin of the event region: positive inside, negative outside,
// magnitude a dimensionless distance from the boundary. Used by the grid
// agreement tests and region plots to exclude the boundary band.
double margin(const EventDescriptor& e, const StickTriple& t);

// An arbitrary triangle embedded as B=(0,0), C=(a,0), A=(ax,ay).
struct EmbeddedTriangle {
    TriangleSides sides;
    double ax, ay;
};

EmbeddedTriangle embed(const TriangleSides& t);

// Distances from an interior point to sides (a, b, c) respectively.
Triple point_side_distances(const EmbeddedTriangle& e, double px, double py);

bool general_triangle_sides_exists(const EmbeddedTriangle& e, double px, double py);
bool general_triangle_sides_acute(const EmbeddedTriangle& e, double px, double py);

} // namespace brokenstick
