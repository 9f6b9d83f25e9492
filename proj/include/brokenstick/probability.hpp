#pragma once

#include "brokenstick/elements.hpp"
#include "brokenstick/events.hpp"
#include "brokenstick/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brokenstick {

enum class Method { ClosedForm, Quadrature, MonteCarlo };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

struct ProbabilityEstimate {
    EventDescriptor event{};
    double value = 0.0;
    Method method = Method::ClosedForm;
    // standard error (MC), absolute error bound (quadrature), 0 (closed form)
    double uncertainty = 0.0;
    std::uint64_t n = 0;        // MC only
    std::uint64_t seed = 0;     // MC only
    std::uint64_t failures = 0; // MC only: solver non-convergences, never dropped
};

bool has_closed_form(const EventDescriptor& e);
bool has_quadrature(const EventDescriptor& e);

// Exact expression evaluated in floating point. Throws std::domain_error for
// experimental-only events.
ProbabilityEstimate closed_form(const EventDescriptor& e);

// Adaptive Gauss-Kronrod evaluation of the per-event region integral. Throws
// std::domain_error when no integral representation exists.
ProbabilityEstimate quadrature(const EventDescriptor& e);

ProbabilityEstimate monte_carlo(const EventDescriptor& e, std::uint64_t n,
                                const SampleStream& stream);

// (P(exists) - P(acute)) / P(acute); P(right) = 0 (measure zero).
double obtuse_acute_ratio(double p_exists, double p_acute);

// Exact obtuse/acute ratio expressions where one exists (sides, medians).
std::optional<double> closed_form_ratio(Interpretation i);

// Probability that the distances from a uniform interior point to the sides
// of an arbitrary triangle form a triangle: 2abc/((a+b)(b+c)(c+a)).
double general_triangle_probability(const TriangleSides& t);

// Closed form for the acute variant in the special case a=b=15/4, c=6.
double isosceles_15_4_6_acute_probability();

// Monte Carlo over uniform interior points of an arbitrary triangle.
ProbabilityEstimate general_triangle_monte_carlo(const TriangleSides& t, Predicate p,
                                                 std::uint64_t n, const SampleStream& stream);

struct CrossValidation {
    EventDescriptor event{};
    std::vector<ProbabilityEstimate> estimates;
    bool agree = true; // false when any pairwise check fails
    std::vector<std::string> notes;
};

CrossValidation cross_validate(const EventDescriptor& e, std::uint64_t n,
                               const SampleStream& stream);

} // namespace brokenstick
