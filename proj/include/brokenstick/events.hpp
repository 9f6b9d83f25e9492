#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace brokenstick {

// The nine ways the three stick parts are read as triangle elements.
enum class Interpretation {
    Sides,
    Medians,
    Altitudes,
    Exradii,
    CevianHwm,            // altitude / angle bisector / median from one vertex
    TangentCircles,       // radii of three mutually tangent circles inside a triangle
    IncenterDistances,    // distances from the incenter to the vertices
    AngleBisectors,
    CircumcenterDistances // distances from the circumcenter to the sides
};

enum class Predicate { Exists, Acute };

struct EventDescriptor {
    Interpretation interpretation;
    Predicate predicate;

    friend bool operator==(const EventDescriptor&, const EventDescriptor&) = default;
};

inline constexpr std::array<Interpretation, 9> all_interpretations = {
    Interpretation::Sides,
    Interpretation::Medians,
    Interpretation::Altitudes,
    Interpretation::Exradii,
    Interpretation::CevianHwm,
    Interpretation::TangentCircles,
    Interpretation::IncenterDistances,
    Interpretation::AngleBisectors,
    Interpretation::CircumcenterDistances,
};

std::string_view to_string(Interpretation i);
std::string_view to_string(Predicate p);
std::optional<Interpretation> parse_interpretation(std::string_view s);

// "sides/acute" style key used in reports.
std::string event_key(const EventDescriptor& e);

} // namespace brokenstick
