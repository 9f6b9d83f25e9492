#include "brokenstick/events.hpp"

namespace brokenstick {

std::string_view to_string(Interpretation i) {
    switch (i) {
        case Interpretation::Sides: return "sides";
        case Interpretation::Medians: return "medians";
        case Interpretation::Altitudes: return "altitudes";
        case Interpretation::Exradii: return "exradii";
        case Interpretation::CevianHwm: return "cevian-hwm";
        case Interpretation::TangentCircles: return "tangent-circles";
        case Interpretation::IncenterDistances: return "incenter-distances";
        case Interpretation::AngleBisectors: return "angle-bisectors";
        case Interpretation::CircumcenterDistances: return "circumcenter-distances";
    }
    return "?";
}

std::string_view to_string(Predicate p) {
    return p == Predicate::Exists ? "exists" : "acute";
}

std::optional<Interpretation> parse_interpretation(std::string_view s) {
    for (Interpretation i : all_interpretations)
        if (to_string(i) == s) return i;
    return std::nullopt;
}

std::string event_key(const EventDescriptor& e) {
    std::string out{to_string(e.interpretation)};
    out += '/';
    out += to_string(e.predicate);
    return out;
}

} // namespace brokenstick
