#include "brokenstick/probability.hpp"

#include "brokenstick/predicates.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace brokenstick {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::Quadrature: return "quadrature";
        case Method::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view s) {
    if (s == "closed-form") return Method::ClosedForm;
    if (s == "quadrature") return Method::Quadrature;
    if (s == "monte-carlo") return Method::MonteCarlo;
    return std::nullopt;
}

namespace {

using I = Interpretation;

bool certain_event(const EventDescriptor& e) {
    if (e.predicate == Predicate::Exists)
        return e.interpretation == I::Exradii || e.interpretation == I::CevianHwm ||
               e.interpretation == I::IncenterDistances ||
               e.interpretation == I::AngleBisectors ||
               e.interpretation == I::CircumcenterDistances;
    return e.interpretation == I::CircumcenterDistances;
}

} // namespace

bool has_closed_form(const EventDescriptor& e) {
    if (certain_event(e)) return true;
    if (e.predicate == Predicate::Exists)
        return e.interpretation == I::Sides || e.interpretation == I::Medians ||
               e.interpretation == I::Altitudes || e.interpretation == I::TangentCircles;
    return e.interpretation == I::Sides || e.interpretation == I::Medians ||
           e.interpretation == I::Exradii;
}

ProbabilityEstimate closed_form(const EventDescriptor& e) {
    if (!has_closed_form(e))
        throw std::domain_error("no closed form for event " + event_key(e));
    double v;
    if (certain_event(e)) {
        v = 1.0;
    } else if (e.predicate == Predicate::Exists) {
        switch (e.interpretation) {
            case I::Sides:
            case I::Medians: v = 0.25; break;
            case I::Altitudes:
                v = 12.0 * std::sqrt(5.0) / 25.0 * std::log((3.0 + std::sqrt(5.0)) / 2.0) -
                    4.0 / 5.0;
                break;
            default: v = 5.0 / 27.0; break; // tangent circles
        }
    } else {
        switch (e.interpretation) {
            case I::Sides: v = 3.0 * std::log(2.0) - 2.0; break;
            case I::Medians: v = 1.0 / 3.0 - 5.0 / 9.0 * std::log(8.0 / 5.0); break;
            default: // exradii
                v = 24.0 * std::sqrt(7.0) / 49.0 * std::asin(std::sqrt(14.0) / 8.0) -
                    2.0 / 7.0;
                break;
        }
    }
    return {e, v, Method::ClosedForm, 0.0, 0, 0, 0};
}

bool has_quadrature(const EventDescriptor& e) {
    if (e.predicate == Predicate::Exists)
        return e.interpretation == I::Altitudes || e.interpretation == I::TangentCircles;
    return e.interpretation == I::Sides || e.interpretation == I::Medians ||
           e.interpretation == I::Altitudes || e.interpretation == I::Exradii ||
           e.interpretation == I::CevianHwm;
}

namespace {

struct QuadOutcome {
    double integral;
    double error;
};

template <typename F>
QuadOutcome gk_integrate(F&& f, double lo, double hi) {
    double error = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, lo, hi, 15, 1e-13, &error);
    return {v, error};
}

constexpr double kM = kSqrt3;

// f(t) and g(t) of the ordered cevian-triple acute region, after the
// rationalizing substitution y = t(1-x) (Jacobian 1-x).
double cevian_f(double t) {
    return (9.0 * t * t * t - 9.0 * t * t * kM - 3.0 * t + 3.0 * kM) /
           (9.0 * t * t * t + 5.0 * t * t * kM + 9.0 * t - 3.0 * kM);
}

double cevian_g(double t) {
    const double A = 7.0 * t * t + 2.0 * kM * t - 3.0;
    const double B = 37.0 * t * t * t * t + 20.0 * kM * t * t * t - 18.0 * t * t -
                     12.0 * kM * t + 9.0;
    const double sq = 2.0 * t * std::sqrt(B);
    return ((t - kM) * A + sq) / ((t + kM) * A + sq);
}

} // namespace

ProbabilityEstimate quadrature(const EventDescriptor& e) {
    if (!has_quadrature(e))
        throw std::domain_error("no integral representation for event " + event_key(e));
    double value, bound;
    if (e.interpretation == I::Sides) {
        // hyperbola-bounded acute region: one sixth integrated in y, symmetry x3
        auto f = [](double y) { return y / kM - y * y / (kM * (kM - y)); };
        auto [I1, err] = gk_integrate(f, 0.0, kM / 2.0);
        value = (kM / 4.0 - 3.0 * I1) / kM;
        bound = 3.0 * err / kM;
    } else if (e.interpretation == I::Medians) {
        auto f = [](double x) {
            return kM / 4.0 - (std::sqrt(9.0 * x * x + 10.0) - 1.0) / (3.0 * kM);
        };
        auto [I1, err] = gk_integrate(f, -0.25, 0.25);
        value = (kM / 16.0 + 3.0 * I1) / kM;
        bound = 3.0 * err / kM;
    } else if (e.interpretation == I::Altitudes && e.predicate == Predicate::Exists) {
        // complement of three congruent hyperbola lobes
        auto f = [](double x) {
            return 3.0 * kM / 5.0 - std::sqrt(3.0 * x * x / 5.0 + 12.0 / 25.0);
        };
        auto [I1, err] = gk_integrate(f, 0.0, 1.0);
        const double lobe = 2.0 * I1;
        value = 1.0 - 3.0 * lobe / kM;
        bound = 6.0 * err / kM;
    } else if (e.interpretation == I::Altitudes) {
        // acute region; sqrt integrand vanishes at the upper limit, so
        // substitute t = ub - z^2 to remove the square-root endpoint.
        const double ub = (2.0 * std::sqrt(6.0) - kM) / 7.0;
        auto inner = [](double t) {
            const double q =
                15.0 * t * t - 6.0 * kM * t + 9.0 -
                12.0 * t * std::sqrt(2.0 * t * t - 2.0 * kM * t + 3.0);
            return std::sqrt(std::max(q, 0.0));
        };
        auto f = [&](double z) { return inner(ub - z * z) * 2.0 * z; };
        auto [I1, err] = gk_integrate(f, 0.0, std::sqrt(ub));
        value = 1.0 - 2.0 / kM * I1;
        bound = 2.0 / kM * err + 1e-9; // endpoint regularization slack
    } else if (e.interpretation == I::Exradii) {
        // ellipse-bounded acute region
        auto f = [](double x) {
            return (kM + std::sqrt(3.0 * (8.0 - 7.0 * x * x))) / 7.0 - kM / 2.0;
        };
        auto [I1, err] = gk_integrate(f, -0.5, 0.5);
        value = (kM / 4.0 + 3.0 * I1) / kM;
        bound = 3.0 * err / kM;
    } else if (e.interpretation == I::CevianHwm) {
        const double lo = kM / (2.0 * std::sqrt(2.0) + 1.0);
        auto f = [](double t) {
            const double a = 1.0 - cevian_g(t);
            const double b = 1.0 - cevian_f(t);
            return a * a - b * b;
        };
        auto [I1, err] = gk_integrate(f, lo, kM / 3.0);
        value = kM * I1;
        bound = kM * err;
    } else {
        // tangent circles, existence: polynomial integrand
        auto f = [](double x) { return 1.0 - 2.0 * x - 3.0 * x * x; };
        auto [I1, err] = gk_integrate(f, 0.0, 1.0 / 3.0);
        value = I1;
        bound = err;
    }
    return {e, value, Method::Quadrature, bound, 0, 0, 0};
}

namespace {

constexpr std::uint64_t kChunk = 1u << 16;

struct Tally {
    std::uint64_t hits = 0;
    std::uint64_t failures = 0;
};

Tally run_chunk(const EventDescriptor& e, const SampleStream& stream,
                std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t i = begin; i < end; ++i) {
        const StickTriple triple = point_to_triple(sample_at(stream, i));
        const std::optional<bool> r = evaluate(e, triple);
        if (!r)
            ++t.failures;
        else if (*r)
            ++t.hits;
    }
    return t;
}

} // namespace

ProbabilityEstimate monte_carlo(const EventDescriptor& e, std::uint64_t n,
                                const SampleStream& stream) {
    if (n == 0) throw std::invalid_argument("monte_carlo: n must be >= 1");
    const std::uint64_t nchunks = (n + kChunk - 1) / kChunk;
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(nchunks)));
    std::vector<std::future<Tally>> futs;
    futs.reserve(nchunks);
    // fixed-size chunks combined in index order: scheduling-independent
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t b = c * kChunk, en = std::min(n, b + kChunk);
        if (workers == 1)
            futs.push_back(std::async(std::launch::deferred, run_chunk, e, stream, b, en));
        else
            futs.push_back(std::async(std::launch::async, run_chunk, e, stream, b, en));
    }
    Tally total;
    for (auto& f : futs) {
        const Tally t = f.get();
        total.hits += t.hits;
        total.failures += t.failures;
    }
    const std::uint64_t effective = n - total.failures;
    const double p = effective ? static_cast<double>(total.hits) / effective : 0.0;
    const double se = effective ? std::sqrt(p * (1.0 - p) / effective) : 0.0;
    return {e, p, Method::MonteCarlo, se, n, stream.seed, total.failures};
}

double obtuse_acute_ratio(double p_exists, double p_acute) {
    return (p_exists - p_acute) / p_acute;
}

std::optional<double> closed_form_ratio(Interpretation i) {
    const double ln2 = std::log(2.0);
    if (i == I::Sides) return (9.0 - 12.0 * ln2) / (12.0 * ln2 - 8.0);
    if (i == I::Medians) {
        const double ln5 = std::log(5.0);
        return (3.0 - 60.0 * ln2 + 20.0 * ln5) / (60.0 * ln2 - 20.0 * ln5 - 12.0);
    }
    return std::nullopt;
}

double general_triangle_probability(const TriangleSides& t) {
    return 2.0 * t.a * t.b * t.c / ((t.a + t.b) * (t.b + t.c) * (t.c + t.a));
}

double isosceles_15_4_6_acute_probability() {
    return 25.0 / 28.0 + 25.0 / 32.0 * std::log(13.0 / 5.0) -
           100.0 / 49.0 * std::sqrt(14.0) * std::asin(std::sqrt(7.0) / 13.0);
}

ProbabilityEstimate general_triangle_monte_carlo(const TriangleSides& t, Predicate p,
                                                 std::uint64_t n, const SampleStream& stream) {
    if (n == 0) throw std::invalid_argument("general_triangle_monte_carlo: n must be >= 1");
    const EmbeddedTriangle emb = embed(t);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        auto [u1, u2] = uniforms_at(stream, i);
        if (u1 + u2 > 1.0) {
            u1 = 1.0 - u1;
            u2 = 1.0 - u2;
        }
        // point = B + u1*(C-B) + u2*(A-B), B=(0,0), C=(a,0)
        const double px = u1 * t.a + u2 * emb.ax;
        const double py = u2 * emb.ay;
        const bool hit = (p == Predicate::Exists)
                             ? general_triangle_sides_exists(emb, px, py)
                             : general_triangle_sides_acute(emb, px, py);
        if (hit) ++hits;
    }
    const double phat = static_cast<double>(hits) / n;
    const double se = std::sqrt(phat * (1.0 - phat) / n);
    EventDescriptor e{I::Sides, p};
    return {e, phat, Method::MonteCarlo, se, n, stream.seed, 0};
}

CrossValidation cross_validate(const EventDescriptor& e, std::uint64_t n,
                               const SampleStream& stream) {
    CrossValidation cv;
    cv.event = e;
    std::optional<ProbabilityEstimate> cf, qd;
    if (has_closed_form(e)) {
        cf = closed_form(e);
        cv.estimates.push_back(*cf);
    } else {
        cv.notes.push_back("no closed form");
    }
    if (has_quadrature(e)) {
        qd = quadrature(e);
        cv.estimates.push_back(*qd);
    } else {
        cv.notes.push_back("no integral representation");
    }
    const ProbabilityEstimate mc = monte_carlo(e, n, stream);
    cv.estimates.push_back(mc);

    const double exact = cf ? cf->value : (qd ? qd->value : mc.value);
    if (cf || qd) {
        const double tol = std::max(4.0 * mc.uncertainty, 1e-12);
        if (std::abs(mc.value - exact) > tol) {
            cv.agree = false;
            cv.notes.push_back("monte-carlo deviates from exact by more than 4 sigma");
        }
    }
    if (cf && qd) {
        if (std::abs(cf->value - qd->value) > qd->uncertainty + 1e-9) {
            cv.agree = false;
            cv.notes.push_back("quadrature deviates from closed form beyond its bound");
        }
    }
    if (mc.failures != 0)
        cv.notes.push_back("solver failures: " + std::to_string(mc.failures));
    return cv;
}

} // namespace brokenstick
