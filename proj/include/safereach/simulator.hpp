#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "safereach/control.hpp"
#include "safereach/gradients.hpp"
#include "safereach/safe_set.hpp"
#include "safereach/scenario.hpp"

namespace safereach {

/// One evaluated instant of the game: agent states plus the geometry and
/// gradients recomputed for them.  Area and active set are never stale;
/// every constructor path goes through make_state().
struct GameState {
    double time{0.0};
    AgentConfig evader;
    std::vector<AgentConfig> pursuers;
    SafeSetBoundary boundary;
    AreaGradients gradients;

    double area() const { return boundary.area; }
    const std::vector<std::size_t>& active_indices() const { return boundary.active; }
    double scale() const { return config_scale(evader, pursuers); }
};

inline GameState make_state(AgentConfig evader, std::vector<AgentConfig> pursuers, double time) {
    GameState s;
    s.time = time;
    s.evader = std::move(evader);
    s.pursuers = std::move(pursuers);
    s.boundary = boundary(s.evader, s.pursuers);
    s.gradients = area_gradients(s.evader, s.pursuers, s.boundary);
    return s;
}

/// Headings all agents would command in the given state.
struct HeadingSet {
    HeadingCommand evader;
    std::vector<HeadingCommand> pursuers;
};

inline HeadingSet optimal_headings(const GameState& state) {
    const double eps = gradient_zero_threshold(state.scale());
    HeadingSet h;
    h.evader = evader_heading(state.gradients, eps);
    h.pursuers.reserve(state.pursuers.size());
    for (std::size_t i = 0; i < state.pursuers.size(); ++i) {
        h.pursuers.push_back(pursuer_heading(i, state.gradients, eps));
    }
    return h;
}

namespace detail {

inline std::string state_snapshot(const GameState& s) {
    std::ostringstream os;
    os.precision(17);
    os << "t=" << s.time << " evader=(" << s.evader.position.x << "," << s.evader.position.y
       << ")";
    for (std::size_t i = 0; i < s.pursuers.size(); ++i) {
        os << " p" << i << "=(" << s.pursuers[i].position.x << "," << s.pursuers[i].position.y
           << ")";
    }
    return os.str();
}

} // namespace detail

/// Advance the game one explicit-Euler step of length dt.  All headings come
/// from the shared pre-step state (simultaneous move), each agent travels
/// exactly dt * speed (or stands still on a zero command), and the geometry
/// is rebuilt for the new positions.  Geometry failures are rethrown as
/// StepFailure with a state snapshot attached.
inline GameState step(const GameState& state, double dt) {
    if (!(dt > 0.0)) throw Error("step requires dt > 0");
    const HeadingSet headings = optimal_headings(state);

    AgentConfig evader = state.evader;
    evader.position += headings.evader.direction * (evader.speed * dt);
    std::vector<AgentConfig> pursuers = state.pursuers;
    for (std::size_t i = 0; i < pursuers.size(); ++i) {
        pursuers[i].position += headings.pursuers[i].direction * (pursuers[i].speed * dt);
    }

    try {
        return make_state(std::move(evader), std::move(pursuers), state.time + dt);
    } catch (const Error& err) {
        throw StepFailure("step from " + detail::state_snapshot(state) + " with dt=" +
                          std::to_string(dt) + " failed: " + err.what());
    }
}

enum class Termination {
    Captured,
    AreaBelowThreshold,
    TimeLimit,
};

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::Captured: return "Captured";
        case Termination::AreaBelowThreshold: return "AreaBelowThreshold";
        case Termination::TimeLimit: return "TimeLimit";
    }
    return "?";
}

enum class EventKind {
    ActiveSetChanged,
    ArcCountChanged,
};

/// A topology change between two consecutive states, for logging.
struct Event {
    EventKind kind{EventKind::ActiveSetChanged};
    double time{0.0};
    std::vector<std::size_t> entered; // ActiveSetChanged
    std::vector<std::size_t> left;
    std::size_t arcs_before{0}; // ArcCountChanged
    std::size_t arcs_after{0};
};

/// Compare consecutive states and report active-set membership changes and
/// changes in the number of boundary arcs.
inline std::vector<Event> detect_events(const GameState& prev, const GameState& cur) {
    std::vector<Event> events;

    const auto& a = prev.boundary.active;
    const auto& b = cur.boundary.active;
    Event change;
    change.kind = EventKind::ActiveSetChanged;
    change.time = cur.time;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(change.entered));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(change.left));
    if (!change.entered.empty() || !change.left.empty()) events.push_back(change);

    if (prev.boundary.arcs.size() != cur.boundary.arcs.size()) {
        Event arcs;
        arcs.kind = EventKind::ArcCountChanged;
        arcs.time = cur.time;
        arcs.arcs_before = prev.boundary.arcs.size();
        arcs.arcs_after = cur.boundary.arcs.size();
        events.push_back(arcs);
    }
    return events;
}

/// One recorded trajectory row.
struct Sample {
    double time{0.0};
    Vec2 evader;
    std::vector<Vec2> pursuers;
    double area{0.0};
    double area_rate{0.0}; // optimal-play dA/dt at this state
    Vec2 evader_heading;
    std::vector<Vec2> pursuer_headings;
    std::vector<std::size_t> active;
};

struct SimulationResult {
    std::vector<Sample> samples;
    std::vector<Event> events;
    Termination termination{Termination::TimeLimit};
    std::optional<double> capture_time;
    double final_area{0.0};
    std::size_t steps{0};
};

namespace detail {

inline Sample record(const GameState& s, const HeadingSet& headings) {
    Sample row;
    row.time = s.time;
    row.evader = s.evader.position;
    row.area = s.area();
    row.area_rate = optimal_area_rate(s.evader, s.pursuers, s.gradients);
    row.evader_heading = headings.evader.direction;
    row.active = s.boundary.active;
    row.pursuers.reserve(s.pursuers.size());
    row.pursuer_headings.reserve(s.pursuers.size());
    for (std::size_t i = 0; i < s.pursuers.size(); ++i) {
        row.pursuers.push_back(s.pursuers[i].position);
        row.pursuer_headings.push_back(headings.pursuers[i].direction);
    }
    return row;
}

inline double min_separation(const GameState& s) {
    double sep = std::numeric_limits<double>::infinity();
    for (const auto& p : s.pursuers) {
        sep = std::min(sep, distance(s.evader.position, p.position));
    }
    return sep;
}

} // namespace detail

/// Run the closed-loop game to termination: capture by proximity, collapse
/// of the safe area, or the time limit.  Every sample_stride-th state is
/// recorded, plus always the final one.  A step whose geometry evaluation
/// fails is retried once at dt/2 before the failure is propagated.
inline SimulationResult run(const ScenarioConfig& scenario) {
    const ScenarioConfig cfg = with_defaults(scenario);
    validate(cfg);

    SimulationResult result;
    GameState state = make_state(cfg.evader, cfg.pursuers, 0.0);
    std::size_t step_index = 0;
    bool recorded = false;

    for (;;) {
        recorded = false;
        if (step_index % cfg.sample_stride == 0) {
            result.samples.push_back(detail::record(state, optimal_headings(state)));
            recorded = true;
        }

        if (detail::min_separation(state) <= cfg.capture_radius) {
            result.termination = Termination::Captured;
            result.capture_time = state.time;
            break;
        }
        if (state.area() <= cfg.area_threshold) {
            result.termination = Termination::AreaBelowThreshold;
            break;
        }
        if (state.time >= cfg.t_max) {
            result.termination = Termination::TimeLimit;
            break;
        }

        GameState next = [&] {
            try {
                return step(state, cfg.dt);
            } catch (const StepFailure&) {
                return step(state, 0.5 * cfg.dt); // switching-instant retry
            }
        }();
        auto events = detect_events(state, next);
        result.events.insert(result.events.end(), events.begin(), events.end());
        state = std::move(next);
        ++step_index;
        ++result.steps;
    }

    if (!recorded) {
        result.samples.push_back(detail::record(state, optimal_headings(state)));
    }
    result.final_area = state.area();
    return result;
}

} // namespace safereach
