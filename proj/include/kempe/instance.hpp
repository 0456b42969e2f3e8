#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Uniform timetabling model: one vertex per event, conflict edges between
/// events that may not share a timeslot, and per-event sets of allowed
/// timeslots within {1..timeslot_count}. Rooms are carried but unused.
struct UtpInstance {
    std::string name;
    std::vector<std::string> event_labels; // originating course, or "-" when absent
    int timeslot_count = 0;
    int room_count = 0;
    Graph conflict_graph;
    std::vector<std::vector<int>> availability; // sorted, nonempty, 1-based slots
    bool has_availability_data = false; // false for formats without timeslot restrictions

    bool operator==(const UtpInstance&) const = default;
};

/// ITC2007 curriculum-based .ctt. One event per lecture; conflicts between
/// lectures of the same course, of courses sharing a teacher, and of courses
/// sharing a curriculum. Slot index = day * periods_per_day + period + 1.
UtpInstance parse_cctt(std::istream& in);

enum class TimVariant { itc2007_pe, metaheuristics_network };

/// Post-enrollment .tim (45 timeslots). Conflict between two events iff some
/// student attends both. The ITC2007 variant carries an availability matrix;
/// the Metaheuristics Network variant allows every slot.
UtpInstance parse_tim(std::istream& in, TimVariant variant);

/// Distinguishes the two .tim layouts by their exact token counts.
TimVariant detect_tim_variant(const std::string& text);

// Line-oriented normalized dump with a stable ordering; parse/serialize
// round-trips to an identical instance.
std::string serialize_normalized(const UtpInstance& instance);
UtpInstance parse_normalized(std::istream& in);

/// The 16-event, 20-slot example instance used by the toy fixtures.
const char* toy_instance_text();

} // namespace kempe
