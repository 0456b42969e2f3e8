#include "kempe/instance.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

[[noreturn]] void fail_line(int line_no, const std::string& message) {
    throw input_error("line " + std::to_string(line_no) + ": " + message);
}

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // next nonblank line, trailing carriage returns stripped
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                     line.back() == '\t'))
                line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }

    std::string expect(const std::string& what) {
        std::string line;
        if (!next(line)) fail_line(line_no, "unexpected end of file, expected " + what);
        return line;
    }
};

struct Course {
    std::string name;
    std::string teacher;
    int lectures = 0;
    int first_event = 0;
    std::set<int> unavailable; // 1-based slots
};

UtpInstance finish_instance(std::string name, std::vector<std::string> labels, int p,
                            int rooms, int event_count,
                            const std::set<std::pair<int, int>>& conflict_pairs,
                            std::vector<std::vector<int>> availability,
                            bool has_availability) {
    UtpInstance instance;
    instance.name = std::move(name);
    instance.event_labels = std::move(labels);
    instance.timeslot_count = p;
    instance.room_count = rooms;
    instance.conflict_graph = build_graph(
        event_count, std::vector<std::pair<int, int>>(conflict_pairs.begin(),
                                                      conflict_pairs.end()));
    instance.availability = std::move(availability);
    instance.has_availability_data = has_availability;
    return instance;
}

} // namespace

UtpInstance parse_cctt(std::istream& in) {
    LineReader reader{in};

    std::map<std::string, std::string> header;
    std::string line;
    while (true) {
        line = reader.expect("a header entry or COURSES:");
        if (line == "COURSES:") break;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            fail_line(reader.line_no, "expected 'Key: value' header entry");
        std::string key = line.substr(0, colon);
        std::istringstream value(line.substr(colon + 1));
        std::string token;
        value >> token;
        if (token.empty()) fail_line(reader.line_no, "header entry '" + key + "' has no value");
        header[key] = token;
    }
    auto header_int = [&](const std::string& key) {
        auto it = header.find(key);
        if (it == header.end()) fail_line(reader.line_no, "missing header entry '" + key + "'");
        try {
            return std::stoi(it->second);
        } catch (const std::exception&) {
            fail_line(reader.line_no, "header entry '" + key + "' is not a number");
        }
    };
    const std::string name = header.count("Name") ? header["Name"] : "unnamed";
    const int course_count = header_int("Courses");
    const int room_count = header_int("Rooms");
    const int days = header_int("Days");
    const int periods_per_day = header_int("Periods_per_day");
    const int curriculum_count = header_int("Curricula");
    const int constraint_count = header_int("Constraints");
    if (days < 1 || periods_per_day < 1)
        fail_line(reader.line_no, "Days and Periods_per_day must be positive");
    const int p = days * periods_per_day;

    std::vector<Course> courses;
    std::map<std::string, int> course_index;
    int event_count = 0;
    for (int i = 0; i < course_count; ++i) {
        line = reader.expect("a course entry");
        std::istringstream iss(line);
        Course course;
        int min_days = 0, students = 0;
        if (!(iss >> course.name >> course.teacher >> course.lectures >> min_days >> students))
            fail_line(reader.line_no, "bad course entry");
        if (course.lectures < 1)
            fail_line(reader.line_no, "course '" + course.name +
                                          "' has an inconsistent lecture count");
        if (course_index.count(course.name))
            fail_line(reader.line_no, "duplicate course '" + course.name + "'");
        course.first_event = event_count;
        event_count += course.lectures;
        course_index[course.name] = static_cast<int>(courses.size());
        courses.push_back(std::move(course));
    }

    if (reader.expect("ROOMS:") != "ROOMS:") fail_line(reader.line_no, "expected ROOMS:");
    for (int i = 0; i < room_count; ++i) {
        line = reader.expect("a room entry");
        std::istringstream iss(line);
        std::string room;
        int capacity;
        if (!(iss >> room >> capacity)) fail_line(reader.line_no, "bad room entry");
    }

    if (reader.expect("CURRICULA:") != "CURRICULA:")
        fail_line(reader.line_no, "expected CURRICULA:");
    std::vector<std::vector<int>> curricula;
    for (int i = 0; i < curriculum_count; ++i) {
        line = reader.expect("a curriculum entry");
        std::istringstream iss(line);
        std::string cname;
        int member_count;
        if (!(iss >> cname >> member_count) || member_count < 0)
            fail_line(reader.line_no, "bad curriculum entry");
        std::vector<int> members;
        for (int j = 0; j < member_count; ++j) {
            std::string course;
            if (!(iss >> course)) fail_line(reader.line_no, "curriculum entry is truncated");
            auto it = course_index.find(course);
            if (it == course_index.end())
                fail_line(reader.line_no,
                          "curriculum references unknown course '" + course + "'");
            members.push_back(it->second);
        }
        curricula.push_back(std::move(members));
    }

    if (reader.expect("UNAVAILABILITY_CONSTRAINTS:") != "UNAVAILABILITY_CONSTRAINTS:")
        fail_line(reader.line_no, "expected UNAVAILABILITY_CONSTRAINTS:");
    for (int i = 0; i < constraint_count; ++i) {
        line = reader.expect("an unavailability entry");
        std::istringstream iss(line);
        std::string course;
        int day, period;
        if (!(iss >> course >> day >> period))
            fail_line(reader.line_no, "bad unavailability entry");
        auto it = course_index.find(course);
        if (it == course_index.end())
            fail_line(reader.line_no,
                      "unavailability references unknown course '" + course + "'");
        if (day < 0 || day >= days || period < 0 || period >= periods_per_day)
            fail_line(reader.line_no, "unavailability slot out of range");
        courses[it->second].unavailable.insert(day * periods_per_day + period + 1);
    }
    if (reader.expect("END.") != "END.") fail_line(reader.line_no, "expected END.");

    // conflicts: same course, shared teacher, shared curriculum
    std::set<std::pair<int, int>> conflicting_courses;
    std::map<std::string, std::vector<int>> by_teacher;
    for (std::size_t c = 0; c < courses.size(); ++c)
        by_teacher[courses[c].teacher].push_back(static_cast<int>(c));
    for (const auto& [teacher, group] : by_teacher)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                conflicting_courses.emplace(group[i], group[j]);
    for (const auto& members : curricula)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                conflicting_courses.emplace(std::min(members[i], members[j]),
                                            std::max(members[i], members[j]));

    std::set<std::pair<int, int>> conflicts;
    auto events_of = [&](const Course& course) {
        std::vector<int> events(course.lectures);
        for (int l = 0; l < course.lectures; ++l) events[l] = course.first_event + l;
        return events;
    };
    for (const Course& course : courses) {
        auto events = events_of(course);
        for (std::size_t i = 0; i < events.size(); ++i)
            for (std::size_t j = i + 1; j < events.size(); ++j)
                conflicts.emplace(events[i], events[j]);
    }
    for (const auto& [a, b] : conflicting_courses)
        for (int u : events_of(courses[a]))
            for (int v : events_of(courses[b]))
                conflicts.emplace(std::min(u, v), std::max(u, v));

    std::vector<std::string> labels(event_count);
    std::vector<std::vector<int>> availability(event_count);
    for (const Course& course : courses) {
        std::vector<int> allowed;
        for (int slot = 1; slot <= p; ++slot)
            if (!course.unavailable.count(slot)) allowed.push_back(slot);
        if (allowed.empty())
            throw input_error("course '" + course.name +
                              "' has no available timeslot; instance is uncolorable");
        for (int l = 0; l < course.lectures; ++l) {
            labels[course.first_event + l] = course.name;
            availability[course.first_event + l] = allowed;
        }
    }
    return finish_instance(name, std::move(labels), p, room_count, event_count, conflicts,
                           std::move(availability), true);
}

namespace {

struct TokenReader {
    std::istringstream in;
    long count = 0;

    explicit TokenReader(const std::string& text) : in(text) {}

    int next_int(const char* what) {
        int value;
        if (!(in >> value))
            throw input_error("token " + std::to_string(count + 1) + ": expected " + what +
                              ", found " + (in.eof() ? "end of input" : "a non-integer"));
        ++count;
        return value;
    }

    int next_bit(const char* what) {
        int value = next_int(what);
        if (value != 0 && value != 1)
            throw input_error("token " + std::to_string(count) + ": " + what +
                              " must be 0 or 1, found " + std::to_string(value));
        return value;
    }

    bool exhausted() {
        std::string rest;
        return !(in >> rest);
    }
};

constexpr int kTimSlots = 45;

} // namespace

TimVariant detect_tim_variant(const std::string& text) {
    std::istringstream iss(text);
    long events, rooms, features, students;
    if (!(iss >> events >> rooms >> features >> students))
        throw input_error("token 1: expected the '<events> <rooms> <features> <students>' header");
    long tokens = 0;
    std::string tok;
    while (iss >> tok) ++tokens;
    const long shared = rooms + students * events + rooms * features + events * features;
    if (tokens == shared) return TimVariant::metaheuristics_network;
    if (tokens == shared + events * kTimSlots + events * events)
        return TimVariant::itc2007_pe;
    throw input_error("token count " + std::to_string(tokens + 4) +
                      " matches neither .tim layout for the declared sizes");
}

UtpInstance parse_tim(std::istream& in, TimVariant variant) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    TokenReader tokens(text);

    const int event_count = tokens.next_int("event count");
    const int room_count = tokens.next_int("room count");
    const int feature_count = tokens.next_int("feature count");
    const int student_count = tokens.next_int("student count");
    if (event_count < 1) throw input_error("token 1: event count must be positive");
    if (room_count < 0 || feature_count < 0 || student_count < 0)
        throw input_error("token 2: negative size in header");

    for (int r = 0; r < room_count; ++r) tokens.next_int("room size");

    std::set<std::pair<int, int>> conflicts;
    std::vector<int> attending;
    for (int s = 0; s < student_count; ++s) {
        attending.clear();
        for (int e = 0; e < event_count; ++e)
            if (tokens.next_bit("attendance entry")) attending.push_back(e);
        for (std::size_t i = 0; i < attending.size(); ++i)
            for (std::size_t j = i + 1; j < attending.size(); ++j)
                conflicts.emplace(attending[i], attending[j]);
    }
    for (int r = 0; r < room_count; ++r)
        for (int f = 0; f < feature_count; ++f) tokens.next_bit("room-feature entry");
    for (int e = 0; e < event_count; ++e)
        for (int f = 0; f < feature_count; ++f) tokens.next_bit("event-feature entry");

    std::vector<std::vector<int>> availability(event_count);
    bool has_availability = false;
    if (variant == TimVariant::itc2007_pe) {
        has_availability = true;
        for (int e = 0; e < event_count; ++e) {
            for (int slot = 1; slot <= kTimSlots; ++slot)
                if (tokens.next_bit("availability entry")) availability[e].push_back(slot);
            if (availability[e].empty())
                throw input_error("event " + std::to_string(e + 1) +
                                  " has no available timeslot; instance is uncolorable");
        }
        for (int a = 0; a < event_count; ++a)
            for (int b = 0; b < event_count; ++b) tokens.next_bit("precedence entry");
    } else {
        for (int e = 0; e < event_count; ++e) {
            availability[e].resize(kTimSlots);
            for (int slot = 1; slot <= kTimSlots; ++slot) availability[e][slot - 1] = slot;
        }
    }
    if (!tokens.exhausted())
        throw input_error("token " + std::to_string(tokens.count + 1) +
                          ": trailing data after the instance");

    std::vector<std::string> labels(event_count, "-");
    return finish_instance("unnamed", std::move(labels), kTimSlots, room_count, event_count,
                           conflicts, std::move(availability), has_availability);
}

std::string serialize_normalized(const UtpInstance& instance) {
    std::ostringstream out;
    const int n = instance.conflict_graph.vertex_count;
    out << "utp " << instance.name << '\n';
    out << "counts " << n << ' ' << instance.timeslot_count << ' ' << instance.room_count
        << ' ' << instance.conflict_graph.edge_count() << ' '
        << (instance.has_availability_data ? 1 : 0) << '\n';
    for (int e = 0; e < n; ++e) out << "event " << e + 1 << ' ' << instance.event_labels[e]
                                    << '\n';
    for (int u = 0; u < n; ++u)
        for (int v : instance.conflict_graph.neighbors(u))
            if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    for (int e = 0; e < n; ++e) {
        out << "avail " << e + 1 << ' ' << instance.availability[e].size();
        for (int slot : instance.availability[e]) out << ' ' << slot;
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

UtpInstance parse_normalized(std::istream& in) {
    LineReader reader{in};
    std::string line = reader.expect("'utp <name>'");
    std::istringstream head(line);
    std::string tag, name;
    head >> tag >> name;
    if (tag != "utp" || name.empty()) fail_line(reader.line_no, "expected 'utp <name>'");

    line = reader.expect("'counts ...'");
    std::istringstream counts(line);
    int n, p, rooms, edges, avail_flag;
    counts >> tag >> n >> p >> rooms >> edges >> avail_flag;
    if (!counts || tag != "counts" || n < 0 || p < 1 || edges < 0 ||
        (avail_flag != 0 && avail_flag != 1))
        fail_line(reader.line_no, "bad counts line");

    std::vector<std::string> labels(n);
    for (int e = 0; e < n; ++e) {
        line = reader.expect("an event line");
        std::istringstream iss(line);
        int id;
        iss >> tag >> id >> labels[e];
        if (!iss || tag != "event" || id != e + 1)
            fail_line(reader.line_no, "bad or out-of-order event line");
    }
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i < edges; ++i) {
        line = reader.expect("an edge line");
        std::istringstream iss(line);
        int u, v;
        iss >> tag >> u >> v;
        if (!iss || tag != "e" || u < 1 || v < 1 || u > n || v > n)
            fail_line(reader.line_no, "bad edge line");
        edge_list.emplace_back(u - 1, v - 1);
    }
    std::vector<std::vector<int>> availability(n);
    for (int e = 0; e < n; ++e) {
        line = reader.expect("an availability line");
        std::istringstream iss(line);
        int id, count;
        iss >> tag >> id >> count;
        if (!iss || tag != "avail" || id != e + 1 || count < 1)
            fail_line(reader.line_no, "bad or out-of-order availability line");
        availability[e].resize(count);
        for (int i = 0; i < count; ++i) {
            if (!(iss >> availability[e][i]) || availability[e][i] < 1 ||
                availability[e][i] > p)
                fail_line(reader.line_no, "availability slot out of range");
        }
    }
    if (reader.expect("'end'") != "end") fail_line(reader.line_no, "expected 'end'");

    std::set<std::pair<int, int>> conflict_pairs(edge_list.begin(), edge_list.end());
    return finish_instance(name, std::move(labels), p, rooms, n, conflict_pairs,
                           std::move(availability), avail_flag == 1);
}

const char* toy_instance_text() {
    return R"(Name: toy
Courses: 4
Rooms: 3
Days: 5
Periods_per_day: 4
Curricula: 2
Constraints: 8

COURSES:
SceCosC Ocra 3 3 30
ArcTec Indaco 3 2 42
TecCos Rosa 5 4 40
Geotec Scarlatti 5 4 18

ROOMS:
rA 32
rB 50
rC 40

CURRICULA:
Cur1 3 SceCosC ArcTec TecCos
Cur2 2 TecCos Geotec

UNAVAILABILITY_CONSTRAINTS:
TecCos 2 0
TecCos 2 1
TecCos 3 2
TecCos 3 3
ArcTec 4 0
ArcTec 4 1
ArcTec 4 2
ArcTec 4 3

END.
)";
}

} // namespace kempe
