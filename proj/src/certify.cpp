#include "kempe/certify.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <future>
#include <iterator>
#include <sstream>
#include <variant>

#include "kempe/degeneracy.hpp"
#include "kempe/errors.hpp"
#include "kempe/reduction.hpp"
#include "kempe/subdegeneracy.hpp"

namespace kempe {

CertRecord certify_instance(const UtpInstance& instance) {
    CertRecord record;
    record.instance_name = instance.name;
    record.timeslot_count = instance.timeslot_count;
    record.deg_value = degeneracy(instance.conflict_graph).value;
    record.connected_basic = instance.timeslot_count > record.deg_value;
    if (instance.has_availability_data) {
        ReducedGraph reduced = build_reduced(instance.conflict_graph,
                                             instance.timeslot_count, instance.availability);
        SubdegResult bound = subdeg_ub(reduced.graph, fixed_set(reduced));
        record.subdeg_ub_value = bound.value;
        record.connected_with_availability = instance.timeslot_count > bound.value;
    }
    return record;
}

namespace {

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&tt, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

} // namespace

UtpInstance load_instance(const std::string& path, InstanceFormat hint) {
    std::ifstream file(path);
    if (!file) throw input_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());

    InstanceFormat format = hint;
    if (format == InstanceFormat::auto_detect) {
        if (ends_with(path, ".ctt"))
            format = InstanceFormat::cctt;
        else if (ends_with(path, ".tim"))
            format = detect_tim_variant(text) == TimVariant::itc2007_pe
                         ? InstanceFormat::tim_itc
                         : InstanceFormat::tim_mn;
        else
            throw input_error("cannot infer the format of '" + path +
                              "'; pass --format explicitly");
    }

    std::istringstream in(text);
    UtpInstance instance;
    switch (format) {
    case InstanceFormat::cctt:
        instance = parse_cctt(in);
        break;
    case InstanceFormat::tim_itc:
        instance = parse_tim(in, TimVariant::itc2007_pe);
        break;
    case InstanceFormat::tim_mn:
        instance = parse_tim(in, TimVariant::metaheuristics_network);
        break;
    case InstanceFormat::auto_detect:
        break;
    }
    if (instance.name == "unnamed") instance.name = stem_of(path);
    return instance;
}

Report certify(const std::vector<std::string>& paths, InstanceFormat hint,
               ReportFormat format, int jobs, bool with_timestamp) {
    Report report;
    report.format = format;
    if (with_timestamp) report.timestamp = iso_timestamp();

    using Outcome = std::variant<CertRecord, ParseFailure>;
    std::vector<Outcome> outcomes(paths.size(), ParseFailure{});
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < paths.size(); i += step) {
            try {
                outcomes[i] = certify_instance(load_instance(paths[i], hint));
            } catch (const std::exception& e) {
                outcomes[i] = ParseFailure{paths[i], e.what()};
            }
        }
    };
    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::future<void>> workers;
        for (int t = 0; t < jobs; ++t)
            workers.push_back(std::async(std::launch::async, work, static_cast<std::size_t>(t),
                                         static_cast<std::size_t>(jobs)));
        for (auto& worker : workers) worker.get();
    }
    for (auto& outcome : outcomes) {
        if (std::holds_alternative<CertRecord>(outcome))
            report.records.push_back(std::get<CertRecord>(std::move(outcome)));
        else
            report.failures.push_back(std::get<ParseFailure>(std::move(outcome)));
    }
    return report;
}

std::string render_report(const Report& report) {
    std::ostringstream out;
    auto subdeg_text = [](const CertRecord& r) {
        return r.subdeg_ub_value ? std::to_string(*r.subdeg_ub_value) : std::string("n/a");
    };
    if (report.format == ReportFormat::csv) {
        out << "# kempe-recon " << report.tool_version << '\n';
        if (!report.timestamp.empty()) out << "# generated " << report.timestamp << '\n';
        out << "instance,p,deg,subdeg_ub,connected_basic,connected_availability\n";
        for (const CertRecord& r : report.records) {
            out << r.instance_name << ',' << r.timeslot_count << ',' << r.deg_value << ','
                << subdeg_text(r) << ',' << (r.connected_basic ? "true" : "false") << ',';
            if (r.connected_with_availability)
                out << (*r.connected_with_availability ? "true" : "false");
            else
                out << "n/a";
            out << '\n';
        }
        for (const ParseFailure& f : report.failures)
            out << "# parse-failure " << f.path << ": " << f.message << '\n';
    } else {
        // bold marks a value that certifies connectedness, as in the source tables
        out << "| instance | p | deg(G) | subdeg_ub(F,H_G) |\n";
        out << "|---|---|---|---|\n";
        for (const CertRecord& r : report.records) {
            out << "| " << r.instance_name << " | " << r.timeslot_count << " | ";
            if (r.connected_basic)
                out << "**" << r.deg_value << "**";
            else
                out << r.deg_value;
            out << " | ";
            if (!r.subdeg_ub_value)
                out << "n/a";
            else if (*r.connected_with_availability)
                out << "**" << *r.subdeg_ub_value << "**";
            else
                out << *r.subdeg_ub_value;
            out << " |\n";
        }
        for (const ParseFailure& f : report.failures)
            out << "\nparse failure: " << f.path << ": " << f.message << '\n';
        if (!report.timestamp.empty())
            out << "\n_kempe-recon " << report.tool_version << ", " << report.timestamp
                << "_\n";
    }
    return out.str();
}

BlockOrderTable toy_block_table() {
    std::istringstream in(toy_instance_text());
    UtpInstance toy = parse_cctt(in);
    ReducedGraph reduced =
        build_reduced(toy.conflict_graph, toy.timeslot_count, toy.availability);

    // course cliques named by initial, listed in the conventional T, A, S, G order
    const std::vector<std::pair<std::string, std::string>> naming = {
        {"TecCos", "T"}, {"ArcTec", "A"}, {"SceCosC", "S"}, {"Geotec", "G"}};
    std::vector<CliqueBlock> blocks;
    for (const auto& [course, letter] : naming) {
        CliqueBlock block;
        block.name = letter;
        for (int e = 0; e < toy.conflict_graph.vertex_count; ++e)
            if (toy.event_labels[e] == course) block.vertices.push_back(e);
        blocks.push_back(std::move(block));
    }
    return block_order_enumerate(reduced, blocks, fixed_set(reduced));
}

} // namespace kempe
