// kempe-recon: certifies the connectedness of clash-free timetable search
// spaces and exposes the reconfiguration, reduction, and oracle machinery.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kempe/certify.hpp"
#include "kempe/coloring.hpp"
#include "kempe/degeneracy.hpp"
#include "kempe/errors.hpp"
#include "kempe/graph.hpp"
#include "kempe/oracle.hpp"
#include "kempe/reconfiguration.hpp"
#include "kempe/reduction.hpp"
#include "kempe/subdegeneracy.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw kempe::input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw kempe::input_error("cannot write '" + path + "'");
    file << text;
}

kempe::Graph load_graph(const std::string& path) {
    std::istringstream in(read_file(path));
    return kempe::read_dimacs(in);
}

kempe::Coloring load_coloring(const std::string& path, int n, int k) {
    std::istringstream in(read_file(path));
    return kempe::read_coloring(in, n, k);
}

// one line per vertex: "<count> <slot>..."
std::vector<std::vector<int>> load_lists(const std::string& path, int n) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v) {
        int count;
        if (!(in >> count) || count < 1)
            throw kempe::input_error("lists file: bad count for vertex " +
                                     std::to_string(v + 1));
        lists[v].resize(count);
        for (int i = 0; i < count; ++i)
            if (!(in >> lists[v][i]))
                throw kempe::input_error("lists file: truncated entry for vertex " +
                                         std::to_string(v + 1));
    }
    return lists;
}

std::string format_block_table(const kempe::BlockOrderTable& table, bool fixed_last_only) {
    std::ostringstream out;
    const auto& blocks = table.blocks;
    out << std::left << std::setw(16) << "clique ordering";
    for (const auto& block : blocks)
        out << std::right << std::setw(6) << ("p(" + block.name + ")");
    out << '\n';
    const int last = static_cast<int>(blocks.size()) - 1;
    for (const auto& row : table.rows) {
        if (fixed_last_only && row.order.back() != last) continue;
        std::string order_text;
        for (std::size_t i = 0; i < row.order.size(); ++i) {
            if (i) order_text += ", ";
            order_text += blocks[row.order[i]].name;
        }
        out << std::left << std::setw(16) << order_text;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            out << std::right << std::setw(6) << row.pred_values[b];
        out << '\n';
    }
    out << "minimum over orderings: " << table.minimum << '\n';
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectedness certification for clash-free timetables"};
    app.require_subcommand(1);

    // certify
    auto* certify_cmd =
        app.add_subcommand("certify", "parse instances and report deg/subdeg_ub verdicts");
    std::vector<std::string> paths;
    std::string format_name = "auto", report_name = "csv", out_path;
    bool no_timestamp = false;
    int jobs = 1;
    certify_cmd->add_option("paths", paths, "instance files")->required();
    certify_cmd->add_option("--format", format_name, "cctt|tim-itc|tim-mn|auto")
        ->check(CLI::IsMember({"cctt", "tim-itc", "tim-mn", "auto"}));
    certify_cmd->add_option("--report", report_name, "csv|md")
        ->check(CLI::IsMember({"csv", "md"}));
    certify_cmd->add_option("--out", out_path, "output path ('-' for stdout)");
    certify_cmd->add_flag("--no-timestamp", no_timestamp, "suppress the timestamp line");
    certify_cmd->add_option("--jobs", jobs, "instances certified in parallel")
        ->check(CLI::PositiveNumber);

    // reconfigure
    auto* reconfigure_cmd =
        app.add_subcommand("reconfigure", "build a Kempe-exchange plan between two colorings");
    std::string graph_path, from_path, to_path, ordering_path, plan_out;
    int palette = 0;
    bool compact = false;
    reconfigure_cmd->add_option("graph", graph_path, "DIMACS-like edge list")->required();
    reconfigure_cmd->add_option("from", from_path, "source coloring")->required();
    reconfigure_cmd->add_option("to", to_path, "target coloring")->required();
    reconfigure_cmd->add_option("-k,--palette", palette, "palette size")
        ->required()
        ->check(CLI::PositiveNumber);
    reconfigure_cmd->add_option("--ordering", ordering_path,
                                "vertex ordering file (default: degeneracy witness)");
    reconfigure_cmd->add_option("--out", plan_out, "plan output path");
    reconfigure_cmd->add_flag("--compact", compact, "drop exchanges with no effect");

    // replay
    auto* replay_cmd = app.add_subcommand("replay", "replay a plan and print the trace");
    std::string replay_graph, replay_coloring, replay_plan, replay_out;
    replay_cmd->add_option("graph", replay_graph, "DIMACS-like edge list")->required();
    replay_cmd->add_option("coloring", replay_coloring, "start coloring")->required();
    replay_cmd->add_option("plan", replay_plan, "plan file")->required();
    replay_cmd->add_option("--out", replay_out, "trace output path");

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "reconfiguration-graph statistics for a tiny graph");
    std::string oracle_graph, oracle_lists, relation_name = "kempe", edges_out, nodes_out;
    int oracle_palette = 0;
    oracle_cmd->add_option("graph", oracle_graph, "DIMACS-like edge list")->required();
    oracle_cmd->add_option("-k,--palette", oracle_palette, "palette size")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--relation", relation_name, "kempe|elementary")
        ->check(CLI::IsMember({"kempe", "elementary"}));
    oracle_cmd->add_option("--lists", oracle_lists, "per-vertex allowed colors");
    oracle_cmd->add_option("--export-edges", edges_out, "write the edge list here");
    oracle_cmd->add_option("--export-nodes", nodes_out, "write the node manifest here");

    // reduce
    auto* reduce_cmd =
        app.add_subcommand("reduce", "dump the reduced (list-to-vertex) coloring graph");
    std::string reduce_path, reduce_format = "auto", reduce_out;
    bool reduce_subdeg = false, reduce_normalized = false;
    reduce_cmd->add_option("instance", reduce_path, "instance file")->required();
    reduce_cmd->add_option("--format", reduce_format, "cctt|tim-itc|tim-mn|auto")
        ->check(CLI::IsMember({"cctt", "tim-itc", "tim-mn", "auto"}));
    reduce_cmd->add_option("--out", reduce_out, "output path");
    reduce_cmd->add_flag("--subdeg", reduce_subdeg,
                         "print the subdegeneracy bound and witness ordering instead");
    reduce_cmd->add_flag("--normalized", reduce_normalized,
                         "print the normalized instance dump instead");

    // toy-proof
    auto* toy_cmd = app.add_subcommand(
        "toy-proof", "enumerate the course-clique orderings of the toy instance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*certify_cmd) {
            kempe::InstanceFormat hint = kempe::InstanceFormat::auto_detect;
            if (format_name == "cctt") hint = kempe::InstanceFormat::cctt;
            if (format_name == "tim-itc") hint = kempe::InstanceFormat::tim_itc;
            if (format_name == "tim-mn") hint = kempe::InstanceFormat::tim_mn;
            kempe::Report report =
                kempe::certify(paths, hint,
                               report_name == "md" ? kempe::ReportFormat::markdown
                                                   : kempe::ReportFormat::csv,
                               jobs, !no_timestamp);
            write_output(out_path, kempe::render_report(report));
            for (const auto& failure : report.failures)
                std::cerr << "parse failure: " << failure.path << ": " << failure.message
                          << '\n';
            return report.failures.empty() ? 0 : 2;
        }
        if (*reconfigure_cmd) {
            kempe::Graph g = load_graph(graph_path);
            kempe::Coloring from = load_coloring(from_path, g.vertex_count, palette);
            kempe::Coloring to = load_coloring(to_path, g.vertex_count, palette);
            kempe::VertexOrdering order;
            if (ordering_path.empty()) {
                order = kempe::degeneracy(g).ordering;
            } else {
                std::istringstream in(read_file(ordering_path));
                std::vector<int> sequence(g.vertex_count);
                for (int i = 0; i < g.vertex_count; ++i) {
                    if (!(in >> sequence[i]))
                        throw kempe::input_error("ordering file is truncated");
                    sequence[i] -= 1;
                }
                order = kempe::make_ordering(sequence, g.vertex_count);
            }
            kempe::ReconfigureResult result =
                kempe::kempe_reconfigure(g, order, from, to, palette);
            if (!result) {
                std::cerr << "no plan: palette exhausted at vertex "
                          << result.stuck_vertex + 1 << '\n';
                return 1;
            }
            kempe::ExchangePlan plan =
                compact ? kempe::compact_plan(g, result.plan) : result.plan;
            std::ostringstream out;
            kempe::write_plan(out, plan);
            write_output(plan_out, out.str());
            return 0;
        }
        if (*replay_cmd) {
            kempe::Graph g = load_graph(replay_graph);
            int plan_palette = 0;
            std::istringstream plan_in(read_file(replay_plan));
            std::vector<kempe::KempeExchange> exchanges =
                kempe::read_plan(plan_in, plan_palette);
            kempe::Coloring start = load_coloring(replay_coloring, g.vertex_count,
                                                  plan_palette);
            kempe::ExchangePlan plan{exchanges, start, start, {}};
            kempe::ReplayResult run = kempe::replay(g, start, plan);
            std::ostringstream out;
            for (const kempe::Coloring& step : run.trace) kempe::write_coloring(out, step);
            write_output(replay_out, out.str());
            if (run.failed_step) {
                std::cerr << "replay error: exchange " << *run.failed_step + 1
                          << " does not apply (anchor outside both color classes)\n";
                return 1;
            }
            return 0;
        }
        if (*oracle_cmd) {
            kempe::Graph g = load_graph(oracle_graph);
            kempe::EnumerationCaps caps = kempe::caps_from_env();
            std::vector<std::vector<int>> lists;
            const std::vector<std::vector<int>>* lists_ptr = nullptr;
            if (!oracle_lists.empty()) {
                lists = load_lists(oracle_lists, g.vertex_count);
                lists_ptr = &lists;
            }
            auto colorings = kempe::enumerate_colorings(g, oracle_palette, lists_ptr, caps);
            kempe::Relation relation = relation_name == "kempe"
                                            ? kempe::Relation::kempe
                                            : kempe::Relation::elementary;
            kempe::ReconfigGraph rg = kempe::build_reconfig_graph(g, colorings, relation);
            kempe::ConnectivityReport report = kempe::connectivity(rg);
            std::cout << "nodes " << rg.nodes.size() << '\n'
                      << "edges " << rg.edge_count() << '\n'
                      << "connected " << (report.connected ? "true" : "false") << '\n'
                      << "components " << report.component_count << '\n';
            if (report.diameter)
                std::cout << "diameter " << *report.diameter << '\n';
            else
                std::cout << "diameter inf\n";
            if (!edges_out.empty()) {
                std::ostringstream out;
                kempe::write_reconfig_edges(out, rg);
                write_output(edges_out, out.str());
            }
            if (!nodes_out.empty()) {
                std::ostringstream out;
                kempe::write_reconfig_nodes(out, rg);
                write_output(nodes_out, out.str());
            }
            return 0;
        }
        if (*reduce_cmd) {
            kempe::InstanceFormat hint = kempe::InstanceFormat::auto_detect;
            if (reduce_format == "cctt") hint = kempe::InstanceFormat::cctt;
            if (reduce_format == "tim-itc") hint = kempe::InstanceFormat::tim_itc;
            if (reduce_format == "tim-mn") hint = kempe::InstanceFormat::tim_mn;
            kempe::UtpInstance instance = kempe::load_instance(reduce_path, hint);
            if (reduce_normalized) {
                write_output(reduce_out, kempe::serialize_normalized(instance));
                return 0;
            }
            kempe::ReducedGraph reduced = kempe::build_reduced(
                instance.conflict_graph, instance.timeslot_count, instance.availability);
            if (reduce_subdeg) {
                kempe::SubdegResult bound =
                    kempe::subdeg_ub(reduced.graph, kempe::fixed_set(reduced));
                write_output(reduce_out, kempe::format_subdeg(bound));
                return 0;
            }
            std::ostringstream out;
            kempe::write_reduced(out, reduced);
            write_output(reduce_out, out.str());
            return 0;
        }
        if (*toy_cmd) {
            kempe::BlockOrderTable table = kempe::toy_block_table();
            std::cout << format_block_table(table, /*fixed_last_only=*/true);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
