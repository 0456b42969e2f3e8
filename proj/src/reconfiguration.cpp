#include "kempe/reconfiguration.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

// Component swap restricted to the processed prefix of the ordering.
void swap_component_in_prefix(const Graph& g, std::vector<int>& col,
                              const std::vector<char>& in_prefix, int a, int b, int u) {
    if (col[u] != a && col[u] != b)
        throw contract_error("exchange anchor drifted out of its color classes");
    std::vector<int> stack{u};
    std::vector<char> seen(g.vertex_count, 0);
    seen[u] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        col[v] = col[v] == a ? b : a;
        for (int w : g.neighbors(v)) {
            if (seen[w] || !in_prefix[w]) continue;
            if (col[w] != a && col[w] != b) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
}

void require_proper_input(const Graph& g, const Coloring& c, int k, const char* which) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count)
        throw contract_error(std::string(which) + " coloring size does not match the graph");
    for (int v = 0; v < g.vertex_count; ++v)
        if (c.colors[v] < 1 || c.colors[v] > k)
            throw contract_error(std::string(which) + " coloring uses color " +
                                 std::to_string(c.colors[v]) + " outside palette 1.." +
                                 std::to_string(k));
    if (!is_proper(g, c))
        throw contract_error(std::string(which) + " coloring is not proper");
}

} // namespace

ReconfigureResult kempe_reconfigure(const Graph& g, const VertexOrdering& order,
                                    const Coloring& c1, const Coloring& c2, int k) {
    if (!covers_all(order, g))
        throw contract_error("reconfiguration needs an ordering of all vertices");
    require_proper_input(g, c1, k, "source");
    require_proper_input(g, c2, k, "target");

    const int n = g.vertex_count;
    std::vector<KempeExchange> plan;
    std::vector<char> in_prefix(n, 0);
    std::vector<int> col;

    for (int i = 0; i < n; ++i) {
        const int v = order.sequence[i];
        in_prefix[v] = 1;
        // replay the accumulated plan from scratch on the enlarged prefix,
        // keeping v out of the way of the earlier exchanges
        col = c1.colors;
        std::size_t pos = 0;
        while (pos < plan.size()) {
            int a = plan[pos].color_a;
            int b = plan[pos].color_b;
            const int u = plan[pos].anchor;
            if (col[v] == a) std::swap(a, b);
            if (col[v] == b && v != u) {
                // The exchange was built for the shorter prefix. It stays
                // valid unless the sweep reaches v and would spill through it
                // into a component that used to be separate; only then v is
                // parked on the smallest color free in its neighborhood.
                // (A count-based trigger would also park vertices the sweep
                // never reaches and can strand a fixed vertex with no free
                // color, breaking the subdegeneracy guarantee.)
                std::vector<char> swept(g.vertex_count, 0);
                if (col[u] == a || col[u] == b) {
                    std::vector<int> stack{u};
                    swept[u] = 1;
                    while (!stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        for (int w : g.neighbors(x)) {
                            if (swept[w] || !in_prefix[w] || w == v) continue;
                            if (col[w] != a && col[w] != b) continue;
                            swept[w] = 1;
                            stack.push_back(w);
                        }
                    }
                }
                bool touches_sweep = false, branches_out = false;
                for (int w : g.neighbors(v)) {
                    if (!in_prefix[w] || col[w] != a) continue;
                    (swept[w] ? touches_sweep : branches_out) = true;
                }
                if (touches_sweep && branches_out) {
                    std::vector<char> used(k + 1, 0);
                    used[b] = 1;
                    for (int w : g.neighbors(v))
                        if (in_prefix[w]) used[col[w]] = 1;
                    int fresh = 0;
                    for (int color = 1; color <= k; ++color)
                        if (!used[color]) {
                            fresh = color;
                            break;
                        }
                    if (fresh == 0) {
                        ReconfigureResult failure;
                        failure.stuck_vertex = v;
                        return failure;
                    }
                    KempeExchange parking{b, fresh, v};
                    swap_component_in_prefix(g, col, in_prefix, b, fresh, v);
                    plan.insert(plan.begin() + static_cast<std::ptrdiff_t>(pos), parking);
                    ++pos;
                }
            }
            swap_component_in_prefix(g, col, in_prefix, a, b, u);
            ++pos;
        }
        if (col[v] != c2.colors[v]) {
            KempeExchange final_exchange{c2.colors[v], col[v], v};
            swap_component_in_prefix(g, col, in_prefix, final_exchange.color_a,
                                     final_exchange.color_b, v);
            plan.push_back(final_exchange);
        }
    }
    if (n > 0 && col != c2.colors)
        throw contract_error("reconfiguration invariant violated: replay misses the target");

    ReconfigureResult result;
    result.success = true;
    result.plan = ExchangePlan{std::move(plan), c1, c2, order};
    return result;
}

ReplayResult replay(const Graph& g, const Coloring& c, const ExchangePlan& plan) {
    ReplayResult result;
    result.trace.push_back(c);
    Coloring current = c;
    for (std::size_t i = 0; i < plan.exchanges.size(); ++i) {
        const KempeExchange& x = plan.exchanges[i];
        if (x.anchor < 0 || x.anchor >= g.vertex_count ||
            (current.colors[x.anchor] != x.color_a && current.colors[x.anchor] != x.color_b)) {
            result.failed_step = i;
            break;
        }
        current = apply_exchange(g, current, x);
        result.trace.push_back(current);
    }
    result.final = current;
    return result;
}

PlanVerdict verify_plan(const Graph& g, const Coloring& c1, const Coloring& c2,
                        const ExchangePlan& plan, const std::vector<int>* fixed) {
    PlanVerdict verdict;
    ReplayResult run = replay(g, c1, plan);
    verdict.replay_failure = run.failed_step;
    verdict.reaches_target = run.ok() && run.final.colors == c2.colors;

    verdict.all_proper = true;
    std::set<int> palette_seen;
    for (const Coloring& step : run.trace) {
        if (!is_proper(g, step)) verdict.all_proper = false;
        palette_seen.insert(step.colors.begin(), step.colors.end());
    }
    verdict.colors_used = static_cast<int>(palette_seen.size());

    std::vector<char> in_scope(g.vertex_count, 1);
    if (fixed) {
        bool untouched = true;
        for (int v : *fixed) {
            in_scope[v] = 0;
            for (const Coloring& step : run.trace)
                if (step.colors[v] != c1.colors[v]) untouched = false;
        }
        verdict.fixed_untouched = untouched;
    }

    std::set<int> baseline, received;
    for (int v = 0; v < g.vertex_count; ++v)
        if (in_scope[v]) {
            baseline.insert(c1.colors[v]);
            baseline.insert(c2.colors[v]);
        }
    for (std::size_t step = 1; step < run.trace.size(); ++step)
        for (int v = 0; v < g.vertex_count; ++v)
            if (in_scope[v] && run.trace[step].colors[v] != run.trace[step - 1].colors[v])
                received.insert(run.trace[step].colors[v]);
    for (int color : received)
        if (!baseline.count(color)) verdict.extra_colors.push_back(color);
    return verdict;
}

ExchangePlan compact_plan(const Graph& g, const ExchangePlan& plan) {
    ExchangePlan compacted = plan;
    compacted.exchanges.clear();
    Coloring current = plan.source;
    for (const KempeExchange& x : plan.exchanges) {
        if (current.colors[x.anchor] != x.color_a && current.colors[x.anchor] != x.color_b)
            continue;
        Coloring next = apply_exchange(g, current, x);
        if (next.colors == current.colors) continue;
        compacted.exchanges.push_back(x);
        current = std::move(next);
    }
    return compacted;
}

void write_plan(std::ostream& out, const ExchangePlan& plan) {
    out << "k " << plan.source.palette_size << '\n';
    for (const KempeExchange& x : plan.exchanges)
        out << "x " << x.color_a << ' ' << x.color_b << ' ' << x.anchor + 1 << '\n';
}

std::vector<KempeExchange> read_plan(std::istream& in, int& palette) {
    std::vector<KempeExchange> exchanges;
    std::string line;
    int line_no = 0;
    palette = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "k") {
            iss >> palette;
            if (!iss || palette < 1)
                throw input_error("line " + std::to_string(line_no) + ": bad palette line");
        } else if (tag == "x") {
            KempeExchange x;
            iss >> x.color_a >> x.color_b >> x.anchor;
            if (!iss || x.color_a == x.color_b || x.anchor < 1)
                throw input_error("line " + std::to_string(line_no) + ": bad exchange line");
            x.anchor -= 1;
            exchanges.push_back(x);
        } else {
            throw input_error("line " + std::to_string(line_no) + ": unknown line type '" +
                              tag + "'");
        }
    }
    if (palette == 0) throw input_error("plan is missing the 'k <palette>' line");
    for (std::size_t i = 0; i < exchanges.size(); ++i)
        if (exchanges[i].color_a < 1 || exchanges[i].color_a > palette ||
            exchanges[i].color_b < 1 || exchanges[i].color_b > palette)
            throw input_error("exchange " + std::to_string(i + 1) +
                              " uses a color outside palette 1.." + std::to_string(palette));
    return exchanges;
}

} // namespace kempe
