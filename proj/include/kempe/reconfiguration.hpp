#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Explicit Kempe-exchange sequence transforming source into target.
struct ExchangePlan {
    std::vector<KempeExchange> exchanges;
    Coloring source;
    Coloring target;
    VertexOrdering ordering; // processing order the plan was built with
};

/// Either a plan or the vertex at which the palette ran out.
struct ReconfigureResult {
    bool success = false;
    ExchangePlan plan;
    int stuck_vertex = -1;

    explicit operator bool() const { return success; }
};

/// Builds a Kempe-exchange sequence from c1 to c2, processing vertices in the
/// given order. Every intermediate coloring of the replay is proper. Succeeds
/// whenever the palette exceeds the max pred over vertices that ever need a
/// fresh color; k > max pred over the whole ordering is always sufficient.
/// Requires proper colorings within palette k and an ordering covering V(G).
ReconfigureResult kempe_reconfigure(const Graph& g, const VertexOrdering& order,
                                    const Coloring& c1, const Coloring& c2, int k);

struct ReplayResult {
    Coloring final;
    std::vector<Coloring> trace; // starts with the input coloring
    std::optional<std::size_t> failed_step; // 0-based index of an unplayable exchange

    bool ok() const { return !failed_step.has_value(); }
};

/// Applies the plan's exchanges in order, recording every intermediate.
/// An exchange whose anchor sits in neither color class stops the replay and
/// is reported by index instead of applied.
ReplayResult replay(const Graph& g, const Coloring& c, const ExchangePlan& plan);

struct PlanVerdict {
    bool reaches_target = false;
    bool all_proper = false;
    std::optional<bool> fixed_untouched; // set when a fixed set was supplied
    int colors_used = 0;                 // distinct colors across the whole trace
    // Colors picked up outside the fixed set that appear in neither endpoint
    // coloring; the algorithm only ever introduces the smallest free color.
    std::vector<int> extra_colors;
    std::optional<std::size_t> replay_failure;

    bool ok() const {
        return reaches_target && all_proper && !replay_failure &&
               fixed_untouched.value_or(true);
    }
};

PlanVerdict verify_plan(const Graph& g, const Coloring& c1, const Coloring& c2,
                        const ExchangePlan& plan,
                        const std::vector<int>* fixed = nullptr);

/// Drops exchanges that do not change the working coloring. Off by default in
/// the CLI; plans produced by kempe_reconfigure contain no such exchanges.
ExchangePlan compact_plan(const Graph& g, const ExchangePlan& plan);

// Plan text: "k <palette>" then one "x <a> <b> <anchor>" line per exchange, 1-based.
void write_plan(std::ostream& out, const ExchangePlan& plan);
std::vector<KempeExchange> read_plan(std::istream& in, int& palette);

} // namespace kempe
