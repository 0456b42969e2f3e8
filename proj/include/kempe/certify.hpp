#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kempe/instance.hpp"
#include "kempe/oracle.hpp"

namespace kempe {

inline constexpr const char* kToolVersion = "0.1.0";

/// Connectedness certificate for one instance. subdeg_ub_value is absent for
/// formats without availability data; the two verdicts are independent (one
/// concerns the conflict graph, the other the reduced graph) and are never
/// derived from each other.
struct CertRecord {
    std::string instance_name;
    int timeslot_count = 0;
    int deg_value = 0;
    std::optional<int> subdeg_ub_value;
    bool connected_basic = false; // timeslot_count > deg_value
    std::optional<bool> connected_with_availability; // timeslot_count > subdeg_ub_value
};

struct ParseFailure {
    std::string path;
    std::string message;
};

enum class InstanceFormat { cctt, tim_itc, tim_mn, auto_detect };
enum class ReportFormat { csv, markdown };

struct Report {
    std::vector<CertRecord> records;
    std::vector<ParseFailure> failures; // listed in the output, never dropped
    ReportFormat format = ReportFormat::csv;
    std::string tool_version = kToolVersion;
    std::string timestamp; // empty when suppressed
};

CertRecord certify_instance(const UtpInstance& instance);

UtpInstance load_instance(const std::string& path, InstanceFormat hint);

/// Certifies each file independently; a file that fails to parse becomes a
/// failure entry instead of aborting the batch. Records keep input order.
Report certify(const std::vector<std::string>& paths, InstanceFormat hint,
               ReportFormat format, int jobs, bool with_timestamp);

std::string render_report(const Report& report);

/// The toy fixture reduced to its course cliques; used by the proof-table
/// subcommand and the acceptance suite.
BlockOrderTable toy_block_table();

} // namespace kempe
