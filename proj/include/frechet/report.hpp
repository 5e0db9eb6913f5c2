#ifndef FRECHET_REPORT_HPP
#define FRECHET_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>

namespace frechet {

/// One algorithm run, as emitted by the CLI in JSON or TSV.
struct RunReport {
    std::string algorithm;
    double value = 0.0;
    std::optional<double> eps;  // approximate algorithms only
    std::size_t probes = 0;     // decision / decider invocations
    std::size_t white_cells = 0;
    std::size_t switching_cells = 0;
    double wall_time_ms = 0.0;
};

std::string report_to_json(const RunReport& r);

/// Header then one row per report; an optional leading key column carries
/// sweep parameters (e.g. the instance size in a bench run).
std::string report_tsv_header(bool with_key = false, const std::string& key_name = "n");
std::string report_to_tsv_row(const RunReport& r, std::optional<std::size_t> key = std::nullopt);

}  // namespace frechet

#endif
