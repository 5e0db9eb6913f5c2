#include "frechet/report.hpp"

#include <sstream>

#include "frechet/curve_io.hpp"
#include "json.hpp"

namespace frechet {

std::string report_to_json(const RunReport& r) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["value"] = r.value;
    if (r.eps)
        j["eps"] = *r.eps;
    else
        j["eps"] = nullptr;
    j["probes"] = r.probes;
    j["white_cells"] = r.white_cells;
    j["switching_cells"] = r.switching_cells;
    j["wall_time_ms"] = r.wall_time_ms;
    return j.dump(2);
}

std::string report_tsv_header(bool with_key, const std::string& key_name) {
    std::ostringstream out;
    if (with_key) out << key_name << "\t";
    out << "algorithm\tvalue\teps\tprobes\twhite_cells\tswitching_cells\twall_time_ms";
    return out.str();
}

std::string report_to_tsv_row(const RunReport& r, std::optional<std::size_t> key) {
    std::ostringstream out;
    if (key) out << *key << "\t";
    out << r.algorithm << "\t" << format_double(r.value) << "\t"
        << (r.eps ? format_double(*r.eps) : std::string("-")) << "\t" << r.probes << "\t"
        << r.white_cells << "\t" << r.switching_cells << "\t" << format_double(r.wall_time_ms);
    return out.str();
}

}  // namespace frechet
