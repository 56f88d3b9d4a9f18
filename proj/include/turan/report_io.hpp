#ifndef TURAN_REPORT_IO_HPP
#define TURAN_REPORT_IO_HPP

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "turan/baseline.hpp"
#include "turan/estimator.hpp"
#include "turan/oracle.hpp"
#include "turan/shadow.hpp"

namespace turan
{

using Json = nlohmann::ordered_json;

/// Graph-level facts that accompany every serialized report.
struct GraphSummary
{
    std::string input;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint32_t alpha = 0;
};

/// Keys of a serialized estimate, in output order. Timing keys end in "_ms".
inline const std::vector<std::string>& estimate_keys()
{
    static const std::vector<std::string> keys{
        "command", "input", "k", "estimate", "t", "successes", "success_ratio", "gamma", "total_weight",
        "exact_offset", "shadow_sets", "representation_size", "alpha", "n", "m", "time_shadow_ms",
        "time_sample_ms", "seed"};
    return keys;
}

inline Json to_json(std::string_view command, const GraphSummary& gs, const EstimateReport& r)
{
    Json j;
    j["command"] = command;
    j["input"] = gs.input;
    j["k"] = r.k;
    j["estimate"] = r.estimate;
    j["t"] = r.samples;
    j["successes"] = r.successes;
    j["success_ratio"] = r.success_ratio;
    j["gamma"] = r.gamma;
    j["total_weight"] = r.total_weight;
    j["exact_offset"] = r.exact_offset;
    j["shadow_sets"] = r.shadow_set_count;
    j["representation_size"] = r.representation_size;
    j["alpha"] = gs.alpha;
    j["n"] = gs.n;
    j["m"] = gs.m;
    j["time_shadow_ms"] = r.time_shadow.count();
    j["time_sample_ms"] = r.time_sample.count();
    j["seed"] = r.seed;
    return j;
}

inline Json to_json(const GraphSummary& gs, const ExactCount& c)
{
    Json j;
    j["command"] = "exact";
    j["input"] = gs.input;
    j["k"] = c.k;
    j["count"] = c.count;
    j["alpha"] = gs.alpha;
    j["n"] = gs.n;
    j["m"] = gs.m;
    j["time_ms"] = std::chrono::duration<double, std::milli>(c.elapsed).count();
    return j;
}

inline Json to_json(const GraphSummary& gs, int k, const ShadowStats& st)
{
    Json j;
    j["command"] = "stats";
    j["input"] = gs.input;
    j["k"] = k;
    j["set_count"] = st.set_count;
    j["representation_size"] = st.representation_size;
    j["max_set_size"] = st.max_set_size;
    Json hist = Json::object();
    for (std::size_t ell = 0; ell < st.ell_histogram.size(); ++ell)
        if (st.ell_histogram[ell] > 0) hist[std::to_string(ell)] = st.ell_histogram[ell];
    j["ell_histogram"] = hist;
    j["depth_reached"] = st.depth_reached;
    j["alpha"] = gs.alpha;
    j["n"] = gs.n;
    j["m"] = gs.m;
    j["size_ratio"] = gs.m > 0 ? static_cast<double>(st.representation_size) / static_cast<double>(gs.m) : 0.0;
    return j;
}

inline Json to_json(const GraphSummary& gs, const BaselineReport& r)
{
    Json j;
    j["command"] = "baseline";
    j["input"] = gs.input;
    j["k"] = r.k;
    j["p"] = r.p;
    j["estimate"] = r.estimate;
    j["sampled_edges"] = r.sampled_edges;
    j["sampled_count"] = r.sampled_count;
    j["n"] = gs.n;
    j["m"] = gs.m;
    j["time_ms"] = r.elapsed.count();
    j["seed"] = r.seed;
    return j;
}

/// Removes every "*_ms" key; what remains is reproducible across runs.
inline Json without_timings(Json j)
{
    for (auto it = j.begin(); it != j.end();) {
        if (std::string_view(it.key()).ends_with("_ms")) it = j.erase(it);
        else ++it;
    }
    return j;
}

/// Shortest round-trip text for a double, '.' decimal point.
inline std::string format_number(double v)
{
    return Json(v).dump();
}

/// Writes a flat JSON object as a CSV row (header row first when asked).
/// Nested values are emitted as their JSON text, quoted.
inline void write_csv_row(std::ostream& os, const Json& row, bool header)
{
    if (header) {
        bool first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!first) os << ',';
            os << it.key();
            first = false;
        }
        os << '\n';
    }
    bool first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
        if (!first) os << ',';
        first = false;
        const Json& v = it.value();
        if (v.is_string()) {
            const auto s = v.get<std::string>();
            if (s.find_first_of(",\"\n") == std::string::npos) {
                os << s;
            } else {
                os << '"';
                for (char c : s) os << (c == '"' ? "\"\"" : std::string(1, c));
                os << '"';
            }
        } else if (v.is_structured()) {
            std::string text = v.dump();
            os << '"';
            for (char c : text) os << (c == '"' ? "\"\"" : std::string(1, c));
            os << '"';
        } else {
            os << v.dump();
        }
    }
    os << '\n';
}

} // namespace turan

#endif // TURAN_REPORT_IO_HPP
