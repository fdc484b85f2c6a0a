#include "casasim/envmodel.hpp"

#include <cmath>
#include <fstream>

#include "casasim/util.hpp"

namespace casasim {

using detail::parse_double;
using detail::parse_long;
using detail::split_csv_line;
using detail::trim;

int hour_of(double t_seconds) {
    long h = static_cast<long>(std::floor(t_seconds / 3600.0));
    return static_cast<int>(((h % 24) + 24) % 24);
}

double node_power(const NodeSpec& spec, double usage) {
    if (usage < 0.0 || usage > static_cast<double>(spec.total_cores))
        throw SimulationError("node " + std::to_string(spec.node_id) + ": usage " +
                              std::to_string(usage) + " outside [0, " +
                              std::to_string(spec.total_cores) + "]");
    const auto& c = spec.power_coeffs;
    return (((c[0] * usage + c[1]) * usage + c[2]) * usage + c[3]) * usage + c[4];
}

void validate_node(const NodeSpec& spec) {
    if (spec.total_cores <= 0) throw ConfigError("node cores must be > 0");
    if (spec.total_dram <= 0) throw ConfigError("node dram must be > 0");
    if (spec.bandwidth <= 0.0) throw ConfigError("node bandwidth must be > 0");
    if (spec.hop_count < 0) throw ConfigError("hop count must be >= 0");
    double prev = -1.0;
    for (int u = 0; u <= spec.total_cores; ++u) {
        double p = node_power(spec, static_cast<double>(u));
        if (p < 0.0)
            throw ConfigError("power coefficients give negative power at " +
                              std::to_string(u) + " cores");
        if (p < prev)
            throw ConfigError("power coefficients give decreasing power at " +
                              std::to_string(u) + " cores");
        prev = p;
    }
}

double it_power(const ClusterSpec& cluster, const std::vector<double>& usages) {
    if (usages.size() != cluster.nodes.size())
        throw SimulationError("usage vector length " + std::to_string(usages.size()) +
                              " != node count " + std::to_string(cluster.nodes.size()));
    double total = cluster.storage_power + cluster.network_power;
    for (size_t i = 0; i < usages.size(); ++i)
        total += node_power(cluster.nodes[i], usages[i]);
    return total;
}

double cooling_power(double p_it, int hour, const EnvironmentSeries& env) {
    if (hour < 0 || hour > 23)
        throw SimulationError("hour " + std::to_string(hour) + " outside [0, 23]");
    return env.cooling_eff[static_cast<size_t>(hour)] * p_it;
}

namespace {

int interval_hour(double start_s, double dt) {
    if (dt <= 0.0) throw SimulationError("interval dt must be > 0");
    long h_start = static_cast<long>(std::floor(start_s / 3600.0));
    double boundary = static_cast<double>(h_start + 1) * 3600.0;
    if (start_s + dt > boundary)
        throw SimulationError("interval [" + std::to_string(start_s) + ", " +
                              std::to_string(start_s + dt) + ") crosses an hour boundary");
    return hour_of(start_s);
}

}  // namespace

double interval_carbon(double p_it, double p_cooling, double start_s, double dt,
                       const EnvironmentSeries& env) {
    int hour = interval_hour(start_s, dt);
    double kwh = (p_it + p_cooling) * dt / 3600.0 / 1000.0;
    return env.carbon_intensity[static_cast<size_t>(hour)] * kwh;
}

IntervalCost interval_cost(double p_it, double p_cooling, double start_s, double dt,
                           const EnvironmentSeries& env) {
    int hour = interval_hour(start_s, dt);
    IntervalCost out;
    out.money = env.energy_price[static_cast<size_t>(hour)] *
                (p_it + p_cooling) * dt / 3600.0 / 1000.0;
    out.water_carbon = env.water_factor[static_cast<size_t>(hour)] *
                       p_cooling * dt / 3600.0 / 1000.0;
    return out;
}

double cold_start_latency(const NodeSpec& spec, double queued_image_mb,
                          double switch_delay) {
    if (queued_image_mb < 0.0) throw SimulationError("queued image size must be >= 0");
    return queued_image_mb / spec.bandwidth + spec.hop_count * switch_delay;
}

EnvironmentSeries load_environment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": empty file, header row required");
    if (trim(line) != "hour,ci_g_per_kwh,price_per_kwh,cooling_eff,water_factor")
        throw ConfigError(path + ":1: unexpected header '" + trim(line) + "'");

    EnvironmentSeries out;
    std::array<bool, 24> seen{};
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::string ctx = path + ":" + std::to_string(lineno);
        auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw ConfigError(ctx + ": expected 5 fields, got " + std::to_string(fields.size()));
        long hour = parse_long(fields[0], ctx);
        if (hour < 0 || hour > 23) throw ConfigError(ctx + ": hour outside [0, 23]");
        size_t h = static_cast<size_t>(hour);
        if (seen[h]) throw ConfigError(ctx + ": duplicate hour " + std::to_string(hour));
        seen[h] = true;
        out.carbon_intensity[h] = parse_double(fields[1], ctx);
        out.energy_price[h] = parse_double(fields[2], ctx);
        out.cooling_eff[h] = parse_double(fields[3], ctx);
        out.water_factor[h] = parse_double(fields[4], ctx);
        if (out.carbon_intensity[h] < 0 || out.energy_price[h] < 0 ||
            out.cooling_eff[h] < 0 || out.water_factor[h] < 0)
            throw ConfigError(ctx + ": negative environment value");
    }
    for (int h = 0; h < 24; ++h)
        if (!seen[static_cast<size_t>(h)])
            throw ConfigError(path + ": missing hour " + std::to_string(h));
    return out;
}

}  // namespace casasim
