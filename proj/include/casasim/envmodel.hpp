#ifndef CASASIM_ENVMODEL_HPP
#define CASASIM_ENVMODEL_HPP

#include <array>
#include <string>
#include <vector>

namespace casasim {

// One compute node. Power follows a quartic in the number of cores in use:
// P(u) = A u^4 + B u^3 + C u^2 + D u + E. Coefficients must give a
// nonnegative, nondecreasing curve over [0, total_cores]; validate_node
// checks that by sampling at 1-core steps.
struct NodeSpec {
    int node_id = 0;
    int total_cores = 128;
    int total_dram = 65536;                          // MB
    std::array<double, 5> power_coeffs{0, 0, 0, 0, 0};  // A, B, C, D, E
    double bandwidth = 1000.0;                       // MB/s from persistent storage
    int hop_count = 0;                               // switch hops to storage
};

struct ClusterSpec {
    std::vector<NodeSpec> nodes;
    double storage_power = 0.0;     // W, fixed
    double network_power = 0.0;     // W, fixed
    double switch_delay = 0.0;      // s per hop
    double epoch_length = 900.0;    // s
    double shutdown_duration = 15.0;  // s a container holds resources while stopping
};

// Hourly grid and facility data for one 24-hour cycle. Runs longer than a
// day wrap around.
struct EnvironmentSeries {
    std::array<double, 24> carbon_intensity{};  // gCO2/kWh
    std::array<double, 24> energy_price{};      // currency/kWh
    std::array<double, 24> cooling_eff{};       // P_cooling = eff * P_it
    std::array<double, 24> water_factor{};      // gCO2/kWh applied to cooling energy
};

struct PowerSample {
    double timestamp = 0.0;
    double p_it = 0.0;       // W
    double p_cooling = 0.0;  // W
};

// Hour-of-day for an absolute simulation time.
int hour_of(double t_seconds);

// Throws if the coefficients produce negative or decreasing power anywhere
// on [0, total_cores].
void validate_node(const NodeSpec& spec);

// P(usage) for one node; usage must lie in [0, total_cores].
double node_power(const NodeSpec& spec, double usage);

// Sum of node powers plus the fixed storage and network draw. `usages` must
// hold one entry per node.
double it_power(const ClusterSpec& cluster, const std::vector<double>& usages);

double cooling_power(double p_it, int hour, const EnvironmentSeries& env);

// Grams of CO2 for a constant-power interval starting at `start_s` lasting
// `dt` seconds. The interval must not cross an hour boundary; callers split.
double interval_carbon(double p_it, double p_cooling, double start_s, double dt,
                       const EnvironmentSeries& env);

// Monetary cost plus water-related carbon for the same kind of interval.
// The water term is reported separately, never folded into the money.
struct IntervalCost {
    double money = 0.0;
    double water_carbon = 0.0;  // g
};
IntervalCost interval_cost(double p_it, double p_cooling, double start_s, double dt,
                           const EnvironmentSeries& env);

// Aggregate image footprint of every container cold-starting on the node at
// once shares the node's bandwidth.
double cold_start_latency(const NodeSpec& spec, double queued_image_mb,
                          double switch_delay);

// CSV header `hour,ci_g_per_kwh,price_per_kwh,cooling_eff,water_factor`,
// exactly one row per hour 0..23.
EnvironmentSeries load_environment(const std::string& path);

}  // namespace casasim

#endif
