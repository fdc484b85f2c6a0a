#ifndef CASASIM_SIMCORE_HPP
#define CASASIM_SIMCORE_HPP

#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "casasim/envmodel.hpp"
#include "casasim/workload.hpp"

namespace casasim {

enum class ContainerState { cold_starting, idle, busy, shutting_down };

// A live container. Allocation is units * (base_cores, base_dram) of its
// profile; it serves at most units * concurrency_per_unit requests at once
// and only requests of its own function id.
struct Container {
    int container_id = 0;
    std::string function_id;
    int node_id = 0;
    int units = 1;
    ContainerState state = ContainerState::cold_starting;
    int active_requests = 0;
    std::vector<int> queued_requests;  // indices into the inflight vector
    double state_entered_at = 0.0;
    double cold_complete_at = -1.0;  // completion time of the last cold start
    double release_at = -1.0;        // resource release time once shutting down
};

struct NodeOccupancy {
    int cores_used = 0;
    int dram_used = 0;
};

// Snapshot of a cluster between epochs: live containers, per-node occupancy
// and every request that has arrived but not yet completed or violated.
// Container queues index into `inflight`.
struct ClusterState {
    double clock = 0.0;
    std::vector<NodeOccupancy> nodes;
    std::map<int, Container> containers;
    std::vector<Request> inflight;
    std::vector<int> inflight_container;  // serving/queued container id, -1 if none
    std::vector<double> inflight_started;  // execution start time, <0 if not running
    int next_container_id = 0;
};

// The optimizer's decision variable: per function id, where its containers
// sit and how many allocation units each one holds.
struct Placement {
    int node_id = 0;
    int units = 1;
};

struct Plan {
    std::map<std::string, std::vector<Placement>> placements;
    int epoch_index = 0;
};

// Orders placements within each id so structurally equal plans compare equal.
void canonicalize(Plan& plan);
bool plans_equal(const Plan& a, const Plan& b);

// The distribution currently live in a state (shutting-down containers
// excluded); what the next epoch inherits.
Plan plan_from_state(const ClusterState& state);

struct EpochMetrics {
    double carbon = 0.0;        // g
    double cost = 0.0;          // currency, monetary part only
    double water_carbon = 0.0;  // g
    double energy = 0.0;        // kWh
    std::map<std::string, long> violations;
    std::map<std::string, long> totals;
    std::map<std::string, double> slo_rates;
    double slo_average = 0.0;  // mean over ids with totals > 0
    double avg_load = 0.0;
    double decision_time = 0.0;  // filled by the harness
};

// How busy allocated cores count toward node power, per container state.
// Within a busy container, cores actively serving count at 1.0 and the
// remaining allocation idles.
struct EngineConfig {
    int concurrency_per_unit = 1;
    double idle_util = 0.1;
    double startup_util = 1.0;
    double shutdown_util = 0.5;
};

enum class RouteKind { assigned, queued, no_container };

struct RoutingOutcome {
    RouteKind kind = RouteKind::no_container;
    int container_id = -1;
};

// Fate of one request, reported when it completes or misses its deadline.
struct Resolution {
    std::string function_id;
    int epoch = 0;
    bool completed = false;
};

// Power/carbon/cost totals over one accounting window.
struct WindowAccount {
    double carbon = 0.0;
    double cost = 0.0;
    double water_carbon = 0.0;
    double energy_kwh = 0.0;
    double load_integral = 0.0;  // time integral of cluster load fraction
    double duration = 0.0;
};

// Checks that a plan can be applied on top of `state`: per node, kept and
// resized containers, new cold starts, and shutting-down containers that
// still hold resources must all fit simultaneously.
bool plan_fits(const ClusterState& state, const Plan& plan, const ClusterSpec& cluster,
               const ProfileSet& profiles);

// Discrete-event simulation of a FaaS cluster. Strictly single-threaded and
// deterministic; copy the underlying ClusterState to branch timelines.
class SimulationEngine {
public:
    SimulationEngine(ClusterState state, const ClusterSpec& cluster,
                     const EnvironmentSeries& env, const ProfileSet& profiles,
                     EngineConfig config = {});

    // Epoch-boundary plan transition at the current clock. Matching is per
    // (function_id, node): kept containers resize in place with no cold
    // start, surplus containers begin shutdown, new ones cold-start with
    // their node's aggregated image footprint. Throws on capacity overflow.
    void apply_plan(const Plan& plan);

    // Injects arrival events; times must be >= clock and nondecreasing.
    void add_arrivals(const std::vector<Request>& arrivals);

    // Routes one request at the current clock: prefer the container of its
    // id with the most free slots, otherwise enqueue on the shortest queue
    // and try autoscaling that node; with no containers the request can only
    // wait out its deadline.
    RoutingOutcome route_request(const Request& request);

    // Grows the container with the largest active+queued count on the node
    // by one unit at a time until the node is full or no queues remain.
    void autoscale(int node_id);

    // Processes every event strictly before t_end, then advances the clock
    // (and power integration) to exactly t_end.
    WindowAccount run_until(double t_end);

    // Runs until every pending request has resolved. No new arrivals.
    WindowAccount drain();

    const ClusterState& state() const { return state_; }
    ClusterState snapshot() const;

    // Resolutions accumulated since the last call.
    std::vector<Resolution> take_resolutions();

    // Per-function counts of this engine's resolved requests so far.
    const std::map<std::string, long>& completed_counts() const { return completed_; }
    const std::map<std::string, long>& violated_counts() const { return violated_; }

    int live_container_count() const;

    // Piecewise-constant power timeline (one sample per accounting segment),
    // populated only when enabled. Test hook for energy cross-checks.
    void record_power_samples(bool on) { record_samples_ = on; }
    const std::vector<PowerSample>& power_samples() const { return samples_; }

private:
    enum EventKind { ev_cold_complete = 0, ev_release = 1, ev_complete = 2,
                     ev_arrival = 3, ev_deadline = 4 };

    struct Event {
        double time;
        int kind;
        long seq;
        int subject;  // container_id or request index
        bool operator>(const Event& o) const {
            if (time != o.time) return time > o.time;
            if (kind != o.kind) return kind > o.kind;
            return seq > o.seq;
        }
    };

    void schedule(double time, int kind, int subject);
    void advance_to(double t);
    void process(const Event& ev);

    void handle_cold_complete(int container_id, double now);
    void handle_release(int container_id, double now);
    void handle_complete(int request_idx, double now);
    void handle_arrival(int request_idx, double now);
    void handle_deadline(int request_idx, double now);

    void begin_shutdown(Container& c, double now, std::vector<int>& orphaned);
    void admit(Container& c, int request_idx, double now);
    void admit_from_queue(Container& c, double now);
    void resolve(int request_idx, bool completed, double now);
    void check_node(int node_id) const;

    const FunctionProfile& profile(const std::string& id) const;
    int capacity_of(const Container& c) const;
    double node_usage(int node_id) const;
    double current_p_it() const;
    double current_load_numerator() const;

    ClusterState state_;
    ClusterSpec cluster_;
    EnvironmentSeries env_;
    ProfileSet profiles_;
    EngineConfig config_;

    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> events_;
    long next_seq_ = 0;
    std::map<std::string, std::vector<int>> id_containers_;

    WindowAccount account_;
    std::vector<Resolution> resolutions_;
    std::map<std::string, long> completed_;
    std::map<std::string, long> violated_;
    bool record_samples_ = false;
    std::vector<PowerSample> samples_;
};

// Applies the plan at state.clock, feeds the arrivals through one epoch
// window, then resolves stragglers past the window boundary so the metrics
// cover every arrival. The returned state is the snapshot taken exactly at
// the window end.
std::pair<EpochMetrics, ClusterState> simulate_epoch(
    const ClusterState& state, const Plan& plan, const std::vector<Request>& arrivals,
    const ClusterSpec& cluster, const EnvironmentSeries& env, const ProfileSet& profiles,
    const EngineConfig& config = {});

// violations / totals for one id; totals must be nonzero.
double violation_rate(const EpochMetrics& metrics, const std::string& function_id);

// Builds an empty cluster state sized for the spec.
ClusterState make_initial_state(const ClusterSpec& cluster);

}  // namespace casasim

#endif
