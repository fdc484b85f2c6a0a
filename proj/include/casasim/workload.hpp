#ifndef CASASIM_WORKLOAD_HPP
#define CASASIM_WORKLOAD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace casasim {

// Static description of one function type: how long a request runs, how big
// the container image is, and the base allocation one container unit claims.
struct FunctionProfile {
    std::string function_id;
    double avg_exec_time = 0.0;  // seconds
    double image_size = 0.0;     // MB fetched on every cold start
    int base_cores = 2;
    int base_dram = 150;         // MB
};

using ProfileSet = std::map<std::string, FunctionProfile>;

// Per-epoch invocation counts, epoch index -> function id -> count.
// Missing entries mean zero.
struct ArrivalSchedule {
    int horizon = 0;
    std::map<int, std::map<std::string, long>> entries;

    long count(int epoch, const std::string& id) const {
        auto e = entries.find(epoch);
        if (e == entries.end()) return 0;
        auto f = e->second.find(id);
        return f == e->second.end() ? 0 : f->second;
    }
};

// Everything a policy needs to plan one epoch.
struct EpochInput {
    int epoch_index = 0;
    std::vector<std::string> function_ids;     // nonzero-intensity ids, sorted
    std::map<std::string, long> intensities;   // per id request count
    double slo_constraint = 0.05;              // allowed violation fraction
    double laxity = 10.0;                      // deadline = arrival + laxity * avg_exec
    int iteration_ceiling = 500;               // optimizer step budget
    int local_search_limit = 5;                // consecutive failures before blacklisting
};

enum class RequestStatus { pending, running, completed, violated };

// One invocation. Times are absolute simulation seconds; the simulator fills
// wait, cold_start, finish and status as the request moves through its life.
struct Request {
    std::string function_id;
    double arrival = 0.0;
    double deadline = 0.0;
    double wait = 0.0;
    double cold_start = 0.0;
    double finish = -1.0;  // <0 until completed
    RequestStatus status = RequestStatus::pending;
    int epoch = 0;  // epoch the request arrived in, for late attribution
};

// CSV header `function_id,avg_exec_s,image_mb`. Duplicate ids and
// non-positive numeric fields are rejected with the offending line number.
ProfileSet load_function_profiles(const std::string& path);

// CSV header `epoch,function_id,invocations`. Rows referencing ids absent
// from `profiles` or carrying negative counts are rejected. Duplicate
// (epoch,id) rows accumulate.
ArrivalSchedule load_trace(const std::string& path, const ProfileSet& profiles);

// Multiplies every count by `factor`, rounding half-up.
ArrivalSchedule scale_intensity(const ArrivalSchedule& schedule, double factor);

// Parameters copied through into each EpochInput.
struct ForecastParams {
    double slo_constraint = 0.05;
    double laxity = 10.0;
    int iteration_ceiling = 500;
    int local_search_limit = 5;
};

// Extracts epoch e: ids with nonzero count, sorted, plus their counts.
EpochInput epoch_forecast(const ArrivalSchedule& schedule, int epoch,
                          const ForecastParams& params);

// Sets deadline = arrival + laxity * avg_exec_time.
Request assign_deadline(Request request, const FunctionProfile& profile, double laxity);

// Draws the stated number of arrivals per id uniformly over
// [0, epoch_length), assigns deadlines, and returns them sorted by arrival
// time. Fully determined by `seed`.
std::vector<Request> synthesize_arrivals(const EpochInput& input,
                                         const ProfileSet& profiles,
                                         double epoch_length, std::uint64_t seed);

}  // namespace casasim

#endif
