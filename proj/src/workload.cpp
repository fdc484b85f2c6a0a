#include "casasim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "casasim/util.hpp"

namespace casasim {

using detail::parse_double;
using detail::parse_long;
using detail::split_csv_line;
using detail::trim;

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    return in;
}

void expect_header(const std::string& got, const std::string& want, const std::string& path) {
    if (trim(got) != want)
        throw ConfigError(path + ":1: expected header '" + want + "', got '" + trim(got) + "'");
}

}  // namespace

ProfileSet load_function_profiles(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": empty file, header row required");
    expect_header(line, "function_id,avg_exec_s,image_mb", path);

    ProfileSet out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::string ctx = path + ":" + std::to_string(lineno);
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw ConfigError(ctx + ": expected 3 fields, got " + std::to_string(fields.size()));

        FunctionProfile p;
        p.function_id = fields[0];
        p.avg_exec_time = parse_double(fields[1], ctx);
        p.image_size = parse_double(fields[2], ctx);
        if (p.function_id.empty()) throw ConfigError(ctx + ": empty function_id");
        if (p.avg_exec_time <= 0.0) throw ConfigError(ctx + ": avg_exec_s must be > 0");
        if (p.image_size <= 0.0) throw ConfigError(ctx + ": image_mb must be > 0");
        if (!out.emplace(p.function_id, p).second)
            throw ConfigError(ctx + ": duplicate function_id '" + p.function_id + "'");
    }
    return out;
}

ArrivalSchedule load_trace(const std::string& path, const ProfileSet& profiles) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": empty file, header row required");
    expect_header(line, "epoch,function_id,invocations", path);

    ArrivalSchedule out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::string ctx = path + ":" + std::to_string(lineno);
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw ConfigError(ctx + ": expected 3 fields, got " + std::to_string(fields.size()));

        long epoch = parse_long(fields[0], ctx);
        const std::string& id = fields[1];
        long count = parse_long(fields[2], ctx);
        if (epoch < 0) throw ConfigError(ctx + ": negative epoch");
        if (count < 0) throw ConfigError(ctx + ": negative invocation count");
        if (!profiles.count(id))
            throw ConfigError(ctx + ": unknown function_id '" + id + "'");
        out.entries[static_cast<int>(epoch)][id] += count;
        out.horizon = std::max(out.horizon, static_cast<int>(epoch) + 1);
    }
    return out;
}

ArrivalSchedule scale_intensity(const ArrivalSchedule& schedule, double factor) {
    if (factor <= 0.0) throw ConfigError("intensity factor must be > 0");
    ArrivalSchedule out;
    out.horizon = schedule.horizon;
    for (const auto& [epoch, counts] : schedule.entries) {
        for (const auto& [id, count] : counts) {
            // half-up
            long scaled = static_cast<long>(std::floor(static_cast<double>(count) * factor + 0.5));
            out.entries[epoch][id] = scaled;
        }
    }
    return out;
}

EpochInput epoch_forecast(const ArrivalSchedule& schedule, int epoch,
                          const ForecastParams& params) {
    if (epoch < 0 || epoch >= schedule.horizon)
        throw ConfigError("epoch " + std::to_string(epoch) + " out of range, horizon " +
                          std::to_string(schedule.horizon));
    EpochInput out;
    out.epoch_index = epoch;
    out.slo_constraint = params.slo_constraint;
    out.laxity = params.laxity;
    out.iteration_ceiling = params.iteration_ceiling;
    out.local_search_limit = params.local_search_limit;
    auto e = schedule.entries.find(epoch);
    if (e != schedule.entries.end()) {
        for (const auto& [id, count] : e->second) {
            if (count <= 0) continue;
            out.function_ids.push_back(id);  // map iteration is already sorted
            out.intensities[id] = count;
        }
    }
    return out;
}

Request assign_deadline(Request request, const FunctionProfile& profile, double laxity) {
    if (laxity <= 0.0) throw ConfigError("laxity must be > 0");
    request.deadline = request.arrival + laxity * profile.avg_exec_time;
    return request;
}

std::vector<Request> synthesize_arrivals(const EpochInput& input,
                                         const ProfileSet& profiles,
                                         double epoch_length, std::uint64_t seed) {
    if (epoch_length <= 0.0) throw ConfigError("epoch_length must be > 0");
    std::mt19937_64 rng(seed);
    std::vector<Request> out;
    for (const std::string& id : input.function_ids) {
        auto p = profiles.find(id);
        if (p == profiles.end())
            throw ConfigError("no profile for function_id '" + id + "'");
        long n = input.intensities.at(id);
        for (long i = 0; i < n; ++i) {
            Request r;
            r.function_id = id;
            r.arrival = detail::uniform01(rng()) * epoch_length;
            r.epoch = input.epoch_index;
            out.push_back(assign_deadline(std::move(r), p->second, input.laxity));
        }
    }
    std::sort(out.begin(), out.end(), [](const Request& a, const Request& b) {
        if (a.arrival != b.arrival) return a.arrival < b.arrival;
        return a.function_id < b.function_id;
    });
    return out;
}

}  // namespace casasim
