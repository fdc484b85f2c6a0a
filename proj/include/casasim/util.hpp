#ifndef CASASIM_UTIL_HPP
#define CASASIM_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace casasim {

// Thrown by all loaders/validators; message carries file/line or key context.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class SimulationError : public std::logic_error {
public:
    explicit SimulationError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

std::vector<std::string> split_csv_line(const std::string& line);
std::string trim(const std::string& s);

// Strict numeric parses: the whole field must be consumed.
double parse_double(const std::string& field, const std::string& context);
long parse_long(const std::string& field, const std::string& context);

// splitmix64; used to derive independent per-epoch seeds from one run seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1) from 53 random bits, identical on every platform.
double uniform01(std::uint64_t word);

}  // namespace detail
}  // namespace casasim

#endif
