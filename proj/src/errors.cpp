#include "mstate/errors.hpp"

#include <cstdlib>
#include <string>

namespace mst {

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        std::size_t pos = 0;
        unsigned long long n = std::stoull(v, &pos);
        if (pos != std::string(v).size() || n == 0) return fallback;
        return static_cast<std::size_t>(n);
    } catch (...) {
        return fallback;
    }
}

}  // namespace

std::size_t max_amplitudes() { return env_size("MSTATE_MAX_AMPLITUDES", std::size_t{1} << 24); }

std::size_t max_tableau_pairs() { return env_size("MSTATE_MAX_TABLEAU_PAIRS", 50'000'000); }

}  // namespace mst
