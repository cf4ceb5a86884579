#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mst {

// A computation would exceed a configured size cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested form is outside what the library supports.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Majorization fails, so no Rado certificate (and no protocol) exists.
struct no_certificate_error : std::runtime_error {
    std::size_t prefix_index;
    no_certificate_error(const std::string& what, std::size_t index)
        : std::runtime_error(what), prefix_index(index) {}
};

// Caps read from the environment on each call; defaults apply when unset or unparsable.
//   MSTATE_MAX_AMPLITUDES      default 2^24
//   MSTATE_MAX_TABLEAU_PAIRS   default 5e7
std::size_t max_amplitudes();
std::size_t max_tableau_pairs();

}  // namespace mst
