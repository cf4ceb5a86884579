#pragma once

#include <optional>

#include "mstate/schmidt.hpp"

namespace mst {

// tensor(dst, cat) majorizes tensor(src, cat). Throws std::invalid_argument when src and dst
// differ in length or total.
bool catalyzes(const SchmidtTuple& src, const SchmidtTuple& dst, const SchmidtTuple& cat);

// tensor_power(dst, k) majorizes tensor_power(src, k). Throws resource_error when d^k exceeds
// the amplitude cap.
bool k_copy_comparable(const SchmidtTuple& src, const SchmidtTuple& dst, unsigned k);

// First catalyst on the grid of cat_dim-tuples with entries in {1/N, 2/N, ...} summing to 1,
// visited in lexicographic order of the descending tuple starting from the most uniform one.
// Throws std::invalid_argument when dst already majorizes src.
std::optional<SchmidtTuple> find_catalyst(const SchmidtTuple& src, const SchmidtTuple& dst, int cat_dim, long grid_den);

}  // namespace mst
