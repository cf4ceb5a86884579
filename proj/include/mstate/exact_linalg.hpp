#pragma once

#include <vector>

#include "mstate/rational.hpp"

namespace mst {

using RMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& rows, std::size_t ncols);

// Basis of {x : rows * x = 0}; one vector per free column.
RMatrix nullspace(RMatrix rows, std::size_t ncols);

}  // namespace mst
