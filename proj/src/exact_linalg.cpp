#include "mstate/exact_linalg.hpp"

#include <stdexcept>

namespace mst {

std::vector<std::size_t> rref(RMatrix& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational pv = rows[r][c];
        for (auto& v : rows[r]) v /= pv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

RMatrix nullspace(RMatrix rows, std::size_t ncols) {
    for (auto& row : rows)
        if (row.size() != ncols) throw std::invalid_argument("nullspace: ragged matrix");
    auto piv = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : piv) is_pivot[c] = true;
    RMatrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mst
