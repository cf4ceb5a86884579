#include "mstate/catalysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "mstate/errors.hpp"

namespace mst {

bool catalyzes(const SchmidtTuple& src, const SchmidtTuple& dst, const SchmidtTuple& cat) {
    if (src.size() != dst.size()) throw std::invalid_argument("catalyzes: src and dst differ in length");
    return majorizes(tensor(dst, cat), tensor(src, cat));
}

bool k_copy_comparable(const SchmidtTuple& src, const SchmidtTuple& dst, unsigned k) {
    if (k == 0) throw std::invalid_argument("k_copy_comparable: k must be positive");
    if (src.size() != dst.size()) throw std::invalid_argument("k_copy_comparable: src and dst differ in length");
    std::size_t total = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (total > max_amplitudes() / std::max<std::size_t>(src.size(), 1))
            throw resource_error("k_copy_comparable: d^k exceeds the amplitude cap");
        total *= src.size();
    }
    return majorizes(tensor_power(dst, k), tensor_power(src, k));
}

namespace {

// Descending tuples of positive integers summing to `left`, each at most `cap`.
bool search(std::vector<long>& parts, int slots, long left, long cap, long den, const SchmidtTuple& src,
            const SchmidtTuple& dst, std::optional<SchmidtTuple>& found) {
    if (slots == 0) {
        if (left != 0) return false;
        std::vector<Rational> v;
        for (long p : parts) v.emplace_back(p, den);
        for (auto& x : v) x.canonicalize();
        SchmidtTuple cat(std::move(v));
        if (catalyzes(src, dst, cat)) {
            found = cat;
            return true;
        }
        return false;
    }
    // smallest admissible first part keeps the remaining slots fillable
    const long lo = (left + slots - 1) / slots;
    for (long p = lo; p <= std::min(cap, left - (slots - 1)); ++p) {
        parts.push_back(p);
        if (search(parts, slots - 1, left - p, p, den, src, dst, found)) return true;
        parts.pop_back();
    }
    return false;
}

}  // namespace

std::optional<SchmidtTuple> find_catalyst(const SchmidtTuple& src, const SchmidtTuple& dst, int cat_dim, long grid_den) {
    if (cat_dim < 1 || grid_den < cat_dim) throw std::invalid_argument("find_catalyst: need 1 <= cat_dim <= grid_den");
    if (majorizes(dst, src)) throw std::invalid_argument("find_catalyst: dst already majorizes src");
    std::optional<SchmidtTuple> found;
    std::vector<long> parts;
    search(parts, cat_dim, grid_den, grid_den, grid_den, src, dst, found);
    return found;
}

}  // namespace mst
