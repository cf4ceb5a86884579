#pragma once

#include <string>
#include <vector>

namespace mst::suite {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Numbered acceptance criteria 1 through 11, one check each.
std::vector<Check> acceptance_criteria();

// Published examples not already covered by the acceptance criteria.
std::vector<Check> published_examples();

}  // namespace mst::suite
