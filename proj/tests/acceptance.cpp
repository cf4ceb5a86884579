#include <iostream>

#include "suite.hpp"

int main() {
    int failed = 0;
    for (const auto& c : mst::suite::acceptance_criteria()) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.name << "  [" << c.detail << "]\n";
        failed += !c.pass;
    }
    std::cout << failed << " criteria failed\n";
    return failed == 0 ? 0 : 1;
}
