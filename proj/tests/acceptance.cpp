// Final gate: runs the eight structure checks at full scope and prints one
// line per criterion. Exits nonzero if any fails.
#include <iostream>

#include "circlex/checks.hpp"

int main() {
    bool all = true;
    for (const circlex::CheckResult& r : circlex::run_structure_checks(20, {}, 4)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail << ")"
                  << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
