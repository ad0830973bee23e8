#include <iostream>

#include "core/selftest.hpp"

int main() {
    auto results = cuthex::run_acceptance(&std::cout);
    bool ok = cuthex::all_passed(results);
    std::cout << (ok ? "ALL CHECKS PASSED" : "CHECKS FAILED") << std::endl;
    return ok ? 0 : 1;
}
