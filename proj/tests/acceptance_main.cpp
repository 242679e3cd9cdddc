// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <cstring>
#include <iostream>

#include "dtc/acceptance.hpp"

int main(int argc, char** argv) {
    dtc::AcceptanceOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            options.quick = true;
        } else if (std::strcmp(argv[i], "--exhaustive") == 0) {
            options.exhaustive = true;
        } else {
            std::cerr << "usage: acceptance [--quick] [--exhaustive]\n";
            return 2;
        }
    }
    bool ok = true;
    for (const auto& r : dtc::run_acceptance(options, std::cout)) {
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
