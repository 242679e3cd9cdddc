#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dtc/collections.hpp"

namespace dtc {

struct AcceptanceOptions {
    // Smaller grids (n <= 4) for a fast smoke run.
    bool quick = false;
    // Adds the full n = 6 layer of the A2 per-part grid (minutes of runtime).
    bool exhaustive = false;
    // Closed form under test in A2; replaceable for mutation runs.
    std::function<Collection(const CentralCharge&)> hn_inverse_factory = [](const CentralCharge& z) {
        return hn_inverse(z);
    };
};

struct CheckResult {
    std::string id;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

// "A1" .. "A12".
std::vector<std::string> acceptance_ids();
// Runs one criterion; exceptions are reported as failures.
CheckResult run_check(const std::string& id, const AcceptanceOptions& options);
// Runs every criterion, writing one line per result to `out` as it finishes.
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out);
std::string format_result(const CheckResult& r);

// Calls visit on every tuple of 1..max_parts rank-r vectors whose entries
// all lie in [0, max_entry] (each part nonzero).
void for_each_tuple_in_box(int rank, int max_entry, int max_parts, const std::function<void(TupleView)>& visit);

// Pseudorandom collection with small rational values on tuples of
// length >= 2 and zero on singletons; a pure function of (seed, tuple).
Collection random_collection(unsigned seed);

} // namespace dtc
