#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "cochain.hpp"

namespace bvcoho {

/* Self-check suite for the order-6 fixture: the decomposition, the BV
 * operator, the bracket table, the ring relations, the frozen comparison
 * tables, the dimension ledger and the randomized structural properties. */

// one line of the report
struct CheckResult {
    int criterion = 0;  // grouping used by the acceptance gate
    std::string name;
    bool pass = false;
    std::string detail;  // witness on failure, context on some passes
};

struct VerifyOptions {
    uint32_t prime = 3;
    int property_cases = 200;      // randomized cases per property suite
    uint64_t seed = 0x26d5eedull;  // deterministic by default
    bool flip_delta_sign = false;  // debug: negate the BV operator inside the
                                   // bracket route to demonstrate sensitivity
};

std::vector<CheckResult> verify_s3_report(const VerifyOptions& opt = {});

// dim H^0..H^top by brute-force elimination: dim ker − dim im at each degree
std::vector<long> cohomology_dims(const CochainSpace& S, int top);

bool all_passed(const std::vector<CheckResult>& report);

}  // namespace bvcoho
