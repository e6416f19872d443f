#pragma once

#include <string>
#include <vector>

#include "syncfn/closure.hpp"
#include "syncfn/powers.hpp"

namespace syncfn {

struct Mismatch {
    Integer input;
    Integer expected;
    Integer got;
};

/// Result of sweeping a transducer against the arithmetic oracle on
/// 0..bound-1. Empty mismatch list means pass.
struct VerifyReport {
    std::string kind;
    FabdParams params;
    bool accel = false;
    int n = 1;
    Integer bound;
    std::vector<Mismatch> mismatches;
    double elapsed_sec = 0.0;

    bool pass() const { return mismatches.empty(); }
};

VerifyReport verify_prefix(const FabdParams& params, const Integer& bound);
VerifyReport verify_prefix_accel(int a, int b, const Integer& bound);
VerifyReport verify_suffix(const FabdParams& params, const Integer& bound);
VerifyReport verify_power(const FabdParams& params, int n, const Integer& bound,
                          std::size_t state_limit = kDefaultStateLimit);
VerifyReport verify_power_accel(int a, int b, int n, const Integer& bound,
                                std::size_t state_limit = kDefaultStateLimit);
VerifyReport verify_closure(const FabdParams& params, int n, const Integer& bound);
VerifyReport verify_closure_accel(int a, int b, int n, const Integer& bound);

std::string format_report(const VerifyReport& report, std::size_t max_mismatches = 10);

} // namespace syncfn
