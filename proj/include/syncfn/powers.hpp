#pragma once

#include <cstdint>
#include <vector>

#include "syncfn/arith_builders.hpp"

namespace syncfn {

inline constexpr std::size_t kDefaultStateLimit = 1'000'000;

/// Number of odd values among the first n points of the accelerated orbit
/// of q. Equals the terminal-word length in the explicit power machines.
int eta(int a, int b, int n, const Integer& q);

/// Number of non-multiples of d among the first n orbit points of q.
int mu(const FabdParams& params, int n, const Integer& q);

/// d^n, refused above the state limit (the explicit constructions are
/// exponential by nature).
std::size_t checked_power_size(int d, int n, std::size_t state_limit);

/// Division by d^n in base a with every state renamed to the length-n
/// reverse base-d word of its value: structurally the n-fold composition of
/// the division by d. n = 0 gives the one-state identity machine.
SequentialTransducer division_power(int a, int d, int n,
                                    std::size_t state_limit = kDefaultStateLimit);

/// The explicit n-th power of prefix_accel(a, b): division by 2^n in base a,
/// terminal word of state i the base-a word of the n-th accelerated iterate
/// of i, zero-padded on the left to length eta(i). The construction throws
/// if a canonical word ever exceeds its counter length.
PrefixSeq explicit_power_accel(int a, int b, int n, std::size_t state_limit = kDefaultStateLimit);

/// The explicit n-th power of prefix_fabd(params): division by d^n in base
/// a*d with terminal words padded to length mu(i).
PrefixSeq explicit_power(const FabdParams& params, int n,
                         std::size_t state_limit = kDefaultStateLimit);

/// n-fold prefix composition of the one-step machine (identity for n = 0).
PrefixSeq composed_power(const FabdParams& params, int n);
PrefixSeq composed_power_accel(int a, int b, int n);

struct PowerMismatch {
    Integer input;
    Integer expected; // iterated oracle
    Integer explicit_value;
    Integer composed_value;
};

struct PowerEquivalenceReport {
    int n = 0;
    Integer bound;
    std::vector<PowerMismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
};

/// Sweeps every integer below `bound` through the explicit power, the
/// composition-built power and the iterated oracle; any disagreement is
/// reported with its witness input.
PowerEquivalenceReport check_power_equivalence(const FabdParams& params, int n, const Integer& bound,
                                               std::size_t state_limit = kDefaultStateLimit);
PowerEquivalenceReport check_power_equivalence_accel(int a, int b, int n, const Integer& bound,
                                                     std::size_t state_limit = kDefaultStateLimit);

} // namespace syncfn
