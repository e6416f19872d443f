#pragma once

#include <vector>

#include "syncfn/numerals.hpp"
#include "syncfn/sequential.hpp"
#include "syncfn/synchronized.hpp"

namespace syncfn {

/// Parameters of the map n -> n/d when d divides n, n -> a*n + b otherwise.
/// (3,1,2) is the Collatz function.
struct FabdParams {
    int a = 3;
    int b = 1;
    int d = 2;
};

/// Validates a, b >= 0 and d > 0.
void require_params(const FabdParams& params);
/// Validates 0 <= b < a != 1 and d > 0, the prefix-realizable range.
void require_prefix_params(const FabdParams& params);
/// Validates 0 <= b < a, a > 1, and a, b of the same parity.
void require_accel_params(int a, int b);

/// Direct arithmetic oracles; everything downstream is checked against them.
Integer oracle_f(const FabdParams& params, const Integer& n);
Integer oracle_f_iter(const FabdParams& params, Integer n, int steps);
std::vector<Integer> orbit(const FabdParams& params, const Integer& n, int steps);

/// Accelerated map: n/2 when even, (a*n + b)/2 otherwise. Requires a and b
/// of the same parity.
Integer oracle_f_accel(int a, int b, const Integer& n);
Integer oracle_f_accel_iter(int a, int b, Integer n, int steps);
std::vector<Integer> orbit_accel(int a, int b, const Integer& n, int steps);

/// Multiplication by a in base d, least significant digit first: carry
/// states 0..a-1, transition i -b/c-> j iff a*b + i = c + d*j. Initial and
/// final carry 0.
SequentialTransducer mult_sync(int d, int a);

/// Multiplication by a plus b: same transition rule restricted to carries
/// 0..max(a-1,b), starting from carry b.
SequentialTransducer mult_add_sync(int d, int a, int b);

/// The two-state machine stripping one leading zero digit: reverse base-d
/// division by d on multiples.
SuffixSeq suffix_divider(int d);

/// mult_add_sync with a fresh initial state that refuses input digit 0:
/// multiply-add on non-multiples of d.
SuffixSeq suffix_multiplier(int d, int a, int b);

/// Union of the two machines above on a shared initial state: the reverse
/// base-d realization of f_{a,b,d}.
SuffixSeq suffix_fabd(const FabdParams& params);

/// Euclidean division by d in base a with remainder r: states 0..d-1,
/// transition i -b/c-> j iff i*a + b = c*d + j; initial 0, final r.
/// Solves the defining equation for every (state, input).
SequentialTransducer division_sync(int a, int d, int r);

/// Same machine built by the incremental sweep: one pass over sources in
/// increasing order, the goal counter wraps modulo d and the output digit is
/// its quotient. Transition order is the generation order, beginning with
/// the loop 0 -0/0-> 0 and ending with d-1 -(a-1)/(a-1)-> d-1.
SequentialTransducer division_sync_incremental(int a, int d, int r);

/// Prefix realization of the accelerated map in base a: division by 2 with
/// terminal words empty at 0 and the digit (a+b)/2 at 1.
PrefixSeq prefix_accel(int a, int b);

/// Prefix realization of f_{a,b,d} in base a*d for b < a: division by d with
/// terminal digit a*j + b at every nonzero remainder j. Requires a != 1.
PrefixSeq prefix_fabd(const FabdParams& params);

/// The digit-delay machine realizing f_{1,0,d} in base d: transitions
/// i -j/i-> j, terminal empty at 0 and the digit i elsewhere.
PrefixSeq prefix_identity_case(int d);

} // namespace syncfn
