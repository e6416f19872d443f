#include "syncfn/arith_builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace syncfn {

void require_params(const FabdParams& p) {
    if (p.a < 0 || p.b < 0 || p.d <= 0) throw std::invalid_argument("need a, b >= 0 and d > 0");
}

void require_prefix_params(const FabdParams& p) {
    require_params(p);
    if (p.b >= p.a || p.a == 1)
        throw std::invalid_argument(
            "prefix form needs b < a and a != 1 (realizability for b >= a is open)");
}

void require_accel_params(int a, int b) {
    if (a <= 1 || b < 0 || b >= a) throw std::invalid_argument("acceleration needs 0 <= b < a, a > 1");
    if ((a - b) % 2 != 0) throw std::invalid_argument("acceleration needs a and b of the same parity");
}

namespace {

std::vector<std::string> int_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

} // namespace

Integer oracle_f(const FabdParams& params, const Integer& n) {
    require_params(params);
    if (n < 0) throw std::invalid_argument("oracle domain is the nonnegative integers");
    if (n % params.d == 0) return n / params.d;
    return params.a * n + params.b;
}

Integer oracle_f_iter(const FabdParams& params, Integer n, int steps) {
    for (int i = 0; i < steps; ++i) n = oracle_f(params, n);
    return n;
}

std::vector<Integer> orbit(const FabdParams& params, const Integer& n, int steps) {
    std::vector<Integer> points{n};
    for (int i = 0; i < steps; ++i) points.push_back(oracle_f(params, points.back()));
    return points;
}

Integer oracle_f_accel(int a, int b, const Integer& n) {
    require_accel_params(a, b);
    if (n < 0) throw std::invalid_argument("oracle domain is the nonnegative integers");
    if (n % 2 == 0) return n / 2;
    return (a * n + b) / 2;
}

Integer oracle_f_accel_iter(int a, int b, Integer n, int steps) {
    for (int i = 0; i < steps; ++i) n = oracle_f_accel(a, b, n);
    return n;
}

std::vector<Integer> orbit_accel(int a, int b, const Integer& n, int steps) {
    std::vector<Integer> points{n};
    for (int i = 0; i < steps; ++i) points.push_back(oracle_f_accel(a, b, points.back()));
    return points;
}

SequentialTransducer mult_sync(int d, int a) {
    if (d <= 1) throw std::invalid_argument("multiplication base must be > 1");
    if (a < 1) throw std::invalid_argument("mult_sync needs a >= 1 (empty carry set otherwise)");
    std::vector<SeqTransition> moves;
    for (int i = 0; i < a; ++i)
        for (Digit b = 0; b < d; ++b) {
            int n = a * b + i;
            moves.push_back({static_cast<StateId>(i), b, {n % d}, static_cast<StateId>(n / d)});
        }
    return SequentialTransducer::make(d, d, int_names(a), 0, {{0, {}}}, std::move(moves));
}

SequentialTransducer mult_add_sync(int d, int a, int b) {
    if (d <= 1) throw std::invalid_argument("multiplication base must be > 1");
    if (a < 0 || b < 0) throw std::invalid_argument("need a, b >= 0");
    const int carries = std::max(a - 1, b) + 1;
    std::vector<SeqTransition> moves;
    for (int i = 0; i < carries; ++i)
        for (Digit u = 0; u < d; ++u) {
            int n = a * u + i;
            int j = n / d;
            if (j >= carries) continue; // outside the carry range
            moves.push_back({static_cast<StateId>(i), u, {n % d}, static_cast<StateId>(j)});
        }
    return SequentialTransducer::make(d, d, int_names(carries), static_cast<StateId>(b), {{0, {}}},
                                      std::move(moves));
}

SuffixSeq suffix_divider(int d) {
    if (d <= 1) throw std::invalid_argument("base must be > 1");
    std::vector<SuffixTransition> moves{{0, 0, std::nullopt, 1}};
    for (Digit c = 0; c < d; ++c) moves.push_back({1, c, c, 1});
    return SuffixSeq::make(d, d, {"α", "β"}, 0, {1}, std::move(moves));
}

SuffixSeq suffix_multiplier(int d, int a, int b) {
    SequentialTransducer mult = mult_add_sync(d, a, b);
    const StateId alpha = mult.num_states(); // fresh initial state
    std::vector<std::string> names = mult.state_names();
    names.push_back("α");

    std::vector<SuffixTransition> moves;
    for (const auto& tr : mult.transitions()) moves.push_back({tr.src, tr.in, tr.out[0], tr.dst});
    for (Digit c = 1; c < d; ++c)
        if (const SeqTransition* tr = mult.step(static_cast<StateId>(b), c))
            moves.push_back({alpha, c, tr->out[0], tr->dst});

    return SuffixSeq::make(d, d, std::move(names), alpha, {0}, std::move(moves));
}

SuffixSeq suffix_fabd(const FabdParams& params) {
    require_params(params);
    if (params.d <= 1)
        throw std::invalid_argument("suffix form needs d > 1 (f_{a,b,1} is the identity)");
    const int d = params.d;
    SequentialTransducer mult = mult_add_sync(d, params.a, params.b);
    const StateId alpha = mult.num_states();
    const StateId beta = alpha + 1;
    std::vector<std::string> names = mult.state_names();
    names.push_back("α");
    names.push_back("β");

    std::vector<SuffixTransition> moves;
    for (const auto& tr : mult.transitions()) moves.push_back({tr.src, tr.in, tr.out[0], tr.dst});
    for (Digit c = 1; c < d; ++c)
        if (const SeqTransition* tr = mult.step(static_cast<StateId>(params.b), c))
            moves.push_back({alpha, c, tr->out[0], tr->dst});
    moves.push_back({alpha, 0, std::nullopt, beta});
    for (Digit c = 0; c < d; ++c) moves.push_back({beta, c, c, beta});

    return SuffixSeq::make(d, d, std::move(names), alpha, {0, beta}, std::move(moves));
}

SequentialTransducer division_sync(int a, int d, int r) {
    if (a <= 1 || d < 1) throw std::invalid_argument("division needs base a > 1 and d > 0");
    if (r < 0 || r >= d) throw std::invalid_argument("remainder out of range");
    std::vector<SeqTransition> moves;
    for (int i = 0; i < d; ++i)
        for (Digit b = 0; b < a; ++b) {
            int n = i * a + b;
            moves.push_back({static_cast<StateId>(i), b, {n / d}, static_cast<StateId>(n % d)});
        }
    return SequentialTransducer::make(a, a, int_names(d), 0, {{static_cast<StateId>(r), {}}},
                                      std::move(moves));
}

SequentialTransducer division_sync_incremental(int a, int d, int r) {
    if (a <= 1 || d < 1) throw std::invalid_argument("division needs base a > 1 and d > 0");
    if (r < 0 || r >= d) throw std::invalid_argument("remainder out of range");
    std::vector<SeqTransition> moves;
    Digit output = 0;
    int goal = 0;
    for (int source = 0; source < d; ++source)
        for (Digit input = 0; input < a; ++input) {
            moves.push_back({static_cast<StateId>(source), input, {output}, static_cast<StateId>(goal)});
            if (++goal == d) {
                ++output;
                goal = 0;
            }
        }
    return SequentialTransducer::make(a, a, int_names(d), 0, {{static_cast<StateId>(r), {}}},
                                      std::move(moves));
}

PrefixSeq prefix_accel(int a, int b) {
    require_accel_params(a, b);
    SequentialTransducer div = division_sync(a, 2, 0);
    std::map<StateId, Word> terminal{{0, {}}, {1, {(a + b) / 2}}};
    return PrefixSeq::make(SequentialTransducer::make(a, a, div.state_names(), 0,
                                                      std::move(terminal), div.transitions()));
}

PrefixSeq prefix_fabd(const FabdParams& params) {
    require_prefix_params(params);
    SequentialTransducer div = division_sync(params.a * params.d, params.d, 0);
    std::map<StateId, Word> terminal{{0, {}}};
    for (int j = 1; j < params.d; ++j) terminal[j] = {params.a * j + params.b};
    return PrefixSeq::make(SequentialTransducer::make(params.a * params.d, params.a * params.d,
                                                      div.state_names(), 0, std::move(terminal),
                                                      div.transitions()));
}

PrefixSeq prefix_identity_case(int d) {
    if (d < 1) throw std::invalid_argument("need d > 0");
    std::vector<SeqTransition> moves;
    for (int i = 0; i < d; ++i)
        for (Digit j = 0; j < d; ++j)
            moves.push_back({static_cast<StateId>(i), j, {i}, static_cast<StateId>(j)});
    std::map<StateId, Word> terminal{{0, {}}};
    for (int i = 1; i < d; ++i) terminal[i] = {i};
    return PrefixSeq::make(
        SequentialTransducer::make(d, d, int_names(d), 0, std::move(terminal), std::move(moves)));
}

} // namespace syncfn
