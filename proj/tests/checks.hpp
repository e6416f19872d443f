// Shared test machinery: set-level relation oracles, the small example
// machines, seeded random machine generators, and the path/arithmetic
// equivalence checks. Everything here is independent of the library code
// paths it is used to cross-check.
#pragma once

#include <functional>
#include <random>
#include <set>

#include "syncfn/arith_builders.hpp"
#include "syncfn/synchronized.hpp"
#include "syncfn/transducer.hpp"

namespace checks {

using namespace syncfn;

using Relation = std::set<WordPair>;

inline Relation compose_relations(const Relation& r1, const Relation& r2) {
    Relation out;
    for (const auto& [u, v] : r1)
        for (const auto& [v2, w] : r2)
            if (v == v2) out.insert({u, w});
    return out;
}

inline Relation converse_relation(const Relation& r) {
    Relation out;
    for (const auto& [u, v] : r) out.insert({v, u});
    return out;
}

inline Relation mirror_relation(const Relation& r) {
    Relation out;
    for (const auto& [u, v] : r) out.insert({word_reverse(u), word_reverse(v)});
    return out;
}

inline Relation intersect_relations(const Relation& r1, const Relation& r2) {
    Relation out;
    for (const auto& p : r1)
        if (r2.count(p)) out.insert(p);
    return out;
}

inline Relation difference_relations(const Relation& r1, const Relation& r2) {
    Relation out;
    for (const auto& p : r1)
        if (!r2.count(p)) out.insert(p);
    return out;
}

// The rotation machine: x u -> u x for a letter x and word u over {0, 1}.
// Reads the first letter, defers it, copies the rest, emits it at the end.
inline Transducer make_t0() {
    Transducer t;
    t.input_base = t.output_base = 2;
    t.state_names = {"i", "m0", "m1", "f"};
    t.initial = {0};
    t.final = {3};
    t.transitions = {
        {0, 0, std::nullopt, 1}, {0, 1, std::nullopt, 2},
        {1, 0, 0, 1},            {1, 1, 1, 1},
        {2, 0, 0, 2},            {2, 1, 1, 2},
        {1, std::nullopt, 0, 3}, {2, std::nullopt, 1, 3},
    };
    return t;
}

// Single state, 0/1 and 1/0 loops: swaps every letter.
inline Transducer make_t1() {
    Transducer t;
    t.input_base = t.output_base = 2;
    t.state_names = {"p"};
    t.initial = {0};
    t.final = {0};
    t.transitions = {{0, 0, 1, 0}, {0, 1, 0, 0}};
    return t;
}

// Sequential form of the rotation machine.
inline SequentialTransducer make_t0_sequential() {
    std::vector<SeqTransition> moves = {
        {0, 0, {}, 1}, {0, 1, {}, 2}, {1, 0, {0}, 1}, {1, 1, {1}, 1}, {2, 0, {0}, 2}, {2, 1, {1}, 2},
    };
    return SequentialTransducer::make(2, 2, {"i", "m0", "m1"}, 0, {{1, {0}}, {2, {1}}},
                                      std::move(moves));
}

inline PrefixSeq random_prefix(std::mt19937& rng, int num_states, int base,
                               int max_terminal_len = 2) {
    std::uniform_int_distribution<int> digit(0, base - 1);
    std::uniform_int_distribution<int> state(0, num_states - 1);
    std::uniform_int_distribution<int> pct(0, 99);
    std::uniform_int_distribution<int> tlen(0, max_terminal_len);

    std::vector<std::string> names;
    for (int i = 0; i < num_states; ++i) names.push_back("q" + std::to_string(i));
    std::vector<SeqTransition> moves;
    for (int s = 0; s < num_states; ++s)
        for (int a = 0; a < base; ++a)
            if (pct(rng) < 80)
                moves.push_back({static_cast<StateId>(s), a, {digit(rng)},
                                 static_cast<StateId>(state(rng))});
    std::map<StateId, Word> terminal;
    for (int s = 0; s < num_states; ++s)
        if (pct(rng) < 50) {
            Word w;
            for (int i = tlen(rng); i > 0; --i) w.push_back(digit(rng));
            terminal[s] = std::move(w);
        }
    return PrefixSeq::make(SequentialTransducer::make(base, base, std::move(names), 0,
                                                      std::move(terminal), std::move(moves)));
}

// States below the cut form the epsilon zone: only they may emit epsilon
// outputs, and letter outputs never enter the zone, which keeps epsilon
// outputs at the start of every path.
inline SuffixSeq random_suffix(std::mt19937& rng, int num_states, int base) {
    std::uniform_int_distribution<int> digit(0, base - 1);
    std::uniform_int_distribution<int> state(0, num_states - 1);
    std::uniform_int_distribution<int> cut_dist(0, num_states);
    std::uniform_int_distribution<int> pct(0, 99);
    const int cut = cut_dist(rng);

    std::vector<std::string> names;
    for (int i = 0; i < num_states; ++i) names.push_back("q" + std::to_string(i));
    std::vector<SuffixTransition> moves;
    for (int s = 0; s < num_states; ++s)
        for (int a = 0; a < base; ++a) {
            if (pct(rng) >= 80) continue;
            bool epsilon = s < cut && (cut == num_states || pct(rng) < 50);
            if (epsilon)
                moves.push_back({static_cast<StateId>(s), a, std::nullopt,
                                 static_cast<StateId>(state(rng))});
            else {
                std::uniform_int_distribution<int> outside(cut, num_states - 1);
                moves.push_back({static_cast<StateId>(s), a, digit(rng),
                                 static_cast<StateId>(outside(rng))});
            }
        }
    std::vector<StateId> final;
    for (int s = 0; s < num_states; ++s)
        if (pct(rng) < 50) final.push_back(static_cast<StateId>(s));
    return SuffixSeq::make(base, base, std::move(names), 0, std::move(final), std::move(moves));
}

// Multiplication carries: from carry i on input digit b the machine emits
// (a*b + i) mod d and moves to carry (a*b + i) / d. The walk is defined for
// every nonnegative carry.
inline std::pair<Word, long long> mult_walk(int d, int a, long long carry, const Word& u) {
    Word v;
    for (Digit b : u) {
        long long n = static_cast<long long>(a) * b + carry;
        v.push_back(static_cast<Digit>(n % d));
        carry = n / d;
    }
    return {v, carry};
}

// Division remainders: from remainder i on input digit b the machine emits
// (i*a + b) / d and moves to (i*a + b) mod d.
inline std::pair<Word, long long> div_walk(int a, int d, long long rem, const Word& u) {
    Word v;
    for (Digit b : u) {
        long long n = rem * a + b;
        v.push_back(static_cast<Digit>(n / d));
        rem = n % d;
    }
    return {v, rem};
}

inline void enumerate_words(int base, int max_len, const std::function<void(const Word&)>& visit) {
    Word w;
    std::function<void()> rec = [&]() {
        visit(w);
        if (static_cast<int>(w.size()) == max_len) return;
        for (Digit d = 0; d < base; ++d) {
            w.push_back(d);
            rec();
            w.pop_back();
        }
    };
    rec();
}

// Path/arithmetic equivalence for the multiplication walk: a path
// i -u/v-> j exists iff lsd[u]*a + i = lsd[v] + j*d^|u| with |u| = |v|.
// The walk from (i, u) is deterministic and the equation pins (v, j)
// uniquely, so checking that the walk result satisfies the equation and
// that the equation's unique solution is the walk result covers both
// directions of the equivalence over the whole range.
inline bool check_mult_path_lemma(int d, int a, int max_carry, int max_len) {
    bool ok = true;
    for (int i = 0; i <= max_carry && ok; ++i)
        enumerate_words(d, max_len, [&](const Word& u) {
            if (!ok) return;
            auto [v, j] = mult_walk(d, a, i, u);
            long long du = decode_lsd(u, std::max(d, 2)).get_si();
            long long dv = decode_lsd(v, std::max(d, 2)).get_si();
            long long power = 1;
            for (std::size_t k = 0; k < u.size(); ++k) power *= d;
            if (du * a + i != dv + j * power || v.size() != u.size()) {
                ok = false;
                return;
            }
            // uniqueness: the equation admits exactly one (v, j) of this length
            long long n = du * a + i;
            if (j != n / power || dv != n % power) ok = false;
        });
    return ok;
}

// Same scheme for the division walk: i -u/v-> j iff
// i*a^|u| + msd[u] = msd[v]*d + j with |u| = |v|.
inline bool check_div_path_lemma(int a, int d, int max_len) {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
        enumerate_words(a, max_len, [&](const Word& u) {
            if (!ok) return;
            auto [v, j] = div_walk(a, d, i, u);
            long long nu = decode_msd(u, a).get_si();
            long long nv = decode_msd(v, a).get_si();
            long long power = 1;
            for (std::size_t k = 0; k < u.size(); ++k) power *= a;
            if (i * power + nu != nv * d + j || v.size() != u.size()) {
                ok = false;
                return;
            }
            long long n = i * power + nu;
            if (j != n % d || nv != n / d) ok = false;
        });
    return ok;
}

} // namespace checks
