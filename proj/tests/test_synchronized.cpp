#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "syncfn/arith_builders.hpp"
#include "syncfn/synchronized.hpp"

using namespace syncfn;
using checks::Relation;

TEST_CASE("prefix evaluation of the accelerated machine") {
    PrefixSeq g = prefix_accel(3, 1);
    auto out = apply_prefix(g, {1, 2});
    REQUIRE(out.has_value());
    CHECK(*out == Word{0, 2, 2}); // 5 -> 8 in base 3
}

TEST_CASE("prefix composition squares the accelerated map") {
    PrefixSeq g = prefix_accel(3, 1);
    PrefixSeq twice = prefix_compose(g, g);
    for (long n = 0; n < 10000; ++n) {
        Integer k(n);
        auto out = apply_prefix(twice, encode_msd(k, 3));
        REQUIRE(out.has_value());
        CHECK(decode_msd(*out, 3) == oracle_f_accel_iter(3, 1, k, 2));
    }
}

TEST_CASE("prefix composition with the identity is neutral") {
    PrefixSeq g = prefix_fabd({3, 1, 2});
    PrefixSeq left = prefix_compose(prefix_identity(6), g);
    PrefixSeq right = prefix_compose(g, prefix_identity(6));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> digit(0, 5);
    std::uniform_int_distribution<int> len(0, 8);
    for (int i = 0; i < 500; ++i) {
        Word u;
        for (int k = len(rng); k > 0; --k) u.push_back(digit(rng));
        auto expected = apply_prefix(g, u);
        CHECK(apply_prefix(left, u) == expected);
        CHECK(apply_prefix(right, u) == expected);
    }
}

TEST_CASE("prefix outputs extend the input by the terminal word") {
    std::mt19937 rng(17);
    for (int round = 0; round < 50; ++round) {
        PrefixSeq p = checks::random_prefix(rng, 4, 3);
        checks::enumerate_words(3, 5, [&](const Word& u) {
            if (auto out = apply_prefix(p, u)) CHECK(out->size() >= u.size());
        });
    }
}

TEST_CASE("prefix intersection and difference against set semantics") {
    PrefixSeq g = prefix_accel(3, 1);
    Relation rel = enumerate_relation(to_core(g), 5, 7);
    CHECK(enumerate_relation(to_core(prefix_intersect(g, g)), 5, 7) == rel);
    CHECK(enumerate_relation(to_core(prefix_difference(g, g)), 5, 7).empty());

    // a renamed copy intersects to the same function
    SequentialTransducer renamed = SequentialTransducer::make(
        3, 3, {"x", "y"}, g.machine().initial(), g.machine().terminal(), g.machine().transitions());
    PrefixSeq meet = prefix_intersect(g, PrefixSeq::make(renamed));
    checks::enumerate_words(3, 6, [&](const Word& u) { CHECK(apply_prefix(meet, u) == apply_prefix(g, u)); });
}

TEST_CASE("suffix machines evaluate the Collatz function with padding") {
    SuffixSeq m = suffix_fabd({3, 1, 2});
    const int pad = default_pad_limit(3, 2);
    CHECK(pad == 4);
    CHECK(apply_suffix(m, {0, 1, 1}, pad) == Word{1, 1});          // 6 -> 3
    CHECK(apply_suffix(m, {1, 1, 1}, pad) == Word{0, 1, 1, 0, 1}); // 7 -> 22, two pads
    for (long n = 0; n < 10000; ++n) {
        Integer k(n);
        auto out = apply_suffix(m, encode_lsd(k, 2), pad);
        REQUIRE(out.has_value());
        CHECK(decode_lsd(*out, 2) == oracle_f({3, 1, 2}, k));
    }
}

TEST_CASE("suffix composition with the identity is neutral") {
    SuffixSeq m = suffix_fabd({3, 1, 2});
    SuffixSeq composed = suffix_compose(m, suffix_identity(2));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> digit(0, 1);
    std::uniform_int_distribution<int> len(0, 8);
    for (int i = 0; i < 500; ++i) {
        Word u;
        for (int k = len(rng); k > 0; --k) u.push_back(digit(rng));
        CHECK(apply_suffix(composed, u, 6) == apply_suffix(m, u, 6));
    }
}

TEST_CASE("suffix composition squares the Collatz function") {
    SuffixSeq m = suffix_fabd({3, 1, 2});
    SuffixSeq twice = suffix_compose(m, m);
    const int pad = 2 * default_pad_limit(3, 2);
    for (long n = 0; n < 10000; ++n) {
        Integer k(n);
        auto out = apply_suffix(twice, encode_lsd(k, 2), pad);
        REQUIRE(out.has_value());
        CHECK(decode_lsd(*out, 2) == oracle_f_iter({3, 1, 2}, k, 2));
    }
}

TEST_CASE("suffix difference with itself is empty") {
    SuffixSeq m = suffix_fabd({3, 1, 2});
    CHECK(enumerate_relation(to_core(suffix_difference(m, m)), 6, 6).empty());
}

TEST_CASE("the initial epsilon-output condition is validated and preserved") {
    // letter output followed by an epsilon output is rejected
    std::vector<SuffixTransition> bad{{0, 0, 1, 1}, {1, 0, std::nullopt, 1}};
    CHECK_THROWS_AS(SuffixSeq::make(2, 2, {"p", "q"}, 0, {1}, bad), std::invalid_argument);

    std::mt19937 rng(23);
    for (int round = 0; round < 100; ++round) {
        SuffixSeq a = checks::random_suffix(rng, 4, 2);
        SuffixSeq b = checks::random_suffix(rng, 4, 2);
        CHECK_NOTHROW(suffix_compose(a, b)); // make() would reject a violation
    }
}

TEST_CASE("suffix outputs never exceed the consumed input") {
    std::mt19937 rng(29);
    for (int round = 0; round < 50; ++round) {
        SuffixSeq s = checks::random_suffix(rng, 4, 3);
        checks::enumerate_words(3, 5, [&](const Word& u) {
            if (auto out = apply_suffix(s, u, 0)) CHECK(out->size() <= u.size());
        });
    }
}

TEST_CASE("construction sizes stay within the quadratic bound") {
    std::mt19937 rng(31);
    for (int round = 0; round < 30; ++round) {
        PrefixSeq p = checks::random_prefix(rng, 4, 2);
        PrefixSeq q = checks::random_prefix(rng, 3, 2);
        std::size_t bound = p.machine().num_states() * q.machine().num_states() +
                            p.machine().num_states();
        CHECK(prefix_compose(p, q).machine().num_states() <= bound);
        CHECK(prefix_intersect(p, q).machine().num_states() <= bound);
        CHECK(prefix_difference(p, q).machine().num_states() <= bound);

        SuffixSeq a = checks::random_suffix(rng, 4, 2);
        SuffixSeq b = checks::random_suffix(rng, 3, 2);
        std::size_t sbound = a.num_states() * b.num_states() + a.num_states();
        CHECK(suffix_compose(a, b).num_states() <= sbound);
        CHECK(suffix_intersect(a, b).num_states() <= sbound);
        CHECK(suffix_difference(a, b).num_states() <= sbound);
    }
}

TEST_CASE("pruning drops unreachable states without changing the function") {
    std::mt19937 rng(41);
    for (int round = 0; round < 40; ++round) {
        PrefixSeq p = checks::random_prefix(rng, 3, 2);
        PrefixSeq q = checks::random_prefix(rng, 3, 2);
        PrefixSeq diff = prefix_difference(p, q);
        PrefixSeq pruned = prune_unreachable(diff);
        CHECK(pruned.machine().num_states() <= diff.machine().num_states());
        checks::enumerate_words(2, 6, [&](const Word& u) {
            CHECK(apply_prefix(pruned, u) == apply_prefix(diff, u));
        });

        SuffixSeq a = checks::random_suffix(rng, 3, 2);
        SuffixSeq b = checks::random_suffix(rng, 3, 2);
        SuffixSeq sdiff = suffix_difference(a, b);
        SuffixSeq spruned = prune_unreachable(sdiff);
        CHECK(spruned.num_states() <= sdiff.num_states());
        checks::enumerate_words(2, 6, [&](const Word& u) {
            CHECK(apply_suffix(spruned, u, 3) == apply_suffix(sdiff, u, 3));
        });
    }
}

TEST_CASE("a synchronous sequential machine cannot split on a shared first letter") {
    // The function {(00, 00), (01, 10)} is synchronous and sequential (defer
    // the first output), but any letter-to-letter input-deterministic
    // machine emits one fixed first digit for first input 0 -- these pairs
    // need two.
    auto deferred = SequentialTransducer::make(
        2, 2, {"i", "s", "f0", "f1"}, 0, {{2, {}}, {3, {}}},
        {{0, 0, {}, 1}, {1, 0, {0, 0}, 2}, {1, 1, {1, 0}, 3}});
    auto rel = enumerate_relation(to_core(deferred), 2, 2);
    CHECK(rel == Relation{{{0, 0}, {0, 0}}, {{0, 1}, {1, 0}}});

    std::set<std::pair<Digit, Digit>> first_letters;
    for (const auto& [u, v] : rel) first_letters.insert({u[0], v[0]});
    CHECK(first_letters.size() == 2); // same first input, two first outputs
    CHECK(first_letters.begin()->first == std::next(first_letters.begin())->first);
}
