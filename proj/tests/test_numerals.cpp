#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "syncfn/numerals.hpp"

using namespace syncfn;

TEST_CASE("msd encoding round trips the worked values") {
    CHECK(encode_msd(113, 5) == Word{4, 2, 3});
    CHECK(decode_msd({0, 2, 4, 0, 4}, 5) == 354);
    CHECK(encode_msd(0, 7).empty());
    CHECK(decode_msd({}, 7) == 0);
}

TEST_CASE("lsd encoding mirrors msd") {
    CHECK(encode_lsd(6, 2) == Word{0, 1, 1});
    CHECK(decode_lsd({1, 1, 1, 0, 0}, 2) == 7);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> base_dist(2, 12);
    std::uniform_int_distribution<int> len_dist(0, 8);
    for (int i = 0; i < 1000; ++i) {
        int base = base_dist(rng);
        std::uniform_int_distribution<int> digit(0, base - 1);
        Word u;
        for (int k = len_dist(rng); k > 0; --k) u.push_back(digit(rng));
        CHECK(decode_lsd(u, base) == decode_msd(word_reverse(u), base));
    }
}

TEST_CASE("decode is inverse of encode for all bases 2..10 below 1e5") {
    for (int base = 2; base <= 10; ++base)
        for (long n = 0; n < 100000; ++n) {
            Integer v(n);
            REQUIRE(decode_msd(encode_msd(v, base), base) == v);
            REQUIRE(decode_lsd(encode_lsd(v, base), base) == v);
        }
}

TEST_CASE("decode ignores leading and trailing zeros respectively") {
    Word u = encode_msd(4213, 6);
    Word padded = word_concat({0, 0, 0}, u);
    CHECK(decode_msd(padded, 6) == 4213);
    Word r = encode_lsd(4213, 6);
    r.insert(r.end(), {0, 0, 0});
    CHECK(decode_lsd(r, 6) == 4213);
}

TEST_CASE("encode rejects bad input") {
    CHECK_THROWS_AS(encode_msd(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(decode_msd({3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(encode_msd(Integer(-2), 3), std::invalid_argument);
}

TEST_CASE("lift_relation decodes both components") {
    std::set<WordPair> r{{{}, {}}};
    auto lifted = lift_relation(r, 2, DigitOrder::msd_first);
    CHECK(lifted == std::set<std::pair<Integer, Integer>>{{0, 0}});

    // lifting with lsd order equals lifting the mirrored relation with msd
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> digit(0, 2);
    std::uniform_int_distribution<int> len(0, 5);
    std::set<WordPair> rel;
    for (int i = 0; i < 50; ++i) {
        Word u, v;
        for (int k = len(rng); k > 0; --k) u.push_back(digit(rng));
        for (int k = len(rng); k > 0; --k) v.push_back(digit(rng));
        rel.insert({u, v});
    }
    CHECK(lift_relation(rel, 3, DigitOrder::lsd_first) ==
          lift_relation(checks::mirror_relation(rel), 3, DigitOrder::msd_first));
}

TEST_CASE("word strings use digits up to base 10 and commas above") {
    CHECK(word_to_string({4, 2, 3}, 5) == "423");
    CHECK(word_to_string({11, 0, 3}, 12) == "11,0,3");
    CHECK(word_from_string("423", 5) == Word{4, 2, 3});
    CHECK(word_from_string("11,0,3", 12) == Word{11, 0, 3});
    CHECK(word_from_string("", 5).empty());
    CHECK(word_display({}, 5) == "ε");
    CHECK(word_display({}, 5, true) == "0");
}
