#pragma once

#include <gmpxx.h>

#include <set>

#include "syncfn/words.hpp"

namespace syncfn {

/// Unbounded nonnegative integer. Orbit values grow geometrically under
/// iteration, so every arithmetic oracle works at arbitrary precision.
using Integer = mpz_class;

enum class DigitOrder { msd_first, lsd_first };

/// Canonical base-`base` word of n, most significant digit first.
/// 0 encodes as the empty word.
Word encode_msd(const Integer& n, int base);

/// Value of a digit word read most-significant-first; leading zeros allowed.
Integer decode_msd(const Word& u, int base);

/// Canonical reverse representation: least significant digit first.
Word encode_lsd(const Integer& n, int base);

/// Value of a digit word read least-significant-first; trailing zeros allowed.
Integer decode_lsd(const Word& u, int base);

Word encode(const Integer& n, int base, DigitOrder order);
Integer decode(const Word& u, int base, DigitOrder order);

/// Decode both components of every pair: turns a word relation into an
/// integer relation. The verification harness compares these against the
/// arithmetic oracles.
std::set<std::pair<Integer, Integer>> lift_relation(const std::set<WordPair>& word_pairs, int base,
                                                    DigitOrder order);

} // namespace syncfn
